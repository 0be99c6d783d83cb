"""Root-system zeta values of type A and their shifted reductions.

The evaluator here sums the defining nested series directly; in the
reduction checks its shifted variants are compared against the chain
evaluator from ``ezzeta``, which uses a different algorithm, so agreement
is a genuine cross-check rather than a tautology.
"""

import math

import pytest

from shzeta.errors import DomainError, UsageError
from shzeta.ezzeta import EvalConfig, ez_zeta, hurwitz
from shzeta.rootzeta import (
    MAX_DEPTH,
    RootExponents,
    check_reductions,
    zeta_Ar,
    zeta_bullet,
    zeta_bullet_H,
    zeta_H,
)

ZETA2 = math.pi**2 / 6
TORNHEIM_2_2_2 = math.pi**6 / 2835  # sum_{m,n>=1} m^-2 n^-2 (m+n)^-2


class TestIndexing:
    def test_from_flat_ordering(self):
        e = RootExponents.from_flat(2, [10, 20, 30])
        assert e.s[(1, 2)] == 10 and e.s[(2, 3)] == 20 and e.s[(1, 3)] == 30

    def test_from_flat_length_check(self):
        with pytest.raises(UsageError):
            RootExponents.from_flat(2, [2, 2])

    def test_pair_cover_check(self):
        with pytest.raises(UsageError):
            RootExponents(1, {(1, 3): 2})

    def test_chain_layout(self):
        e = RootExponents.chain([5, 7])
        assert e.s[(1, 2)] == 5 and e.s[(1, 3)] == 7
        assert e.s[(2, 3)] == 0

    def test_depth_cap_on_evaluation(self):
        e = RootExponents.from_flat(MAX_DEPTH + 1, [2] * 15)
        with pytest.raises(UsageError):
            zeta_Ar(e)


class TestValues:
    def test_depth_zero_is_one(self):
        a = zeta_Ar(RootExponents(0, {}))
        assert a.value == 1.0 and a.err_bound == 0.0

    def test_depth_one_is_zeta(self):
        a = zeta_Ar(RootExponents.from_flat(1, [2]))
        assert abs(a.value - ZETA2) <= a.err_bound + 1e-10

    def test_tornheim(self):
        a = zeta_Ar(RootExponents.from_flat(2, [2, 2, 2]), EvalConfig(cutoff=600))
        assert abs(a.value - TORNHEIM_2_2_2) <= a.err_bound
        # The bound here is loose (no closed tail for the coupled factor)
        # but the value itself is much closer:
        assert abs(a.value - TORNHEIM_2_2_2) < 1e-7

    def test_shifted_depth_one_vs_hurwitz(self):
        e = RootExponents.from_flat(1, [2])
        a = zeta_H(e, 0.3)
        h = hurwitz(2, 0.3)
        # zeta_H starts its variable at 1; hurwitz at 0.
        assert abs(a.value - (h.value - 0.3**-2)) <= a.err_bound + h.err_bound + 1e-12
        b = zeta_bullet_H(e, 1, 0.3)
        assert abs(b.value - h.value) <= b.err_bound + h.err_bound + 1e-12


class TestPrimedVariant:
    def test_degree_zero_prime_is_the_plain_value(self):
        e = RootExponents.from_flat(1, [2])
        assert zeta_bullet(e, 0).value == zeta_Ar(e).value
        assert zeta_bullet(e, 0).err_bound == zeta_Ar(e).err_bound

    def test_full_prime_adds_the_empty_term(self):
        # Omitting the only factor for m = 0 leaves an empty product, so
        # the primed depth-1 value is 1 + zeta(s).
        e = RootExponents.from_flat(1, [2])
        a = zeta_bullet(e, 1)
        assert abs(a.value - (1.0 + ZETA2)) <= a.err_bound + 1e-10

    def test_prime_degree_bounds(self):
        e = RootExponents.from_flat(1, [2])
        with pytest.raises(UsageError):
            zeta_bullet(e, 2)
        with pytest.raises(UsageError):
            zeta_bullet(e, -1)


class TestDomain:
    def test_rejects_boundary_exponent(self):
        with pytest.raises(DomainError):
            zeta_Ar(RootExponents.from_flat(1, [1]))

    def test_rejects_negative_inner_exponent(self):
        e = RootExponents.from_flat(2, [2, -1, 2])
        with pytest.raises(DomainError):
            zeta_Ar(e)

    def test_shift_must_be_positive_for_zero_start(self):
        e = RootExponents.from_flat(1, [2])
        with pytest.raises(DomainError):
            zeta_bullet_H(e, 1, 0.0)


class TestReductions:
    CFG = EvalConfig(cutoff=2000)

    @pytest.mark.parametrize("z", [[2], [3], [2, 3], [3, 2]])
    @pytest.mark.parametrize("m", [1, 2])
    def test_both_reductions_pass(self, z, m):
        for rep in check_reductions(z, z, float(m), self.CFG):
            assert rep.passes(), (rep.kind, rep.discrepancy, rep.budget)
            assert rep.budget < 1e-6

    def test_strict_reduction_against_chain_evaluator(self):
        # Same series by two routes: nested direct summation vs. the
        # prefix-sum chain DP.
        lhs = zeta_H(RootExponents.chain([2, 3]), 2.0, self.CFG)
        rhs = ez_zeta([2, 3], [2.0, 2.0], self.CFG)
        assert abs(lhs.value - rhs.value) <= lhs.err_bound + rhs.err_bound + 1e-9

    def test_report_accounting(self):
        rep = check_reductions([2], [], 1.0, self.CFG)[0]
        assert rep.kind == "star_star"
        assert rep.discrepancy == abs(rep.lhs.value - rep.rhs.value)
        assert rep.budget == rep.lhs.err_bound + rep.rhs.err_bound
