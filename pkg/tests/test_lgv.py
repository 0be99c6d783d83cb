"""Lattice-path model: signed patterns, the cancellation involution, and
agreement with the tableau truncation (all in exact rational arithmetic)."""

from fractions import Fraction

import pytest

from shzeta.errors import UsageError
from shzeta.lgv import (
    count_patterns,
    enumerate_patterns,
    nonintersecting_patterns,
    pattern_weight,
    render_pattern,
    ribbon_walk,
    rim_for_type,
    rim_type,
    tail_swap,
    truncated_schur_via_paths,
    verify_cancellation,
)
from shzeta.schurzeta import schur_truncated_exact
from shzeta.shapes import (
    Partition,
    e_rim_decompositions,
    h_rim_decompositions,
)
from shzeta.tableaux import Tableau, constant_tableau


def diag_tableaux(shape, z_by_content, y_by_content):
    s = Tableau(shape, {c: z_by_content[c[1] - c[0]] for c in shape.cells()})
    x = Tableau(shape, {c: y_by_content[c[1] - c[0]] for c in shape.cells()})
    return s, x


class TestPatternCounts:
    @pytest.mark.parametrize("parts,n,kind,total,free", [
        ((2, 1), 2, "H", 10, 2),
        ((2, 1), 3, "H", 28, 8),
        ((2, 2), 3, "H", 66, 6),
        ((2, 1), 2, "E", 2, 2),
        ((2, 2), 3, "E", 12, 6),
        ((3, 1), 3, "H", 45, 15),
    ])
    def test_counts(self, parts, n, kind, total, free):
        shape = Partition(parts)
        assert count_patterns(shape, n, kind) == total
        assert len(list(enumerate_patterns(shape, n, kind))) == total
        assert len(list(nonintersecting_patterns(shape, n, kind))) == free

    def test_bad_kind(self):
        with pytest.raises(UsageError):
            count_patterns(Partition((2, 1)), 2, "X")


class TestPathTableauAgreement:
    @pytest.mark.parametrize("parts", [(2, 1), (2, 2), (3, 1)])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_nonintersecting_sum_is_the_tableau_truncation(self, parts, n):
        shape = Partition(parts)
        s = constant_tableau(shape, 2)
        x = constant_tableau(shape, Fraction(1, 2))
        assert truncated_schur_via_paths(shape, n, s, x, "H") == (
            schur_truncated_exact(shape, s, x, n)
        )

    def test_with_content_dependent_data(self):
        shape = Partition((2, 2))
        s, x = diag_tableaux(
            shape, {-1: 2, 0: 3, 1: 2}, {-1: 0, 0: Fraction(1, 2), 1: 0}
        )
        for n in (2, 3):
            assert truncated_schur_via_paths(shape, n, s, x, "H") == (
                schur_truncated_exact(shape, s, x, n)
            )


class TestCancellation:
    @pytest.mark.parametrize("parts,kind", [
        ((2, 1), "H"),
        ((2, 2), "H"),
        ((2, 2), "E"),
        ((3, 1), "H"),
    ])
    def test_signed_sum_collapses(self, parts, kind):
        shape = Partition(parts)
        s = constant_tableau(shape, 2)
        x = constant_tableau(shape, Fraction(1, 2))
        rep = verify_cancellation(shape, 3, s, x, kind)
        assert rep.passes
        assert rep.intersecting_signed_total == 0
        assert rep.signed_total == rep.nonintersecting_total

    def test_requires_diagonal_constant_data(self):
        shape = Partition((2, 2))
        s = constant_tableau(shape, 2).with_entries({(1, 1): 3})
        x = constant_tableau(shape, 0)
        with pytest.raises(UsageError):
            verify_cancellation(shape, 2, s, x, "H")

    def test_cancellation_actually_fails_off_diagonal(self):
        # With s_11 != s_22 the involution no longer preserves weights:
        # the signed total over all patterns differs from the tableau sum.
        shape = Partition((2, 2))
        s = Tableau(shape, {(1, 1): 3, (1, 2): 2, (2, 1): 2, (2, 2): 2})
        x = constant_tableau(shape, 0)
        signed = sum(
            (p.sign * pattern_weight(p, s, x) for p in enumerate_patterns(shape, 3, "H")),
            Fraction(0),
        )
        direct = schur_truncated_exact(shape, s, x, 3)
        assert signed != direct


class TestTailSwap:
    def intersecting(self, shape, n, kind):
        return [
            p for p in enumerate_patterns(shape, n, kind)
            if not p.is_nonintersecting()
        ]

    @pytest.mark.parametrize("parts,kind", [((2, 1), "H"), ((2, 2), "E")])
    def test_involution_without_fixed_points(self, parts, kind):
        shape = Partition(parts)
        s = constant_tableau(shape, 2)
        x = constant_tableau(shape, Fraction(1, 3))
        for p in self.intersecting(shape, 3, kind):
            q = tail_swap(p)
            assert tail_swap(q) == p
            assert q != p
            assert q.sign == -p.sign
            assert pattern_weight(q, s, x) == pattern_weight(p, s, x)

    def test_rejects_nonintersecting(self):
        shape = Partition((2, 1))
        free = next(nonintersecting_patterns(shape, 2, "H"))
        with pytest.raises(UsageError):
            tail_swap(free)


class TestRimTypes:
    def test_h_types_distinct_for_4332(self):
        decomps = h_rim_decompositions(Partition((4, 3, 3, 2)))
        types = [rim_type(d) for d in decomps]
        assert len(types) == len(set(types)) == 18

    def test_round_trip_through_type(self):
        shape = Partition((3, 2))
        for kind, decomps in (
            ("H", h_rim_decompositions(shape)),
            ("E", e_rim_decompositions(shape)),
        ):
            for d in decomps:
                assert rim_for_type(shape, rim_type(d), kind) == d

    def test_ribbon_walk_visits_every_cell_once(self):
        for d in h_rim_decompositions(Partition((3, 2))):
            for ribbon in d.ribbons():
                walk = ribbon_walk(ribbon, "H")
                assert len(walk) == len(ribbon)
                assert set(walk) == set(ribbon)


class TestRendering:
    def test_deterministic_and_indexed(self):
        shape = Partition((2, 1))
        pats = list(enumerate_patterns(shape, 3, "H"))
        p = pats[0]
        out = render_pattern(p)
        assert out == render_pattern(p)
        # Every path index appears in the drawing.
        for i in range(1, len(p.paths) + 1):
            assert str(i) in out
