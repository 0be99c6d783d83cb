"""Lattice-path (Lindstrom-Gessel-Viennot) model in exact rational arithmetic.

H-patterns are tuples of right/up paths, one per row of the shape, from
``a_i = (r+1-i, 1)`` to ``b_{sigma(i)} = (r+1-sigma(i)+lambda_sigma(i), N)``;
E-patterns use northeast/up steps, one path per column of the shape, ending
on row N+1.  The permutation sigma realized by the endpoints is the pattern's
type.  Path weights are assigned through the rim decomposition whose type
matches: the k-th horizontal (resp. northeast) edge of path i, sitting on
row j, contributes 1/(j + x_pq)^(s_pq) where (p, q) is the k-th cell of
ribbon theta_i walked from its anchor.

Everything here is exact (``fractions.Fraction``) for integer exponents and
rational shifts, so the cancellation lemma and the truncated-series identity
can be asserted with zero tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import UsageError
from .shapes import (
    Cell,
    Partition,
    RimDecomposition,
    e_rim_decompositions,
    h_rim_decompositions,
)
from .tableaux import Tableau, is_diagonal_constant

Point = tuple[int, int]


@dataclass(frozen=True)
class LatticePath:
    """A monotone path given by its start point and step letters.

    Steps are "R" (right), "U" (up), or "NE" (diagonal up-right).
    """

    start: Point
    steps: tuple[str, ...]

    def points(self) -> tuple[Point, ...]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "R":
                x += 1
            elif s == "U":
                y += 1
            elif s == "NE":
                x += 1
                y += 1
            else:
                raise UsageError(f"unknown step {s!r}")
            pts.append((x, y))
        return tuple(pts)

    @property
    def end(self) -> Point:
        return self.points()[-1]

    def moving_edge_rows(self, letter: str) -> tuple[int, ...]:
        """Rows (y before the step) of each edge with the given letter."""
        rows = []
        _, y = self.start
        for s in self.steps:
            if s == letter:
                rows.append(y)
            if s in ("U", "NE"):
                y += 1
        return tuple(rows)


@dataclass(frozen=True)
class Pattern:
    """A tuple of paths realizing some endpoint permutation."""

    shape: Partition
    n: int
    kind: str  # "H" or "E"
    paths: tuple[LatticePath, ...]
    type: tuple[int, ...]  # sigma as (sigma(1), ..., sigma(t)), 1-indexed

    @property
    def sign(self) -> int:
        sgn = 1
        sigma = list(self.type)
        for i in range(len(sigma)):
            while sigma[i] != i + 1:
                j = sigma[i] - 1
                sigma[i], sigma[j] = sigma[j], sigma[i]
                sgn = -sgn
        return sgn

    def is_nonintersecting(self) -> bool:
        seen: set[Point] = set()
        for p in self.paths:
            pts = set(p.points())
            if seen & pts:
                return False
            seen |= pts
        return True


def _endpoints(shape: Partition, n: int, kind: str) -> tuple[list[Point], list[Point]]:
    if kind == "H":
        t = shape.rows
        starts = [(t + 1 - i, 1) for i in range(1, t + 1)]
        ends = [(t + 1 - i + shape.part(i), n) for i in range(1, t + 1)]
    elif kind == "E":
        conj = shape.conjugate()
        t = conj.rows
        starts = [(t + 1 - i, 1) for i in range(1, t + 1)]
        ends = [(t + 1 - i + conj.part(i), n + 1) for i in range(1, t + 1)]
    else:
        raise UsageError("kind must be 'H' or 'E'")
    return starts, ends


def _paths_between(start: Point, end: Point, kind: str) -> Iterator[LatticePath]:
    dx = end[0] - start[0]
    dy = end[1] - start[1]
    if kind == "H":
        if dx < 0 or dy < 0:
            return
        for positions in itertools.combinations(range(dx + dy), dx):
            steps = ["U"] * (dx + dy)
            for p in positions:
                steps[p] = "R"
            yield LatticePath(start, tuple(steps))
    else:
        # NE steps each rise one row; dx of them among dy total rises.
        if dx < 0 or dy < dx:
            return
        for positions in itertools.combinations(range(dy), dx):
            steps = ["U"] * dy
            for p in positions:
                steps[p] = "NE"
            yield LatticePath(start, tuple(steps))


def count_patterns(shape: Partition, n: int, kind: str) -> int:
    starts, ends = _endpoints(shape, n, kind)
    t = len(starts)
    total = 0
    for sigma in itertools.permutations(range(t)):
        prod = 1
        for i in range(t):
            dx = ends[sigma[i]][0] - starts[i][0]
            dy = ends[sigma[i]][1] - starts[i][1]
            if kind == "H":
                prod *= comb(dx + dy, dx) if dx >= 0 else 0
            else:
                prod *= comb(dy, dx) if 0 <= dx <= dy else 0
            if prod == 0:
                break
        total += prod
    return total


def enumerate_patterns(
    shape: Partition, n: int, kind: str = "H"
) -> Iterator[Pattern]:
    """Every pattern of the given kind on the height-``n`` grid."""
    if count_patterns(shape, n, kind) > 10**6:
        raise UsageError("pattern count exceeds the enumeration cap (10^6)")
    starts, ends = _endpoints(shape, n, kind)
    t = len(starts)
    for sigma in itertools.permutations(range(t)):
        choices = [
            list(_paths_between(starts[i], ends[sigma[i]], kind))
            for i in range(t)
        ]
        if any(not c for c in choices):
            continue
        for combo in itertools.product(*choices):
            yield Pattern(
                shape, n, kind, tuple(combo), tuple(s + 1 for s in sigma)
            )


def nonintersecting_patterns(
    shape: Partition, n: int, kind: str = "H"
) -> Iterator[Pattern]:
    for pat in enumerate_patterns(shape, n, kind):
        if pat.is_nonintersecting():
            yield pat


# ---------------------------------------------------------------------------
# Rim decompositions <-> types


def rim_type(decomp: RimDecomposition) -> tuple[int, ...]:
    """The permutation tau(Theta): sigma(i) is the row (H) or column (E)
    whose staircase offset matches ribbon i's size."""
    shape = decomp.shape
    ref = shape if decomp.kind == "H" else shape.conjugate()
    t = decomp.slots
    sigma = []
    for i in range(1, t + 1):
        size = len(decomp.ribbon(i))
        matches = [
            j for j in range(1, t + 1) if ref.part(j) - j == size - i
        ]
        if len(matches) != 1:
            raise UsageError("rim decomposition has no well-defined type")
        sigma.append(matches[0])
    return tuple(sigma)


@lru_cache(maxsize=None)
def _decomps_by_type(
    shape: Partition, kind: str
) -> dict[tuple[int, ...], list[RimDecomposition]]:
    decomps = (
        h_rim_decompositions(shape) if kind == "H" else e_rim_decompositions(shape)
    )
    by_type: dict[tuple[int, ...], list[RimDecomposition]] = {}
    for d in decomps:
        by_type.setdefault(rim_type(d), []).append(d)
    return by_type


def rim_for_type(
    shape: Partition, sigma: tuple[int, ...], kind: str
) -> RimDecomposition:
    """The unique rim decomposition of the given kind whose type is sigma."""
    found = _decomps_by_type(shape, kind).get(tuple(sigma), [])
    if len(found) != 1:
        raise UsageError(
            f"expected exactly one {kind}-rim decomposition of type {sigma}, "
            f"found {len(found)}"
        )
    return found[0]


def ribbon_walk(cells: frozenset[Cell], kind: str) -> tuple[Cell, ...]:
    """Order a ribbon's cells from its anchor.

    H-ribbons are walked with up/right steps from their lowest-leftmost end;
    E-ribbons with down/left steps from their highest-rightmost end.
    """
    if not cells:
        return ()
    if kind == "H":
        start = max(cells, key=lambda c: (c[0], -c[1]))
        moves = lambda p, q: ((p - 1, q), (p, q + 1))
    else:
        start = min(cells, key=lambda c: (c[0], -c[1]))
        moves = lambda p, q: ((p + 1, q), (p, q - 1))
    walk = [start]
    seen = {start}
    while len(walk) < len(cells):
        nxt = [c for c in moves(*walk[-1]) if c in cells and c not in seen]
        if len(nxt) != 1:
            raise UsageError("cell set is not a ribbon")
        walk.append(nxt[0])
        seen.add(nxt[0])
    return tuple(walk)


# ---------------------------------------------------------------------------
# Weights


def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _as_int_exponent(v) -> int:
    c = complex(v)
    if c.imag != 0 or c.real != int(c.real):
        raise UsageError(f"exact weights need integer exponents, got {v!r}")
    return int(c.real)


def pattern_weight(pat: Pattern, s: Tableau, x: Tableau) -> Fraction:
    """Exact weight of a pattern for integer exponents and rational shifts."""
    decomp = rim_for_type(pat.shape, pat.type, pat.kind)
    letter = "R" if pat.kind == "H" else "NE"
    weight = Fraction(1)
    for i, path in enumerate(pat.paths, start=1):
        ribbon = ribbon_walk(decomp.ribbon(i), pat.kind)
        rows = path.moving_edge_rows(letter)
        if len(rows) != len(ribbon):
            raise UsageError(
                f"path {i} has {len(rows)} weighted edges but ribbon has "
                f"{len(ribbon)} cells"
            )
        for j, cell in zip(rows, ribbon):
            weight /= (j + _as_fraction(x[cell])) ** _as_int_exponent(s[cell])
    return weight


def truncated_schur_via_paths(
    shape: Partition, n: int, s: Tableau, x: Tableau, kind: str = "H"
) -> Fraction:
    """Height-``n`` truncation of the tableau series, via nonintersecting paths."""
    return sum(
        (pattern_weight(p, s, x) for p in nonintersecting_patterns(shape, n, kind)),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# Cancellation


def tail_swap(pat: Pattern) -> Pattern:
    """The standard sign-reversing involution on intersecting patterns.

    Swap the tails of the two smallest-indexed paths through the
    lexicographically smallest shared vertex.
    """
    pts = [p.points() for p in pat.paths]
    shared: dict[Point, list[int]] = {}
    for i, ps in enumerate(pts):
        for v in set(ps):
            shared.setdefault(v, []).append(i)
    meet = sorted(v for v, owners in shared.items() if len(owners) >= 2)
    if not meet:
        raise UsageError("pattern is nonintersecting")
    v = meet[0]
    i, j = sorted(shared[v])[:2]

    def split(k: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
        idx = pts[k].index(v)
        return pat.paths[k].steps[:idx], pat.paths[k].steps[idx:]

    head_i, tail_i = split(i)
    head_j, tail_j = split(j)
    new_paths = list(pat.paths)
    new_paths[i] = LatticePath(pat.paths[i].start, head_i + tail_j)
    new_paths[j] = LatticePath(pat.paths[j].start, head_j + tail_i)
    new_type = list(pat.type)
    new_type[i], new_type[j] = new_type[j], new_type[i]
    return Pattern(pat.shape, pat.n, pat.kind, tuple(new_paths), tuple(new_type))


@dataclass(frozen=True)
class CancellationReport:
    shape: Partition
    n: int
    kind: str
    total_patterns: int
    nonintersecting: int
    signed_total: Fraction
    nonintersecting_total: Fraction
    intersecting_signed_total: Fraction
    involution_verified: bool

    @property
    def passes(self) -> bool:
        return (
            self.intersecting_signed_total == 0
            and self.signed_total == self.nonintersecting_total
            and self.involution_verified
        )


def verify_cancellation(
    shape: Partition, n: int, s: Tableau, x: Tableau, kind: str = "H"
) -> CancellationReport:
    """Check that intersecting patterns cancel in signed pairs, exactly."""
    if not (is_diagonal_constant(s) and is_diagonal_constant(x)):
        raise UsageError(
            "the cancellation involution needs diagonal-constant exponents "
            "and shifts"
        )
    signed = Fraction(0)
    crossing_signed = Fraction(0)
    free_total = Fraction(0)
    count = 0
    free_count = 0
    involution_ok = True
    for pat in enumerate_patterns(shape, n, kind):
        count += 1
        w = pattern_weight(pat, s, x)
        sgn = pat.sign
        signed += sgn * w
        if pat.is_nonintersecting():
            free_count += 1
            free_total += w
            continue
        crossing_signed += sgn * w
        mate = tail_swap(pat)
        if (
            tail_swap(mate).paths != pat.paths
            or mate.sign != -sgn
            or pattern_weight(mate, s, x) != w
        ):
            involution_ok = False
    return CancellationReport(
        shape,
        n,
        kind,
        count,
        free_count,
        signed,
        free_total,
        crossing_signed,
        involution_ok,
    )


# ---------------------------------------------------------------------------
# Text rendering


def render_pattern(pat: Pattern) -> str:
    """A fixed-width grid with each path's vertices marked by its index."""
    pts: dict[Point, str] = {}
    xs = []
    ys = []
    for i, p in enumerate(pat.paths, start=1):
        for v in p.points():
            pts[v] = str(i) if v not in pts else "*"
            xs.append(v[0])
            ys.append(v[1])
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    lines = []
    for y in range(y1, y0 - 1, -1):
        row = "".join(pts.get((x, y), ".").rjust(2) for x in range(x0, x1 + 1))
        lines.append(f"{y:2d} |{row}")
    return "\n".join(lines)
