"""Partition and skew-shape combinatorics.

Young diagram geometry used throughout the package: conjugation, Frobenius
coordinates, corners, contents, the anti-diagonal ("hash") transpose, and
rim decompositions into ribbons.

Conventions: cells are 1-indexed ``(row, col)`` with rows growing downward,
and the content of a cell is ``col - row``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

Cell = tuple[int, int]


def content(cell: Cell) -> int:
    """Content (diagonal index) of a cell: column minus row."""
    i, j = cell
    return j - i


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """Row length ``lambda_i`` for a 1-indexed row, 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def cells(self) -> tuple[Cell, ...]:
        """All cells in row-major order."""
        return tuple(
            (i, j)
            for i, lam in enumerate(self.parts, start=1)
            for j in range(1, lam + 1)
        )

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def conjugate(self) -> "Partition":
        """The transposed diagram: column lengths become row lengths."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= j)
                for j in range(1, self.parts[0] + 1)
            )
        )

    def corners(self) -> frozenset[Cell]:
        """Cells with no box to the right and none below."""
        out = set()
        for i, lam in enumerate(self.parts, start=1):
            nxt = self.part(i + 1)
            if lam > nxt:
                out.add((i, lam))
        return frozenset(out)

    def frobenius(self) -> "FrobeniusCoords":
        """Arm/leg lengths measured from the diagonal cells."""
        conj = self.conjugate()
        n = sum(1 for i in range(1, len(self.parts) + 1) if self.part(i) >= i)
        p = tuple(self.part(i) - i for i in range(1, n + 1))
        q = tuple(conj.part(i) - i for i in range(1, n + 1))
        return FrobeniusCoords(p, q)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


@dataclass(frozen=True)
class FrobeniusCoords:
    """Frobenius notation (p_1,...,p_N | q_1,...,q_N)."""

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        p, q = tuple(self.p), tuple(self.q)
        if len(p) != len(q):
            raise ValueError("p and q must have equal length")
        for seq in (p, q):
            if any(x < 0 for x in seq):
                raise ValueError("Frobenius coordinates must be nonnegative")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError("Frobenius coordinates must strictly decrease")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def depth(self) -> int:
        return len(self.p)

    def to_partition(self) -> Partition:
        """Rebuild the partition whose Frobenius coordinates these are."""
        n = self.depth
        if n == 0:
            return Partition()
        # Row i (i <= n) has i + p_i boxes; below the diagonal block, column
        # lengths are determined by the q's.
        rows = [i + self.p[i - 1] for i in range(1, n + 1)]
        # Column j (j <= n) has j + q_j boxes; rows beyond n are read off the
        # conjugate of the leg staircase.
        col_len = [j + self.q[j - 1] for j in range(1, n + 1)]
        extra_rows = []
        i = n + 1
        while True:
            lam = sum(1 for c in col_len if c >= i)
            if lam == 0:
                break
            extra_rows.append(lam)
            i += 1
        return Partition(tuple(rows + extra_rows))

    def __str__(self) -> str:
        ps = ",".join(str(x) for x in self.p)
        qs = ",".join(str(x) for x in self.q)
        return f"({ps}|{qs})"


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def frobenius(p: Partition) -> FrobeniusCoords:
    return p.frobenius()


def from_frobenius(f: FrobeniusCoords) -> Partition:
    return f.to_partition()


def corners(p: "Partition | SkewShape") -> frozenset[Cell]:
    return p.corners()


def hook(p: int, q: int) -> Partition:
    """The hook partition (p+1, 1^q)."""
    return Partition((p + 1,) + (1,) * q)


@dataclass(frozen=True)
class SkewShape:
    """Set difference ``outer / inner`` of two nested Young diagrams.

    Normalized so two representations of the same cell set compare equal:
    trailing zero rows are trimmed and empty leading rows dropped is NOT
    done (leading rows where inner == outer are kept as empty rows only if
    a later row is nonempty; fully empty shapes normalize to ``0/0``).
    """

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        outer, inner = self.outer, self.inner
        if not isinstance(outer, Partition):
            outer = Partition(tuple(outer))
        if not isinstance(inner, Partition):
            inner = Partition(tuple(inner))
        for i in range(1, inner.rows + 1):
            if inner.part(i) > outer.part(i):
                raise ValueError(f"inner {inner} not contained in outer {outer}")
        # Normalize: drop rows (from the bottom) where outer == inner == 0 is
        # automatic; additionally a fully-empty shape becomes 0/0.
        if outer.size == inner.size:
            outer, inner = Partition(), Partition()
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            (i, j)
            for i in range(1, self.outer.rows + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return cell in self.outer and j > self.inner.part(i)

    def corners(self) -> frozenset[Cell]:
        """Cells with no right neighbor and no down neighbor in the shape."""
        cs = set(self.cells())
        return frozenset(
            (i, j) for (i, j) in cs if (i, j + 1) not in cs and (i + 1, j) not in cs
        )

    def is_ribbon(self) -> bool:
        """Connected and containing no 2x2 block of cells."""
        cs = set(self.cells())
        if not cs:
            return False
        for (i, j) in cs:
            if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cs:
                return False
        seen = {next(iter(cs))}
        frontier = list(seen)
        while frontier:
            i, j = frontier.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cs and nb not in seen:
                    seen.add(nb)
                    frontier.append(nb)
        return seen == cs

    def __str__(self) -> str:
        if self.inner.size == 0:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def is_ribbon(s: "SkewShape | Partition") -> bool:
    if isinstance(s, Partition):
        s = SkewShape(s)
    return s.is_ribbon()


@dataclass(frozen=True)
class HashTranspose:
    """Result of reflecting a skew shape across the anti-diagonal.

    ``shape`` is the reflected skew shape and ``cell_map`` sends each cell of
    the input to its image, so tableau data can be transported.
    """

    shape: SkewShape
    cell_map: Mapping[Cell, Cell]


def hash_transpose(s: "SkewShape | Partition") -> HashTranspose:
    """Reflect a (skew) diagram across the anti-diagonal of its bounding box.

    The bounding box of ``outer`` has R rows and C = outer_1 columns; cell
    (i, j) maps to (C + 1 - j, R + 1 - i).  The image of a straight shape is
    in general a genuine skew shape inside the transposed C x R box.
    """
    if isinstance(s, Partition):
        s = SkewShape(s)
    if s.size == 0:
        return HashTranspose(SkewShape(Partition()), {})
    r = s.outer.rows
    c = s.outer.parts[0]
    cmap = {(i, j): (c + 1 - j, r + 1 - i) for (i, j) in s.cells()}
    image = set(cmap.values())
    # Rebuild outer/inner of the image inside the c x r box.  In each row of
    # the image the present cells form a contiguous run ending at the row's
    # maximum column (reflection of a left-justified run).
    outer_parts = []
    inner_parts = []
    for i in range(1, c + 1):
        cols = [j for (a, j) in image if a == i]
        if cols:
            outer_parts.append(max(cols))
            inner_parts.append(min(cols) - 1)
        else:
            outer_parts.append(0)
            inner_parts.append(0)
    while outer_parts and outer_parts[-1] == 0:
        outer_parts.pop()
        inner_parts.pop()
    shape = SkewShape(Partition(tuple(outer_parts)), Partition(tuple(inner_parts)))
    if set(shape.cells()) != image:
        raise AssertionError("anti-diagonal image is not a skew shape")
    return HashTranspose(shape, cmap)


@dataclass(frozen=True)
class RimDecomposition:
    """An ordered peeling of a partition into ribbons (some possibly empty).

    ``assignment`` maps each cell to a ribbon index in 1..t; H-kind ribbons
    start on column 1 of their own row, E-kind on row 1 of their own column.
    """

    shape: Partition
    assignment: Mapping[Cell, int]
    kind: str  # "H" or "E"

    def __post_init__(self) -> None:
        if self.kind not in ("H", "E"):
            raise ValueError("kind must be 'H' or 'E'")
        object.__setattr__(self, "assignment", dict(self.assignment))

    @property
    def slots(self) -> int:
        return self.shape.rows if self.kind == "H" else self.shape.part(1)

    def ribbon(self, k: int) -> frozenset[Cell]:
        return frozenset(c for c, v in self.assignment.items() if v == k)

    def ribbons(self) -> list[frozenset[Cell]]:
        return [self.ribbon(k) for k in range(1, self.slots + 1)]

    def __hash__(self) -> int:
        return hash((self.shape, self.kind, tuple(sorted(self.assignment.items()))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RimDecomposition):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.kind == other.kind
            and self.assignment == other.assignment
        )


def _cells_form_partition(cells: set[Cell]) -> bool:
    """True iff the cell set is the diagram of a partition."""
    if not cells:
        return True
    rows = {}
    for (i, j) in cells:
        rows.setdefault(i, set()).add(j)
    nrows = max(rows)
    lam = []
    for i in range(1, nrows + 1):
        cols = rows.get(i, set())
        if cols != set(range(1, len(cols) + 1)):
            return False
        lam.append(len(cols))
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def _is_ribbon_cells(cells: frozenset[Cell]) -> bool:
    if not cells:
        return False
    for (i, j) in cells:
        if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cells:
            return False
    seen = {next(iter(cells))}
    frontier = list(seen)
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return seen == cells


def _rim_decompositions(shape: Partition, kind: str) -> list[RimDecomposition]:
    """Enumerate all rim decompositions of the given kind.

    A decomposition is a chain of partitions () = mu^(0) <= mu^(1) <= ... <=
    mu^(t) = lambda where each step adds either nothing or a ribbon, and a
    nonempty k-th ribbon contains the anchor cell ((k,1) for H, (1,k) for E).
    """
    t = shape.rows if kind == "H" else shape.part(1)
    target = set(shape.cells())
    results: list[RimDecomposition] = []

    def extend(step: int, current: set[Cell], assignment: dict[Cell, int]) -> None:
        if step > t:
            if current == target:
                results.append(RimDecomposition(shape, dict(assignment), kind))
            return
        anchor = (step, 1) if kind == "H" else (1, step)
        # An empty ribbon is always permitted at any slot; a later ribbon may
        # still cover this slot's anchor cell.
        extend(step + 1, current, assignment)
        if anchor in current or anchor not in target:
            # A nonempty ribbon here would have to contain its anchor, which
            # is already taken (or absent), so only the empty option exists.
            return
        # Nonempty ribbon: any subset of target \ current that is a ribbon,
        # contains the anchor, and whose union with current is a partition.
        free = sorted(target - current)
        # Candidate ribbons are rim-connected subsets containing the anchor;
        # grow them incrementally.
        def starts_at_anchor(rib: set[Cell]) -> bool:
            # A ribbon "starts from" its anchor: the anchor must be the
            # initial end of the ribbon walk (bottom-left end for H-kind,
            # top-right end for E-kind), not merely a member.
            if kind == "H":
                end = max(rib, key=lambda c: (c[0], -c[1]))
            else:
                end = min(rib, key=lambda c: (c[0], -c[1]))
            return end == anchor

        def grow(rib: set[Cell]) -> None:
            union = current | rib
            frozen = frozenset(rib)
            if (
                _is_ribbon_cells(frozen)
                and starts_at_anchor(rib)
                and _cells_form_partition(union)
            ):
                for c in rib:
                    assignment[c] = step
                extend(step + 1, union, assignment)
                for c in rib:
                    del assignment[c]
            # Try to extend the ribbon by one adjacent free cell that keeps
            # it 2x2-free and connected; to avoid duplicates only add cells
            # greater than the current lexicographic frontier is not sound
            # for ribbons, so deduplicate at the end instead.
            for c in free:
                if c in rib:
                    continue
                i, j = c
                if not any(
                    nb in rib
                    for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1))
                ):
                    continue
                nxt = rib | {c}
                if any(
                    {(a, b + 1), (a + 1, b), (a + 1, b + 1)} <= nxt
                    for (a, b) in nxt
                ):
                    continue
                if frozenset(nxt) in tried:
                    continue
                tried.add(frozenset(nxt))
                grow(nxt)

        tried: set[frozenset[Cell]] = {frozenset({anchor})}
        grow({anchor})

    extend(1, set(), {})
    # Deduplicate (the ribbon growth can reach the same ribbon along
    # different orders despite the `tried` cache being per-slot).
    seen = set()
    unique = []
    for d in results:
        key = tuple(sorted(d.assignment.items()))
        if key not in seen:
            seen.add(key)
            unique.append(d)
    return unique


def h_rim_decompositions(shape: Partition) -> list[RimDecomposition]:
    """All decompositions whose k-th ribbon (if nonempty) starts at (k, 1)."""
    return _rim_decompositions(shape, "H")


def e_rim_decompositions(shape: Partition) -> list[RimDecomposition]:
    """All decompositions whose k-th ribbon (if nonempty) starts at (1, k)."""
    return _rim_decompositions(shape, "E")


# ---------------------------------------------------------------------------
# Textual syntax


def parse_partition(text: str) -> Partition:
    """Parse "4,3,3,2" (or "0" / "" for the empty partition)."""
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition syntax: {text!r}") from exc
    return Partition(parts)


def parse_shape(text: str) -> SkewShape:
    """Parse "4,3,3,2" or "4,3,3,2/2,1" into a (possibly skew) shape."""
    if "/" in text:
        outer_text, inner_text = text.split("/", 1)
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
    return SkewShape(parse_partition(text))


_FROB_RE = re.compile(r"^\(\s*([0-9,\s]*)\|\s*([0-9,\s]*)\)$")


def parse_frobenius(text: str) -> FrobeniusCoords:
    """Parse "(3,1,0|3,2,0)"."""
    m = _FROB_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad Frobenius syntax: {text!r}")
    def ints(s: str) -> tuple[int, ...]:
        s = s.strip()
        return tuple(int(tok) for tok in s.split(",")) if s else ()
    return FrobeniusCoords(ints(m.group(1)), ints(m.group(2)))
