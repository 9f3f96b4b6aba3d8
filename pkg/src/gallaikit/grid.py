"""Grid colorings and rectangle detectors.

A grid coloring assigns one of r colors to every cell of an n x m grid.
The detectors look for axis-aligned rectangles whose four corner cells all
share one color (monochromatic) or carry four pairwise-distinct colors
(rainbow).  A coloring is "good" when it contains neither.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class CertificateError(ValueError):
    """A certificate file deviates from its documented text format."""


@dataclass(frozen=True, order=True)
class GridRectangle:
    """Axis-aligned rectangle named by two rows i < i2 and two columns j < j2 (1-based)."""

    i: int
    i2: int
    j: int
    j2: int

    def __post_init__(self) -> None:
        if not (1 <= self.i < self.i2) or not (1 <= self.j < self.j2):
            raise ValueError(f"invalid rectangle indices {(self.i, self.i2, self.j, self.j2)}")

    def corners(self) -> tuple[tuple[int, int], ...]:
        """The four (row, column) corner positions."""
        return ((self.i, self.j), (self.i, self.j2), (self.i2, self.j), (self.i2, self.j2))


class GridColoring:
    """An r-coloring of the n x m grid with colors drawn from {1, ..., r}.

    Instances are immutable after construction and safe to share between
    workers.  Each (row, color) pair keeps a column bitmask internally, so
    rectangle detection reduces to word operations: two rows share a
    monochromatic rectangle of color c exactly when the AND of their color-c
    masks has at least two bits set.
    """

    __slots__ = ("n", "m", "r", "cells", "_masks")

    def __init__(self, n: int, m: int, r: int, cells: Sequence[Sequence[int]]):
        if n < 1 or m < 1 or r < 1:
            raise ValueError(f"n, m, r must be positive, got {(n, m, r)}")
        if len(cells) != n:
            raise ValueError(f"expected {n} rows, got {len(cells)}")
        rows = []
        for i, raw in enumerate(cells, start=1):
            row = tuple(raw)
            if len(row) != m:
                raise ValueError(f"row {i} has {len(row)} cells, expected {m}")
            for j, c in enumerate(row, start=1):
                if not isinstance(c, int) or not 1 <= c <= r:
                    raise ValueError(f"cell ({i},{j}) has color {c!r}, outside 1..{r}")
            rows.append(row)
        self.n = n
        self.m = m
        self.r = r
        self.cells = tuple(rows)
        masks = []
        for row in self.cells:
            per_color = [0] * (r + 1)
            for j, c in enumerate(row):
                per_color[c] |= 1 << j
            masks.append(tuple(per_color))
        self._masks = tuple(masks)

    def color(self, i: int, j: int) -> int:
        """Color of cell (i, j), indices 1-based."""
        return self.cells[i - 1][j - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridColoring):
            return NotImplemented
        return (self.n, self.m, self.r, self.cells) == (other.n, other.m, other.r, other.cells)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.r, self.cells))

    def __repr__(self) -> str:
        return f"GridColoring(n={self.n}, m={self.m}, r={self.r}, cells={[list(row) for row in self.cells]})"


@dataclass(frozen=True)
class VerificationReport:
    """Combined detector output; is_good is true exactly when both witnesses are absent."""

    mono_witness: GridRectangle | None
    rainbow_witness: GridRectangle | None
    is_good: bool

    def __post_init__(self) -> None:
        if self.is_good != (self.mono_witness is None and self.rainbow_witness is None):
            raise ValueError("is_good must equal the absence of both witnesses")


def _bits(x: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def find_mono_rectangle(g: GridColoring) -> GridRectangle | None:
    """Lexicographically least (i, i2, j, j2) monochromatic rectangle, or None."""
    masks = g._masks
    for i in range(g.n - 1):
        mi = masks[i]
        for i2 in range(i + 1, g.n):
            mi2 = masks[i2]
            best = None
            for c in range(1, g.r + 1):
                inter = mi[c] & mi2[c]
                if inter.bit_count() >= 2:
                    j = (inter & -inter).bit_length() - 1
                    rest = inter & (inter - 1)
                    j2 = (rest & -rest).bit_length() - 1
                    if best is None or (j, j2) < best:
                        best = (j, j2)
            if best is not None:
                return GridRectangle(i + 1, i2 + 1, best[0] + 1, best[1] + 1)
    return None


def find_rainbow_rectangle(g: GridColoring) -> GridRectangle | None:
    """Lexicographically least rectangle with four pairwise-distinct corners, or None.

    Impossible for r <= 3, so that case returns immediately.  Column pairs
    are prefiltered to those where the two rows disagree, since a rainbow
    corner pair within one column must already use two colors.
    """
    if g.r < 4:
        return None
    full = (1 << g.m) - 1
    masks = g._masks
    for i in range(g.n - 1):
        row_i = g.cells[i]
        mi = masks[i]
        for i2 in range(i + 1, g.n):
            row_i2 = g.cells[i2]
            mi2 = masks[i2]
            same = 0
            for c in range(1, g.r + 1):
                same |= mi[c] & mi2[c]
            diff = full & ~same
            if diff.bit_count() < 2:
                continue
            cols = list(_bits(diff))
            for a_idx in range(len(cols) - 1):
                j = cols[a_idx]
                a, b = row_i[j], row_i2[j]
                for b_idx in range(a_idx + 1, len(cols)):
                    j2 = cols[b_idx]
                    a2, b2 = row_i[j2], row_i2[j2]
                    # a != b and a2 != b2 hold by the diff prefilter
                    if a != a2 and a != b2 and b != a2 and b != b2:
                        return GridRectangle(i + 1, i2 + 1, j + 1, j2 + 1)
    return None


def verify_good(g: GridColoring) -> VerificationReport:
    """Run both detectors and combine them into a report."""
    mono = find_mono_rectangle(g)
    rainbow = find_rainbow_rectangle(g)
    return VerificationReport(mono, rainbow, mono is None and rainbow is None)


@dataclass(frozen=True)
class BipartiteEdgeColoring:
    """An r-coloring of the edges of the complete bipartite graph K_{n,m}.

    Edge {left i, right j} carries colors[i-1][j-1].  Monochromatic and
    rainbow K_{2,2} subgraphs correspond exactly to monochromatic and
    rainbow rectangles of the originating grid coloring.
    """

    n: int
    m: int
    r: int
    colors: tuple[tuple[int, ...], ...]

    def color(self, i: int, j: int) -> int:
        """Color of the edge between left vertex i and right vertex j (1-based)."""
        return self.colors[i - 1][j - 1]


def to_bipartite_edge_coloring(g: GridColoring) -> BipartiteEdgeColoring:
    """View the grid coloring as an edge coloring of K_{n,m}: edge (i,j) gets cell (i,j)."""
    return BipartiteEdgeColoring(g.n, g.m, g.r, g.cells)


def from_bipartite_edge_coloring(ec: BipartiteEdgeColoring) -> GridColoring:
    """Inverse of to_bipartite_edge_coloring; the two maps form a bijection."""
    return GridColoring(ec.n, ec.m, ec.r, ec.colors)


def format_grid_certificate(g: GridColoring) -> str:
    """Grid certificate text: `grid n m r` then n lines of m space-separated colors."""
    lines = [f"grid {g.n} {g.m} {g.r}"]
    lines.extend(" ".join(str(c) for c in row) for row in g.cells)
    return "\n".join(lines) + "\n"


def parse_grid_certificate(text: str) -> GridColoring:
    """Strict parser for the grid certificate format; trailing whitespace is tolerated."""
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CertificateError("empty grid certificate")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "grid":
        raise CertificateError(f"bad grid header: {lines[0]!r}")
    try:
        n, m, r = (int(tok) for tok in head[1:])
    except ValueError as exc:
        raise CertificateError(f"bad grid header: {lines[0]!r}") from exc
    if len(lines) - 1 != n:
        raise CertificateError(f"expected {n} rows, found {len(lines) - 1}")
    cells = []
    for line in lines[1:]:
        try:
            cells.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise CertificateError(f"bad row line: {line!r}") from exc
    try:
        return GridColoring(n, m, r, cells)
    except ValueError as exc:
        raise CertificateError(str(exc)) from exc
