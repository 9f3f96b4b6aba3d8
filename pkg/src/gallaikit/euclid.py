"""Euclidean point configurations, congruence, and explicit colorings.

Covers the geometric side of the toolkit: exact-enough point families
(regular simplices, the orthogonal-block lattice of grid points, the
midpoint family indexed by vertex pairs), congruence testing by distance
matching, the planar strip coloring with its Monte-Carlo falsifier, the
constructive rainbow-segment walk, and the nine-point gadget whose finite
enumeration establishes that every coloring of 3-space contains a
monochromatic or rainbow 30-60-90 triangle with unit hypotenuse.

All arithmetic is double precision; distance comparisons use absolute
tolerance 1e-9, which is comfortable for the coordinate magnitudes
involved (small combinations of 1/2, 1/sqrt(2), sqrt(3)/4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping

import numpy as np

from .grid import CertificateError

DEFAULT_TOL = 1e-9

#: side lengths of the 30-60-90 triangle with unit hypotenuse
GADGET_SIDES = (0.5, math.sqrt(3) / 2, 1.0)

ColoringOracle = Callable[[float, float], int]


@dataclass(frozen=True)
class LabeledPoint:
    """A point with a string label and finite real coordinates."""

    label: str
    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        coords = tuple(float(x) for x in self.coords)
        for x in coords:
            if not math.isfinite(x):
                raise ValueError(f"point {self.label!r} has non-finite coordinate {x}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)


class Configuration:
    """A finite ordered set of labeled points sharing one ambient dimension."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[LabeledPoint]):
        pts = tuple(points)
        if not pts:
            raise ValueError("configuration must contain at least one point")
        dim = pts[0].dim
        labels = set()
        for p in pts:
            if p.dim != dim:
                raise ValueError(f"point {p.label!r} has dimension {p.dim}, expected {dim}")
            if p.label in labels:
                raise ValueError(f"duplicate label {p.label!r}")
            labels.add(p.label)
        self.points = pts

    @property
    def dim(self) -> int:
        return self.points[0].dim

    def __len__(self) -> int:
        return len(self.points)

    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.points)

    def coords_array(self) -> np.ndarray:
        return np.array([p.coords for p in self.points], dtype=float)

    def distance_matrix(self) -> np.ndarray:
        pts = self.coords_array()
        diff = pts[:, None, :] - pts[None, :, :]
        return np.sqrt((diff * diff).sum(axis=-1))

    def __repr__(self) -> str:
        return f"Configuration({len(self.points)} points in dim {self.dim})"


def distance(p: LabeledPoint, q: LabeledPoint) -> float:
    """Euclidean distance between two points of the same ambient dimension."""
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.label!r} has {p.dim}, {q.label!r} has {q.dim}")
    return math.dist(p.coords, q.coords)


def congruent(a: Configuration, b: Configuration, tol: float = DEFAULT_TOL) -> dict[str, str] | None:
    """Label bijection under which all pairwise distances match within tol, or None.

    The two configurations may live in different ambient dimensions.  The
    search tries assignments in point order with early pruning on the
    first mismatched distance, so the returned bijection is deterministic.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)} points")
    k = len(a)
    da = a.distance_matrix()
    db = b.distance_matrix()
    mapping = [-1] * k
    used = [False] * k

    def place(idx: int) -> bool:
        if idx == k:
            return True
        for cand in range(k):
            if used[cand]:
                continue
            if all(abs(da[idx, p] - db[cand, mapping[p]]) <= tol for p in range(idx)):
                mapping[idx] = cand
                used[cand] = True
                if place(idx + 1):
                    return True
                used[cand] = False
                mapping[idx] = -1
        return False

    if place(0):
        return {a.points[i].label: b.points[mapping[i]].label for i in range(k)}
    return None


def regular_simplex(k: int, side: float) -> Configuration:
    """k+1 points with all pairwise distances equal to side.

    Built as the scaled standard basis (side/sqrt(2)) * e_i in k+1 ambient
    coordinates, so every pairwise distance is exact; the family spans a
    k-dimensional affine subspace (check with affine_rank if needed).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if side <= 0:
        raise ValueError("side must be positive")
    scale = side / math.sqrt(2)
    points = []
    for i in range(k + 1):
        coords = [0.0] * (k + 1)
        coords[i] = scale
        points.append(LabeledPoint(f"v{i + 1}", tuple(coords)))
    return Configuration(points)


def affine_rank(config: Configuration, tol: float = 1e-6) -> int:
    """Dimension of the affine span, via singular values above tol."""
    pts = config.coords_array()
    if len(pts) == 1:
        return 0
    diffs = pts[1:] - pts[0]
    singular = np.linalg.svd(diffs, compute_uv=False)
    return int((singular > tol).sum())


@dataclass(frozen=True)
class LatticeEmbedding:
    """Grid points realized in high dimension so index rectangles become metric rectangles.

    Point (i, j) is the concatenation of the i-th vertex of a side-a
    simplex and the j-th vertex of a side-b simplex in orthogonal
    coordinate blocks, translated so point (1, 1) is the origin.  Rows are
    side a apart, columns side b apart, and every index quadruple
    (i, i2, j, j2) is congruent to the planar a x b rectangle.
    """

    rows: int
    cols: int
    side_a: float
    side_b: float
    points: Mapping[tuple[int, int], LabeledPoint]

    def point(self, i: int, j: int) -> LabeledPoint:
        return self.points[(i, j)]

    def configuration(self) -> Configuration:
        return Configuration(
            self.points[(i, j)] for i in range(1, self.rows + 1) for j in range(1, self.cols + 1)
        )

    def rectangle_configuration(self, i: int, i2: int, j: int, j2: int) -> Configuration:
        return Configuration(
            (self.points[(i, j)], self.points[(i, j2)], self.points[(i2, j)], self.points[(i2, j2)])
        )


def planar_rectangle(a: float, b: float) -> Configuration:
    """The reference a x b rectangle (0,0), (a,0), (0,b), (a,b) in the plane."""
    return Configuration(
        (
            LabeledPoint("q1", (0.0, 0.0)),
            LabeledPoint("q2", (a, 0.0)),
            LabeledPoint("q3", (0.0, b)),
            LabeledPoint("q4", (a, b)),
        )
    )


def grid_lattice_embedding(r: int, a: float, b: float) -> LatticeEmbedding:
    """The (2r+5) x (11r+1) family A_{i,j} in 13r+6 ambient coordinates.

    A_{i,j} = A_{i,1} + (A_{1,j} - A_{1,1}) with the row simplex (side a)
    and the column simplex (side b) in complementary orthogonal blocks;
    the affine rank of the family is (2r+4) + 11r = 13r+4.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if a <= 0 or b <= 0:
        raise ValueError("side lengths must be positive")
    rows = 2 * r + 5
    cols = 11 * r + 1
    row_simplex = regular_simplex(rows - 1, a).coords_array()
    col_simplex = regular_simplex(cols - 1, b).coords_array()
    row_simplex = row_simplex - row_simplex[0]
    col_simplex = col_simplex - col_simplex[0]
    points = {}
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            coords = tuple(row_simplex[i - 1]) + tuple(col_simplex[j - 1])
            points[(i, j)] = LabeledPoint(f"A{i}_{j}", coords)
    return LatticeEmbedding(rows, cols, float(a), float(b), points)


@dataclass(frozen=True)
class PairEmbedding:
    """The C(t,2) midpoint-style points indexed by vertex pairs of K_t.

    Point {i, j} has value 1/sqrt(2) in coordinates i and j and zero
    elsewhere; two points are at distance 1 when their pairs share a
    vertex and sqrt(2) otherwise.  edge_map sends each point label to its
    vertex pair, so any point coloring induces an edge coloring of K_t.
    """

    t: int
    points: Mapping[tuple[int, int], LabeledPoint]
    edge_map: Mapping[str, tuple[int, int]]

    def point(self, i: int, j: int) -> LabeledPoint:
        return self.points[(i, j)]

    def configuration(self) -> Configuration:
        return Configuration(self.points[pair] for pair in sorted(self.points))


def simplex_midpoint_embedding(t: int) -> PairEmbedding:
    """Build the vertex-pair point family for K_t, t >= 2."""
    if t < 2:
        raise ValueError("t must be at least 2")
    value = 1 / math.sqrt(2)
    points = {}
    edge_map = {}
    for i, j in combinations(range(1, t + 1), 2):
        coords = [0.0] * t
        coords[i - 1] = value
        coords[j - 1] = value
        label = f"m{i}_{j}"
        points[(i, j)] = LabeledPoint(label, tuple(coords))
        edge_map[label] = (i, j)
    return PairEmbedding(t, points, edge_map)


def strip_color(r: int, a: float, p: tuple[float, float]) -> int:
    """Color of a planar point under the vertical strip coloring.

    The plane splits into strips i*a <= x < (i+1)*a colored i mod r, so
    the result is floor(x/a) mod r as a value in {0, ..., r-1}; the
    mathematical mod fixes the convention for negative x.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if a <= 0:
        raise ValueError("a must be positive")
    x = float(p[0])
    return math.floor(x / a) % r


def halfplane_oracle(x: float, y: float) -> int:
    """Two-coloring of the plane: color 1 left of the y-axis, color 2 elsewhere."""
    return 1 if x < 0.0 else 2


def strip_oracle(r: int, a: float) -> ColoringOracle:
    """The strip coloring packaged as a point oracle."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if a <= 0:
        raise ValueError("a must be positive")

    def oracle(x: float, y: float) -> int:
        return strip_color(r, a, (x, y))

    return oracle


@dataclass(frozen=True)
class FalsificationReport:
    """Monte-Carlo tally; first_counterexample is ((cx, cy), angle) of the first hit."""

    trials: int
    mono_hits: int
    rainbow_hits: int
    first_counterexample: tuple[tuple[float, float], float] | None

    def __post_init__(self) -> None:
        if (self.mono_hits + self.rainbow_hits == 0) != (self.first_counterexample is None):
            raise ValueError("first_counterexample must be recorded exactly when hits occurred")


def falsify_strip(r: int, a: float, b: float, trials: int, seed: int) -> FalsificationReport:
    """Attack the strip coloring with random congruent copies of the a x b rectangle.

    Samples `trials` placements with a seeded PCG64 generator
    (numpy.random.default_rng): one batch of rotation angles uniform in
    [0, pi), then center x uniform in the fundamental domain [0, r*a),
    then center y uniform in [0, 1), in that fixed order so reports are
    reproducible bit for bit.  Corner colors come from the strip coloring;
    for a <= b <= sqrt(3)*a no placement can be monochromatic or rainbow,
    so the expected hit counts are zero.
    """
    if r < 3:
        raise ValueError("r must be at least 3")
    if a <= 0:
        raise ValueError("a must be positive")
    if not a <= b <= math.sqrt(3) * a:
        raise ValueError(f"require a <= b <= sqrt(3)*a, got a={a}, b={b}")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    if trials == 0:
        return FalsificationReport(0, 0, 0, None)
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, math.pi, trials)
    cx = rng.uniform(0.0, r * a, trials)
    cy = rng.uniform(0.0, 1.0, trials)
    half_a = a / 2.0
    half_b = b / 2.0
    ux = half_a * np.cos(theta)
    uy = half_a * np.sin(theta)
    vx = -half_b * np.sin(theta)
    vy = half_b * np.cos(theta)
    corner_x = (cx + ux + vx, cx + ux - vx, cx - ux + vx, cx - ux - vx)
    colors = [np.floor(x / a).astype(np.int64) % r for x in corner_x]
    c0, c1, c2, c3 = colors
    mono = (c0 == c1) & (c0 == c2) & (c0 == c3)
    rainbow = (
        (c0 != c1) & (c0 != c2) & (c0 != c3) & (c1 != c2) & (c1 != c3) & (c2 != c3)
    )
    hits = mono | rainbow
    first = None
    if hits.any():
        idx = int(np.argmax(hits))
        first = ((float(cx[idx]), float(cy[idx])), float(theta[idx]))
    return FalsificationReport(trials, int(mono.sum()), int(rainbow.sum()), first)


@dataclass(frozen=True)
class SegmentResult:
    """A rainbow pair at the requested distance, plus the walk's iteration count."""

    p: tuple[float, float]
    q: tuple[float, float]
    iterations: int


def rainbow_segment(
    oracle: ColoringOracle,
    d: float,
    c: tuple[float, float],
    dpt: tuple[float, float],
    max_iter: int | None = None,
) -> SegmentResult:
    """Two points at distance d with distinct oracle colors, from a rainbow witness.

    Walks from c toward dpt in steps of length d while the segment is
    longer than 2d, returning early when a step changes color; once within
    2d it takes the apex on the perpendicular bisector at distance d from
    both endpoints (of the two apexes, the lexicographically larger one)
    and pairs it with whichever endpoint disagrees.  Never needs more than
    ceil(|c dpt| / d) + 1 iterations; max_iter defaults to that bound and
    exceeding it raises RuntimeError.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    cur = (float(c[0]), float(c[1]))
    other = (float(dpt[0]), float(dpt[1]))
    col_cur = oracle(*cur)
    col_other = oracle(*other)
    if col_cur == col_other:
        raise ValueError("oracle must give the two starting points distinct colors")
    if max_iter is None:
        max_iter = math.ceil(math.dist(cur, other) / d) + 1
    iterations = 0
    while math.dist(cur, other) > 2 * d:
        iterations += 1
        if iterations > max_iter:
            raise RuntimeError(f"exceeded max_iter={max_iter} iterations")
        length = math.dist(cur, other)
        nxt = (
            cur[0] + (other[0] - cur[0]) * d / length,
            cur[1] + (other[1] - cur[1]) * d / length,
        )
        if oracle(*nxt) != col_cur:
            return SegmentResult(cur, nxt, iterations)
        cur = nxt
    iterations += 1
    if iterations > max_iter:
        raise RuntimeError(f"exceeded max_iter={max_iter} iterations")
    length = math.dist(cur, other)
    mid = ((cur[0] + other[0]) / 2.0, (cur[1] + other[1]) / 2.0)
    height = math.sqrt(max(d * d - (length / 2.0) ** 2, 0.0))
    normal = (-(other[1] - cur[1]) / length, (other[0] - cur[0]) / length)
    apex = max(
        (mid[0] + height * normal[0], mid[1] + height * normal[1]),
        (mid[0] - height * normal[0], mid[1] - height * normal[1]),
    )
    if oracle(*apex) != col_cur:
        return SegmentResult(apex, cur, iterations)
    return SegmentResult(apex, other, iterations)


def triangle_gadget() -> tuple[Configuration, list[tuple[str, str, str]]]:
    """The nine-point gadget and every 3-subset congruent to the 30-60-90 triangle.

    Points: an equilateral triangle A, B, C of side sqrt(3)/2 in the z=0
    plane, plus a regular hexagon A1..A6 of circumradius 1/2 centered at A
    in the plane x=0 (perpendicular to AB) with A1 and A4 on the z-axis
    (the line through A perpendicular to the ABC plane).  The triple list
    is found by matching each 3-subset's distance multiset against
    {1/2, sqrt(3)/2, 1} within 1e-9.
    """
    s3 = math.sqrt(3)
    config = Configuration(
        (
            LabeledPoint("A", (0.0, 0.0, 0.0)),
            LabeledPoint("B", (s3 / 2, 0.0, 0.0)),
            LabeledPoint("C", (s3 / 4, 0.75, 0.0)),
            LabeledPoint("A1", (0.0, 0.0, 0.5)),
            LabeledPoint("A2", (0.0, s3 / 4, 0.25)),
            LabeledPoint("A3", (0.0, s3 / 4, -0.25)),
            LabeledPoint("A4", (0.0, 0.0, -0.5)),
            LabeledPoint("A5", (0.0, -s3 / 4, -0.25)),
            LabeledPoint("A6", (0.0, -s3 / 4, 0.25)),
        )
    )
    target = sorted(GADGET_SIDES)
    triples = []
    pts = config.points
    for x, y, z in combinations(range(len(pts)), 3):
        dists = sorted(
            (distance(pts[x], pts[y]), distance(pts[x], pts[z]), distance(pts[y], pts[z]))
        )
        if all(abs(got - want) <= DEFAULT_TOL for got, want in zip(dists, target)):
            triples.append((pts[x].label, pts[y].label, pts[z].label))
    return config, triples


@dataclass(frozen=True)
class GadgetReport:
    """Outcome of the finite gadget enumeration."""

    holds: bool
    colorings_checked: int
    triple_count: int
    first_uncovered: dict[str, int] | None


def verify_triangle_gadget() -> GadgetReport:
    """Check that every restricted coloring of the gadget contains a mono or rainbow triple.

    Enumerates all colorings of the seven free points C, A1..A6 with colors
    from {1..9} (nine colors represent any coloring of nine points up to
    renaming), with A fixed to 1, B fixed to 2, and C != 2; those fixings
    encode the symmetry reductions under which the full statement follows.
    The 8 * 9^6 colorings are swept in vectorized batches, one batch per
    color of C.
    """
    config, triples = triangle_gadget()
    hex_labels = ("A1", "A2", "A3", "A4", "A5", "A6")
    n_hex = 9 ** 6
    unraveled = np.unravel_index(np.arange(n_hex), (9,) * 6)
    hex_colors = [arr.astype(np.int8) + 1 for arr in unraveled]
    checked = 0
    first_uncovered = None
    holds = True
    for c_color in (1, 3, 4, 5, 6, 7, 8, 9):
        colors: dict[str, object] = {"A": 1, "B": 2, "C": c_color}
        for lab, arr in zip(hex_labels, hex_colors):
            colors[lab] = arr
        covered = np.zeros(n_hex, dtype=bool)
        for p, q, s in triples:
            cp, cq, cs = colors[p], colors[q], colors[s]
            mono = (cp == cq) & (cq == cs)
            rainbow = (cp != cq) & (cp != cs) & (cq != cs)
            covered |= mono | rainbow
        checked += n_hex
        if not covered.all():
            holds = False
            if first_uncovered is None:
                idx = int(np.argmin(covered))
                first_uncovered = {"A": 1, "B": 2, "C": c_color}
                for lab, arr in zip(hex_labels, hex_colors):
                    first_uncovered[lab] = int(arr[idx])
    return GadgetReport(holds, checked, len(triples), first_uncovered)


def format_configuration(config: Configuration) -> str:
    """Configuration text: `config dim k` then k lines `label x1 ... x_dim`."""
    for p in config.points:
        if not p.label or any(ch.isspace() for ch in p.label):
            raise ValueError(f"label {p.label!r} cannot be written to the text format")
    lines = [f"config {config.dim} {len(config)}"]
    lines.extend(
        p.label + " " + " ".join(repr(x) for x in p.coords) for p in config.points
    )
    return "\n".join(lines) + "\n"


def parse_configuration(text: str) -> Configuration:
    """Strict parser for the configuration text format."""
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CertificateError("empty configuration")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "config":
        raise CertificateError(f"bad config header: {lines[0]!r}")
    try:
        dim, count = int(head[1]), int(head[2])
    except ValueError as exc:
        raise CertificateError(f"bad config header: {lines[0]!r}") from exc
    if len(lines) - 1 != count:
        raise CertificateError(f"expected {count} point lines, found {len(lines) - 1}")
    points = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != dim + 1:
            raise CertificateError(f"bad point line: {line!r}")
        try:
            coords = tuple(float(tok) for tok in parts[1:])
        except ValueError as exc:
            raise CertificateError(f"bad point line: {line!r}") from exc
        points.append(LabeledPoint(parts[0], coords))
    try:
        return Configuration(points)
    except ValueError as exc:
        raise CertificateError(str(exc)) from exc
