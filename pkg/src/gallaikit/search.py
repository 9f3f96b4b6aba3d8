"""Exhaustive backtracking search for good grid colorings.

The engine assigns cells in row-major order and prunes as soon as the newly
assigned cell completes a monochromatic or rainbow rectangle with earlier
cells.  Two optional symmetry reductions quotient the search space without
changing the Found/Exhausted verdict: first-use color numbering and
lexicographically nondecreasing rows.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from enum import Enum

from .grid import (
    CertificateError,
    GridColoring,
    format_grid_certificate,
    parse_grid_certificate,
    verify_good,
)


class Outcome(Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget"


@dataclass(frozen=True)
class SearchOptions:
    """Engine knobs shared by the grid and complete-graph searches.

    node_budget caps the number of decision nodes (tentative color
    assignments).  worker_hint is a parallelism hint only; results never
    depend on it.  row_order_symmetry has no effect on graph searches.
    """

    node_budget: int | None = None
    color_symmetry: bool = True
    row_order_symmetry: bool = True
    worker_hint: int | None = None

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.worker_hint is not None and self.worker_hint < 1:
            raise ValueError("worker_hint must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search: verdict, optional verified witness, and effort counters.

    elapsed is wall-clock seconds and is the one field that varies between
    otherwise identical runs.
    """

    kind: Outcome
    witness: GridColoring | None
    nodes_visited: int
    elapsed: float

    def __post_init__(self) -> None:
        if (self.witness is not None) != (self.kind is Outcome.FOUND):
            raise ValueError("witness must be present exactly for Found outcomes")


class _BudgetHit(Exception):
    pass


def search_good_coloring(n: int, m: int, r: int, opts: SearchOptions | None = None) -> SearchOutcome:
    """Find a good n x m r-coloring or prove by exhaustion that none exists.

    Returns Found with the lexicographically least witness in the
    symmetry-reduced space, Exhausted after complete traversal, or
    BudgetExceeded once opts.node_budget decision nodes have been spent.
    Given fixed options the result is deterministic.
    """
    if opts is None:
        opts = SearchOptions()
    if n < 1 or m < 1 or r < 1:
        raise ValueError(f"n, m, r must be positive, got {(n, m, r)}")
    start = time.perf_counter()
    total = n * m
    if total + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(total + 1000)

    cells = [[0] * m for _ in range(n)]
    # ge[i]: row i is already strictly greater than row i-1 on the filled prefix
    ge = [False] * n
    budget = opts.node_budget
    color_sym = opts.color_symmetry
    row_sym = opts.row_order_symmetry
    rainbow_possible = r >= 4
    nodes = 0
    witness: GridColoring | None = None

    def completes_bad(i: int, j: int, c: int) -> bool:
        # does assigning color c at (i, j) finish a mono or rainbow rectangle?
        row_i = cells[i]
        for i2 in range(i):
            row2 = cells[i2]
            b = row2[j]
            mono = b == c
            if not mono and not rainbow_possible:
                continue
            for j2 in range(j):
                a = row2[j2]
                d = row_i[j2]
                if mono and a == c and d == c:
                    return True
                if rainbow_possible and a != b and a != d and a != c and b != d and b != c and d != c:
                    return True
        return False

    def descend(pos: int, max_used: int) -> bool:
        nonlocal nodes, witness
        if pos == total:
            witness = GridColoring(n, m, r, [row[:] for row in cells])
            return True
        i, j = divmod(pos, m)
        hi = min(r, max_used + 1) if color_sym else r
        lo = 1
        prev = 0
        tie = False
        if row_sym and i > 0 and not ge[i]:
            prev = cells[i - 1][j]
            lo = prev
            tie = True
        for c in range(lo, hi + 1):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _BudgetHit
            if completes_bad(i, j, c):
                continue
            cells[i][j] = c
            bumped = tie and c > prev
            if bumped:
                ge[i] = True
            if descend(pos + 1, c if c > max_used else max_used):
                return True
            if bumped:
                ge[i] = False
            cells[i][j] = 0
        return False

    try:
        found = descend(0, 0)
    except _BudgetHit:
        return SearchOutcome(Outcome.BUDGET_EXCEEDED, None, nodes, time.perf_counter() - start)
    if found:
        assert witness is not None
        if not verify_good(witness).is_good:
            raise RuntimeError("search engine produced a bad witness; this is a bug")
        return SearchOutcome(Outcome.FOUND, witness, nodes, time.perf_counter() - start)
    return SearchOutcome(Outcome.EXHAUSTED, None, nodes, time.perf_counter() - start)


def minimal_forcing_m(n: int, r: int, m_max: int, opts: SearchOptions | None = None) -> int | None:
    """Least m <= m_max such that no good n x m r-coloring exists, or None.

    Scans m upward; a good n x m coloring restricts to a good n x (m-1)
    coloring, so the first Exhausted width is the threshold.  Raises
    RuntimeError if a node budget prevents deciding some width.
    """
    if n < 2 or r < 1 or m_max < 2:
        raise ValueError(f"require n >= 2, r >= 1, m_max >= 2, got {(n, r, m_max)}")
    for m in range(1, m_max + 1):
        out = search_good_coloring(n, m, r, opts)
        if out.kind is Outcome.BUDGET_EXCEEDED:
            raise RuntimeError(f"node budget exhausted while deciding width m={m}")
        if out.kind is Outcome.EXHAUSTED:
            return m
    return None


@dataclass(frozen=True)
class SearchCertificate:
    """Parsed search certificate: verdict header plus optional witness grid."""

    kind: Outcome
    n: int
    m: int
    r: int
    nodes_visited: int
    witness: GridColoring | None


def format_search_certificate(result: SearchOutcome, n: int, m: int, r: int) -> str:
    """Certificate text: `outcome {found|exhausted|budget} n m r nodes=<count>` [+ grid]."""
    head = f"outcome {result.kind.value} {n} {m} {r} nodes={result.nodes_visited}"
    if result.kind is Outcome.FOUND:
        assert result.witness is not None
        return head + "\n" + format_grid_certificate(result.witness)
    return head + "\n"


def parse_search_certificate(text: str) -> SearchCertificate:
    """Strict parser for the search certificate format."""
    lines = text.splitlines()
    if not lines:
        raise CertificateError("empty search certificate")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "outcome":
        raise CertificateError(f"bad outcome header: {lines[0]!r}")
    kinds = {o.value: o for o in Outcome}
    if head[1] not in kinds:
        raise CertificateError(f"unknown outcome kind: {head[1]!r}")
    kind = kinds[head[1]]
    try:
        n, m, r = int(head[2]), int(head[3]), int(head[4])
    except ValueError as exc:
        raise CertificateError(f"bad outcome header: {lines[0]!r}") from exc
    if not head[5].startswith("nodes="):
        raise CertificateError(f"bad outcome header: {lines[0]!r}")
    try:
        nodes = int(head[5][len("nodes="):])
    except ValueError as exc:
        raise CertificateError(f"bad outcome header: {lines[0]!r}") from exc
    rest = "\n".join(lines[1:])
    witness = None
    if kind is Outcome.FOUND:
        witness = parse_grid_certificate(rest)
        if (witness.n, witness.m, witness.r) != (n, m, r):
            raise CertificateError("witness dimensions disagree with the outcome header")
    elif rest.strip():
        raise CertificateError("unexpected content after non-found outcome header")
    return SearchCertificate(kind, n, m, r, nodes, witness)
