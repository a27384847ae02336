"""Exact computation of the total dominator chromatic number.

Two independent routes are provided:

* :func:`tdc_number` - branch and bound over canonical set partitions with
  properness and total-domination feasibility pruning, iterating the class
  budget k upward from max(chromatic number, total domination number).
* :func:`tdc_brute_force` - restricted-growth enumeration of all set
  partitions (n <= 8), re-verified through the public coloring predicates.
  It shares no search code with the branch-and-bound route and serves as its
  oracle in tests.

Budgets: a solve may be capped by a deterministic node budget and/or a
wall-clock budget; exhaustion raises :class:`BudgetExceededError` rather than
returning a guess.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import (
    Coloring,
    TdcUndefinedError,
    chromatic_number,
    greedy_clique,
    is_td_coloring,
    normalized,
    tdc_defined,
    total_domination_number,
)
from .graphs import MAX_EXACT_VERTICES, Graph, GraphError

BRUTE_FORCE_MAX_N = 8


class BudgetExceededError(RuntimeError):
    """A node or time budget expired before the solve completed."""


class CapExceededError(ValueError):
    """The instance exceeds a configured exact-computation cap."""


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class TdcResult:
    value: int
    witness: Coloring
    stats: SolveStats

    def __post_init__(self) -> None:
        if self.witness.k != self.value:
            raise AssertionError(
                f"witness uses {self.witness.k} classes, value is {self.value}"
            )


class _Budget:
    """Deterministic node counter with an optional wall-clock limit."""

    __slots__ = ("nodes", "node_limit", "deadline")

    def __init__(self, node_limit: int | None, time_limit: float | None):
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = None if time_limit is None else time.monotonic() + time_limit

    def spend(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceededError(f"node budget {self.node_limit} exhausted")
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError("time budget exhausted")


def solver_order(g: Graph) -> tuple[int, ...]:
    """Fixed search order: a greedy clique first (its vertices are forced onto
    distinct classes by canonical numbering), then descending degree."""
    clique = greedy_clique(g)
    in_clique = set(clique)
    rest = sorted((v for v in range(g.n) if v not in in_clique),
                  key=lambda v: (-g.degree(v), v))
    return clique + tuple(rest)


def _search(g: Graph, k: int, order: tuple[int, ...], budget: _Budget) -> list[int] | None:
    """Find a TD-coloring with at most k classes, or prove none exists.

    Classes are numbered canonically (a new class may only open as the next
    unused index), which enumerates set partitions without relabeling
    duplicates.  ``pure[v]`` tracks, as a bitmask over class slots, the
    classes that contain no non-neighbor of v; a class can totally dominate v
    at the end only if it stays pure for v and ends nonempty.
    """
    n = g.n
    adjb = g.adj_bits
    full = (1 << n) - 1
    nonadj = [
        [u for u in range(n) if u == v or not (adjb[v] >> u & 1)] for v in range(n)
    ]
    color = [-1] * n
    class_mask = [0] * k
    all_classes = (1 << k) - 1
    pure = [all_classes] * n
    uncolored = full

    def feasible(used_mask: int) -> bool:
        for v in range(n):
            p = pure[v]
            if p == 0:
                return False
            # Once every neighbor of v is colored, only an already-nonempty
            # pure class can still dominate v (new members of empty pure
            # classes would all be non-neighbors).
            if adjb[v] & uncolored == 0 and p & used_mask == 0:
                return False
        return True

    def rec(pos: int, used: int) -> bool:
        nonlocal uncolored
        if pos == n:
            return True
        v = order[pos]
        vbit = 1 << v
        for c in range(min(used + 1, k)):
            if class_mask[c] & adjb[v]:
                continue
            budget.spend()
            cbit = 1 << c
            color[v] = c
            class_mask[c] |= vbit
            uncolored &= ~vbit
            cleared = []
            for u in nonadj[v]:
                if pure[u] & cbit:
                    pure[u] &= ~cbit
                    cleared.append(u)
            new_used = used + (1 if c == used else 0)
            if feasible((1 << new_used) - 1) and rec(pos + 1, new_used):
                return True
            for u in cleared:
                pure[u] |= cbit
            uncolored |= vbit
            class_mask[c] &= ~vbit
            color[v] = -1
        return False

    return color if rec(0, 0) else None


def _require_solvable(g: Graph, max_n: int | None) -> None:
    cap = MAX_EXACT_VERTICES if max_n is None else max_n
    if g.n > cap:
        raise CapExceededError(f"graph has {g.n} vertices, exact cap is {cap}")
    if not tdc_defined(g):
        raise TdcUndefinedError(
            "TDC number undefined: empty graph or isolated vertex present"
        )


def tdc_decision(
    g: Graph,
    k: int,
    *,
    node_budget: int | None = None,
    time_budget: float | None = None,
    max_n: int | None = None,
) -> Coloring | None:
    """A TD-coloring with at most k classes if one exists, else None."""
    _require_solvable(g, max_n)
    if k < 1:
        raise GraphError(f"class budget must be >= 1, got {k}")
    budget = _Budget(node_budget, time_budget)
    found = _search(g, k, solver_order(g), budget)
    return None if found is None else normalized(found)


def tdc_lower_bound(g: Graph) -> int:
    """max(chromatic number, total domination number)."""
    if not tdc_defined(g):
        raise TdcUndefinedError("lower bound undefined: isolated vertex or empty graph")
    return max(chromatic_number(g)[0], total_domination_number(g)[0])


def tdc_upper_bound(g: Graph) -> tuple[int, Coloring]:
    """Witness-backed upper bound.

    Candidates: all-singleton classes (always a TD-coloring when no vertex is
    isolated), and a proper chromatic coloring with every vertex of a minimum
    total dominating set recolored into its own fresh class.  The smaller
    witness wins; the returned coloring is re-verified.
    """
    if not tdc_defined(g):
        raise TdcUndefinedError("upper bound undefined: isolated vertex or empty graph")
    best = Coloring(g.n, tuple(range(g.n)))
    _, proper = chromatic_number(g)
    _, dom = total_domination_number(g)
    colors = list(proper.colors)
    nxt = proper.k
    for v in sorted(dom):
        colors[v] = nxt
        nxt += 1
    candidate = normalized(colors)
    if candidate.k < best.k:
        best = candidate
    if not is_td_coloring(g, best):  # pragma: no cover - construction is valid
        raise AssertionError("upper bound witness failed verification")
    return best.k, best


_value_cache: dict[Graph, TdcResult] = {}


def tdc_number(
    g: Graph,
    *,
    node_budget: int | None = None,
    time_budget: float | None = None,
    max_n: int | None = None,
) -> TdcResult:
    """Exact TDC number with an optimal witness coloring.

    Iterates the class budget upward from the lower bound; the first
    satisfiable budget is the value.  Completed results are memoized per
    labeled graph (the solve is deterministic, so this is observationally
    pure).
    """
    _require_solvable(g, max_n)
    cached = _value_cache.get(g)
    if cached is not None:
        return cached
    t0 = time.monotonic()
    budget = _Budget(node_budget, time_budget)
    order = solver_order(g)
    lower = tdc_lower_bound(g)
    for k in range(max(lower, 1), g.n + 1):
        found = _search(g, k, order, budget)
        if found is not None:
            witness = normalized(found)
            result = TdcResult(
                value=witness.k,
                witness=witness,
                stats=SolveStats(nodes=budget.nodes, elapsed=time.monotonic() - t0),
            )
            _value_cache[g] = result
            return result
    raise AssertionError("unreachable: singleton classes always succeed")


def clear_caches() -> None:
    """Drop memoized solver results (test helper)."""
    _value_cache.clear()
    chromatic_number.cache_clear()
    total_domination_number.cache_clear()


def tdc_brute_force(g: Graph) -> int:
    """Independent oracle: minimum classes over all set partitions of V.

    Enumerates partitions as restricted-growth strings in natural vertex
    order, pruning only on properness, and re-checks every complete partition
    through :func:`is_td_coloring`.  Restricted to n <= 8.
    """
    if not tdc_defined(g):
        raise TdcUndefinedError("TDC number undefined: isolated vertex or empty graph")
    if g.n > BRUTE_FORCE_MAX_N:
        raise CapExceededError(
            f"brute force restricted to n <= {BRUTE_FORCE_MAX_N}, got {g.n}"
        )
    n = g.n
    colors = [0] * n
    earlier_nbrs = [tuple(u for u in g.adj[v] if u < v) for v in range(n)]
    best: int | None = None

    def rec(v: int, used: int) -> None:
        nonlocal best
        if v == n:
            f = Coloring(used, tuple(colors))
            if is_td_coloring(g, f) and (best is None or used < best):
                best = used
            return
        for c in range(used + 1):
            if any(colors[u] == c for u in earlier_nbrs[v]):
                continue
            colors[v] = c
            rec(v + 1, used + (1 if c == used else 0))

    rec(0, 0)
    assert best is not None  # singleton partition is always a TD-coloring
    return best
