"""Small-graph enumeration and randomized generation.

Labeled enumeration walks all upper-triangle adjacency codes in lexicographic
order.  Isomorphism-free enumeration (``dedup=True``) grows representatives
one vertex at a time: every graph on k+1 vertices arises from some graph on k
vertices by attaching a new vertex to a subset, so extending each canonical
representative by every subset and re-canonicalizing reaches every class.
Representatives are the lexicographically least labeled member of each class.

The conjecture scan drives the stability solver over every graph that has a
vertex of degree one or two, emitting one finding per graph; it asserts
nothing about the conjecture, the findings are the evidence.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    canonical_code,
    graph_from_code,
    has_isolated_vertex,
    is_connected,
    write_graph6,
)
from .perturbation import Convention, DEFAULT_CONVENTION, stability
from .solver import CapExceededError, tdc_number

ENUMERATION_MAX_N = 8
SCAN_MAX_N = 7

GraphFilter = Callable[[Graph], bool]

_NAMED_FILTERS: dict[str, GraphFilter] = {
    "all": lambda g: True,
    "connected": is_connected,
    "no-isolated": lambda g: not has_isolated_vertex(g),
}


def _resolve_filter(graph_filter: str | GraphFilter) -> GraphFilter:
    if callable(graph_filter):
        return graph_filter
    try:
        return _NAMED_FILTERS[graph_filter]
    except KeyError:
        raise GraphError(
            f"unknown filter {graph_filter!r}; expected one of {sorted(_NAMED_FILTERS)}"
        ) from None


_representative_cache: dict[int, tuple[int, ...]] = {}


def _representatives(n: int) -> tuple[int, ...]:
    """Sorted canonical codes of all isomorphism classes on n vertices."""
    if n in _representative_cache:
        return _representative_cache[n]
    if n == 1:
        reps: tuple[int, ...] = (0,)
    else:
        prev = _representatives(n - 1)
        seen: set[int] = set()
        for code in prev:
            # The new vertex n-1 owns the n-1 lowest slots of the child code,
            # so extending is a shift plus every attachment subset.
            shifted = code << (n - 1)
            for subset in range(1 << (n - 1)):
                seen.add(canonical_code(graph_from_code(n, shifted | subset)))
        reps = tuple(sorted(seen))
    _representative_cache[n] = reps
    return reps


def enumerate_graphs(
    n: int,
    graph_filter: str | GraphFilter = "all",
    dedup: bool = False,
) -> Iterator[Graph]:
    """Yield the labeled graphs on n vertices passing the filter in
    lexicographic upper-triangle order, or one least-labeled representative
    per isomorphism class when ``dedup`` is set."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}")
    pred = _resolve_filter(graph_filter)
    if dedup:
        for code in _representatives(n):
            g = graph_from_code(n, code)
            if pred(g):
                yield g
    else:
        for code in range(1 << (n * (n - 1) // 2)):
            g = graph_from_code(n, code)
            if pred(g):
                yield g


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style G(n, p), deterministic for a fixed seed.

    Pairs are visited in row order (0,1), (0,2), ..., each kept with
    probability p using ``random.Random(seed)``.
    """
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    """First connected G(n, p) sample along the derived seed sequence."""
    for attempt in range(max_tries):
        g = random_graph(n, p, seed * max_tries + attempt)
        if is_connected(g):
            return g
    raise GraphError(f"no connected sample after {max_tries} tries (n={n}, p={p})")


# ---------------------------------------------------------------------------
# Conjecture scan: graphs with a vertex of degree one or two are claimed to
# have stability 1 or 2.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureFinding:
    graph6: str
    n: int
    min_degree: int
    tdc: int
    stability: int | None
    convention: Convention
    connected: bool
    verdict: str  # "consistent" | "counterexample"


def conjecture_scan(
    max_n: int = 6,
    convention: Convention = DEFAULT_CONVENTION,
    *,
    connected_only: bool = True,
) -> list[ConjectureFinding]:
    """One finding per hypothesis-satisfying graph with at most max_n vertices.

    The hypothesis filter is exact: no isolated vertex and some vertex of
    degree one or two.  ``connected_only=False`` widens the population to all
    isolated-vertex-free graphs; each finding records which population it
    came from.
    """
    if not 2 <= max_n <= SCAN_MAX_N:
        raise CapExceededError(f"conjecture scan supports 2 <= max_n <= {SCAN_MAX_N}")
    findings = []
    population = "connected" if connected_only else "no-isolated"
    for n in range(2, max_n + 1):
        for g in enumerate_graphs(n, population, dedup=True):
            min_deg = min(g.degree(v) for v in range(n))
            if min_deg not in (1, 2):
                continue
            value = tdc_number(g).value
            result = stability(g, convention)
            st = None if result is None else result.value
            verdict = "consistent" if st in (1, 2) else "counterexample"
            findings.append(
                ConjectureFinding(
                    graph6=write_graph6(g),
                    n=n,
                    min_degree=min_deg,
                    tdc=value,
                    stability=st,
                    convention=convention,
                    connected=is_connected(g),
                    verdict=verdict,
                )
            )
    return findings
