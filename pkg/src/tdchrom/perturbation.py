"""TDC stability and bondage: the minimum number of vertices (edges) whose
removal changes the total dominator chromatic number.

Removal can make the TDC number cease to exist (empty remainder or isolated
vertex).  Two conventions are supported and recorded in every result:

* ``UNDEFINED_COUNTS_AS_CHANGED`` (default): a removal that makes the value
  undefined counts as changing it.  This matches the constructions behind the
  published family values (balanced complete bipartite stability in
  particular relies on it).
* ``SKIP_UNDEFINED``: such removals are ignored; the sweep may then exhaust
  all subsets without a witness, reported as ``None``.

Subsets are swept in increasing size, lexicographic within a size, so values
and witnesses are deterministic, and every subset smaller than the witness
has been checked by the time it is returned.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Literal

from .coloring import tdc_defined
from .graphs import (
    Graph,
    canonical_code,
    delete_edges,
    delete_vertices,
    graph_from_code,
    MAX_CANONICAL_VERTICES,
)
from .solver import CapExceededError, tdc_number

DEFAULT_MAX_VERTICES = 12
DEFAULT_MAX_EDGES = 24


class Convention(enum.Enum):
    UNDEFINED_COUNTS_AS_CHANGED = "undefined-counts-as-changed"
    SKIP_UNDEFINED = "skip-undefined"


DEFAULT_CONVENTION = Convention.UNDEFINED_COUNTS_AS_CHANGED

Kind = Literal["vertices", "edges"]


@dataclass(frozen=True)
class PerturbationResult:
    kind: Kind
    value: int
    witness: tuple
    base_value: int
    after_value: int | None  # None encodes an undefined TDC number
    convention: Convention


_iso_value_cache: dict[tuple[int, int], int] = {}


def _tdc_value(
    g: Graph,
    node_budget: int | None,
    time_budget: float | None,
) -> int | None:
    """TDC value of a remainder graph, or None when undefined.

    Isomorphic remainders collapse through the canonical code when small
    enough; this is purely a cache key, values are label-invariant.
    """
    if not tdc_defined(g):
        return None
    if g.n <= MAX_CANONICAL_VERTICES:
        key = (g.n, canonical_code(g))
        cached = _iso_value_cache.get(key)
        if cached is None:
            rep = graph_from_code(g.n, key[1])
            cached = tdc_number(
                rep, node_budget=node_budget, time_budget=time_budget
            ).value
            _iso_value_cache[key] = cached
        return cached
    return tdc_number(g, node_budget=node_budget, time_budget=time_budget).value


def _check_caps(g: Graph, max_vertices: int | None, max_edges: int | None) -> None:
    if max_vertices is not None and g.n > max_vertices:
        raise CapExceededError(
            f"graph has {g.n} vertices, perturbation cap is {max_vertices}"
        )
    if max_edges is not None and g.m > max_edges:
        raise CapExceededError(
            f"graph has {g.m} edges, perturbation cap is {max_edges}"
        )


def _changed(base: int, after: int | None, convention: Convention) -> bool | None:
    """True/False when decidable, None when the subset must be skipped."""
    if after is None:
        if convention is Convention.UNDEFINED_COUNTS_AS_CHANGED:
            return True
        return None
    return after != base


def _sweep(
    g: Graph,
    kind: Kind,
    convention: Convention,
    node_budget: int | None,
    time_budget: float | None,
) -> PerturbationResult | None:
    base = tdc_number(g, node_budget=node_budget, time_budget=time_budget).value
    items: tuple = tuple(range(g.n)) if kind == "vertices" else g.edges
    remove = delete_vertices if kind == "vertices" else delete_edges
    for size in range(1, len(items) + 1):
        for subset in itertools.combinations(items, size):
            after = _tdc_value(remove(g, subset), node_budget, time_budget)
            outcome = _changed(base, after, convention)
            if outcome:
                return PerturbationResult(
                    kind=kind,
                    value=size,
                    witness=subset,
                    base_value=base,
                    after_value=after,
                    convention=convention,
                )
    return None


def stability(
    g: Graph,
    convention: Convention = DEFAULT_CONVENTION,
    *,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
    max_edges: int | None = DEFAULT_MAX_EDGES,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> PerturbationResult | None:
    """Minimum vertex-removal count changing the TDC number.

    Returns None only under ``SKIP_UNDEFINED`` when no subset qualifies
    ("no witness up to n").
    """
    _check_caps(g, max_vertices, max_edges)
    return _sweep(g, "vertices", convention, node_budget, time_budget)


def bondage(
    g: Graph,
    convention: Convention = DEFAULT_CONVENTION,
    *,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
    max_edges: int | None = DEFAULT_MAX_EDGES,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> PerturbationResult | None:
    """Minimum edge-removal count changing the TDC number (vertices remain)."""
    _check_caps(g, max_vertices, max_edges)
    return _sweep(g, "edges", convention, node_budget, time_budget)


def perturbation_trace(
    g: Graph,
    kind: Kind = "vertices",
    convention: Convention = DEFAULT_CONVENTION,
    max_size: int = 1,
    *,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
    max_edges: int | None = DEFAULT_MAX_EDGES,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> list[tuple[tuple, int | None]]:
    """Every removal subset up to max_size with its after-value (None when
    the remainder's TDC number is undefined).  The stability or bondage value
    is recoverable as the smallest subset marked changed under the convention.
    """
    _check_caps(g, max_vertices, max_edges)
    tdc_number(g, node_budget=node_budget, time_budget=time_budget)  # validates definedness
    items: tuple = tuple(range(g.n)) if kind == "vertices" else g.edges
    remove = delete_vertices if kind == "vertices" else delete_edges
    rows = []
    for size in range(1, min(max_size, len(items)) + 1):
        for subset in itertools.combinations(items, size):
            rows.append(
                (subset, _tdc_value(remove(g, subset), node_budget, time_budget))
            )
    return rows


def clear_caches() -> None:
    """Drop memoized remainder values (test helper)."""
    _iso_value_cache.clear()
