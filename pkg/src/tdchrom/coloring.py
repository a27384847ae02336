"""Colorings, total-dominator verification predicates, and the exact baseline
invariants: chromatic number and total domination number.

A total dominator (TD) coloring is a proper coloring in which every vertex is
adjacent to every vertex of some nonempty color class.  Both the TDC number
and the total domination number are undefined on empty graphs and on graphs
with an isolated vertex; such requests raise :class:`TdcUndefinedError`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .graphs import Graph, GraphError, has_isolated_vertex


class TdcUndefinedError(ValueError):
    """The requested invariant is undefined for this graph (empty graph or
    isolated vertex present)."""


def tdc_defined(g: Graph) -> bool:
    """True iff the TDC number (and the total domination number) exist."""
    return g.n > 0 and not has_isolated_vertex(g)


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in 0..k-1; every color class is nonempty."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise GraphError("color count must be non-negative")
        used = set(self.colors)
        for c in self.colors:
            if not 0 <= c < self.k:
                raise GraphError(f"color {c} out of range [0, {self.k})")
        if used != set(range(self.k)):
            raise GraphError("every color in 0..k-1 must be used")

    @classmethod
    def from_sequence(cls, colors: tuple[int, ...] | list[int]) -> "Coloring":
        colors = tuple(colors)
        k = max(colors) + 1 if colors else 0
        return cls(k, colors)

    @cached_property
    def classes(self) -> tuple[frozenset[int], ...]:
        members: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            members[c].add(v)
        return tuple(frozenset(s) for s in members)

    @cached_property
    def class_bits(self) -> tuple[int, ...]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return tuple(masks)


def normalized(colors: list[int] | tuple[int, ...]) -> Coloring:
    """Relabel classes by first occurrence in vertex order 0..n-1."""
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return Coloring(len(remap), tuple(out))


def _check_domain(g: Graph, f: Coloring) -> None:
    if len(f.colors) != g.n:
        raise GraphError(
            f"coloring covers {len(f.colors)} vertices but the graph has {g.n}"
        )


def is_proper(g: Graph, f: Coloring) -> bool:
    """True iff no edge is monochromatic."""
    _check_domain(g, f)
    return all(f.colors[u] != f.colors[v] for u, v in g.edges)


def dominated_class_of(g: Graph, f: Coloring, v: int) -> int | None:
    """Smallest color whose entire (nonempty) class lies inside N(v), if any.

    A vertex's own class never qualifies under a proper coloring since the
    vertex is not adjacent to itself.
    """
    _check_domain(g, f)
    g._check_vertex(v)
    nbhd = g.adj_bits[v]
    for c, mask in enumerate(f.class_bits):
        if mask and mask & ~nbhd == 0:
            return c
    return None


def td_witness_table(g: Graph, f: Coloring) -> tuple[int | None, ...]:
    """Per-vertex dominated class (or None), the witness for TD verification."""
    return tuple(dominated_class_of(g, f, v) for v in range(g.n))


def is_td_coloring(g: Graph, f: Coloring) -> bool:
    """True iff f is proper and every vertex totally dominates some class."""
    if not tdc_defined(g):
        raise TdcUndefinedError("TD-colorings are undefined: isolated vertex or empty graph")
    if not is_proper(g, f):
        return False
    return all(w is not None for w in td_witness_table(g, f))


# ---------------------------------------------------------------------------
# Chromatic number: branch and bound with a greedy clique lower bound.
# The clique vertices are placed first in the search order; with canonical
# class numbering (a new class may only open as the next unused index) this
# seeds them with distinct colors for free.
# ---------------------------------------------------------------------------

def greedy_clique(g: Graph) -> tuple[int, ...]:
    """Greedily grown clique: start at max degree, extend by the max-degree
    common neighbor, ties broken by smaller id.  Deterministic."""
    if g.n == 0:
        return ()
    best = max(range(g.n), key=lambda v: (g.degree(v), -v))
    clique = [best]
    common = g.adj_bits[best]
    while common:
        pick = -1
        for v in range(g.n):
            if common >> v & 1:
                if pick == -1 or (g.degree(v), -v) > (g.degree(pick), -pick):
                    pick = v
        clique.append(pick)
        common &= g.adj_bits[pick]
    return tuple(clique)


def _proper_decision(g: Graph, k: int, order: tuple[int, ...]) -> list[int] | None:
    n = g.n
    adjb = g.adj_bits
    color = [-1] * n
    class_mask = [0] * k

    def rec(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        vbit = 1 << v
        for c in range(min(used + 1, k)):
            if class_mask[c] & adjb[v]:
                continue
            color[v] = c
            class_mask[c] |= vbit
            if rec(pos + 1, used + (1 if c == used else 0)):
                return True
            class_mask[c] &= ~vbit
            color[v] = -1
        return False

    return color if rec(0, 0) else None


@lru_cache(maxsize=None)
def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number together with an optimal proper coloring."""
    if g.n == 0:
        return 0, Coloring(0, ())
    if g.m == 0:
        return 1, Coloring(1, (0,) * g.n)
    clique = greedy_clique(g)
    in_clique = set(clique)
    rest = sorted((v for v in range(g.n) if v not in in_clique),
                  key=lambda v: (-g.degree(v), v))
    order = clique + tuple(rest)
    for k in range(len(clique), g.n + 1):
        colors = _proper_decision(g, k, order)
        if colors is not None:
            return k, normalized(colors)
    raise AssertionError("unreachable: n colors always suffice")


# ---------------------------------------------------------------------------
# Total domination number: exact subset search ordered by size.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def total_domination_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Minimum S such that every vertex has a neighbor in S, with witness.

    Subsets are scanned in increasing size, lexicographic within a size, so
    the witness is deterministic.
    """
    if not tdc_defined(g):
        raise TdcUndefinedError("total domination number undefined: isolated vertex or empty graph")
    adjb = g.adj_bits
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(adjb[v] & mask for v in range(g.n)):
                return size, frozenset(combo)
    raise AssertionError("unreachable: V itself totally dominates")


# ---------------------------------------------------------------------------
# Coloring text format: first line "k", then n lines "v c".
# ---------------------------------------------------------------------------

def write_coloring(f: Coloring) -> str:
    lines = [str(f.k)]
    lines += [f"{v} {c}" for v, c in enumerate(f.colors)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 1:
        raise GraphError("coloring must start with a line holding k")
    try:
        k = int(rows[0][0])
    except ValueError as exc:
        raise GraphError(f"bad coloring header: {exc}") from exc
    assignment: dict[int, int] = {}
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphError(f"bad coloring line: {' '.join(row)}")
        try:
            v, c = int(row[0]), int(row[1])
        except ValueError as exc:
            raise GraphError(f"bad coloring line: {exc}") from exc
        if v in assignment:
            raise GraphError(f"vertex {v} colored twice")
        assignment[v] = c
    n = len(assignment)
    if sorted(assignment) != list(range(n)):
        raise GraphError("coloring must cover exactly the vertices 0..n-1")
    return Coloring(k, tuple(assignment[v] for v in range(n)))
