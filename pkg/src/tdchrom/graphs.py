"""Immutable simple graphs: construction, named families, graph operations
(neighbourhood corona, r-gluing, products, deletions) and graph6 / edge-list I/O.

Vertices are always the dense integers 0..n-1.  Deletion operators relabel the
survivors order-preservingly.  All operations are pure functions returning new
graphs; ``Graph`` values are hashable and safe to share across threads.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Default cap for the exact solver pipelines (construction itself is uncapped).
MAX_EXACT_VERTICES = 32


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex set {0, ..., n-1}.

    ``adj[v]`` is the neighbor set of v.  Adjacency must be symmetric and
    irreflexive; this is validated on construction.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise GraphError("adjacency table length differs from vertex count")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit v set iff v is a neighbor)."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are errors."""
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Named families.  Labeling conventions are part of the contract:
# paths and cycles use consecutive labels, friendship graphs put the common
# vertex at 0, book graphs put the common side on vertices 0 and 1, and
# complete_minus_edge removes the edge (0, 1).
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    """Path 0-1-...-(n-1); n >= 1."""
    if n < 1:
        raise GraphError("path requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; n >= 3."""
    if n < 3:
        raise GraphError("cycle requires n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("complete requires n >= 0")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A on 0..a-1 and side B on a..a+b-1."""
    if a < 0 or b < 0:
        raise GraphError("complete_bipartite requires non-negative sides")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 with leaves 1..n."""
    if n < 0:
        raise GraphError("star requires n >= 0")
    return complete_bipartite(1, n)


def friendship(n: int) -> Graph:
    """n triangles sharing the common vertex 0; triangle i uses 2i+1, 2i+2."""
    if n < 1:
        raise GraphError("friendship requires n >= 1")
    edges = []
    for i in range(n):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * n + 1, edges)


def book(n: int) -> Graph:
    """n quadrilateral pages sharing the side (0, 1); page i uses 2i+2, 2i+3."""
    if n < 1:
        raise GraphError("book requires n >= 1")
    edges = [(0, 1)]
    for i in range(n):
        a, b = 2 * i + 2, 2 * i + 3
        edges += [(0, a), (1, b), (a, b)]
    return Graph.from_edges(2 * n + 2, edges)


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge (0, 1) removed; n >= 2."""
    if n < 2:
        raise GraphError("complete_minus_edge requires n >= 2")
    return Graph.from_edges(
        n, (e for e in itertools.combinations(range(n), 2) if e != (0, 1))
    )


# ---------------------------------------------------------------------------
# Binary operations.
# ---------------------------------------------------------------------------

def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex (u, v) maps to index u * g2.n + v."""
    if g1.n == 0 or g2.n == 0:
        raise GraphError("cartesian product requires nonempty factors")
    n2 = g2.n
    edges = []
    for u in range(g1.n):
        for v, w in g2.edges:
            edges.append((u * n2 + v, u * n2 + w))
    for u, w in g1.edges:
        for v in range(n2):
            edges.append((u * n2 + v, w * n2 + v))
    return Graph.from_edges(g1.n * n2, edges)


def neighbourhood_corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g1 plus g1.n copies of g2; the neighbors of the i-th
    vertex of g1 are joined to every vertex of the i-th copy.

    Layout: g1 occupies 0..n1-1, copy i occupies the contiguous block
    n1 + i*n2 .. n1 + (i+1)*n2 - 1.
    """
    if g1.n == 0 or g2.n == 0:
        raise GraphError("neighbourhood corona requires nonempty operands")
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    for i in range(n1):
        base = n1 + i * n2
        for u, v in g2.edges:
            edges.append((base + u, base + v))
        for w in g1.adj[i]:
            for u in range(n2):
                edges.append((w, base + u))
    return Graph.from_edges(n1 * (1 + n2), edges)


def find_cliques_of_size(g: Graph, r: int) -> list[tuple[int, ...]]:
    """All vertex tuples of size r inducing a complete subgraph, lexicographic.

    r = 0 yields the single empty clique.
    """
    if r < 0:
        raise GraphError("clique size must be non-negative")
    if r == 0:
        return [()]
    out = []
    for combo in itertools.combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
            out.append(combo)
    return out


def _check_clique(g: Graph, vertices: tuple[int, ...], which: str) -> None:
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"{which}: vertex {v} out of range")
    if len(set(vertices)) != len(vertices):
        raise GraphError(f"{which}: repeated vertex")
    for u, v in itertools.combinations(vertices, 2):
        if not g.has_edge(u, v):
            raise GraphError(f"{which}: vertices {u} and {v} are not adjacent")


def r_gluing(
    g1: Graph,
    g2: Graph,
    clique1: Iterable[int],
    clique2: Iterable[int],
    identification: Mapping[int, int] | None = None,
) -> Graph:
    """Identify an r-clique of g1 with an r-clique of g2.

    ``identification`` maps clique1 vertices onto clique2 vertices; by default
    the sorted cliques are paired in order.  g1 keeps its labels; g2 vertices
    outside the identified clique get labels n1, n1+1, ... in increasing
    original order.  r = 0 is the disjoint union.
    """
    c1 = tuple(sorted(clique1))
    c2 = tuple(sorted(clique2))
    if len(c1) != len(c2):
        raise GraphError("cliques to identify must have equal size")
    _check_clique(g1, c1, "clique1")
    _check_clique(g2, c2, "clique2")
    if identification is None:
        ident = dict(zip(c1, c2))
    else:
        ident = dict(identification)
        if sorted(ident) != list(c1) or sorted(ident.values()) != list(c2):
            raise GraphError("identification is not a bijection clique1 -> clique2")
    into_g1 = {w: v for v, w in ident.items()}
    relabel: dict[int, int] = {}
    nxt = g1.n
    for w in range(g2.n):
        if w in into_g1:
            relabel[w] = into_g1[w]
        else:
            relabel[w] = nxt
            nxt += 1
    edges = list(g1.edges)
    edges += [(relabel[u], relabel[v]) for u, v in g2.edges]
    return Graph.from_edges(g1.n + g2.n - len(c1), edges)


def glue(g1: Graph, g2: Graph, r: int) -> Graph:
    """r-gluing over the lexicographically first r-cliques, paired in order."""
    cliques1 = find_cliques_of_size(g1, r)
    cliques2 = find_cliques_of_size(g2, r)
    if not cliques1 or not cliques2:
        raise GraphError(f"no clique of size {r} in one of the operands")
    return r_gluing(g1, g2, cliques1[0], cliques2[0])


def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n,
        (
            (u, v)
            for u, v in itertools.combinations(range(g.n), 2)
            if not g.has_edge(u, v)
        ),
    )


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    edges = list(g1.edges)
    edges += [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph.from_edges(g1.n + g2.n, edges)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Remove vertices; survivors are relabeled order-preservingly."""
    doomed = set(vertices)
    for v in doomed:
        g._check_vertex(v)
    survivors = [v for v in range(g.n) if v not in doomed]
    relabel = {v: i for i, v in enumerate(survivors)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u not in doomed and v not in doomed
    ]
    return Graph.from_edges(len(survivors), edges)


def delete_edges(g: Graph, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Remove edges; the vertex count is preserved."""
    doomed = set()
    for u, v in edge_pairs:
        g._check_vertex(u)
        g._check_vertex(v)
        if not g.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge of the graph")
        doomed.add((min(u, v), max(u, v)))
    return Graph.from_edges(g.n, (e for e in g.edges if e not in doomed))


# ---------------------------------------------------------------------------
# Elementary predicates.
# ---------------------------------------------------------------------------

def has_isolated_vertex(g: Graph) -> bool:
    return any(len(nbrs) == 0 for nbrs in g.adj)


def is_connected(g: Graph) -> bool:
    """BFS connectivity; the empty graph counts as connected by convention."""
    if g.n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return len(seen) == g.n


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


# ---------------------------------------------------------------------------
# graph6 I/O (bit-exact per the published format: 63-offset printable bytes,
# upper triangle in column order, zero padding to a sextet boundary).
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_sextets(value: int, count: int) -> str:
    return "".join(chr(63 + ((value >> (6 * (count - 1 - i))) & 63)) for i in range(count))


def write_graph6(g: Graph) -> str:
    if g.n <= 62:
        header = chr(63 + g.n)
    elif g.n <= 258047:
        header = chr(126) + _g6_sextets(g.n, 3)
    elif g.n <= 68719476735:
        header = chr(126) * 2 + _g6_sextets(g.n, 6)
    else:
        raise GraphError("graph too large for graph6")
    bits = 0
    nbits = g.n * (g.n - 1) // 2
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            if g.has_edge(i, j):
                bits |= 1 << (nbits - 1 - k)
            k += 1
    pad = (-nbits) % 6
    return header + _g6_sextets(bits << pad, (nbits + pad) // 6)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6 byte {ord(ch)} out of range")
    if s[0] != chr(126):
        n = ord(s[0]) - 63
        body = s[1:]
    elif len(s) >= 2 and s[1] != chr(126):
        if len(s) < 4:
            raise GraphError("malformed graph6 header")
        n = sum((ord(s[1 + i]) - 63) << (6 * (2 - i)) for i in range(3))
        body = s[4:]
    else:
        if len(s) < 8:
            raise GraphError("malformed graph6 header")
        n = sum((ord(s[2 + i]) - 63) << (6 * (5 - i)) for i in range(6))
        body = s[8:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(
            f"graph6 body has {len(body)} bytes, expected {need} (truncated or trailing data)"
        )
    bitstream = 0
    for ch in body:
        bitstream = (bitstream << 6) | (ord(ch) - 63)
    pad = 6 * need - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    bitstream >>= pad
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream >> (nbits - 1 - k) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
# ---------------------------------------------------------------------------

def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError as exc:
        raise GraphError(f"bad edge-list header: {exc}") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"edge list declares {m} edges but has {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphError(f"bad edge line: {' '.join(row)}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge line: {exc}") from exc
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Labeled codes, canonical forms (n <= 8) and isomorphism testing.
#
# The labeled code packs the upper triangle in graph6 column order
# (0,1), (0,2), (1,2), (0,3), ..., most significant bit first, so the code is
# exactly the graph6 body bits as an integer and the pairs inside {0..n-2}
# form a prefix (which lets enumeration extend codes by one vertex cheaply).
# Canonical form is the labeling with minimum code, found by brute force over
# all permutations (vectorized with numpy).
# ---------------------------------------------------------------------------

MAX_CANONICAL_VERTICES = 8

_slot_cache: dict[int, dict[tuple[int, int], int]] = {}
_perm_table_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _slots(n: int) -> dict[tuple[int, int], int]:
    if n not in _slot_cache:
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        _slot_cache[n] = {pair: idx for idx, pair in enumerate(pairs)}
    return _slot_cache[n]


def graph_code(g: Graph) -> int:
    slot = _slots(g.n)
    nbits = len(slot)
    code = 0
    for u, v in g.edges:
        code |= 1 << (nbits - 1 - slot[(u, v)])
    return code


def graph_from_code(n: int, code: int) -> Graph:
    slot = _slots(n)
    nbits = len(slot)
    edges = [pair for pair, s in slot.items() if code >> (nbits - 1 - s) & 1]
    return Graph.from_edges(n, edges)


def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(table, weights): table[p, s] is the source slot feeding target slot s
    under permutation p; weights turn a bit row back into an integer code."""
    if n not in _perm_table_cache:
        slot = _slots(n)
        pairs = list(slot)
        nbits = len(pairs)
        perms = list(itertools.permutations(range(n)))
        table = np.empty((len(perms), nbits), dtype=np.int32)
        for p, perm in enumerate(perms):
            for s, (i, j) in enumerate(pairs):
                a, b = perm[i], perm[j]
                table[p, s] = slot[(a, b) if a < b else (b, a)]
        weights = (1 << np.arange(nbits - 1, -1, -1)).astype(np.int64)
        _perm_table_cache[n] = (table, weights)
    return _perm_table_cache[n]


def canonical_code(g: Graph) -> int:
    """Minimum labeled code over all relabelings; supported for n <= 8."""
    if g.n > MAX_CANONICAL_VERTICES:
        raise GraphError(
            f"canonical form is supported for n <= {MAX_CANONICAL_VERTICES}"
        )
    if g.n <= 1:
        return 0
    table, weights = _perm_tables(g.n)
    nbits = len(weights)
    bits = np.zeros(nbits, dtype=np.uint8)
    slot = _slots(g.n)
    for u, v in g.edges:
        bits[slot[(u, v)]] = 1
    codes = bits[table] @ weights
    return int(codes.min())


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


def isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test: canonical codes when n <= 8, otherwise
    backtracking over degree-compatible vertex maps."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    deg1 = sorted(len(s) for s in g1.adj)
    deg2 = sorted(len(s) for s in g2.adj)
    if deg1 != deg2:
        return False
    if g1.n <= MAX_CANONICAL_VERTICES:
        return canonical_code(g1) == canonical_code(g2)
    order = sorted(range(g1.n), key=lambda v: (-g1.degree(v), v))
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(idx: int) -> bool:
        if idx == g1.n:
            return True
        v = order[idx]
        for w in range(g2.n):
            if used[w] or g2.degree(w) != g1.degree(v):
                continue
            ok = True
            for u in order[:idx]:
                if (u in g1.adj[v]) != (mapping[u] in g2.adj[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)
