"""Coloring predicates and the baseline exact invariants."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tdchrom import (
    Coloring,
    GraphError,
    TdcUndefinedError,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    dominated_class_of,
    graph_from_edges,
    is_proper,
    is_td_coloring,
    parse_coloring,
    path,
    star,
    td_witness_table,
    tdc_defined,
    total_domination_number,
    write_coloring,
)
from tdchrom.explorer import enumerate_graphs


def naive_td_check(g, f):
    """Independent re-implementation: plain double loops, no bitmasks."""
    for u, v in g.edges:
        if f.colors[u] == f.colors[v]:
            return False
    classes = {}
    for v, c in enumerate(f.colors):
        classes.setdefault(c, set()).add(v)
    for v in range(g.n):
        if not any(cl <= set(g.adj[v]) for cl in classes.values()):
            return False
    return True


def colorings_of(n):
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(
        lambda cs: Coloring.from_sequence(_compact(cs))
    )


def _compact(cs):
    remap = {}
    return [remap.setdefault(c, len(remap)) for c in cs]


class TestColoringType:
    def test_every_class_nonempty_required(self):
        with pytest.raises(GraphError):
            Coloring(3, (0, 2, 0))

    def test_color_range_required(self):
        with pytest.raises(GraphError):
            Coloring(2, (0, 3))

    def test_classes(self):
        f = Coloring(2, (0, 1, 0))
        assert f.classes == (frozenset({0, 2}), frozenset({1}))


class TestIsProper:
    def test_alternating_four_cycle(self):
        assert is_proper(cycle(4), Coloring(2, (0, 1, 0, 1)))

    def test_monochromatic_edge(self):
        assert not is_proper(complete(2), Coloring(1, (0, 0)))

    def test_path_three(self):
        assert is_proper(path(3), Coloring(2, (0, 1, 0)))

    def test_domain_mismatch(self):
        with pytest.raises(GraphError):
            is_proper(path(3), Coloring(2, (0, 1)))


class TestDominatedClass:
    def test_bipartite_sides(self):
        g = complete_bipartite(2, 2)
        f = Coloring(2, (0, 0, 1, 1))
        assert dominated_class_of(g, f, 0) == 1

    def test_path_end_vertex(self):
        f = Coloring(2, (0, 1, 0))
        assert dominated_class_of(path(3), f, 0) == 1

    def test_multi_vertex_class_qualifies(self):
        # the middle vertex is adjacent to the whole two-element class 0
        f = Coloring(2, (0, 1, 0))
        assert dominated_class_of(path(3), f, 1) == 0

    def test_own_class_never_qualifies(self):
        g = complete(2)
        f = Coloring(2, (0, 1))
        assert dominated_class_of(g, f, 0) == 1 != f.colors[0]

    def test_absent(self):
        g = disjoint_union(path(2), path(2))
        f = Coloring(2, (0, 1, 0, 1))
        # vertex 0's only neighbor shares a class with vertex 3
        assert dominated_class_of(g, f, 0) is None


class TestIsTdColoring:
    def test_balanced_bipartite_two_classes(self):
        g = complete_bipartite(3, 3)
        assert is_td_coloring(g, Coloring(2, (0, 0, 0, 1, 1, 1)))

    def test_four_cycle_two_classes(self):
        assert is_td_coloring(cycle(4), Coloring(2, (0, 1, 0, 1)))

    def test_path_four_optimal(self):
        from tdchrom import tdc_number

        result = tdc_number(path(4))
        assert result.value == 3
        assert is_td_coloring(path(4), result.witness)

    def test_isolated_vertex_signals_undefined(self):
        g = disjoint_union(complete(2), complete(1))
        with pytest.raises(TdcUndefinedError):
            is_td_coloring(g, Coloring(2, (0, 1, 0)))

    def test_tdc_defined(self):
        assert tdc_defined(complete(2))
        assert not tdc_defined(complete(1))
        assert not tdc_defined(complete(0))

    @given(st.integers(2, 6).flatmap(
        lambda n: st.tuples(
            st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                     .filter(lambda e: e[0] != e[1]),
                     min_size=n - 1, max_size=2 * n),
            st.just(n),
        ).flatmap(lambda en: st.tuples(st.just(en), colorings_of(en[1])))
    ))
    @settings(max_examples=120, deadline=None)
    def test_matches_naive_reimplementation(self, payload):
        (edges, n), f = payload
        g = graph_from_edges(n, edges)
        if not tdc_defined(g):
            return
        assert is_td_coloring(g, f) == naive_td_check(g, f)

    def test_witness_table_consistency(self):
        g = cycle(6)
        f = Coloring(4, (0, 1, 0, 2, 3, 1))
        table = td_witness_table(g, f)
        assert is_td_coloring(g, f) == (is_proper(g, f) and None not in table)


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "g,chi", [(complete(4), 4), (cycle(5), 3), (cycle(6), 2)],
    )
    def test_known_values(self, g, chi):
        value, witness = chromatic_number(g)
        assert value == chi
        assert is_proper(g, witness) and witness.k == chi

    def test_book_is_bipartite(self):
        from tdchrom import book

        assert chromatic_number(book(3))[0] == 2

    def test_edgeless_and_empty(self):
        assert chromatic_number(complete(0))[0] == 0
        assert chromatic_number(graph_from_edges(3, []))[0] == 1

    def test_equals_order_only_for_complete(self):
        for n in range(2, 7):
            for g in enumerate_graphs(n, "connected", dedup=True):
                chi = chromatic_number(g)[0]
                assert chi <= n
                assert (chi == n) == (g == complete(n))


class TestTotalDomination:
    def test_path_four(self):
        value, witness = total_domination_number(path(4))
        assert value == 2
        assert all(set(path(4).adj[v]) & witness for v in range(4))

    def test_four_cycle(self):
        assert total_domination_number(cycle(4))[0] == 2

    @pytest.mark.parametrize("n", range(2, 7))
    def test_complete_graphs(self, n):
        assert total_domination_number(complete(n))[0] == 2

    def test_seven_cycle_against_inline_oracle(self):
        g = cycle(7)
        best = None
        for size in range(1, 8):
            for s in itertools.combinations(range(7), size):
                if all(set(g.adj[v]) & set(s) for v in range(7)):
                    best = size
                    break
            if best:
                break
        assert best == 4
        assert total_domination_number(g)[0] == best

    def test_undefined_on_isolated(self):
        with pytest.raises(TdcUndefinedError):
            total_domination_number(disjoint_union(complete(2), complete(1)))

    def test_star_center_pair(self):
        value, witness = total_domination_number(star(4))
        assert value == 2 and 0 in witness


class TestColoringTextFormat:
    def test_roundtrip(self):
        f = Coloring(3, (0, 1, 2, 0))
        assert parse_coloring(write_coloring(f)) == f

    def test_missing_vertex_rejected(self):
        with pytest.raises(GraphError):
            parse_coloring("2\n0 0\n2 1\n")

    def test_double_assignment_rejected(self):
        with pytest.raises(GraphError):
            parse_coloring("2\n0 0\n0 1\n")

    def test_bad_header_rejected(self):
        with pytest.raises(GraphError):
            parse_coloring("x\n0 0\n")
