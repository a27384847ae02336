"""Enumeration, random generation, and the conjecture scan."""

import pytest

from tdchrom import GraphError, canonical_code, complete, is_connected, parse_graph6
from tdchrom.explorer import (
    ConjectureFinding,
    conjecture_scan,
    enumerate_graphs,
    random_connected_graph,
    random_graph,
)
from tdchrom.graphs import graph_code
from tdchrom.perturbation import Convention, stability
from tdchrom.solver import CapExceededError


class TestLabeledEnumeration:
    def test_three_vertex_connected_labeled(self):
        graphs = list(enumerate_graphs(3, "connected"))
        assert len(graphs) == 4  # three labeled paths plus the triangle

    def test_lexicographic_order(self):
        codes = [graph_code(g) for g in enumerate_graphs(3, "all")]
        assert codes == sorted(codes) == list(range(8))

    def test_single_vertex_no_isolated_is_empty(self):
        assert list(enumerate_graphs(1, "no-isolated")) == []

    def test_callable_filter(self):
        triangles = list(enumerate_graphs(3, lambda g: g.m == 3))
        assert triangles == [complete(3)]

    def test_range_guard(self):
        with pytest.raises(GraphError):
            list(enumerate_graphs(9))
        with pytest.raises(GraphError):
            list(enumerate_graphs(0))

    def test_unknown_filter(self):
        with pytest.raises(GraphError):
            list(enumerate_graphs(3, "weird"))


class TestDedupEnumeration:
    # counts from the standard census of small graphs
    CLASSES = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_counts(self, n):
        assert sum(1 for _ in enumerate_graphs(n, "all", dedup=True)) == self.CLASSES[n]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_connected_class_counts(self, n):
        count = sum(1 for _ in enumerate_graphs(n, "connected", dedup=True))
        assert count == self.CONNECTED[n]

    def test_representatives_are_least_labeled_members_in_order(self):
        codes = []
        for g in enumerate_graphs(5, "all", dedup=True):
            assert graph_code(g) == canonical_code(g)
            codes.append(graph_code(g))
        assert codes == sorted(codes)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_extension_agrees_with_labeled_canonical_dedup(self, n):
        # independent route: canonicalize every labeled graph directly
        direct = {canonical_code(g) for g in enumerate_graphs(n, "all")}
        extended = {graph_code(g) for g in enumerate_graphs(n, "all", dedup=True)}
        assert direct == extended


class TestRandomGraphs:
    def test_extreme_probabilities(self):
        assert random_graph(5, 0.0, 7).m == 0
        assert random_graph(5, 1.0, 7) == complete(5)

    def test_determinism(self):
        assert random_graph(6, 0.5, 123) == random_graph(6, 0.5, 123)

    def test_invalid_probability(self):
        with pytest.raises(GraphError):
            random_graph(4, 1.5, 0)

    def test_connected_rejection_sampling(self):
        g = random_connected_graph(5, 0.4, 11)
        assert is_connected(g)
        assert g == random_connected_graph(5, 0.4, 11)


class TestConjectureScan:
    def test_findings_are_exhaustive(self):
        findings = conjecture_scan(4)
        expected = sum(
            1
            for n in (2, 3, 4)
            for g in enumerate_graphs(n, "connected", dedup=True)
            if min(g.degree(v) for v in range(n)) in (1, 2)
        )
        assert len(findings) == expected

    def test_high_min_degree_graphs_excluded(self):
        findings = conjecture_scan(4)
        assert all(f.min_degree in (1, 2) for f in findings)
        assert not any(parse_graph6(f.graph6) == complete(4) for f in findings)

    def test_default_convention_is_consistent_up_to_five(self):
        findings = conjecture_scan(5)
        assert all(f.verdict == "consistent" for f in findings)

    def test_verdicts_reproducible(self):
        findings = conjecture_scan(4)
        for f in findings[:5]:
            again = stability(parse_graph6(f.graph6), f.convention)
            assert again.value == f.stability
            assert (f.stability in (1, 2)) == (f.verdict == "consistent")

    def test_wider_population_flag(self):
        connected = conjecture_scan(4)
        everything = conjecture_scan(4, connected_only=False)
        assert len(everything) > len(connected)
        assert any(not f.connected for f in everything)
        assert all(f.connected for f in connected)

    def test_repeat_is_identical(self):
        assert conjecture_scan(4) == conjecture_scan(4)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            conjecture_scan(8)

    def test_finding_records_convention(self):
        findings = conjecture_scan(3, Convention.SKIP_UNDEFINED)
        assert all(isinstance(f, ConjectureFinding) for f in findings)
        assert all(f.convention is Convention.SKIP_UNDEFINED for f in findings)
