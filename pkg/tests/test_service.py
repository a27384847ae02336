"""HTTP service endpoints, wire formats, and error codes."""

import pytest
from fastapi.testclient import TestClient

from tdchrom import complete, cycle, isomorphic, parse_graph6, write_graph6
from tdchrom.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        data = client.get("/health").json()
        assert data["status"] == "ok"


class TestInvariants:
    def test_six_cycle(self, client):
        resp = client.post("/invariants", json={"graph": {"spec": "cycle:6"}})
        data = resp.json()
        assert (data["tdc"], data["chi"], data["gamma_t"]) == (4, 2, 4)
        assert data["n"] == 6 and data["connected"]

    def test_four_path(self, client):
        data = client.post("/invariants", json={"graph": {"spec": "path:4"}}).json()
        assert data["tdc"] == 3 and data["chi"] == 2

    def test_friendship(self, client):
        data = client.post(
            "/invariants", json={"graph": {"spec": "friendship:2"}}
        ).json()
        assert data["tdc"] == 3

    def test_undefined_fields_are_explicit(self, client):
        data = client.post("/invariants", json={"graph": {"spec": "complete:1"}}).json()
        assert data["tdc"] == "undefined" and data["gamma_t"] == "undefined"
        assert data["chi"] == 1

    def test_budget_renders_unknown(self, client):
        from tdchrom.solver import clear_caches

        clear_caches()
        data = client.post(
            "/invariants",
            json={"graph": {"spec": "cycle:12"}, "caps": {"node_budget": 2}},
        ).json()
        assert data["tdc"] == "unknown" and data["witness"] is None

    def test_graph6_and_edge_list_inputs(self, client):
        g6 = write_graph6(cycle(5))
        a = client.post("/invariants", json={"graph": {"graph6": g6}}).json()
        b = client.post(
            "/invariants", json={"graph": {"edge_list": "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"}}
        ).json()
        assert a["tdc"] == b["tdc"] == 4


class TestBuild:
    def test_corona(self, client):
        data = client.post(
            "/build",
            json={"op": "ncorona",
                  "operands": [{"spec": "path:4"}, {"spec": "path:3"}]},
        ).json()
        assert data["n"] == 16 and data["m"] == 29

    def test_glue_full_overlap(self, client):
        data = client.post(
            "/build",
            json={"op": "glue", "r": 4,
                  "operands": [{"spec": "complete:4"}, {"spec": "complete:5"}]},
        ).json()
        assert data["graph6"] == write_graph6(complete(5))

    def test_complement_of_five_cycle(self, client):
        data = client.post(
            "/build", json={"op": "complement", "operands": [{"spec": "cycle:5"}]}
        ).json()
        assert isomorphic(parse_graph6(data["graph6"]), cycle(5))

    def test_explicit_cliques(self, client):
        data = client.post(
            "/build",
            json={"op": "glue", "clique1": [0, 1], "clique2": [2, 3],
                  "operands": [{"spec": "cycle:5"}, {"spec": "complete:4"}]},
        ).json()
        assert data["n"] == 7

    def test_operand_count_validated(self, client):
        resp = client.post(
            "/build", json={"op": "ncorona", "operands": [{"spec": "path:4"}]}
        )
        assert resp.status_code == 400
        assert resp.json()["detail"]["code"] == "parse-error"


class TestPerturb:
    def test_path_stability(self, client):
        data = client.post(
            "/perturb", json={"graph": {"spec": "path:6"}, "kind": "stability"}
        ).json()
        assert data["value"] == 1 and len(data["witness"]) == 1

    def test_cycle_bondage(self, client):
        data = client.post(
            "/perturb", json={"graph": {"spec": "cycle:10"}, "kind": "bondage"}
        ).json()
        assert data["value"] == 2

    def test_balanced_bipartite(self, client):
        data = client.post(
            "/perturb",
            json={"graph": {"spec": "complete_bipartite:3:3"}, "kind": "stability"},
        ).json()
        assert data["value"] == 3 and data["after_value"] == "undefined"

    def test_skip_convention_may_exhaust(self, client):
        data = client.post(
            "/perturb",
            json={"graph": {"spec": "cycle:4"}, "kind": "stability",
                  "convention": "skip-undefined"},
        ).json()
        assert data["no_witness"] and data["value"] is None

    def test_undefined_base_is_an_error(self, client):
        resp = client.post(
            "/perturb", json={"graph": {"spec": "complete:1"}, "kind": "stability"}
        )
        assert resp.status_code == 400
        assert resp.json()["detail"]["code"] == "undefined"

    def test_cap_exceeded(self, client):
        resp = client.post(
            "/perturb", json={"graph": {"spec": "cycle:13"}, "kind": "stability"}
        )
        assert resp.status_code == 400
        assert resp.json()["detail"]["code"] == "cap-exceeded"

    def test_trace(self, client):
        data = client.post(
            "/perturb/trace",
            json={"graph": {"spec": "cycle:4"}, "kind": "stability", "max_size": 1},
        ).json()
        assert data["base_value"] == 2
        assert [row["after_value"] for row in data["rows"]] == [2, 2, 2, 2]


class TestColoringCheck:
    def test_valid_td_coloring(self, client):
        data = client.post(
            "/coloring/check",
            json={"graph": {"spec": "cycle:4"}, "coloring": "2\n0 0\n1 1\n2 0\n3 1\n"},
        ).json()
        assert data["proper"] and data["td_coloring"] is True
        assert data["dominated_classes"] == [1, 0, 1, 0]

    def test_improper_coloring(self, client):
        data = client.post(
            "/coloring/check",
            json={"graph": {"spec": "path:2"}, "coloring": "1\n0 0\n1 0\n"},
        ).json()
        assert not data["proper"] and data["td_coloring"] is False

    def test_malformed_coloring(self, client):
        resp = client.post(
            "/coloring/check",
            json={"graph": {"spec": "path:2"}, "coloring": "nope"},
        )
        assert resp.status_code == 400


class TestVerifyAndExplore:
    def test_empty_sections(self, client):
        data = client.post("/verify", json={"sections": []}).json()
        assert data["rows"] == [] and data["summary"]["rows"] == 0
        assert data["clean"]

    def test_formula_section(self, client):
        data = client.post("/verify", json={"sections": ["tdc-formula"]}).json()
        assert data["summary"]["rows"] == 21
        assert data["summary"]["violated"] == data["summary"]["violated_flagged"] == 2
        assert data["clean"]

    def test_explore(self, client):
        data = client.post("/explore", json={"max_n": 4}).json()
        assert data["summary"]["counterexamples"] == 0
        assert data["summary"]["findings"] == len(data["findings"])

    def test_check_endpoint(self, client):
        data = client.post(
            "/check", json={"what": "formula", "family": "path", "n": 11}
        ).json()
        row = data["rows"][0]
        assert row["verdict"] == "violated" and row["flagged"]

    def test_check_gluing_defaults_to_lex_first_cliques(self, client):
        data = client.post(
            "/check",
            json={"what": "gluing", "r": 1,
                  "graph": {"spec": "cycle:4"}, "graph2": {"spec": "complete:3"},
                  "label": "cycle:4", "label2": "complete:3"},
        ).json()
        row = data["rows"][0]
        assert row["verdict"] == "holds" and row["computed"] == 4

    def test_schema_violation_is_422(self, client):
        assert client.post("/verify", json={"seed": "abc"}).status_code == 422

    def test_bad_graph6_is_parse_error(self, client):
        resp = client.post("/invariants", json={"graph": {"graph6": "A"}})
        assert resp.status_code == 400
        assert resp.json()["detail"]["code"] == "parse-error"

    def test_two_encodings_rejected(self, client):
        resp = client.post(
            "/invariants", json={"graph": {"spec": "path:3", "graph6": "A_"}}
        )
        assert resp.status_code == 422
