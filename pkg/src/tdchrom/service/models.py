"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from ..graphs import Graph, parse_edge_list
from ..inputs import resolve_graph_text


class GraphInput(BaseModel):
    """Exactly one of the three encodings must be set."""

    spec: str | None = Field(default=None, description="family spec or graph6 text")
    graph6: str | None = None
    edge_list: str | None = Field(default=None, description="'n m' header plus 'u v' lines")

    @model_validator(mode="after")
    def _exactly_one(self) -> "GraphInput":
        given = [x for x in (self.spec, self.graph6, self.edge_list) if x is not None]
        if len(given) != 1:
            raise ValueError("provide exactly one of spec, graph6, edge_list")
        return self

    def to_graph(self) -> Graph:
        if self.graph6 is not None:
            return resolve_graph_text("g6:" + self.graph6)
        if self.edge_list is not None:
            return parse_edge_list(self.edge_list)
        return resolve_graph_text(self.spec or "")


class GraphOut(BaseModel):
    graph6: str
    n: int
    m: int


class SolverCaps(BaseModel):
    max_n: int | None = None
    node_budget: int | None = None
    time_budget: float | None = None


class InvariantsRequest(BaseModel):
    graph: GraphInput
    caps: SolverCaps = SolverCaps()


class SolveStatsOut(BaseModel):
    nodes: int
    elapsed_ms: float


class InvariantsResponse(BaseModel):
    graph6: str
    n: int
    m: int
    connected: bool
    chi: int
    gamma_t: int | Literal["undefined"]
    tdc: int | Literal["undefined", "unknown"]
    witness: list[int] | None
    stats: SolveStatsOut | None


class BuildRequest(BaseModel):
    op: Literal["family", "ncorona", "glue", "cartesian", "union", "complement"]
    operands: list[GraphInput]
    r: int | None = None
    clique1: list[int] | None = None
    clique2: list[int] | None = None
    swap: bool = False


class PerturbRequest(BaseModel):
    graph: GraphInput
    kind: Literal["stability", "bondage"]
    convention: Literal["undefined-counts-as-changed", "skip-undefined"] = (
        "undefined-counts-as-changed"
    )
    max_vertices: int | None = 12
    max_edges: int | None = 24
    caps: SolverCaps = SolverCaps()


class PerturbResponse(BaseModel):
    kind: str
    convention: str
    base_value: int
    value: int | None
    witness: list[int] | list[list[int]] | None
    after_value: int | Literal["undefined"] | None
    no_witness: bool


class TraceRequest(PerturbRequest):
    max_size: int = 1


class TraceRow(BaseModel):
    subset: list[int] | list[list[int]]
    after_value: int | Literal["undefined"]


class TraceResponse(BaseModel):
    kind: str
    convention: str
    base_value: int
    rows: list[TraceRow]


class ColoringCheckRequest(BaseModel):
    graph: GraphInput
    coloring: str = Field(description="text format: first line k, then n lines 'v c'")


class ColoringCheckResponse(BaseModel):
    k: int
    proper: bool
    td_coloring: bool | Literal["undefined"]
    dominated_classes: list[int | None]


class VerifyRequest(BaseModel):
    sections: list[str] | None = None
    path_range: tuple[int, int] = (2, 12)
    cycle_range: tuple[int, int] = (3, 12)
    sandwich_max_n: int = 7
    corona_random_pairs: int = 30
    corona_max_order: int = 25
    complement_sum_max_n: int = 6
    convention: Literal["undefined-counts-as-changed", "skip-undefined"] = (
        "undefined-counts-as-changed"
    )
    seed: int = 0
    node_budget: int | None = None


class ClaimRow(BaseModel):
    type: Literal["claim"] = "claim"
    claim: str
    instance: str
    expected: int | str | None
    computed: int | str | None
    verdict: str
    flagged: bool
    note: str
    repro: str
    detail: dict


class VerifyResponse(BaseModel):
    config: dict
    rows: list[ClaimRow]
    summary: dict
    clean: bool


class ExploreRequest(BaseModel):
    max_n: int = 6
    convention: Literal["undefined-counts-as-changed", "skip-undefined"] = (
        "undefined-counts-as-changed"
    )
    connected_only: bool = True
    seed: int = 0


class FindingRow(BaseModel):
    type: Literal["finding"] = "finding"
    graph6: str
    n: int
    min_degree: int
    tdc: int
    stability: int | None
    convention: str
    connected: bool
    verdict: str


class ExploreResponse(BaseModel):
    config: dict
    findings: list[FindingRow]
    summary: dict


class CheckRequest(BaseModel):
    """Single-instance claim checks; exactly the rows the suite would emit."""

    what: Literal[
        "formula", "sandwich", "ncorona", "gluing", "corollary",
        "stability", "bondage", "complement-sum",
    ]
    family: str | None = None
    n: int | None = None
    graph: GraphInput | None = None
    graph2: GraphInput | None = None
    label: str | None = None
    label2: str | None = None
    r: int | None = None
    clique1: list[int] | None = None
    clique2: list[int] | None = None
    swap: bool = False
    kind: Literal["stability", "bondage"] | None = None
    convention: Literal["undefined-counts-as-changed", "skip-undefined"] = (
        "undefined-counts-as-changed"
    )


class CheckResponse(BaseModel):
    rows: list[ClaimRow]


class HealthResponse(BaseModel):
    status: str
    version: str
