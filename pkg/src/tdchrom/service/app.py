"""FastAPI service wrapping the exact-computation core.

Error contract: domain failures map to HTTP 400 with a machine-readable
``detail.code`` (``parse-error``, ``undefined``, ``cap-exceeded``,
``budget-exceeded``); schema failures are FastAPI's usual 422.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..coloring import (
    TdcUndefinedError,
    chromatic_number,
    is_proper,
    is_td_coloring,
    parse_coloring,
    td_witness_table,
    tdc_defined,
    total_domination_number,
)
from ..explorer import conjecture_scan
from ..formulas import FormulaDomainError
from ..graphs import (
    GraphError,
    cartesian_product,
    complement,
    disjoint_union,
    find_cliques_of_size,
    glue,
    is_connected,
    neighbourhood_corona,
    r_gluing,
    write_graph6,
)
from ..perturbation import Convention, bondage, perturbation_trace, stability
from ..solver import BudgetExceededError, CapExceededError, tdc_number
from ..suite import (
    SuiteConfig,
    check_complement_sum,
    check_corona_bounds,
    check_corona_corollary,
    check_cycle_formula,
    check_domination_sandwich,
    check_family_bondage,
    check_family_stability,
    check_gluing_sandwich,
    check_path_formula,
    run_suite,
)
from .models import (
    BuildRequest,
    CheckRequest,
    CheckResponse,
    ClaimRow,
    ColoringCheckRequest,
    ColoringCheckResponse,
    ExploreRequest,
    ExploreResponse,
    FindingRow,
    GraphOut,
    HealthResponse,
    InvariantsRequest,
    InvariantsResponse,
    PerturbRequest,
    PerturbResponse,
    SolveStatsOut,
    TraceRequest,
    TraceResponse,
    TraceRow,
    VerifyRequest,
    VerifyResponse,
)

_ERROR_CODES = [
    (CapExceededError, "cap-exceeded"),
    (BudgetExceededError, "budget-exceeded"),
    (TdcUndefinedError, "undefined"),
    (FormulaDomainError, "parse-error"),
    (GraphError, "parse-error"),
    (ValueError, "parse-error"),
]


def _error_response(exc: Exception) -> JSONResponse:
    for etype, code in _ERROR_CODES:
        if isinstance(exc, etype):
            return JSONResponse(
                status_code=400,
                content={"detail": {"code": code, "message": str(exc)}},
            )
    raise exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="tdchrom",
        version=__version__,
        description="Exact total dominator chromatic numbers of small graphs",
    )

    for etype, _ in _ERROR_CODES:
        app.add_exception_handler(etype, lambda request, exc: _error_response(exc))

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/build", response_model=GraphOut)
    def build(req: BuildRequest) -> GraphOut:
        graphs = [g.to_graph() for g in req.operands]
        if req.op == "family":
            if len(graphs) != 1:
                raise GraphError("family build takes exactly one operand")
            out = graphs[0]
        elif req.op == "complement":
            if len(graphs) != 1:
                raise GraphError("complement takes exactly one operand")
            out = complement(graphs[0])
        else:
            if len(graphs) != 2:
                raise GraphError(f"{req.op} takes exactly two operands")
            g1, g2 = graphs
            if req.op == "ncorona":
                out = neighbourhood_corona(g1, g2)
            elif req.op == "cartesian":
                out = cartesian_product(g1, g2)
            elif req.op == "union":
                out = disjoint_union(g1, g2)
            else:  # glue
                if req.clique1 is not None or req.clique2 is not None:
                    if req.clique1 is None or req.clique2 is None:
                        raise GraphError("glue needs both cliques or neither")
                    mapping = None
                    if req.swap:
                        mapping = dict(
                            zip(sorted(req.clique1), sorted(req.clique2, reverse=True))
                        )
                    out = r_gluing(g1, g2, req.clique1, req.clique2, mapping)
                else:
                    if req.r is None:
                        raise GraphError("glue needs --r or explicit cliques")
                    out = glue(g1, g2, req.r)
        return GraphOut(graph6=write_graph6(out), n=out.n, m=out.m)

    @app.post("/invariants", response_model=InvariantsResponse)
    def invariants(req: InvariantsRequest) -> InvariantsResponse:
        g = req.graph.to_graph()
        chi, _ = chromatic_number(g)
        gamma: int | str
        tdc: int | str
        witness = None
        stats = None
        if not tdc_defined(g):
            gamma = "undefined"
            tdc = "undefined"
        else:
            gamma = total_domination_number(g)[0]
            t0 = time.monotonic()
            try:
                result = tdc_number(
                    g,
                    node_budget=req.caps.node_budget,
                    time_budget=req.caps.time_budget,
                    max_n=req.caps.max_n,
                )
            except BudgetExceededError:
                tdc = "unknown"
            else:
                tdc = result.value
                witness = list(result.witness.colors)
                stats = SolveStatsOut(
                    nodes=result.stats.nodes,
                    elapsed_ms=round(1000 * (time.monotonic() - t0), 3),
                )
        return InvariantsResponse(
            graph6=write_graph6(g),
            n=g.n,
            m=g.m,
            connected=is_connected(g),
            chi=chi,
            gamma_t=gamma,
            tdc=tdc,
            witness=witness,
            stats=stats,
        )

    @app.post("/perturb", response_model=PerturbResponse)
    def perturb(req: PerturbRequest) -> PerturbResponse:
        g = req.graph.to_graph()
        sweep = stability if req.kind == "stability" else bondage
        result = sweep(
            g,
            Convention(req.convention),
            max_vertices=req.max_vertices,
            max_edges=req.max_edges,
            node_budget=req.caps.node_budget,
            time_budget=req.caps.time_budget,
        )
        if result is None:
            base = tdc_number(g).value
            return PerturbResponse(
                kind=req.kind, convention=req.convention, base_value=base,
                value=None, witness=None, after_value=None, no_witness=True,
            )
        witness = (
            list(result.witness)
            if req.kind == "stability"
            else [list(e) for e in result.witness]
        )
        after = "undefined" if result.after_value is None else result.after_value
        return PerturbResponse(
            kind=req.kind,
            convention=req.convention,
            base_value=result.base_value,
            value=result.value,
            witness=witness,
            after_value=after,
            no_witness=False,
        )

    @app.post("/perturb/trace", response_model=TraceResponse)
    def trace(req: TraceRequest) -> TraceResponse:
        g = req.graph.to_graph()
        kind = "vertices" if req.kind == "stability" else "edges"
        rows = perturbation_trace(
            g,
            kind,
            Convention(req.convention),
            req.max_size,
            max_vertices=req.max_vertices,
            max_edges=req.max_edges,
            node_budget=req.caps.node_budget,
            time_budget=req.caps.time_budget,
        )
        base = tdc_number(g).value
        out = [
            TraceRow(
                subset=list(s) if kind == "vertices" else [list(e) for e in s],
                after_value="undefined" if v is None else v,
            )
            for s, v in rows
        ]
        return TraceResponse(
            kind=req.kind, convention=req.convention, base_value=base, rows=out
        )

    @app.post("/coloring/check", response_model=ColoringCheckResponse)
    def coloring_check(req: ColoringCheckRequest) -> ColoringCheckResponse:
        g = req.graph.to_graph()
        f = parse_coloring(req.coloring)
        proper = is_proper(g, f)
        td: bool | str
        if tdc_defined(g):
            td = is_td_coloring(g, f)
        else:
            td = "undefined"
        return ColoringCheckResponse(
            k=f.k,
            proper=proper,
            td_coloring=td,
            dominated_classes=list(td_witness_table(g, f)),
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        config = SuiteConfig(
            sections=tuple(req.sections) if req.sections is not None else SuiteConfig().sections,
            path_range=req.path_range,
            cycle_range=req.cycle_range,
            sandwich_max_n=req.sandwich_max_n,
            corona_random_pairs=req.corona_random_pairs,
            corona_max_order=req.corona_max_order,
            complement_sum_max_n=req.complement_sum_max_n,
            convention=Convention(req.convention),
            seed=req.seed,
            node_budget=req.node_budget,
        )
        report = run_suite(config)
        return VerifyResponse(
            config=report.config,
            rows=[ClaimRow(**row.to_json_dict()) for row in report.rows],
            summary=report.summary,
            clean=report.clean(),
        )

    @app.post("/explore", response_model=ExploreResponse)
    def explore(req: ExploreRequest) -> ExploreResponse:
        findings = conjecture_scan(
            req.max_n,
            Convention(req.convention),
            connected_only=req.connected_only,
        )
        rows = [
            FindingRow(
                graph6=f.graph6,
                n=f.n,
                min_degree=f.min_degree,
                tdc=f.tdc,
                stability=f.stability,
                convention=f.convention.value,
                connected=f.connected,
                verdict=f.verdict,
            )
            for f in findings
        ]
        counter = sum(1 for f in findings if f.verdict == "counterexample")
        return ExploreResponse(
            config={
                "type": "config",
                "max_n": req.max_n,
                "convention": req.convention,
                "connected_only": req.connected_only,
                "seed": req.seed,
            },
            findings=rows,
            summary={
                "type": "summary",
                "findings": len(rows),
                "consistent": len(rows) - counter,
                "counterexamples": counter,
                "connected": sum(1 for f in findings if f.connected),
                "disconnected": sum(1 for f in findings if not f.connected),
            },
        )

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest) -> CheckResponse:
        convention = Convention(req.convention)
        rows: list
        if req.what == "formula":
            if req.family == "path":
                rows = [check_path_formula(req.n)]
            elif req.family == "cycle":
                rows = [check_cycle_formula(req.n)]
            else:
                raise GraphError("formula check takes --family path|cycle")
        elif req.what == "sandwich":
            rows = [check_domination_sandwich(req.graph.to_graph(), req.label)]
        elif req.what == "ncorona":
            rows = check_corona_bounds(
                req.graph.to_graph(), req.graph2.to_graph(), req.label, req.label2
            )
        elif req.what == "gluing":
            g1, g2 = req.graph.to_graph(), req.graph2.to_graph()
            if req.clique1 is not None and req.clique2 is not None:
                c1, c2 = tuple(req.clique1), tuple(req.clique2)
            else:
                if req.r is None:
                    raise GraphError("gluing check needs cliques or --r")
                cliques1 = find_cliques_of_size(g1, req.r)
                cliques2 = find_cliques_of_size(g2, req.r)
                if not cliques1 or not cliques2:
                    raise GraphError(f"no {req.r}-clique in one of the operands")
                c1, c2 = cliques1[0], cliques2[0]
            rows = [
                check_gluing_sandwich(
                    g1, g2, c1, c2, req.label, req.label2, swap=req.swap
                )
            ]
        elif req.what == "corollary":
            rows = check_corona_corollary(req.n if req.n is not None else 2)
        elif req.what == "stability":
            rows = [check_family_stability(req.family, req.n, convention)]
        elif req.what == "bondage":
            rows = [check_family_bondage(req.family, req.n, convention)]
        elif req.what == "complement-sum":
            rows = [
                check_complement_sum(
                    req.graph.to_graph(), req.kind, req.label, convention
                )
            ]
        else:  # pragma: no cover - pydantic restricts the literal
            raise GraphError(f"unknown check {req.what!r}")
        return CheckResponse(rows=[ClaimRow(**r.to_json_dict()) for r in rows])

    return app


app = create_app()
