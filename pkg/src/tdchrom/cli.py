"""Command-line client for the tdchrom service.

Every command builds a request, sends it through the HTTP service layer
(in-process by default, or a remote instance via ``--server``), and renders
the response as JSON lines or a table.  Graph inputs accept a family spec
("cycle:9"), a graph6 string (optionally "g6:"-prefixed), a path to an
edge-list file ("n m" header plus "u v" lines), or "-" for graph6 on stdin.

Exit codes: 0 success; 2 parse/usage error; 3 cap or budget exceeded;
4 violated claims (or a failed coloring check / counterexample findings);
5 undefined value.
"""

from __future__ import annotations

import asyncio
import json
import os
import sys
from functools import lru_cache

import click
import httpx

EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_VIOLATED = 4
EXIT_UNDEFINED = 5

_ERROR_EXITS = {
    "parse-error": EXIT_PARSE,
    "cap-exceeded": EXIT_CAP,
    "budget-exceeded": EXIT_CAP,
    "undefined": EXIT_UNDEFINED,
}


@lru_cache(maxsize=1)
def _local_app():
    from .service import create_app

    return create_app()


def _request(path: str, payload: dict, server: str | None) -> dict:
    async def go() -> httpx.Response:
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=None) as client:
                return await client.post(path, json=payload)
        transport = httpx.ASGITransport(app=_local_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://tdchrom", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    try:
        resp = asyncio.run(go())
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(1)
    if resp.status_code == 200:
        return resp.json()
    try:
        detail = resp.json().get("detail")
    except json.JSONDecodeError:
        detail = None
    if isinstance(detail, dict) and "code" in detail:
        click.echo(f"error [{detail['code']}]: {detail.get('message', '')}", err=True)
        sys.exit(_ERROR_EXITS.get(detail["code"], 1))
    click.echo(f"error: service returned {resp.status_code}: {resp.text}", err=True)
    sys.exit(EXIT_PARSE if resp.status_code == 422 else 1)


def _graph_inputs(text: str) -> list[dict]:
    """Resolve one CLI graph argument into service GraphInput payloads."""
    if text == "-":
        lines = [line.strip() for line in sys.stdin if line.strip()]
        if not lines:
            click.echo("error: empty stdin", err=True)
            sys.exit(EXIT_PARSE)
        return [{"graph6": line} for line in lines]
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return [{"edge_list": fh.read()}]
    return [{"spec": text}]


def _single_graph_input(text: str) -> dict:
    inputs = _graph_inputs(text)
    if len(inputs) != 1:
        click.echo("error: expected exactly one graph on stdin", err=True)
        sys.exit(EXIT_PARSE)
    return inputs[0]


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit_lines(lines: list[str], output: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _kv_table(obj: dict) -> str:
    return "\n".join(f"{k:12} {v}" for k, v in obj.items())


_server_option = click.option(
    "--server", default=None, metavar="URL",
    help="Remote service base URL (default: run the service in-process).",
)
_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "table"]), default="json",
    show_default=True, help="Output format.",
)
_output_option = click.option(
    "--output", type=click.Path(dir_okay=False), default=None,
    help="Write the report to this file instead of stdout.",
)
_convention_option = click.option(
    "--convention",
    type=click.Choice(["undefined-counts-as-changed", "skip-undefined"]),
    default="undefined-counts-as-changed", show_default=True,
    help="How removals with an undefined TDC number count.",
)


@click.group()
@click.version_option()
def main() -> None:
    """Exact total dominator chromatic numbers of small graphs."""


@main.command()
@click.argument("inputs", nargs=-1, required=True)
@click.option("--max-n", type=int, default=None, help="Exact-solver vertex cap.")
@click.option("--node-budget", type=int, default=None, help="Deterministic search-node cap.")
@click.option("--time-budget", type=float, default=None, help="Wall-clock cap in seconds.")
@_format_option
@_output_option
@_server_option
def invariants(inputs, max_n, node_budget, time_budget, fmt, output, server) -> None:
    """Chromatic, total domination and TDC numbers of each input graph."""
    lines = []
    for text in inputs:
        for graph_input in _graph_inputs(text):
            payload = {
                "graph": graph_input,
                "caps": {
                    "max_n": max_n,
                    "node_budget": node_budget,
                    "time_budget": time_budget,
                },
            }
            data = _request("/invariants", payload, server)
            lines.append(_dump(data) if fmt == "json" else _kv_table(data))
    _emit_lines(lines, output)


@main.command()
@click.argument("graph", metavar="INPUT")
@click.option("--kind", type=click.Choice(["stability", "bondage"]), required=True)
@click.option("--max-vertices", type=int, default=12, show_default=True)
@click.option("--max-edges", type=int, default=24, show_default=True)
@_convention_option
@_format_option
@_output_option
@_server_option
def perturb(graph, kind, max_vertices, max_edges, convention, fmt, output, server) -> None:
    """Stability (vertex removal) or bondage (edge removal) of a graph."""
    payload = {
        "graph": _single_graph_input(graph),
        "kind": kind,
        "convention": convention,
        "max_vertices": max_vertices,
        "max_edges": max_edges,
    }
    data = _request("/perturb", payload, server)
    _emit_lines([_dump(data) if fmt == "json" else _kv_table(data)], output)


@main.command()
@click.argument("graph", metavar="INPUT")
@click.option("--kind", type=click.Choice(["stability", "bondage"]), required=True)
@click.option("--max-size", type=int, default=1, show_default=True,
              help="Largest removal-subset size to list.")
@click.option("--max-vertices", type=int, default=12, show_default=True)
@click.option("--max-edges", type=int, default=24, show_default=True)
@_convention_option
@_format_option
@_output_option
@_server_option
def trace(graph, kind, max_size, max_vertices, max_edges, convention, fmt, output,
          server) -> None:
    """Per-subset removal trace: every subset with its after-removal value."""
    payload = {
        "graph": _single_graph_input(graph),
        "kind": kind,
        "convention": convention,
        "max_size": max_size,
        "max_vertices": max_vertices,
        "max_edges": max_edges,
    }
    data = _request("/perturb/trace", payload, server)
    if fmt == "json":
        head = {k: v for k, v in data.items() if k != "rows"}
        lines = [_dump(head)] + [_dump(row) for row in data["rows"]]
    else:
        lines = [f"base {data['base_value']} ({data['kind']}, {data['convention']})"]
        lines += [f"  {row['subset']} -> {row['after_value']}" for row in data["rows"]]
    _emit_lines(lines, output)


@main.command()
@click.argument("op", type=click.Choice(
    ["family", "ncorona", "glue", "cartesian", "union", "complement"]))
@click.argument("operands", nargs=-1, required=True)
@click.option("--r", type=int, default=None, help="Clique size for glue.")
@click.option("--clique1", default=None, metavar="V,V,...",
              help="Explicit clique in the first operand.")
@click.option("--clique2", default=None, metavar="V,V,...")
@click.option("--swap", is_flag=True, default=False,
              help="Pair the sorted cliques in opposite order.")
@_server_option
def build(op, operands, r, clique1, clique2, swap, server) -> None:
    """Construct a graph and print its graph6 line (pipe-friendly)."""
    payload = {
        "op": op,
        "operands": [_single_graph_input(text) for text in operands],
        "r": r,
        "clique1": [int(x) for x in clique1.split(",")] if clique1 else None,
        "clique2": [int(x) for x in clique2.split(",")] if clique2 else None,
        "swap": swap,
    }
    data = _request("/build", payload, server)
    click.echo(data["graph6"])


@main.command()
@click.argument("graph", metavar="INPUT")
@click.argument("coloring_file", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_server_option
def check_coloring(graph, coloring_file, fmt, server) -> None:
    """Verify a coloring file (first line k, then lines "v c") on a graph."""
    with open(coloring_file, encoding="utf-8") as fh:
        coloring = fh.read()
    payload = {"graph": _single_graph_input(graph), "coloring": coloring}
    data = _request("/coloring/check", payload, server)
    _emit_lines([_dump(data) if fmt == "json" else _kv_table(data)], None)
    if data["td_coloring"] == "undefined":
        sys.exit(EXIT_UNDEFINED)
    if not data["td_coloring"]:
        sys.exit(EXIT_VIOLATED)


@main.command()
@click.option("--claims", multiple=True, metavar="SECTION",
              help="Claim sections to run (default: all). Repeatable; "
                   "'none' runs nothing.")
@click.option("--path-range", nargs=2, type=int, default=(2, 12), show_default=True)
@click.option("--cycle-range", nargs=2, type=int, default=(3, 12), show_default=True)
@click.option("--sandwich-max-n", type=int, default=7, show_default=True)
@click.option("--random-pairs", type=int, default=30, show_default=True)
@click.option("--corona-max-order", type=int, default=25, show_default=True)
@click.option("--complement-max-n", type=int, default=6, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--node-budget", type=int, default=None)
@_convention_option
@_format_option
@_output_option
@_server_option
def verify(claims, path_range, cycle_range, sandwich_max_n, random_pairs,
           corona_max_order, complement_max_n, seed, node_budget, convention,
           fmt, output, server) -> None:
    """Run the claim-verification suite and emit the verdict report.

    Exits 0 only when every violated row is a known flagged discrepancy.
    """
    sections: list[str] | None
    if not claims:
        sections = None
    elif list(claims) == ["none"]:
        sections = []
    else:
        sections = list(claims)
    payload = {
        "sections": sections,
        "path_range": list(path_range),
        "cycle_range": list(cycle_range),
        "sandwich_max_n": sandwich_max_n,
        "corona_random_pairs": random_pairs,
        "corona_max_order": corona_max_order,
        "complement_sum_max_n": complement_max_n,
        "convention": convention,
        "seed": seed,
        "node_budget": node_budget,
    }
    data = _request("/verify", payload, server)
    if fmt == "json":
        lines = [_dump(data["config"])]
        lines += [_dump(row) for row in data["rows"]]
        lines.append(_dump(data["summary"]))
    else:
        lines = [
            f"{row['verdict'] + (' [flagged]' if row['flagged'] else ''):20} "
            f"{row['claim']:36} {row['instance']:44} "
            f"{row['expected']} / {row['computed']}"
            for row in data["rows"]
        ]
        lines.append(_dump(data["summary"]))
    _emit_lines(lines, output)
    if not data["clean"]:
        sys.exit(EXIT_VIOLATED)


@main.command()
@click.option("--max-n", type=int, default=6, show_default=True)
@click.option("--all-no-isolated", is_flag=True, default=False,
              help="Scan all isolated-vertex-free graphs, not just connected.")
@click.option("--seed", type=int, default=0, show_default=True)
@_convention_option
@_format_option
@_output_option
@_server_option
def explore(max_n, all_no_isolated, seed, convention, fmt, output, server) -> None:
    """Scan for counterexamples to the low-degree stability conjecture.

    Emits one finding for every graph with a vertex of degree one or two.
    Exits 4 if any counterexample was found.
    """
    payload = {
        "max_n": max_n,
        "convention": convention,
        "connected_only": not all_no_isolated,
        "seed": seed,
    }
    data = _request("/explore", payload, server)
    if fmt == "json":
        lines = [_dump(data["config"])]
        lines += [_dump(row) for row in data["findings"]]
        lines.append(_dump(data["summary"]))
    else:
        lines = [
            f"{f['graph6']:12} n={f['n']} mindeg={f['min_degree']} "
            f"tdc={f['tdc']} st={f['stability']} {f['verdict']}"
            for f in data["findings"]
        ]
        lines.append(_dump(data["summary"]))
    _emit_lines(lines, output)
    if data["summary"]["counterexamples"]:
        sys.exit(EXIT_VIOLATED)


@main.group()
def check() -> None:
    """Single-instance claim checks (the repro commands inside report rows)."""


def _emit_check(payload: dict, fmt: str, server: str | None) -> None:
    data = _request("/check", payload, server)
    lines = [
        _dump(row) if fmt == "json"
        else f"{row['verdict']:18} {row['claim']} {row['instance']} "
             f"{row['expected']} / {row['computed']}"
        for row in data["rows"]
    ]
    _emit_lines(lines, None)
    bad = [r for r in data["rows"] if r["verdict"] == "violated" and not r["flagged"]]
    if bad:
        sys.exit(EXIT_VIOLATED)


@check.command("formula")
@click.option("--family", type=click.Choice(["path", "cycle"]), required=True)
@click.option("--n", type=int, required=True)
@_format_option
@_server_option
def check_formula(family, n, fmt, server) -> None:
    """Published TDC closed form vs the exact solver."""
    _emit_check({"what": "formula", "family": family, "n": n}, fmt, server)


@check.command("sandwich")
@click.argument("graph", metavar="INPUT")
@_format_option
@_server_option
def check_sandwich(graph, fmt, server) -> None:
    """Total-domination sandwich bounds on one graph."""
    _emit_check(
        {"what": "sandwich", "graph": _single_graph_input(graph), "label": graph},
        fmt, server,
    )


@check.command("ncorona")
@click.argument("input1", metavar="INPUT1")
@click.argument("input2", metavar="INPUT2")
@_format_option
@_server_option
def check_ncorona(input1, input2, fmt, server) -> None:
    """All corona bounds and the additive equality on one operand pair."""
    _emit_check(
        {
            "what": "ncorona",
            "graph": _single_graph_input(input1),
            "graph2": _single_graph_input(input2),
            "label": input1,
            "label2": input2,
        },
        fmt, server,
    )


@check.command("gluing")
@click.argument("input1", metavar="INPUT1")
@click.argument("input2", metavar="INPUT2")
@click.option("--r", type=int, default=None)
@click.option("--clique1", default=None, metavar="V,V,...")
@click.option("--clique2", default=None, metavar="V,V,...")
@click.option("--swap", is_flag=True, default=False)
@_format_option
@_server_option
def check_gluing(input1, input2, r, clique1, clique2, swap, fmt, server) -> None:
    """Gluing sandwich on one instance (explicit cliques or lex-first)."""
    _emit_check(
        {
            "what": "gluing",
            "graph": _single_graph_input(input1),
            "graph2": _single_graph_input(input2),
            "label": input1,
            "label2": input2,
            "r": r,
            "clique1": [int(x) for x in clique1.split(",")] if clique1 else None,
            "clique2": [int(x) for x in clique2.split(",")] if clique2 else None,
            "swap": swap,
        },
        fmt, server,
    )


@check.command("corollary")
@click.option("--n", type=int, default=2, show_default=True)
@_format_option
@_server_option
def check_corollary(n, fmt, server) -> None:
    """Friendship-graph corona values (n+3 with complete partner, 5 with even cycle)."""
    _emit_check({"what": "corollary", "n": n}, fmt, server)


@check.command("stability")
@click.option("--family", required=True)
@click.option("--n", type=int, required=True)
@_convention_option
@_format_option
@_server_option
def check_stability(family, n, convention, fmt, server) -> None:
    """Published family stability value vs the exact sweep."""
    _emit_check(
        {"what": "stability", "family": family, "n": n, "convention": convention},
        fmt, server,
    )


@check.command("bondage")
@click.option("--family", required=True)
@click.option("--n", type=int, required=True)
@_convention_option
@_format_option
@_server_option
def check_bondage(family, n, convention, fmt, server) -> None:
    """Published family bondage value vs the exact sweep."""
    _emit_check(
        {"what": "bondage", "family": family, "n": n, "convention": convention},
        fmt, server,
    )


@check.command("complement-sum")
@click.argument("graph", metavar="INPUT")
@click.option("--kind", type=click.Choice(["stability", "bondage"]), required=True)
@_convention_option
@_format_option
@_server_option
def check_complement_sum(graph, kind, convention, fmt, server) -> None:
    """Value plus complement value is at least two."""
    _emit_check(
        {
            "what": "complement-sum",
            "graph": _single_graph_input(graph),
            "label": graph,
            "kind": kind,
            "convention": convention,
        },
        fmt, server,
    )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port) -> None:
    """Run the HTTP service under uvicorn."""
    import uvicorn

    uvicorn.run("tdchrom.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
