"""Graph input resolution shared by the service and the CLI.

Family specs use the mini-grammar ``name:arg(:arg)``, e.g. ``cycle:9`` or
``complete_bipartite:3:3``.  ``g6:<text>`` forces graph6; a bare string that
is not a family spec is tried as graph6 last.
"""

from __future__ import annotations

from collections.abc import Callable

from .graphs import (
    Graph,
    GraphError,
    book,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    friendship,
    parse_graph6,
    path,
    star,
)

FAMILY_BUILDERS: dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "friendship": friendship,
    "book": book,
    "complete_minus_edge": complete_minus_edge,
}
# Hyphenated aliases so CLI labels round-trip.
FAMILY_BUILDERS.update({
    "complete-bipartite": complete_bipartite,
    "complete-minus-edge": complete_minus_edge,
})


def parse_family_spec(text: str) -> Graph:
    parts = text.split(":")
    name = parts[0].strip().lower()
    builder = FAMILY_BUILDERS.get(name)
    if builder is None:
        raise GraphError(f"unknown family {name!r}; known: {sorted(set(FAMILY_BUILDERS))}")
    if len(parts) < 2:
        raise GraphError(f"family spec {text!r} is missing its size argument")
    try:
        args = [int(p) for p in parts[1:]]
    except ValueError as exc:
        raise GraphError(f"bad family argument in {text!r}: {exc}") from exc
    return builder(*args)


def is_family_spec(text: str) -> bool:
    return ":" in text and text.split(":", 1)[0].strip().lower() in FAMILY_BUILDERS


def resolve_graph_text(text: str) -> Graph:
    """Family spec, explicit ``g6:`` string, or bare graph6, in that order."""
    s = text.strip()
    if not s:
        raise GraphError("empty graph input")
    if s.startswith("g6:"):
        return parse_graph6(s[3:])
    if is_family_spec(s):
        return parse_family_spec(s)
    return parse_graph6(s)
