"""Batch verification of every claimed bound, equality, and family value
against exact computation, emitting a structured verdict report.

Each claim instance becomes one :class:`ClaimVerdict` row with a stable claim
id, the expected value from the published statement, the exactly computed
value, and a verdict.  Bound-type claims (order bounds, sandwiches,
complement sums) are asserted; equality-type claims are compared and any
disagreement is emitted as a violated row rather than silently passed.
Instances where exact computation is known to contradict the published value
are listed in :data:`KNOWN_DISCREPANCIES`; their rows carry ``flagged=True``
so a run is considered clean when every violated row is a known discrepancy.

Reports serialize to JSON lines (a config line, one line per row, a summary
line) with a fixed key order, and are byte-identical across runs for a fixed
config: all randomness is seeded and no timing data enters a row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coloring import Coloring, chromatic_number, is_td_coloring, tdc_defined, total_domination_number
from .explorer import enumerate_graphs, random_connected_graph
from .formulas import (
    bondage_formula,
    cycle_tdc_value,
    path_tdc_formula,
    stability_formula,
)
from .graphs import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    find_cliques_of_size,
    friendship,
    book,
    neighbourhood_corona,
    path,
    r_gluing,
    star,
    write_graph6,
)
from .perturbation import Convention, DEFAULT_CONVENTION, bondage, stability
from .solver import BudgetExceededError, CapExceededError, tdc_number

HOLDS = "holds"
VIOLATED = "violated"
UNDEFINED = "undefined-instance"
SKIPPED = "skipped-cap"

# Published values contradicted by exact computation.  Every entry is
# witness-backed: the verification suite recomputes the row and the notes say
# where the change certificate lives.  A report is clean when its violated
# rows all appear here.
KNOWN_DISCREPANCIES: dict[tuple[str, str], str] = {
    ("tdc-formula/path", "n=11"): (
        "claimed 8, exact 7: the 7-class witness uses the distance-2 pair "
        "class {4,6} to dominate vertex 5"
    ),
    ("tdc-formula/cycle", "n=10"): (
        "claimed 8, exact 7: a 7-class coloring exists (verified exhaustively)"
    ),
    ("stability-formula/cycle", "n=4"): (
        "claimed 1, exact 2: every single-vertex deletion leaves a 3-path "
        "with the same TDC number 2"
    ),
    ("stability-formula/cycle", "n=12"): (
        "claimed 2, exact 1: deleting one vertex leaves an 11-path whose "
        "exact TDC number is 7, not the claimed 8"
    ),
    ("bondage-formula/cycle", "n=10"): (
        "claimed 1, exact 2: any single edge deletion leaves a 10-path with "
        "the same exact TDC number 7"
    ),
    ("bondage-formula/cycle", "n=11"): (
        "claimed 2, exact 1: one edge deletion leaves an 11-path with exact "
        "TDC number 7 against the cycle's 8"
    ),
}

# The claimed gluing upper bound (sum of the operand values minus r) is false
# in general: gluing two 3-paths at an end vertex yields a 5-path whose TDC
# number is 4, above the claimed 2 + 2 - 1 = 3.  Identifying a clique can
# pollute the classes that dominated vertices in each operand, so the layered
# coloring behind the claim stops being total-dominating.  Upper-side
# violations are flagged with this note; the lower bound is not excused.
GLUING_UPPER_BOUND_NOTE = (
    "published upper bound is false in general (first counterexample: "
    "path:3 u path:3 r=1 gives a 5-path with value 4 > 3); this row's "
    "computed value certifies the violation"
)


@dataclass
class ClaimVerdict:
    claim: str
    instance: str
    expected: int | str | None
    computed: int | str | None
    verdict: str
    flagged: bool = False
    note: str = ""
    repro: str = ""
    detail: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "type": "claim",
            "claim": self.claim,
            "instance": self.instance,
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict,
            "flagged": self.flagged,
            "note": self.note,
            "repro": self.repro,
            "detail": self.detail,
        }


def _flag(row: ClaimVerdict) -> ClaimVerdict:
    note = KNOWN_DISCREPANCIES.get((row.claim, row.instance))
    if note is not None and row.verdict == VIOLATED:
        row.flagged = True
        row.note = note
    return row


def _equality_row(claim: str, instance: str, expected: int, computed: int | str | None,
                  repro: str, detail: dict | None = None) -> ClaimVerdict:
    verdict = HOLDS if computed == expected else VIOLATED
    return _flag(ClaimVerdict(claim, instance, expected, computed, verdict,
                              repro=repro, detail=detail or {}))


# ---------------------------------------------------------------------------
# Individual claim checks.  Each returns rows that are re-derivable from the
# instance named inside them.
# ---------------------------------------------------------------------------

def check_path_formula(n: int) -> ClaimVerdict:
    return _equality_row(
        "tdc-formula/path", f"n={n}", path_tdc_formula(n),
        tdc_number(path(n)).value,
        f"check formula --family path --n {n}",
    )


def check_cycle_formula(n: int) -> ClaimVerdict:
    return _equality_row(
        "tdc-formula/cycle", f"n={n}", cycle_tdc_value(n),
        tdc_number(cycle(n)).value,
        f"check formula --family cycle --n {n}",
    )


def check_domination_sandwich(g: Graph, label: str | None = None) -> ClaimVerdict:
    """gamma_t <= TDC <= gamma_t + chi on an isolated-vertex-free graph."""
    instance = label or "g6:" + write_graph6(g)
    repro = f"check sandwich {instance}"
    if not tdc_defined(g):
        return ClaimVerdict("domination-sandwich", instance, None, "undefined",
                            UNDEFINED, repro=repro)
    gamma = total_domination_number(g)[0]
    chi = chromatic_number(g)[0]
    value = tdc_number(g).value
    verdict = HOLDS if gamma <= value <= gamma + chi else VIOLATED
    return ClaimVerdict(
        "domination-sandwich", instance, f"{gamma}..{gamma + chi}", value, verdict,
        repro=repro, detail={"gamma_t": gamma, "chi": chi},
    )


def _corona_construction(g1: Graph, g2: Graph, product: Graph) -> Coloring | None:
    """The layered coloring behind the additive corona claim: an optimal
    TD-coloring of g1 plus a fresh optimal proper palette shared by every
    copy of g2.  Returns it only if it verifies as a TD-coloring."""
    if not tdc_defined(g1):
        return None
    base = tdc_number(g1).witness
    chi2, proper2 = chromatic_number(g2)
    colors = list(base.colors)
    for i in range(g1.n):
        colors.extend(base.k + c for c in proper2.colors)
    candidate = Coloring(base.k + chi2, tuple(colors))
    return candidate if is_td_coloring(product, candidate) else None


def check_corona_bounds(
    g1: Graph,
    g2: Graph,
    label1: str | None = None,
    label2: str | None = None,
    *,
    max_order: int | None = None,
    node_budget: int | None = None,
) -> list[ClaimVerdict]:
    """The four published corona claims on one operand pair: three upper
    bounds and the additive equality (checked both as a bound and exactly)."""
    l1 = label1 or "g6:" + write_graph6(g1)
    l2 = label2 or "g6:" + write_graph6(g2)
    instance = f"{l1} * {l2}"
    repro = f"check ncorona {l1} {l2}"
    product = neighbourhood_corona(g1, g2)
    claims = [
        ("ncorona/order-bound", g1.n + g2.n, "le"),
        ("ncorona/tdc-plus-order",
         tdc_number(g1).value + g2.n if tdc_defined(g1) else None, "le"),
        ("ncorona/tdc-plus-tdc",
         tdc_number(g1).value + tdc_number(g2).value
         if tdc_defined(g1) and tdc_defined(g2) else None, "le"),
        ("ncorona/tdc-plus-chromatic-upper",
         tdc_number(g1).value + chromatic_number(g2)[0]
         if tdc_defined(g1) else None, "le"),
        ("ncorona/tdc-plus-chromatic",
         tdc_number(g1).value + chromatic_number(g2)[0]
         if tdc_defined(g1) else None, "eq"),
    ]
    if max_order is not None and product.n > max_order:
        return [ClaimVerdict(c, instance, b, "skipped", SKIPPED, repro=repro)
                for c, b, _ in claims]
    if not tdc_defined(product):
        return [ClaimVerdict(c, instance, b, "undefined", UNDEFINED, repro=repro)
                for c, b, _ in claims]
    try:
        value = tdc_number(product, node_budget=node_budget).value
    except BudgetExceededError:
        rows = [ClaimVerdict(c, instance, b, "unknown", SKIPPED, repro=repro)
                for c, b, _ in claims]
        witness = _corona_construction(g1, g2, product)
        if witness is not None:
            for row in rows:
                row.detail = {"certified_upper_bound": witness.k}
        return rows
    rows = []
    for claim, expected, relation in claims:
        if expected is None:
            rows.append(ClaimVerdict(claim, instance, None, value, UNDEFINED,
                                     repro=repro))
            continue
        if relation == "le":
            verdict = HOLDS if value <= expected else VIOLATED
        else:
            verdict = HOLDS if value == expected else VIOLATED
        rows.append(_flag(ClaimVerdict(claim, instance, expected, value, verdict,
                                       repro=repro)))
    witness = _corona_construction(g1, g2, product)
    if witness is not None:
        rows[-1].detail = {"construction_classes": witness.k}
    return rows


def check_corona_sharpness() -> ClaimVerdict:
    """Record which of the three corona upper bounds is tight on the claimed
    sharpness instance (complete graph on 4 with a triangle)."""
    g1, g2 = complete(4), cycle(3)
    value = tdc_number(neighbourhood_corona(g1, g2)).value
    bounds = {
        "order-bound": g1.n + g2.n,
        "tdc-plus-order": tdc_number(g1).value + g2.n,
        "tdc-plus-tdc": tdc_number(g1).value + tdc_number(g2).value,
    }
    tight = sorted(name for name, b in bounds.items() if b == value)
    verdict = HOLDS if tight else VIOLATED
    return ClaimVerdict(
        "ncorona/sharpness", "complete:4 * cycle:3", "some bound tight", value,
        verdict, repro="check ncorona complete:4 cycle:3",
        detail={"bounds": bounds, "tight": tight},
    )


def check_corona_corollary(n: int, *, node_budget: int | None = None) -> list[ClaimVerdict]:
    """Friendship-graph corona values: with a complete partner the value is
    n+3, with an even cycle partner it is 5."""
    rows = []
    for claim, g2, expected in (
        ("ncorona/friendship-complete", complete(n), n + 3),
        ("ncorona/friendship-even-cycle", cycle(2 * n), 5),
    ):
        g1 = friendship(n)
        product = neighbourhood_corona(g1, g2)
        repro = f"check corollary --n {n}"
        try:
            value = tdc_number(product, node_budget=node_budget).value
        except BudgetExceededError:
            row = ClaimVerdict(claim, f"n={n}", expected, "unknown", SKIPPED,
                               repro=repro)
            witness = _corona_construction(g1, g2, product)
            if witness is not None:
                row.detail = {"certified_upper_bound": witness.k}
            rows.append(row)
            continue
        rows.append(_equality_row(claim, f"n={n}", expected, value, repro))
    return rows


def check_gluing_sandwich(
    g1: Graph,
    g2: Graph,
    clique1: tuple[int, ...],
    clique2: tuple[int, ...],
    label1: str | None = None,
    label2: str | None = None,
    *,
    swap: bool = False,
    node_budget: int | None = None,
) -> ClaimVerdict:
    """max of the operand values <= glued value <= their sum minus r."""
    l1 = label1 or "g6:" + write_graph6(g1)
    l2 = label2 or "g6:" + write_graph6(g2)
    r = len(clique1)
    c1 = ",".join(map(str, clique1)) or "-"
    c2 = ",".join(map(str, clique2)) or "-"
    instance = f"{l1} u {l2} r={r} c1={c1} c2={c2}" + (" swap" if swap else "")
    repro = f"check gluing {l1} {l2} --r {r} --clique1 {c1} --clique2 {c2}"
    if swap:
        repro += " --swap"
    mapping = None
    if swap:
        mapping = dict(zip(sorted(clique1), sorted(clique2, reverse=True)))
    glued = r_gluing(g1, g2, clique1, clique2, mapping)
    if not (tdc_defined(g1) and tdc_defined(g2) and tdc_defined(glued)):
        return ClaimVerdict("gluing/sandwich", instance, None, "undefined",
                            UNDEFINED, repro=repro)
    v1 = tdc_number(g1).value
    v2 = tdc_number(g2).value
    lo, hi = max(v1, v2), v1 + v2 - r
    value = tdc_number(glued, node_budget=node_budget).value
    verdict = HOLDS if lo <= value <= hi else VIOLATED
    row = ClaimVerdict("gluing/sandwich", instance, f"{lo}..{hi}", value, verdict,
                       repro=repro, detail={"lower": lo, "upper": hi})
    if verdict == VIOLATED and value > hi:
        # Known-false claim: only the upper side is excused, and each row's
        # computed value is its own certificate.
        row.flagged = True
        row.note = GLUING_UPPER_BOUND_NOTE
    return row


def check_gluing_sharpness() -> list[ClaimVerdict]:
    """The two claimed tightness instances: gluing complete graphs on 4 and 5
    over a 4-clique hits the lower bound; gluing a 4-cycle and a triangle at
    a vertex hits the upper bound."""
    rows = []
    k4, k5 = complete(4), complete(5)
    glued = r_gluing(k4, k5, (0, 1, 2, 3), (0, 1, 2, 3))
    rows.append(_equality_row(
        "gluing/lower-sharpness", "complete:4 u complete:5 r=4",
        max(tdc_number(k4).value, tdc_number(k5).value),
        tdc_number(glued).value,
        "check gluing complete:4 complete:5 --r 4 --clique1 0,1,2,3 --clique2 0,1,2,3",
    ))
    c4, k3 = cycle(4), complete(3)
    glued = r_gluing(c4, k3, (0,), (0,))
    rows.append(_equality_row(
        "gluing/upper-sharpness", "cycle:4 u complete:3 r=1",
        tdc_number(c4).value + tdc_number(k3).value - 1,
        tdc_number(glued).value,
        "check gluing cycle:4 complete:3 --r 1 --clique1 0 --clique2 0",
    ))
    return rows


_FAMILY_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "friendship": friendship,
    "book": book,
    "balanced_complete_bipartite": lambda n: complete_bipartite(n, n),
}


def check_family_stability(
    family: str, n: int, convention: Convention = DEFAULT_CONVENTION
) -> ClaimVerdict:
    expected = stability_formula(family, n)
    result = stability(_FAMILY_BUILDERS[family](n), convention)
    computed = "no-witness" if result is None else result.value
    row = _equality_row(
        "stability-formula/" + family.replace("_", "-"), f"n={n}", expected,
        computed, f"check stability --family {family} --n {n}",
    )
    if result is not None and row.verdict == VIOLATED:
        after = "undefined" if result.after_value is None else result.after_value
        row.detail = {"witness": list(result.witness),
                      "base": result.base_value, "after": after}
    return row


def check_family_bondage(
    family: str, n: int, convention: Convention = DEFAULT_CONVENTION
) -> ClaimVerdict:
    expected = bondage_formula(family, n)
    result = bondage(_FAMILY_BUILDERS[family](n), convention)
    computed = "no-witness" if result is None else result.value
    row = _equality_row(
        "bondage-formula/" + family.replace("_", "-"), f"n={n}", expected,
        computed, f"check bondage --family {family} --n {n}",
    )
    if result is not None and row.verdict == VIOLATED:
        after = "undefined" if result.after_value is None else result.after_value
        row.detail = {"witness": [list(e) for e in result.witness],
                      "base": result.base_value, "after": after}
    return row


def check_complement_sum(
    g: Graph,
    kind: str,
    label: str | None = None,
    convention: Convention = DEFAULT_CONVENTION,
    *,
    claim: str | None = None,
    expected_sum: int | None = None,
) -> ClaimVerdict:
    """Value on the graph plus value on its complement is at least two
    (equality rows pass ``expected_sum=2``)."""
    instance = label or "g6:" + write_graph6(g)
    sweep = stability if kind == "stability" else bondage
    claim = claim or f"complement-sum/{kind}"
    repro = f"check complement-sum --kind {kind} {instance}"
    gc = complement(g)
    if not (tdc_defined(g) and tdc_defined(gc)):
        return ClaimVerdict(claim, instance, expected_sum or ">= 2", "undefined",
                            UNDEFINED, repro=repro,
                            note="complement has an isolated vertex"
                            if tdc_defined(g) else "graph is TDC-undefined")
    a = sweep(g, convention)
    b = sweep(gc, convention)
    if a is None or b is None:
        return ClaimVerdict(claim, instance, expected_sum or ">= 2", "no-witness",
                            UNDEFINED, repro=repro)
    total = a.value + b.value
    if expected_sum is None:
        verdict = HOLDS if total >= 2 else VIOLATED
        expected: int | str = ">= 2"
    else:
        verdict = HOLDS if total == expected_sum else VIOLATED
        expected = expected_sum
    return _flag(ClaimVerdict(claim, instance, expected, total, verdict,
                              repro=repro,
                              detail={"value": a.value, "complement_value": b.value}))


# ---------------------------------------------------------------------------
# Suite configuration and the batch runner.
# ---------------------------------------------------------------------------

ALL_SECTIONS = (
    "tdc-formula",
    "domination-sandwich",
    "ncorona",
    "gluing",
    "stability-formula",
    "bondage-formula",
    "complement-sum",
)

# Generator outputs with at most 4 vertices, one per isomorphism class
# (complete:2 = path:2, complete:3 = cycle:3, star:2 = path:3,
# complete_bipartite:2:2 = cycle:4, friendship:1 = cycle:3, book:1 = cycle:4;
# complete_minus_edge:2 is edgeless and TDC-degenerate, so it is left out).
CORONA_OPERANDS: tuple[tuple[str, Graph], ...] = (
    ("complete:1", complete(1)),
    ("path:2", path(2)),
    ("path:3", path(3)),
    ("path:4", path(4)),
    ("cycle:3", cycle(3)),
    ("cycle:4", cycle(4)),
    ("complete:4", complete(4)),
    ("complete_minus_edge:4", complete_minus_edge(4)),
    ("star:3", star(3)),
)

# Same idea up to 5 vertices for the gluing sweep.
GLUING_OPERANDS: tuple[tuple[str, Graph], ...] = (
    ("path:2", path(2)),
    ("path:3", path(3)),
    ("path:4", path(4)),
    ("path:5", path(5)),
    ("cycle:3", cycle(3)),
    ("cycle:4", cycle(4)),
    ("cycle:5", cycle(5)),
    ("complete:4", complete(4)),
    ("complete:5", complete(5)),
    ("complete_minus_edge:4", complete_minus_edge(4)),
    ("complete_minus_edge:5", complete_minus_edge(5)),
    ("complete_bipartite:2:3", complete_bipartite(2, 3)),
    ("friendship:2", friendship(2)),
    ("star:3", star(3)),
    ("star:4", star(4)),
)

STABILITY_RANGES = {
    "path": range(4, 10),
    "cycle": range(3, 13),
    "friendship": range(2, 4),
    "book": range(3, 5),
    "balanced_complete_bipartite": range(2, 4),
}

BONDAGE_RANGES = {
    "path": range(3, 10),
    "cycle": range(5, 13),
    "friendship": range(2, 4),
}

COMPLEMENT_EQUALITY_EXAMPLES = {
    "stability": (
        ("path:3", path(3)),
        ("cycle:5", cycle(5)),
        ("complete-minus-edge:4", complete_minus_edge(4)),
        ("complete-minus-edge:5", complete_minus_edge(5)),
    ),
    "bondage": (
        ("path:3", path(3)),
        ("complete-minus-edge:5", complete_minus_edge(5)),
    ),
}


@dataclass(frozen=True)
class SuiteConfig:
    sections: tuple[str, ...] = ALL_SECTIONS
    path_range: tuple[int, int] = (2, 12)
    cycle_range: tuple[int, int] = (3, 12)
    sandwich_max_n: int = 7
    corona_random_pairs: int = 30
    corona_max_order: int = 25
    complement_sum_max_n: int = 6
    convention: Convention = DEFAULT_CONVENTION
    seed: int = 0
    node_budget: int | None = None

    def echo(self) -> dict:
        return {
            "type": "config",
            "sections": list(self.sections),
            "path_range": list(self.path_range),
            "cycle_range": list(self.cycle_range),
            "sandwich_max_n": self.sandwich_max_n,
            "corona_random_pairs": self.corona_random_pairs,
            "corona_max_order": self.corona_max_order,
            "complement_sum_max_n": self.complement_sum_max_n,
            "convention": self.convention.value,
            "seed": self.seed,
            "node_budget": self.node_budget,
        }


@dataclass
class TheoremReport:
    config: dict
    rows: list[ClaimVerdict]

    @property
    def summary(self) -> dict:
        counts = {HOLDS: 0, VIOLATED: 0, UNDEFINED: 0, SKIPPED: 0}
        flagged = 0
        for row in self.rows:
            counts[row.verdict] += 1
            if row.flagged:
                flagged += 1
        return {
            "type": "summary",
            "rows": len(self.rows),
            "holds": counts[HOLDS],
            "violated": counts[VIOLATED],
            "violated_flagged": flagged,
            "undefined": counts[UNDEFINED],
            "skipped": counts[SKIPPED],
        }

    def clean(self) -> bool:
        """True when every violated row is a known, flagged discrepancy."""
        return all(row.flagged for row in self.rows if row.verdict == VIOLATED)

    def to_jsonl(self) -> str:
        lines = [json.dumps(self.config, separators=(",", ":"))]
        lines += [
            json.dumps(row.to_json_dict(), separators=(",", ":"))
            for row in self.rows
        ]
        lines.append(json.dumps(self.summary, separators=(",", ":")))
        return "\n".join(lines) + "\n"

    def table(self) -> str:
        out = [f"{'verdict':17} {'claim':34} {'instance':42} expected/computed"]
        for row in self.rows:
            mark = " [flagged]" if row.flagged else ""
            out.append(
                f"{row.verdict + mark:17} {row.claim:34} {row.instance:42} "
                f"{row.expected} / {row.computed}"
            )
        s = self.summary
        out.append(
            f"rows={s['rows']} holds={s['holds']} violated={s['violated']} "
            f"(flagged={s['violated_flagged']}) undefined={s['undefined']} "
            f"skipped={s['skipped']}"
        )
        return "\n".join(out)


def _random_corona_pairs(config: SuiteConfig) -> list[tuple[str, Graph, str, Graph]]:
    """Seeded connected pairs whose corona fits the configured order cap."""
    import random as _random

    rng = _random.Random(config.seed)
    pairs = []
    attempt = 0
    while len(pairs) < config.corona_random_pairs and attempt < 10_000:
        attempt += 1
        n1 = rng.randint(2, 4)
        n2 = rng.randint(1, 4)
        if n1 * (1 + n2) > config.corona_max_order:
            continue
        p1 = rng.uniform(0.35, 0.9)
        p2 = rng.uniform(0.35, 0.9)
        g1 = random_connected_graph(n1, p1, config.seed * 20_000 + 2 * attempt)
        g2 = random_connected_graph(n2, p2, config.seed * 20_000 + 2 * attempt + 1)
        pairs.append(("g6:" + write_graph6(g1), g1, "g6:" + write_graph6(g2), g2))
    return pairs


def run_suite(config: SuiteConfig = SuiteConfig()) -> TheoremReport:
    """Run every configured claim section; failures are verdict rows, never
    exceptions.  Deterministic for a fixed config."""
    rows: list[ClaimVerdict] = []
    budget = config.node_budget

    def guarded(fn, *args, **kwargs):
        try:
            out = fn(*args, **kwargs)
        except (BudgetExceededError, CapExceededError) as exc:
            rows.append(ClaimVerdict("error/" + fn.__name__, repr(args), None,
                                     "unknown", SKIPPED, note=str(exc)))
            return
        if isinstance(out, ClaimVerdict):
            rows.append(out)
        else:
            rows.extend(out)

    if "tdc-formula" in config.sections:
        for n in range(config.path_range[0], config.path_range[1] + 1):
            guarded(check_path_formula, n)
        for n in range(config.cycle_range[0], config.cycle_range[1] + 1):
            guarded(check_cycle_formula, n)

    if "domination-sandwich" in config.sections:
        for n in range(2, config.sandwich_max_n + 1):
            for g in enumerate_graphs(n, "connected", dedup=True):
                guarded(check_domination_sandwich, g)

    if "ncorona" in config.sections:
        for l1, g1 in CORONA_OPERANDS:
            for l2, g2 in CORONA_OPERANDS:
                guarded(check_corona_bounds, g1, g2, l1, l2,
                        max_order=config.corona_max_order, node_budget=budget)
        for l1, g1, l2, g2 in _random_corona_pairs(config):
            guarded(check_corona_bounds, g1, g2, l1, l2,
                    max_order=config.corona_max_order, node_budget=budget)
        guarded(check_corona_sharpness)
        guarded(check_corona_corollary, 2, node_budget=budget)

    if "gluing" in config.sections:
        for i, (l1, g1) in enumerate(GLUING_OPERANDS):
            for l2, g2 in GLUING_OPERANDS[i:]:
                for r in (1, 2):
                    for c1 in find_cliques_of_size(g1, r):
                        for c2 in find_cliques_of_size(g2, r):
                            guarded(check_gluing_sandwich, g1, g2, c1, c2,
                                    l1, l2, node_budget=budget)
                            if r == 2:
                                guarded(check_gluing_sandwich, g1, g2, c1, c2,
                                        l1, l2, swap=True, node_budget=budget)
        guarded(check_gluing_sharpness)

    if "stability-formula" in config.sections:
        for family, rng in STABILITY_RANGES.items():
            for n in rng:
                guarded(check_family_stability, family, n, config.convention)

    if "bondage-formula" in config.sections:
        for family, rng in BONDAGE_RANGES.items():
            for n in rng:
                guarded(check_family_bondage, family, n, config.convention)

    if "complement-sum" in config.sections:
        for kind in ("stability", "bondage"):
            for n in range(2, config.complement_sum_max_n + 1):
                for g in enumerate_graphs(n, "connected", dedup=True):
                    guarded(check_complement_sum, g, kind,
                            convention=config.convention)
            for label, g in COMPLEMENT_EQUALITY_EXAMPLES[kind]:
                guarded(check_complement_sum, g, kind, label, config.convention,
                        claim=f"complement-sum/{kind}-equality", expected_sum=2)

    return TheoremReport(config=config.echo(), rows=rows)
