"""Solve report: one structured document, rendered as text tables or JSON.

The text renderer only formats what :func:`build_report` put in the
document, so both formats carry identical values.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable, Sequence

from .compromise import TIED
from .money import Money
from .network import UNREACHABLE, CostClass, CostMatrix
from .pipeline import Solution
from .supply import amortized_leg_cost

SCHEMA_VERSION = 1


def _cell(value: Any) -> Any:
    if value is UNREACHABLE:
        return None
    if isinstance(value, Fraction):
        return Money.from_fraction(value)
    return value


def _table(rows: Sequence[int], cols: Sequence[int], cell: Callable[[int, int], Any], *, row_labels=None) -> dict:
    return {
        "rows": list(row_labels) if row_labels is not None else [f"x{r}" for r in rows],
        "cols": [f"x{c}" for c in cols],
        "values": [[_cell(cell(r, c)) for c in cols] for r in rows],
    }


def _per_unit(weight, batch: int):
    return UNREACHABLE if weight is UNREACHABLE else amortized_leg_cost(weight, batch)


def distance_table(matrix: CostMatrix, sources: Sequence[int], targets: Sequence[int]) -> dict:
    return _table(sources, targets, lambda i, j: matrix[i, j])


def build_report(sol: Solution) -> dict:
    scn = sol.scenario
    hubs = [h.vertex for h in scn.production_hubs]
    stores = [s.vertex for s in scn.storages]
    buyers = [b.vertex for b in scn.buyers]
    cands = list(scn.candidate_locations)
    heavy = sol.apsp[CostClass.ACTOR_HEAVY]
    light = sol.apsp[CostClass.ACTOR_LIGHT]
    buyer = sol.apsp[CostClass.BUYER]
    plan = sol.plan

    chain_order = [(d.vertex, k.vertex) for d in scn.production_hubs for k in scn.storages]
    chain_labels = [f"x{d} -> x{k}" for d, k in chain_order]

    def chain_cell(attr: str):
        def cell(idx: int, g: int):
            return getattr(plan[g].options[idx], attr)
        return cell

    cost_idx = {(b, g): (i, j) for i, b in enumerate(buyers) for j, g in enumerate(cands)}

    def buyer_cell(attr: str):
        def cell(b: int, g: int):
            i, j = cost_idx[b, g]
            return getattr(sol.buyer_costs[i][j], attr)
        return cell

    profiles = [str(p) for p in sol.payoff.profiles]
    result = sol.compromise
    chosen = sol.selected_profile
    return {
        "schema_version": SCHEMA_VERSION,
        "instance": {
            "vertices": scn.network.vertex_count,
            "edges": len(scn.network.edges),
            "actors": scn.actor_count,
            "profiles": len(profiles),
        },
        "heavy_paths": distance_table(heavy, hubs, stores),
        "heavy_per_unit": _table(hubs, stores, lambda d, k: _per_unit(heavy[d, k], scn.batch_heavy)),
        "light_paths": distance_table(light, stores, cands),
        "light_per_unit": _table(stores, cands, lambda k, g: _per_unit(light[k, g], scn.batch_light)),
        "chain_transport": _table(
            range(len(chain_order)), cands, chain_cell("transport"), row_labels=chain_labels
        ),
        "chain_prices": _table(range(len(chain_order)), cands, chain_cell("price"), row_labels=chain_labels),
        "supply_plan": {
            str(g): {
                "production_hub": plan[g].production_vertex,
                "storage": plan[g].storage_vertex,
                "c1": plan[g].c1,
                "c2": plan[g].c2,
                "base_cost": plan[g].base_cost,
                "margin": plan[g].margin,
                "unit_price": plan[g].unit_price,
            }
            for g in cands
        },
        "prices": {str(g): plan.price(g) for g in cands},
        "purchase_costs": _table(buyers, cands, buyer_cell("purchase_cost")),
        "buyer_paths": distance_table(buyer, buyers, cands),
        "buyer_costs": _table(buyers, cands, buyer_cell("total")),
        "payoffs": {
            "rows": [f"actor {k + 1}" for k in range(scn.actor_count)],
            "cols": profiles,
            "values": [list(row) for row in sol.payoff.values],
        },
        "assignments": {
            str(p): [
                {
                    "buyer": a.buyer_vertex,
                    "hub": a.chosen_hub,
                    "actor": a.owner + 1,
                    "purchase": a.purchase_cost,
                    "travel": a.travel_cost,
                    "total": a.total,
                }
                for a in assigned
            ]
            for p, assigned in zip(sol.payoff.profiles, sol.payoff.assignments)
        },
        "perfect_vector": list(result.perfect_vector),
        "residuals": {
            "rows": [f"actor {k + 1}" for k in range(scn.actor_count)],
            "cols": profiles,
            "values": [list(r) for r in result.residuals],
        },
        "sorted_residuals": {
            "rows": [str(k + 1) for k in range(scn.actor_count)],
            "cols": profiles,
            "values": [list(r) for r in result.sorted_residuals],
        },
        "compromise": {
            "minimax": result.minimax,
            "decision_level": result.decision_level,
            "selected": [profiles[q] for q in result.selected],
            "profile": str(chosen),
            "hubs": list(chosen.hubs),
            "payoffs": list(result.selected_payoffs),
        },
    }


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Money):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def render_json(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2, ensure_ascii=False) + "\n"


def _fmt(value: Any) -> str:
    if value is None:
        return "inf"
    return str(value)


def format_table(table: dict) -> list[str]:
    header = [""] + [str(c) for c in table["cols"]]
    body = [[str(label)] + [_fmt(v) for v in row] for label, row in zip(table["rows"], table["values"])]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    out = []
    for r in [header] + body:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return out


SECTIONS = [
    ("heavy_paths", "Shortest heavy-transport path weights, production hub -> storage"),
    ("heavy_per_unit", "Per-unit heavy transport cost (path weight / batch_heavy)"),
    ("light_paths", "Shortest light-transport path weights, storage -> candidate location"),
    ("light_per_unit", "Per-unit light transport cost (path weight / batch_light)"),
    ("chain_transport", "Per-unit transport cost by supply chain"),
    ("chain_prices", "Unit price by supply chain (incl. margin)"),
]

BUYER_SECTIONS = [
    ("purchase_costs", "Goods cost per buyer (demand x unit price)"),
    ("buyer_paths", "Shortest buyer travel path weights"),
    ("buyer_costs", "Buyer cumulative cost (goods + travel)"),
    ("payoffs", "Payoff matrix (actor revenue per profile)"),
]


def render_text(report: dict, style: Callable[[str], str] = lambda s: s) -> str:
    lines: list[str] = []
    inst = report["instance"]
    lines.append(
        f"Instance: {inst['vertices']} vertices, {inst['edges']} edges, "
        f"{inst['actors']} actors, {inst['profiles']} profiles"
    )

    def section(title: str, body: list[str]) -> None:
        lines.append("")
        lines.append(style(title))
        lines.extend(body)

    for key, title in SECTIONS:
        section(title, format_table(report[key]))

    plan_rows = []
    for g, entry in report["supply_plan"].items():
        plan_rows.append(
            f"x{g}: x{entry['production_hub']} -> x{entry['storage']}  "
            f"c1={_fmt(entry['c1'])} c2={_fmt(entry['c2'])}  base={entry['base_cost']} "
            f"margin={entry['margin']} price={entry['unit_price']}"
        )
    section("Cheapest supply chain per candidate location", plan_rows)
    prices = report["prices"]
    section(
        "Final unit price per candidate location",
        format_table({"rows": ["price"], "cols": [f"x{g}" for g in prices], "values": [list(prices.values())]}),
    )

    for key, title in BUYER_SECTIONS:
        section(title, format_table(report[key]))

    assign_rows = []
    for p, assigned in report["assignments"].items():
        picks = ", ".join(f"x{a['buyer']}->x{a['hub']} (actor {a['actor']}, {a['total']})" for a in assigned)
        assign_rows.append(f"{p}: {picks}")
    section("Buyer choices per profile", assign_rows)

    section("Perfect vector", ["(" + "; ".join(str(v) for v in report["perfect_vector"]) + ")"])
    section("Residual matrix", format_table(report["residuals"]))
    section("Sorted residual matrix (ascending per column)", format_table(report["sorted_residuals"]))

    comp = report["compromise"]
    level = comp["decision_level"]
    level_text = "tied through all levels" if level == TIED else f"decided at level {level}"
    section(
        "Compromise",
        [
            f"min over profiles of max residual: {comp['minimax']}",
            f"selected: {', '.join(comp['selected'])} ({level_text})",
        ],
    )
    payoffs = "; ".join(str(v) for v in comp["payoffs"])
    lines.append(f"Compromise profile {comp['profile']} with payoffs ({payoffs})")
    return "\n".join(lines) + "\n"
