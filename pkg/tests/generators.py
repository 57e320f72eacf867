"""Random but valid scenarios for property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from hubnet.money import Money
from hubnet.network import CostClass, Edge, Network, shortest_path_matrix
from hubnet.scenario import Buyer, FractionOfBase, ProductionHub, Scenario, Storage
from hubnet.supply import build_supply_plan
from oracles import random_connected_graph

M = Money.parse


def random_scenario(rng: random.Random, scale: int = 1) -> Scenario:
    n = rng.randint(4, 12)
    raw = random_connected_graph(rng, n, max_weight=20)
    edges = []
    for u, v, w in raw:
        light = rng.randint(0, w)
        edges.append(Edge(u, v, M(w * scale), M(light * scale), M(rng.randint(0, 20) * scale)))
    verts = list(range(n))
    pick = lambda k: rng.sample(verts, k)  # noqa: E731
    cands = pick(rng.randint(2, min(5, n)))
    return Scenario(
        network=Network(n, tuple(edges)),
        production_hubs=tuple(ProductionHub(v, M(rng.randint(0, 9) * scale)) for v in pick(rng.randint(1, 3))),
        storages=tuple(Storage(v, M(rng.randint(0, 9) * scale)) for v in pick(rng.randint(1, 3))),
        buyers=tuple(Buyer(v, rng.randint(1, 9)) for v in pick(rng.randint(1, 4))),
        candidate_locations=tuple(cands),
        actor_count=rng.randint(1, len(cands)),
        batch_heavy=rng.randint(1, 12),
        batch_light=rng.randint(1, 12),
        margin=FractionOfBase(Fraction(rng.randint(0, 4), 4)),
    )


def plan_for(scn):
    return build_supply_plan(
        scn,
        shortest_path_matrix(scn.network, CostClass.ACTOR_HEAVY),
        shortest_path_matrix(scn.network, CostClass.ACTOR_LIGHT),
    )
