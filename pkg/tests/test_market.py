import random
from dataclasses import replace
from math import comb

import pytest

from conftest import M
from generators import plan_for, random_scenario
from hubnet.market import Profile, build_payoff_matrix, buyer_choice, enumerate_profiles
from hubnet.money import ZERO
from hubnet.network import CostClass, shortest_path_matrix
from hubnet.scenario import Buyer


class TestProfiles:
    def test_example_order(self):
        got = [p.hubs for p in enumerate_profiles([23, 9, 19, 17], 2)]
        assert got == [(9, 17), (9, 19), (9, 23), (17, 19), (17, 23), (19, 23)]

    def test_all_at_once(self):
        assert enumerate_profiles([3, 1, 2], 3) == [Profile((1, 2, 3))]

    def test_count(self):
        assert len(enumerate_profiles(range(5), 2)) == comb(5, 2) == 10

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Profile((17, 9))

    def test_str(self):
        assert str(Profile((9, 17))) == "(9,17)"


class TestBuyerChoice:
    def test_example_rows(self, example, example_solution):
        dist = example_solution.apsp[CostClass.BUYER]
        plan = example_solution.plan
        a = buyer_choice(Buyer(4, 5), Profile((9, 17)), plan, dist)
        assert (a.chosen_hub, a.total, a.owner) == (9, M("78.75"), 0)
        alt = buyer_choice(Buyer(4, 5), Profile((17,)), plan, dist)
        assert alt.total == M("81.25")
        b = buyer_choice(Buyer(20, 5), Profile((17, 19)), plan, dist)
        assert (b.chosen_hub, b.total) == (19, M("65.75"))
        assert b.purchase_cost == M("60.75") and b.travel_cost == M(5)

    def test_singleton_profile(self, example_solution):
        a = buyer_choice(Buyer(4, 5), Profile((23,)), example_solution.plan, example_solution.apsp[CostClass.BUYER])
        assert a.chosen_hub == 23
        assert a.total == M("107.75")

    def test_tie_goes_to_smallest_hub(self, example_solution):
        dist = example_solution.apsp[CostClass.BUYER]
        # x4 -> x9 is 9 and x4 -> x19 is 15; equal prices shifted by 6/5 make the totals tie
        prices = {9: M("1.2"), 19: M(0)}
        a = buyer_choice(Buyer(4, 5), Profile((9, 19)), prices, dist)
        assert a.total == M(15)
        assert a.chosen_hub == 9


class TestPayoffMatrix:
    def test_example_matrix(self, example_solution):
        g = example_solution.payoff
        assert [str(p) for p in g.profiles] == ["(9,17)", "(9,19)", "(9,23)", "(17,19)", "(17,23)", "(19,23)"]
        assert g.values == (
            tuple(M(x) for x in ("69.75", 0, 279, "59.25", 237, 243)),
            tuple(M(x) for x in ("177.75", 243, 0, "182.25", 0, 0)),
        )
        assert g.column(g.index((9, 23))) == (M(279), M(0))

    def test_no_buyers(self, example):
        scn = replace(example, buyers=())
        plan = plan_for(scn)
        g = build_payoff_matrix(scn, plan, shortest_path_matrix(scn.network, CostClass.BUYER))
        assert all(v == ZERO for row in g.values for v in row)


@pytest.mark.parametrize("seed", range(30))
def test_conservation_and_optimality(seed):
    scn = random_scenario(random.Random(seed))
    plan = plan_for(scn)
    dist = shortest_path_matrix(scn.network, CostClass.BUYER)
    g = build_payoff_matrix(scn, plan, dist)
    cap = sum((b.demand * max(plan.prices().values()) for b in scn.buyers), ZERO)
    for q, profile in enumerate(g.profiles):
        assigned = g.assignments[q]
        assert [a.buyer_vertex for a in assigned] == [b.vertex for b in scn.buyers]
        spent = sum((plan.price(a.chosen_hub) * a.demand for a in assigned), ZERO)
        assert sum(g.column(q), ZERO) == spent
        for a in assigned:
            totals = {h: plan.price(h) * a.demand + dist[a.buyer_vertex, h] for h in profile.hubs}
            low = min(totals.values())
            assert a.total == low
            assert a.chosen_hub == min(h for h, t in totals.items() if t == low)
            assert profile.hubs[a.owner] == a.chosen_hub
        assert all(ZERO <= v <= cap for v in g.column(q))
