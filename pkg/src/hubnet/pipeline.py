from __future__ import annotations

from dataclasses import dataclass

from .compromise import CompromiseResult, solve_compromise
from .market import BuyerAssignment, PayoffMatrix, Profile, build_payoff_matrix, buyer_choice
from .network import CostClass, CostMatrix, shortest_path_matrix
from .scenario import Scenario
from .supply import SupplyPlan, build_supply_plan


@dataclass(frozen=True)
class Solution:
    scenario: Scenario
    apsp: dict[CostClass, CostMatrix]
    plan: SupplyPlan
    # buyers x candidate locations, each as if that location were the only hub
    buyer_costs: tuple[tuple[BuyerAssignment, ...], ...]
    payoff: PayoffMatrix
    compromise: CompromiseResult

    @property
    def selected_profile(self) -> Profile:
        return self.payoff.profiles[self.compromise.choice]


def solve(scn: Scenario) -> Solution:
    apsp = {cls: shortest_path_matrix(scn.network, cls) for cls in CostClass}
    plan = build_supply_plan(scn, apsp[CostClass.ACTOR_HEAVY], apsp[CostClass.ACTOR_LIGHT])
    buyer_apsp = apsp[CostClass.BUYER]
    buyer_costs = tuple(
        tuple(buyer_choice(b, Profile((g,)), plan, buyer_apsp) for g in scn.candidate_locations)
        for b in scn.buyers
    )
    payoff = build_payoff_matrix(scn, plan, buyer_apsp)
    return Solution(scn, apsp, plan, buyer_costs, payoff, solve_compromise(payoff))
