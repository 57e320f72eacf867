"""Hub placement profiles, buyer hub choice and the actors x profiles payoff matrix."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .money import ZERO, Money
from .network import UNREACHABLE, CostMatrix
from .scenario import Buyer, Scenario
from .supply import SupplyPlan


@dataclass(frozen=True, order=True)
class Profile:
    """Hub vertices in ascending order; actor k owns ``hubs[k]``."""

    hubs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.hubs, self.hubs[1:])):
            raise ValueError(f"profile hubs must be strictly ascending: {self.hubs}")

    def owner(self, hub: int) -> int:
        return self.hubs.index(hub)

    def __str__(self) -> str:
        return "(" + ",".join(str(h) for h in self.hubs) + ")"


def enumerate_profiles(candidates: Iterable[int], m: int) -> list[Profile]:
    return [Profile(c) for c in combinations(sorted(candidates), m)]


@dataclass(frozen=True)
class BuyerAssignment:
    buyer_vertex: int
    demand: int
    chosen_hub: int
    owner: int
    purchase_cost: Money
    travel_cost: Money

    @property
    def total(self) -> Money:
        return self.purchase_cost + self.travel_cost


def _price_lookup(prices: SupplyPlan | Mapping[int, Money], hub: int) -> Money:
    if isinstance(prices, SupplyPlan):
        return prices.price(hub)
    return prices[hub]


def buyer_choice(
    buyer: Buyer,
    profile: Profile,
    prices: SupplyPlan | Mapping[int, Money],
    apsp_buyer: CostMatrix,
) -> BuyerAssignment:
    """Hub minimizing demand * price + travel; ties go to the smallest hub id."""
    best: BuyerAssignment | None = None
    for k, hub in enumerate(profile.hubs):
        travel = apsp_buyer[buyer.vertex, hub]
        if travel is UNREACHABLE:
            continue
        option = BuyerAssignment(
            buyer.vertex, buyer.demand, hub, k, _price_lookup(prices, hub) * buyer.demand, travel
        )
        # hubs are ascending, so strict < keeps the smallest id on ties
        if best is None or option.total < best.total:
            best = option
    if best is None:
        raise ValueError(f"buyer at vertex {buyer.vertex} cannot reach any hub of {profile}")
    return best


@dataclass(frozen=True)
class PayoffMatrix:
    profiles: tuple[Profile, ...]
    values: tuple[tuple[Money, ...], ...]
    assignments: tuple[tuple[BuyerAssignment, ...], ...]

    @property
    def actor_count(self) -> int:
        return len(self.values)

    def column(self, q: int) -> tuple[Money, ...]:
        return tuple(row[q] for row in self.values)

    def index(self, profile: Profile | Sequence[int]) -> int:
        if not isinstance(profile, Profile):
            profile = Profile(tuple(profile))
        return self.profiles.index(profile)


def build_payoff_matrix(scn: Scenario, plan: SupplyPlan, apsp_buyer: CostMatrix) -> PayoffMatrix:
    """Revenue of each actor in each profile: the goods payments of the buyers
    who pick that actor's hub. Buyer travel costs are not revenue."""
    profiles = enumerate_profiles(scn.candidate_locations, scn.actor_count)
    columns = []
    assignments = []
    for profile in profiles:
        revenue = [ZERO] * scn.actor_count
        chosen = tuple(buyer_choice(b, profile, plan, apsp_buyer) for b in scn.buyers)
        for a in chosen:
            revenue[a.owner] += a.purchase_cost
        columns.append(revenue)
        assignments.append(chosen)
    values = tuple(tuple(col[k] for col in columns) for k in range(scn.actor_count))
    return PayoffMatrix(tuple(profiles), values, tuple(assignments))
