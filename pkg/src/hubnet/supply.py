"""Cheapest production-hub/storage chain and unit price per candidate location.

A unit delivered to location g through production hub d and storage k costs

    base = l_d + s_k + dist_heavy(d, k) / Q1 + dist_light(k, g) / Q2

and sells for base plus the margin. Everything stays an exact ``Fraction``
until the final price is rounded (half-up) to four digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import NoFeasibleChain, UnreachableLeg
from .money import Money
from .network import UNREACHABLE, Cost, CostMatrix
from .scenario import MarginPolicy, Scenario


def amortized_leg_cost(path_weight: Cost, batch: int) -> Fraction:
    if path_weight is UNREACHABLE:
        raise UnreachableLeg("leg has no path")
    if batch < 1:
        raise ValueError(f"batch size must be positive, got {batch}")
    return path_weight.as_fraction() / batch


def _price_parts(
    l: Money, s: Money, c1: Cost, c2: Cost, q1: int, q2: int, margin: MarginPolicy, g: int
) -> tuple[Fraction, Fraction]:
    base = (
        l.as_fraction()
        + s.as_fraction()
        + amortized_leg_cost(c1, q1)
        + amortized_leg_cost(c2, q2)
    )
    return base, margin.margin_for(base, g)


def unit_price(
    l: Money, s: Money, c1: Cost, c2: Cost, q1: int, q2: int, margin: MarginPolicy, g: int
) -> Money:
    base, w = _price_parts(l, s, c1, c2, q1, q2, margin, g)
    return Money.from_fraction(base + w)


@dataclass(frozen=True)
class ChainQuote:
    """One (production hub, storage) option for one location.

    ``base``/``margin`` are None when a leg is unreachable.
    """

    production_vertex: int
    storage_vertex: int
    purchase: Money
    storage_fee: Money
    c1: Cost
    c2: Cost
    heavy_leg: Fraction | None
    light_leg: Fraction | None
    base: Fraction | None
    margin: Fraction | None

    @property
    def feasible(self) -> bool:
        return self.base is not None

    @property
    def transport(self) -> Fraction | None:
        if not self.feasible:
            return None
        return self.heavy_leg + self.light_leg

    @property
    def price(self) -> Fraction | None:
        if not self.feasible:
            return None
        return self.base + self.margin

    @property
    def unit_price(self) -> Money | None:
        return None if self.price is None else Money.from_fraction(self.price)


@dataclass(frozen=True)
class LocationSupply:
    location: int
    options: tuple[ChainQuote, ...]
    best: ChainQuote

    @property
    def production_vertex(self) -> int:
        return self.best.production_vertex

    @property
    def storage_vertex(self) -> int:
        return self.best.storage_vertex

    @property
    def c1(self) -> Money:
        return self.best.c1

    @property
    def c2(self) -> Money:
        return self.best.c2

    @property
    def unit_price(self) -> Money:
        return Money.from_fraction(self.best.price)

    @property
    def base_cost(self) -> Money:
        return Money.from_fraction(self.best.base)

    @property
    def margin(self) -> Money:
        # defined by difference so base_cost + margin == unit_price holds exactly
        return self.unit_price - self.base_cost


@dataclass(frozen=True)
class SupplyPlan:
    locations: tuple[int, ...]
    entries: Mapping[int, LocationSupply]

    def __getitem__(self, location: int) -> LocationSupply:
        return self.entries[location]

    def price(self, location: int) -> Money:
        return self.entries[location].unit_price

    def prices(self) -> dict[int, Money]:
        return {g: self.price(g) for g in self.locations}


def quote_chain(
    scn: Scenario, hub_idx: int, store_idx: int, g: int,
    apsp_heavy: CostMatrix, apsp_light: CostMatrix,
) -> ChainQuote:
    hub = scn.production_hubs[hub_idx]
    store = scn.storages[store_idx]
    c1 = apsp_heavy[hub.vertex, store.vertex]
    c2 = apsp_light[store.vertex, g]
    if c1 is UNREACHABLE or c2 is UNREACHABLE:
        return ChainQuote(hub.vertex, store.vertex, hub.unit_price, store.unit_fee, c1, c2, None, None, None, None)
    base, w = _price_parts(
        hub.unit_price, store.unit_fee, c1, c2, scn.batch_heavy, scn.batch_light, scn.margin, g
    )
    return ChainQuote(
        hub.vertex, store.vertex, hub.unit_price, store.unit_fee, c1, c2,
        amortized_leg_cost(c1, scn.batch_heavy), amortized_leg_cost(c2, scn.batch_light),
        base, w,
    )


def build_supply_plan(scn: Scenario, apsp_heavy: CostMatrix, apsp_light: CostMatrix) -> SupplyPlan:
    """Pick, for every candidate location, the chain with the lowest exact price.

    Equal prices keep the earliest (production hub, storage) pair in list order.
    """
    entries: dict[int, LocationSupply] = {}
    for g in scn.candidate_locations:
        options = tuple(
            quote_chain(scn, d, k, g, apsp_heavy, apsp_light)
            for d in range(len(scn.production_hubs))
            for k in range(len(scn.storages))
        )
        best = None
        for opt in options:
            if opt.feasible and (best is None or opt.price < best.price):
                best = opt
        if best is None:
            raise NoFeasibleChain(g)
        entries[g] = LocationSupply(g, options, best)
    return SupplyPlan(tuple(scn.candidate_locations), entries)
