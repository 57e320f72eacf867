"""Problem instance: network, economic roles, batches and margin policy.

The on-disk form is a single JSON document::

    {"vertices": 30,
     "edges": [{"u": 0, "v": 6, "heavy": 6, "light": 4, "buyer": 7}, ...],
     "production_hubs": [{"vertex": 0, "unit_price": 4}, ...],
     "storages": [{"vertex": 8, "unit_fee": 1.5}, ...],
     "buyers": [{"vertex": 4, "demand": 5}, ...],
     "candidate_locations": [9, 17, 19, 23],
     "actor_count": 2, "batch_heavy": 10, "batch_light": 5,
     "margin": {"fraction_of_base": 0.5}}

Every number carries at most four fractional digits. ``margin`` may instead
be ``{"per_location": {"9": 1.25, ...}}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Union

from .errors import Issue, IssueCode, MissingMargin, ValidationError
from .money import Money, MoneyFormatError
from .network import Edge, Network, network_issues


class ScenarioFileError(Exception):
    """The file could not be read or is not a JSON document."""


@dataclass(frozen=True)
class ProductionHub:
    vertex: int
    unit_price: Money


@dataclass(frozen=True)
class Storage:
    vertex: int
    unit_fee: Money


@dataclass(frozen=True)
class Buyer:
    vertex: int
    demand: int


@dataclass(frozen=True)
class FractionOfBase:
    mu: Fraction

    def margin_for(self, base: Fraction, location: int) -> Fraction:
        return self.mu * base


@dataclass(frozen=True)
class PerLocation:
    w: Mapping[int, Money] = field(default_factory=dict)

    def margin_for(self, base: Fraction, location: int) -> Fraction:
        if location not in self.w:
            raise MissingMargin(location)
        return self.w[location].as_fraction()


MarginPolicy = Union[FractionOfBase, PerLocation]


@dataclass(frozen=True)
class Scenario:
    network: Network
    production_hubs: tuple[ProductionHub, ...]
    storages: tuple[Storage, ...]
    buyers: tuple[Buyer, ...]
    candidate_locations: tuple[int, ...]
    actor_count: int
    batch_heavy: int
    batch_light: int
    margin: MarginPolicy

    @property
    def vertex_count(self) -> int:
        return self.network.vertex_count


class _Collector:
    """Accumulates issues while pulling typed values out of raw JSON data."""

    def __init__(self) -> None:
        self.issues: list[Issue] = []

    def add(self, code: IssueCode, message: str) -> None:
        self.issues.append(Issue(code, message))

    def get(self, raw: Mapping[str, Any], key: str, where: str) -> Any:
        if not isinstance(raw, Mapping):
            self.add(IssueCode.INVALID_VALUE, f"{where}: expected an object")
            return None
        if key not in raw:
            self.add(IssueCode.MISSING_FIELD, f"{where}: missing '{key}'")
            return None
        return raw[key]

    def integer(self, value: Any, where: str, *, minimum: int | None = None) -> int | None:
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            self.add(IssueCode.INVALID_VALUE, f"{where}: expected an integer, got {value!r}")
            return None
        if minimum is not None and value < minimum:
            self.add(IssueCode.INVALID_VALUE, f"{where}: must be >= {minimum}, got {value}")
            return None
        return value

    def money(self, value: Any, where: str, *, allow_negative: bool = False) -> Money | None:
        if value is None:
            return None
        if isinstance(value, str) or isinstance(value, bool):
            self.add(IssueCode.INVALID_VALUE, f"{where}: expected a number, got {value!r}")
            return None
        try:
            m = Money.parse(value)
        except MoneyFormatError as exc:
            self.add(IssueCode.INVALID_VALUE, f"{where}: {exc}")
            return None
        if m.units < 0 and not allow_negative:
            self.add(IssueCode.NEGATIVE_COST, f"{where}: {m} < 0")
            return None
        return m

    def items(self, value: Any, where: str) -> list[Any]:
        if value is None:
            return []
        if not isinstance(value, list):
            self.add(IssueCode.INVALID_VALUE, f"{where}: expected a list")
            return []
        return value


def validate(raw: Mapping[str, Any]) -> Scenario:
    """Build a :class:`Scenario` from decoded JSON data.

    Raises :class:`ValidationError` listing every violation found.
    """
    c = _Collector()
    if not isinstance(raw, Mapping):
        raise ValidationError([Issue(IssueCode.INVALID_VALUE, "scenario must be a JSON object")])

    n = c.integer(c.get(raw, "vertices", "scenario"), "vertices", minimum=1)

    edges: list[Edge] = []
    edges_ok = True
    for idx, e in enumerate(c.items(c.get(raw, "edges", "scenario"), "edges")):
        where = f"edges[{idx}]"
        before = len(c.issues)
        u = c.integer(c.get(e, "u", where), f"{where}.u")
        v = c.integer(c.get(e, "v", where), f"{where}.v")
        # sign is checked later by network_issues, which knows the edge context
        costs = [
            c.money(c.get(e, name, where), f"{where}.{name}", allow_negative=True)
            for name in ("heavy", "light", "buyer")
        ]
        if len(c.issues) == before:
            edges.append(Edge(u, v, *costs))
        else:
            edges_ok = False

    network: Network | None = None
    if n is not None and edges_ok:
        net_issues = network_issues(n, edges)
        c.issues.extend(net_issues)
        if not net_issues:
            network = Network(n, tuple(edges))

    def check_vertex(vertex: int | None, where: str) -> None:
        if vertex is not None and n is not None and not 0 <= vertex < n:
            c.add(IssueCode.UNKNOWN_VERTEX, f"{where}: vertex {vertex} not in [0, {n})")

    def role(key: str, amount_key: str, parse_amount) -> list[tuple[int, Any]]:
        entries = c.items(c.get(raw, key, "scenario"), key)
        if key in raw and not entries and isinstance(raw[key], list):
            c.add(IssueCode.EMPTY_ROLE, f"{key}: at least one entry required")
        out = []
        seen: set[int] = set()
        for idx, item in enumerate(entries):
            where = f"{key}[{idx}]"
            vertex = c.integer(c.get(item, "vertex", where), f"{where}.vertex")
            amount = parse_amount(c.get(item, amount_key, where), f"{where}.{amount_key}")
            check_vertex(vertex, where)
            if vertex is not None:
                if vertex in seen:
                    c.add(IssueCode.DUPLICATE_VERTEX, f"{where}: vertex {vertex} listed twice")
                seen.add(vertex)
            out.append((vertex, amount))
        return out

    hubs = role("production_hubs", "unit_price", c.money)
    stores = role("storages", "unit_fee", c.money)
    buyers = role("buyers", "demand", lambda value, where: c.integer(value, where, minimum=1))

    candidates: list[int] = []
    raw_candidates = c.items(c.get(raw, "candidate_locations", "scenario"), "candidate_locations")
    for idx, g in enumerate(raw_candidates):
        where = f"candidate_locations[{idx}]"
        vertex = c.integer(g, where)
        check_vertex(vertex, where)
        if vertex is None:
            continue
        if vertex in candidates:
            c.add(IssueCode.DUPLICATE_VERTEX, f"{where}: vertex {vertex} listed twice")
            continue
        candidates.append(vertex)

    m = c.integer(c.get(raw, "actor_count", "scenario"), "actor_count", minimum=1)
    q1 = c.integer(c.get(raw, "batch_heavy", "scenario"), "batch_heavy", minimum=1)
    q2 = c.integer(c.get(raw, "batch_light", "scenario"), "batch_light", minimum=1)
    if m is not None and len(candidates) < m:
        c.add(
            IssueCode.TOO_FEW_CANDIDATES,
            f"{len(candidates)} distinct candidate locations for {m} actors",
        )

    margin = _parse_margin(c, c.get(raw, "margin", "scenario"), candidates)

    if c.issues:
        raise ValidationError(c.issues)
    assert network is not None and margin is not None
    return Scenario(
        network=network,
        production_hubs=tuple(ProductionHub(v, p) for v, p in hubs),
        storages=tuple(Storage(v, f) for v, f in stores),
        buyers=tuple(Buyer(v, d) for v, d in buyers),
        candidate_locations=tuple(candidates),
        actor_count=m,
        batch_heavy=q1,
        batch_light=q2,
        margin=margin,
    )


def _parse_margin(c: _Collector, raw: Any, candidates: list[int]) -> MarginPolicy | None:
    if raw is None:
        return None
    if not isinstance(raw, Mapping) or len(raw) != 1:
        c.add(IssueCode.INVALID_VALUE, "margin: expected exactly one of 'fraction_of_base', 'per_location'")
        return None
    if "fraction_of_base" in raw:
        mu = c.money(raw["fraction_of_base"], "margin.fraction_of_base")
        return None if mu is None else FractionOfBase(mu.as_fraction())
    if "per_location" in raw:
        table = raw["per_location"]
        if not isinstance(table, Mapping):
            c.add(IssueCode.INVALID_VALUE, "margin.per_location: expected an object")
            return None
        w: dict[int, Money] = {}
        for key, value in table.items():
            where = f"margin.per_location[{key!r}]"
            try:
                vertex = int(key)
            except (TypeError, ValueError):
                c.add(IssueCode.INVALID_VALUE, f"{where}: key is not a vertex id")
                continue
            if vertex not in candidates:
                c.add(IssueCode.UNKNOWN_VERTEX, f"{where}: vertex {vertex} is not a candidate location")
            amount = c.money(value, where)
            if amount is not None:
                w[vertex] = amount
        for g in candidates:
            if g not in w:
                c.add(IssueCode.MISSING_FIELD, f"margin.per_location: no entry for candidate {g}")
        return PerLocation(w)
    c.add(IssueCode.INVALID_VALUE, f"margin: unknown kind {next(iter(raw))!r}")
    return None


def to_dict(scn: Scenario) -> dict[str, Any]:
    if isinstance(scn.margin, FractionOfBase):
        margin: dict[str, Any] = {"fraction_of_base": Money.exact(scn.margin.mu).to_json()}
    else:
        margin = {"per_location": {str(g): w.to_json() for g, w in sorted(scn.margin.w.items())}}
    return {
        "vertices": scn.network.vertex_count,
        "edges": [
            {"u": e.u, "v": e.v, "heavy": e.heavy.to_json(), "light": e.light.to_json(), "buyer": e.buyer.to_json()}
            for e in scn.network.edges
        ],
        "production_hubs": [{"vertex": h.vertex, "unit_price": h.unit_price.to_json()} for h in scn.production_hubs],
        "storages": [{"vertex": s.vertex, "unit_fee": s.unit_fee.to_json()} for s in scn.storages],
        "buyers": [{"vertex": b.vertex, "demand": b.demand} for b in scn.buyers],
        "candidate_locations": list(scn.candidate_locations),
        "actor_count": scn.actor_count,
        "batch_heavy": scn.batch_heavy,
        "batch_light": scn.batch_light,
        "margin": margin,
    }


def dumps(scn: Scenario) -> str:
    return json.dumps(to_dict(scn), indent=2) + "\n"


def loads(text: str) -> Scenario:
    try:
        raw = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ScenarioFileError(f"invalid JSON: {exc}") from exc
    return validate(raw)


def load(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ScenarioFileError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def example_scenario_path() -> Path:
    """Path of the bundled 30-vertex example instance."""
    return Path(str(resources.files("hubnet").joinpath("data/hub30.json")))
