"""Undirected transport network and dense all-pairs shortest paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import Issue, IssueCode, NegativeCycle, ValidationError
from .money import Money


class _Unreachable:
    """Absorbing "no path" value: x + UNREACHABLE is UNREACHABLE, and it
    never compares below a finite cost."""

    _instance: _Unreachable | None = None

    def __new__(cls) -> _Unreachable:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Unreachable, ())

    def __add__(self, other: object) -> _Unreachable:
        if isinstance(other, (Money, _Unreachable)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True


UNREACHABLE = _Unreachable()
Cost = Union[Money, _Unreachable]


class CostClass(Enum):
    ACTOR_HEAVY = "heavy"
    ACTOR_LIGHT = "light"
    BUYER = "buyer"


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    heavy: Money
    light: Money
    buyer: Money

    def cost(self, cost_class: CostClass) -> Money:
        if cost_class is CostClass.ACTOR_HEAVY:
            return self.heavy
        if cost_class is CostClass.ACTOR_LIGHT:
            return self.light
        return self.buyer

    @property
    def key(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


def network_issues(vertex_count: int, edges: Sequence[Edge]) -> list[Issue]:
    issues: list[Issue] = []
    if vertex_count < 1:
        issues.append(Issue(IssueCode.INVALID_VALUE, f"vertex count must be positive, got {vertex_count}"))
        return issues
    seen: set[frozenset[int]] = set()
    for idx, e in enumerate(edges):
        where = f"edge #{idx} ({e.u},{e.v})"
        bad_ids = [x for x in (e.u, e.v) if not 0 <= x < vertex_count]
        if bad_ids:
            issues.append(Issue(IssueCode.UNKNOWN_VERTEX, f"{where}: vertex {bad_ids[0]} not in [0, {vertex_count})"))
        if e.u == e.v:
            issues.append(Issue(IssueCode.SELF_LOOP, f"{where}: self-loop"))
        elif e.key in seen:
            issues.append(Issue(IssueCode.DUPLICATE_EDGE, f"{where}: pair already listed"))
        seen.add(e.key)
        for name in ("heavy", "light", "buyer"):
            if getattr(e, name).units < 0:
                issues.append(Issue(IssueCode.NEGATIVE_COST, f"{where}: {name} cost {getattr(e, name)} < 0"))
        if e.heavy < e.light:
            issues.append(Issue(IssueCode.HEAVY_BELOW_LIGHT, f"{where}: heavy {e.heavy} < light {e.light}"))
    if not issues:
        n_components = _component_count(vertex_count, edges)
        if n_components > 1:
            issues.append(
                Issue(IssueCode.DISCONNECTED_NETWORK, f"network has {n_components} connected components")
            )
    return issues


def _component_count(vertex_count: int, edges: Iterable[Edge]) -> int:
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for e in edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    seen = [False] * vertex_count
    count = 0
    for start in range(vertex_count):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return count


@dataclass(frozen=True)
class Network:
    """Validated on construction. Use :meth:`unchecked` only to feed
    deliberately invalid data (e.g. negative weights) to the algorithms."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        issues = network_issues(self.vertex_count, self.edges)
        if issues:
            raise ValidationError(issues)

    @classmethod
    def unchecked(cls, vertex_count: int, edges: Iterable[Edge]) -> Network:
        net = object.__new__(cls)
        object.__setattr__(net, "vertex_count", vertex_count)
        object.__setattr__(net, "edges", tuple(edges))
        return net


class CostMatrix:
    """Dense n x n matrix of money values with an UNREACHABLE sentinel.

    Stored as int64 minor units plus a reachability mask; both arrays are
    read-only.
    """

    __slots__ = ("_units", "_reach")

    def __init__(self, units: np.ndarray, reach: np.ndarray):
        units = np.array(units, dtype=np.int64)
        reach = np.array(reach, dtype=bool)
        if units.ndim != 2 or units.shape[0] != units.shape[1] or units.shape != reach.shape:
            raise ValueError(f"cost matrix must be square, got {units.shape} / {reach.shape}")
        units[~reach] = 0
        units.flags.writeable = False
        reach.flags.writeable = False
        self._units = units
        self._reach = reach

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Cost]]) -> CostMatrix:
        n = len(rows)
        units = np.zeros((n, n), dtype=np.int64)
        reach = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("cost matrix must be square")
            for j, value in enumerate(row):
                if value is not UNREACHABLE:
                    units[i, j] = value.units
                    reach[i, j] = True
        return cls(units, reach)

    @property
    def n(self) -> int:
        return self._units.shape[0]

    @property
    def units(self) -> np.ndarray:
        return self._units

    @property
    def reachable(self) -> np.ndarray:
        return self._reach

    def __getitem__(self, ij: tuple[int, int]) -> Cost:
        i, j = ij
        if not self._reach[i, j]:
            return UNREACHABLE
        return Money(int(self._units[i, j]))

    def rows(self) -> list[list[Cost]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def select(self, sources: Sequence[int], targets: Sequence[int]) -> list[list[Cost]]:
        return [[self[i, j] for j in targets] for i in sources]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CostMatrix):
            return NotImplemented
        return (
            self._units.shape == other._units.shape
            and bool(np.array_equal(self._reach, other._reach))
            and bool(np.array_equal(self._units, other._units))
        )

    def __hash__(self) -> int:
        return hash((self._units.tobytes(), self._reach.tobytes()))

    def __repr__(self) -> str:
        return f"CostMatrix(n={self.n})"


def build_weight_matrix(net: Network, cost_class: CostClass) -> CostMatrix:
    n = net.vertex_count
    units = np.zeros((n, n), dtype=np.int64)
    reach = np.eye(n, dtype=bool)
    for e in net.edges:
        w = e.cost(cost_class).units
        for a, b in ((e.u, e.v), (e.v, e.u)):
            # keep the cheaper weight if an unchecked network repeats a pair
            if not reach[a, b] or w < units[a, b]:
                units[a, b] = w
                reach[a, b] = True
    np.fill_diagonal(units, 0)
    return CostMatrix(units, reach)


def all_pairs_shortest_paths(d0: CostMatrix) -> CostMatrix:
    """Floyd-Warshall over ``d0``; the input is left untouched.

    Before relaxing through vertex k, every i with d[i,k] + d[k,i] < 0 sits
    on a negative cycle and triggers :class:`NegativeCycle`.
    """
    n = d0.n
    if not (d0.reachable.diagonal().all() and not d0.units.diagonal().any()):
        raise ValueError("input matrix must have a zero diagonal")
    dist = d0.units.copy()
    reach = d0.reachable.copy()
    off_diag = ~np.eye(n, dtype=bool)
    for k in range(n):
        col_r, row_r = reach[:, k], reach[k, :]
        col_d, row_d = dist[:, k], dist[k, :]
        loop = col_r & row_r & (col_d + row_d < 0)
        if loop.any():
            raise NegativeCycle(vertex=int(np.flatnonzero(loop)[0]), via=k)
        via = np.outer(col_r, row_r)
        cand = col_d[:, None] + row_d[None, :]
        better = via & off_diag & (~reach | (cand < dist))
        dist = np.where(better, cand, dist)
        reach = reach | better
    return CostMatrix(dist, reach)


def shortest_path_matrix(net: Network, cost_class: CostClass) -> CostMatrix:
    return all_pairs_shortest_paths(build_weight_matrix(net, cost_class))
