"""Brute-force reference implementations used to check the library.

None of these import the code they check; inputs are plain ints/Fractions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product


def brute_force_apsp(n: int, edges: list[tuple[int, int, int]]) -> list[list[int | None]]:
    """Minimum weight over every simple path, by exhaustive DFS (None = no path)."""
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for u, v, w in edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    best: list[list[int | None]] = [[None] * n for _ in range(n)]

    def walk(src: int, node: int, acc: int, on_path: set[int]) -> None:
        cur = best[src][node]
        if cur is None or acc < cur:
            best[src][node] = acc
        for nxt, w in adj[node]:
            if nxt not in on_path:
                on_path.add(nxt)
                walk(src, nxt, acc + w, on_path)
                on_path.remove(nxt)

    for s in range(n):
        walk(s, s, 0, {s})
    return best


def random_connected_graph(
    rng: random.Random, n: int, *, max_weight: int = 20, extra_density: float | None = None
) -> list[tuple[int, int, int]]:
    """Random spanning tree plus a random subset of the remaining pairs."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {}
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges[frozenset((a, b))] = rng.randint(0, max_weight)
    p = rng.uniform(0.0, 0.5) if extra_density is None else extra_density
    for a in range(n):
        for b in range(a + 1, n):
            key = frozenset((a, b))
            if key not in edges and rng.random() < p:
                edges[key] = rng.randint(0, max_weight)
    return [(min(k), max(k), w) for k, w in edges.items()]


def lexicographic_minimax(beta: list[list]) -> tuple[list[int], int | str]:
    """Columns whose descending-sorted residual vector is lexicographically
    smallest, and the depth (0-based, from the largest residual) at which that
    vector first differs from every other column. 'tied' if it never does."""
    cols = [sorted(col, reverse=True) for col in zip(*beta)]
    best = min(cols)
    winners = [q for q, c in enumerate(cols) if c == best]
    if len(winners) > 1:
        return winners, "tied"
    for depth in range(len(best)):
        if sum(1 for c in cols if c[: depth + 1] == best[: depth + 1]) == 1:
            return winners, depth
    raise AssertionError("unreachable")


def all_matrices(rows: int, cols: int, values=(0, 1, 2, 3)):
    for flat in product(values, repeat=rows * cols):
        yield [list(flat[r * cols:(r + 1) * cols]) for r in range(rows)]


def brute_unit_prices(
    prod: list[tuple[int, Fraction]],
    stores: list[tuple[int, Fraction]],
    cands: list[int],
    heavy: list[list[int | None]],
    light: list[list[int | None]],
    q1: int,
    q2: int,
    mu: Fraction,
) -> dict[int, tuple[Fraction, int, int]]:
    """Exact (price, production vertex, storage vertex) minimizing price per location.

    ``heavy``/``light`` hold distances in whole currency units.
    """
    out = {}
    for g in cands:
        options = []
        for d, l in prod:
            for k, s in stores:
                c1, c2 = heavy[d][k], light[k][g]
                if c1 is None or c2 is None:
                    continue
                base = l + s + Fraction(c1, q1) + Fraction(c2, q2)
                options.append((base * (1 + mu), d, k))
        out[g] = min(options, key=lambda t: t[0])
    return out
