"""Shared fixtures: an independent brute-force cutset oracle, the worked
unmixedness counterexample, and the small-graph corpus."""

from __future__ import annotations

import random
from functools import lru_cache

import pytest

import bei


# ---------------------------------------------------------------------------
# independent naive oracle (dict adjacency + BFS; no bitmask code shared with
# the library path it checks)


def naive_ncomp(g: bei.Graph, removed: set[int]) -> int:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    seen = set(removed)
    count = 0
    for s in range(g.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def naive_cutsets(g: bei.Graph) -> list[int]:
    """All cutsets by the definition, scanning every one of the 2^n subsets."""
    n = g.n
    comp = {}
    for bits in range(1 << n):
        comp[bits] = naive_ncomp(g, {v for v in range(n) if bits >> v & 1})
    out = []
    for bits in range(1 << n):
        if bits == 0 or all(
            comp[bits & ~(1 << v)] < comp[bits] for v in range(n) if bits >> v & 1
        ):
            out.append(bits)
    return sorted(out)


def naive_is_unmixed(g: bei.Graph) -> bool:
    w0 = naive_ncomp(g, set())
    for bits in naive_cutsets(g):
        removed = {v for v in range(g.n) if bits >> v & 1}
        if naive_ncomp(g, removed) != len(removed) + w0:
            return False
    return True


def naive_is_accessible_system(g: bei.Graph) -> bool:
    family = set(naive_cutsets(g))
    for bits in family:
        if bits and not any(
            (bits & ~(1 << v)) in family for v in range(g.n) if bits >> v & 1
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# the worked counterexample: a 4-cycle u,v,w,x with leaves at u and x is
# unmixed, a single edge is unmixed, but attaching edge copies at v and w
# breaks unmixedness (cutset {u,w} leaves 4 components, not 3)

SQUARE_LEAVES_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (3, 5)]
SQUARE_LEAVES_LABELS = ["u", "v", "w", "x", "pu", "px"]


@pytest.fixture
def square_leaves_base() -> bei.Graph:
    return bei.Graph(6, SQUARE_LEAVES_EDGES, labels=SQUARE_LEAVES_LABELS)


@pytest.fixture
def square_leaves_spec(square_leaves_base) -> bei.CoronaSpec:
    return bei.CoronaSpec(square_leaves_base, bei.vset([1, 2]), bei.complete_graph(2))


@pytest.fixture
def square_leaves_product(square_leaves_spec) -> bei.Graph:
    return bei.l_corona(square_leaves_spec)[0]


# ---------------------------------------------------------------------------
# corpus helpers


@lru_cache(maxsize=None)
def connected_atlas(max_n: int) -> tuple[bei.Graph, ...]:
    """All connected graphs on 1..max_n vertices (max_n <= 7), one per
    isomorphism class."""
    import networkx as nx

    assert max_n <= 7
    out = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(nxg):
            continue
        out.append(bei.Graph(n, list(nxg.edges())))
    return tuple(out)


def random_connected_graph(rng: random.Random, n: int) -> bei.Graph:
    """Random spanning tree plus a random sprinkling of extra edges."""
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                edges.append((i, j))
    return bei.Graph(n, sorted(set(edges)))
