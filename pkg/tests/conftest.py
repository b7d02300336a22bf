"""Shared helpers for the test suite.

networkx and numpy.linalg serve as independent oracles here; nothing in the
package itself depends on them for results.
"""

import random

import pytest

from qspectral import Graph, from_edge_mask


def random_graph(rng: random.Random, n_max: int = 12, n_min: int = 1) -> Graph:
    n = rng.randint(n_min, n_max)
    if n == 1:
        return Graph(1)
    ne = n * (n - 1) // 2
    mask = rng.getrandbits(ne)
    return from_edge_mask(n, mask)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus G(n,p) noise: connected by construction."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        edges.add(tuple(sorted((order[i], order[rng.randrange(i)]))))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph(n, edges)


def random_connected_bipartite(rng: random.Random, n: int, p: float) -> Graph:
    """Random bipartition, spanning tree across it, plus cross-side noise."""
    assert n >= 2
    sides = [rng.randrange(2) for _ in range(n)]
    sides[0], sides[1] = 0, 1  # both sides nonempty
    left = [v for v in range(n) if sides[v] == 0]
    right = [v for v in range(n) if sides[v] == 1]
    edges = set()
    placed = [left[0], right[0]]
    edges.add(tuple(sorted((left[0], right[0]))))
    rest = [v for v in range(n) if v not in placed]
    rng.shuffle(rest)
    for v in rest:
        opts = right if sides[v] == 0 else left
        anchored = [u for u in opts if u in placed]
        edges.add(tuple(sorted((v, rng.choice(anchored)))))
        placed.append(v)
    for u in left:
        for v in right:
            if rng.random() < p:
                edges.add(tuple(sorted((u, v))))
    return Graph(n, edges)


def to_networkx(g: Graph):
    nx = pytest.importorskip("networkx")
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G
