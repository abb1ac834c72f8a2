"""Seeded random instance generators shared by the test suite and the
benchmark driver.

Trees are random recursive trees; flowgraphs are a random DFS skeleton plus
extra arcs with a controlled back/cross mix; weighted graphs mix a float
weight pool with small integers so ties get exercised.
"""

from __future__ import annotations

import random

from .graphio import Digraph


def random_recursive_tree(n, rng):
    """Tree on 1..n where each vertex attaches to a uniform earlier vertex."""
    arcs = [(rng.randrange(1, v), v, None) for v in range(2, n + 1)]
    return Digraph(n=n, arcs=tuple(arcs), kind="tree", root=None)


def random_flowgraph(n, m, rng, weights=False):
    """Flowgraph with a random spanning skeleton and m - (n-1) extra arcs."""
    if m < n - 1:
        raise ValueError("need m >= n - 1")
    arcs = [[rng.randrange(1, v), v] for v in range(2, n + 1)]
    for _ in range(m - (n - 1)):
        u = rng.randrange(1, n + 1)
        v = rng.randrange(1, n + 1)
        arcs.append([u, v])
    out = []
    for a in arcs:
        w = round(rng.random(), 6) if weights else None
        out.append((a[0], a[1], w))
    return Digraph(n=n, arcs=tuple(out), kind="flow", root=1)


def random_weighted_graph(n, m, rng, int_weights=False):
    """Connected undirected graph: random spanning tree plus extra edges."""
    if m < n - 1:
        raise ValueError("need m >= n - 1")
    edges = [[rng.randrange(1, v), v] for v in range(2, n + 1)]
    for _ in range(m - (n - 1)):
        u = rng.randrange(1, n + 1)
        v = rng.randrange(1, n + 1)
        edges.append([u, v])
    out = []
    for e in edges:
        if int_weights:
            w = float(rng.randrange(1, max(3, m // 2)))
        else:
            w = round(rng.random(), 6)
        out.append((e[0], e[1], w))
    return Digraph(n=n, arcs=tuple(out), kind="graph", root=None)


def random_tree_with_order(n, rng):
    """(tree, edge list in random weight order) for Kruskal inputs."""
    tree = random_recursive_tree(n, rng)
    order = [(u, v) for u, v, _w in tree.arcs]
    rng.shuffle(order)
    return tree, order


def make_rng(seed):
    return random.Random(seed)
