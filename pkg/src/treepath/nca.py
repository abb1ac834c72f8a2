"""Offline nearest common ancestors and the Cartesian-tree RMQ reduction.

``nca_ahu`` is the postorder DSU algorithm; ``nca_linear`` splits queries
at a microtree partition, answering same-microtree queries batched through
topological graph computations and the rest with the AHU pass.  Range
minima are answered offline by building the min Cartesian tree of the value
sequence and batching the ranges as NCA queries on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsu import DsuForest
from .graphio import tree_from_parents
from .partition import default_g, fringe_core
from . import topobatch

TREE_ARC = 1
QUERY_ARC = 2


class NcaQuerySet:
    """Query pairs plus the per-vertex buckets P(v) the AHU pass consumes.

    Every query lands in two buckets (one if v == w).
    """

    def __init__(self, n, pairs):
        self.pairs = list(pairs)
        self.bucket = [[] for _ in range(n + 1)]
        for i, (v, w) in enumerate(self.pairs):
            if not (1 <= v <= n and 1 <= w <= n):
                raise ValueError("query %d endpoint out of range" % i)
            self.bucket[v].append((w, i))
            if w != v:
                self.bucket[w].append((v, i))


def nca_ahu(t, pairs, dsu=None):
    """Aho-Hopcroft-Ullman offline NCA: one postorder sweep uniting each
    visited vertex into its parent; a pair is answered at its later-visited
    endpoint as find(other).  Self queries are answered directly without
    entering the DSU pass."""
    q = pairs if isinstance(pairs, NcaQuerySet) else NcaQuerySet(t.n, pairs)
    ans = [0] * len(q.pairs)
    if dsu is None:
        dsu = DsuForest(t.n, "by-rank")
    visited = [False] * (t.n + 1)
    bucket = q.bucket
    find = dsu.find
    for i, (v, w) in enumerate(q.pairs):
        if v == w:
            ans[i] = v
    for v in t.postorder():
        for w, i in bucket[v]:
            if visited[w]:
                ans[i] = find(w)
        visited[v] = True
        p = t.parent[v]
        if p != 0:
            dsu.unite(p, v)
    return ans


def _micro_nca_solver(inst):
    """Per-query-arc NCA inside one microtree instance, by parent walks."""
    par = [0] * (inst.n + 1)
    depth = [0] * (inst.n + 1)
    for u, v, lab in inst.arcs:
        if lab == TREE_ARC:
            par[v] = u
    for v in range(2, inst.n + 1):
        depth[v] = depth[par[v]] + 1
    out = []
    for u, v, lab in inst.arcs:
        if lab != QUERY_ARC:
            continue
        a, b = u, v
        while depth[a] > depth[b]:
            a = par[a]
        while depth[b] > depth[a]:
            b = par[b]
        while a != b:
            a, b = par[a], par[b]
        out.append(a)
    return out


def nca_linear(t, pairs, g=None, counters=None):
    """Microtree offline NCA: answers equal ``nca_ahu`` on every input.

    Small queries (both endpoints in one microtree) go through one
    topological batch over the microtrees; big queries run through the AHU
    pass restricted to them.
    """
    q = pairs if isinstance(pairs, NcaQuerySet) else None
    pairs = q.pairs if q else list(pairs)
    if g is None:
        g = default_g(t.n)
    part = fringe_core(t, g)
    micro = part.micro
    ans = [0] * len(pairs)
    big = []
    big_idx = []
    per_micro = {}
    for i, (v, w) in enumerate(pairs):
        if v == w:
            ans[i] = v
        elif micro[v] != 0 and micro[v] == micro[w]:
            per_micro.setdefault(micro[v], []).append(i)
        else:
            big.append((v, w))
            big_idx.append(i)

    if per_micro:
        pre, order = t.pre, t.order
        instances = []
        for s in part.mroots:
            qidx = per_micro.get(s)
            if not qidx:
                continue
            base = pre[s] - 1
            size = t.size[s]
            arcs = []
            for k in range(base + 2, base + size + 1):
                v = order[k]
                arcs.append((pre[t.parent[v]] - base, k - base, TREE_ARC))
            for i in qidx:
                a, b = pairs[i]
                la, lb = pre[a] - base, pre[b] - base
                if la > lb:
                    la, lb = lb, la
                arcs.append((la, lb, QUERY_ARC))
            instances.append(topobatch.MicroInstance(
                n=size, vertex_labels=(0,) * size, arcs=tuple(arcs),
                payload=(base, qidx)))
        master = max(g, 5)  # arc labels use 2 bits: master covers 2^2 + 1

        def unmap(inst, sol):
            base, qidx = inst.payload
            for local, i in zip(sol, qidx):
                ans[i] = order[base + local]
            return sol

        topobatch.batch_solve(instances, master, _micro_nca_solver,
                              transfer=unmap, mode="run-per-duplicate",
                              counters=counters)

    if big:
        dsu = DsuForest(t.n, "by-rank")
        for i, a in zip(big_idx, nca_ahu(t, big, dsu=dsu)):
            ans[i] = a
        if counters is not None:
            counters["dsu_find_path_nodes"] = counters.get(
                "dsu_find_path_nodes", 0) + dsu.find_path_nodes
            counters["dsu_finds"] = counters.get("dsu_finds", 0) + dsu.finds
    return ans


@dataclass
class CartesianTree:
    """Min-heap Cartesian tree over a value sequence (positions 1-based);
    in-order traversal recovers the sequence, ties go to the leftmost
    minimum."""

    values: list
    parent: list
    left: list
    right: list
    root: int


def cartesian_tree(values):
    """Stack construction, strict pops so the leftmost of equal minima ends
    up highest."""
    if not values:
        raise ValueError("empty sequence")
    n = len(values)
    parent = [0] * (n + 1)
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    stack = []
    for i in range(1, n + 1):
        x = values[i - 1]
        last = 0
        while stack and values[stack[-1] - 1] > x:
            last = stack.pop()
        if last:
            parent[last] = i
            left[i] = last
        if stack:
            parent[i] = stack[-1]
            right[stack[-1]] = i
        stack.append(i)
    return CartesianTree(values=list(values), parent=parent, left=left,
                         right=right, root=stack[0])


def _ct_tree(ct):
    # tree_from_parents orders children by id, which for a Cartesian tree is
    # exactly (left, right): deterministic DFS.
    return tree_from_parents(ct.parent, ct.root)


def range_minima(ct, ranges, g=None):
    """Batched range-minimum queries: (position, value) of the leftmost
    minimum per inclusive range, answered as NCA queries on the Cartesian
    tree through ``nca_linear``."""
    n = len(ct.values)
    for i, j in ranges:
        if not (1 <= i <= j <= n):
            raise ValueError("bad range (%d, %d)" % (i, j))
    t = _ct_tree(ct)
    pos = nca_linear(t, list(ranges), g=g)
    return [(p, ct.values[p - 1]) for p in pos]


def range_min(ct, i, j):
    """Single range minimum; see ``range_minima``."""
    return range_minima(ct, [(i, j)])[0]
