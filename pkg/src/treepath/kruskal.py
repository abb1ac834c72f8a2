"""Kruskal (component) trees of a tree whose edges arrive in weight order.

The baseline builds the binary merge tree with one find per edge; the
linear variant partitions all of the tree into microtrees (the full
bottom-up partition), precomputes the in-microtree find answers as a
batched topological computation over rank-compressed edge numbers, and only
falls back to live finds when the answer leaves the microtree.  Compressed
Kruskal trees merge equal-weight edge groups by contracting same-group
connected component nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsu import DsuForest
from .partition import full_partition
from . import topobatch

INF = float("inf")


@dataclass
class KruskalTree:
    """2n-1 nodes: leaves 1..n are tree vertices, internal node n+i is the
    component formed by the i-th edge; ``left`` holds the parent-side child,
    ``right`` the subtree side, ``num`` the creating edge index."""

    n: int
    left: list
    right: list
    num: list

    @property
    def root(self):
        return 2 * self.n - 1 if self.n > 1 else 1

    def internal_nodes(self):
        return range(self.n + 1, 2 * self.n)

    def leaves_under(self, x):
        """Leaf set of a node, by walking the merge tree."""
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            if y <= self.n:
                out.append(y)
            else:
                stack.append(self.left[y])
                stack.append(self.right[y])
        return out


def edge_children(t, edge_list):
    """Map (u, v) edges of a rooted tree to their child endpoints, keeping
    the given order; rejects non-edges and repeats."""
    seen = [False] * (t.n + 1)
    children = []
    for u, v in edge_list:
        if t.parent[v] == u:
            c = v
        elif t.parent[u] == v:
            c = u
        else:
            raise ValueError("(%d,%d) is not a tree edge" % (u, v))
        if seen[c]:
            raise ValueError("edge (%d,%d) repeated" % (u, v))
        seen[c] = True
        children.append(c)
    if len(children) != t.n - 1:
        raise ValueError("edge order is not a permutation of the tree edges")
    return children


def _build(t, child_order, fcache=None, dsu=None):
    n = t.n
    if dsu is None:
        dsu = DsuForest(n, "by-rank") if n > 1 else None
    komp = list(range(n + 1))
    left = [0] * (2 * n)
    right = [0] * (2 * n)
    num = [0] * (2 * n)
    find = dsu.find if dsu else None
    parent = t.parent
    for i, v in enumerate(child_order, start=1):
        if fcache is not None and fcache[v]:
            u = fcache[v]
        else:
            u = find(parent[v])
        x = n + i
        left[x] = komp[u]
        right[x] = komp[v]
        num[x] = i
        dsu.unite(u, v)
        komp[u] = x
    return KruskalTree(n=n, left=left, right=right, num=num)


def kruskal_tree(t, child_order, counters=None):
    """Baseline component tree: u = find(p(v)), new node over the components
    stored at u and v, then unite(u, v) keeping u designated."""
    if len(child_order) != t.n - 1:
        raise ValueError("edge order is not a permutation of the tree edges")
    dsu = DsuForest(t.n, "by-rank") if t.n > 1 else None
    kt = _build(t, child_order, dsu=dsu) if t.n > 1 else KruskalTree(1, [0, 0], [0, 0], [0, 0])
    if counters is not None and dsu is not None:
        counters["dsu_find_path_nodes"] = counters.get(
            "dsu_find_path_nodes", 0) + dsu.find_path_nodes
        counters["dsu_finds"] = counters.get("dsu_finds", 0) + dsu.finds
    return kt


def _micro_find_solver(inst):
    """Nearest local ancestor with a larger rank, per vertex; 0 when the
    answer leaves the microtree."""
    n = inst.n
    labels = inst.vertex_labels
    par = [0] * (n + 1)
    for u, v, _lab in inst.arcs:
        par[v] = u
    out = []
    for v in range(1, n + 1):
        u = par[v]
        while u and labels[u - 1] < labels[v - 1]:
            u = par[u]
        out.append(u)
    return out


def find_cache(t, child_order, g, counters=None):
    """Precomputed find answers f(v): the nearest ancestor of v inside
    micro(v) whose edge number exceeds num(v); 0 when that ancestor lies
    outside the microtree.  One topological batch over the full partition
    with per-microtree rank-compressed numbers."""
    n = t.n
    part = full_partition(t, g)
    num = [0] * (n + 1)
    for i, v in enumerate(child_order, start=1):
        num[v] = i
    num[t.root] = INF

    members = {}
    for k in range(1, n + 1):
        v = t.order[k]
        members.setdefault(part.micro[v], []).append(v)

    instances = []
    roots = sorted(members, key=lambda r: t.pre[r])
    for r in roots:
        verts = members[r]  # preorder within the microtree
        local = {v: i + 1 for i, v in enumerate(verts)}
        vals = sorted(num[v] for v in verts)
        rank = {val: i + 1 for i, val in enumerate(vals)}
        labels = tuple(rank[num[v]] for v in verts)
        arcs = tuple((local[t.parent[v]], local[v], 0)
                     for v in verts if v != r)
        instances.append(topobatch.MicroInstance(
            n=len(verts), vertex_labels=labels, arcs=arcs, payload=verts))

    fcache = [0] * (n + 1)

    def unmap(inst, sol):
        verts = inst.payload
        for v, lu in zip(verts, sol):
            if lu:
                fcache[v] = verts[lu - 1]
        return sol

    topobatch.batch_solve(instances, max(part.g, 3), _micro_find_solver,
                          transfer=unmap, mode="run-per-duplicate",
                          counters=counters)
    return fcache


def kruskal_tree_linear(t, child_order, g, counters=None):
    """Same tree as ``kruskal_tree``; finds inside microtrees of the full
    partition come from one topological batch over rank-compressed edge
    numbers."""
    n = t.n
    if len(child_order) != n - 1:
        raise ValueError("edge order is not a permutation of the tree edges")
    if n == 1:
        return KruskalTree(1, [0, 0], [0, 0], [0, 0])
    fcache = find_cache(t, child_order, g, counters=counters)
    dsu = DsuForest(n, "by-rank")
    kt = _build(t, child_order, fcache=fcache, dsu=dsu)
    if counters is not None:
        counters["dsu_find_path_nodes"] = counters.get(
            "dsu_find_path_nodes", 0) + dsu.find_path_nodes
        counters["dsu_finds"] = counters.get("dsu_finds", 0) + dsu.finds
    return kt


@dataclass
class CompressedKruskalTree:
    """Generalized Kruskal tree for equal-weight groups: internal nodes are
    the surviving (contracted) component nodes, labeled by group index."""

    n: int
    root: int
    children: dict    # surviving node -> child list (leaves and survivors)
    group: dict       # surviving internal node -> group index


def compressed_kruskal(t, child_order, group_sizes):
    """Build the Kruskal tree with ties broken by the given order, label
    internal nodes with their edge's group, and contract same-group
    parent-child nodes."""
    if sum(group_sizes) != t.n - 1 or any(s < 1 for s in group_sizes):
        raise ValueError("groups must partition the %d edges" % (t.n - 1))
    if t.n == 1:
        return CompressedKruskalTree(n=1, root=1, children={}, group={})
    kt = kruskal_tree(t, child_order)
    glabel = [0] * (2 * t.n)
    gi = 0
    consumed = 0
    for i in range(1, t.n):
        if consumed == group_sizes[gi]:
            gi += 1
            consumed = 0
        glabel[t.n + i] = gi
        consumed += 1
    parent = [0] * (2 * t.n)
    for x in kt.internal_nodes():
        parent[kt.left[x]] = x
        parent[kt.right[x]] = x
    rep = list(range(2 * t.n))
    for x in range(kt.root, t.n, -1):
        if parent[x] and glabel[parent[x]] == glabel[x]:
            rep[x] = rep[parent[x]]
    children = {}
    group = {}
    for x in kt.internal_nodes():
        if rep[x] == x:
            children[x] = []
            group[x] = glabel[x]
    for c in range(1, 2 * t.n):
        if c == kt.root or (c > t.n and rep[c] != c):
            continue  # the root has no parent; absorbed internals vanish
        children[rep[parent[c]]].append(c)
    return CompressedKruskalTree(n=t.n, root=rep[kt.root], children=children,
                                 group=group)
