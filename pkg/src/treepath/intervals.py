"""Flowgraph interval analysis: the head forest H and its compressed
variant H'.

The head h(v) is the largest proper ancestor u of v (in the DFS tree) such
that some path from v to u stays inside u's descendants; the heads form the
interval forest.  The algorithm works in preorder space: fringe heads come
from a batched topological computation per microtree, core heads from the
path-by-path backward search that keeps off-path contractions in a DSU
structure and on-path contractions on a stack, with reverse adjacency bags
spliced in constant time.
"""

from __future__ import annotations

from .dsu import DsuForest
from .graphio import dfs_preorder, tree_from_parents
from .nca import nca_ahu
from .partition import default_g, fringe_core, left_paths
from . import topobatch

TREE_ARC = 1
OTHER_ARC = 2


def preorder_tree(t):
    """The same rooted tree with vertices renamed to their preorder numbers."""
    n = t.n
    par = [0] * (n + 1)
    pre, parent, order = t.pre, t.parent, t.order
    for k in range(2, n + 1):
        par[k] = pre[parent[order[k]]]
    return tree_from_parents(par, 1)


def strong_components(n, adj):
    """Iterative Tarjan SCC over vertices 1..n; components are returned in
    reverse topological order of the condensation (sinks first)."""
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    comp_stack = []
    comps = []
    counter = 1
    for start in range(1, n + 1):
        if index[start]:
            continue
        work = [(start, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                comp_stack.append(v)
                on_stack[v] = True
            advanced = False
            while i < len(adj[v]):
                w = adj[v][i]
                i += 1
                if index[w] == 0:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = comp_stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                pv = work[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
    return comps


class _Bags:
    """Per-vertex bags of pending source vertices: O(1) add, O(1) splice,
    pop most-recently-added first."""

    __slots__ = ("head", "tail", "val", "nxt")

    def __init__(self, n):
        self.head = [0] * (n + 1)
        self.tail = [0] * (n + 1)
        self.val = [0]
        self.nxt = [0]

    def add(self, u, x):
        self.val.append(x)
        self.nxt.append(self.head[u])
        node = len(self.val) - 1
        if self.head[u] == 0:
            self.tail[u] = node
        self.head[u] = node

    def pop(self, u):
        node = self.head[u]
        x = self.val[node]
        self.head[u] = self.nxt[node]
        if self.head[u] == 0:
            self.tail[u] = 0
        return x

    def splice(self, u, w):
        """Append w's bag (as older entries) to u's, emptying w's."""
        if self.head[w] == 0:
            return
        if self.head[u] == 0:
            self.head[u] = self.head[w]
            self.tail[u] = self.tail[w]
        else:
            self.nxt[self.tail[u]] = self.head[w]
            self.tail[u] = self.tail[w]
        self.head[w] = 0
        self.tail[w] = 0


def _micro_heads_solver(inst):
    """Local heads within one microtree's induced subgraph, per definition:
    for each vertex the deepest proper ancestor u reachable through u's own
    descendants (local ids are preorder numbers)."""
    n = inst.n
    par = [0] * (n + 1)
    size = [1] * (n + 1)
    adj = [[] for _ in range(n + 1)]
    for u, v, lab in inst.arcs:
        if lab == TREE_ARC:
            par[v] = u
        adj[u].append(v)
    for v in range(n, 1, -1):
        size[par[v]] += size[v]
    heads = [0] * n
    for w in range(1, n + 1):
        anc = []
        a = par[w]
        while a:
            anc.append(a)
            a = par[a]
        found = 0
        for u in anc:  # deepest candidate first = largest head wins
            lo, hi = u, u + size[u] - 1
            seen = {w}
            stack = [w]
            while stack and not found:
                x = stack.pop()
                for y in adj[x]:
                    if y == u:
                        found = u
                        break
                    if lo <= y <= hi and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if found:
                break
        heads[w - 1] = found
    return heads


def _core_heads(pret, part, arcs_pre, h, dsu, counters=None):
    """Path-by-path backward search; assumes fringe contractions are already
    united into ``dsu`` and fills h for vertices whose head is in the core."""
    n = pret.n
    micro = part.micro
    path_id = part.path_id
    find = dsu.find
    bags = _Bags(n)
    bucket = [None] * (n + 1)
    big = []
    for x, y in arcs_pre:
        if micro[x] != 0 and micro[x] == micro[y]:
            bags.add(find(y), x)
        else:
            big.append((x, y))
    for (x, y), a in zip(big, nca_ahu(pret, big)):
        if bucket[a] is None:
            bucket[a] = [(x, y)]
        else:
            bucket[a].append((x, y))
    head_arr = bags.head
    for pid in range(len(part.paths) - 1, -1, -1):
        top, bottom, members = part.paths[pid]
        stack = []

        def resolve(y, u):
            """Current contraction target of y: find(y) off-path, else the
            largest stack vertex not above it, else u itself (deferred
            on-path unites are visible only through the stack)."""
            v = find(y)
            if path_id[v] != pid or v == u:
                return v
            lo, hi = 0, len(stack)
            while lo < hi:
                mid = (lo + hi) // 2
                if stack[mid] <= v:
                    hi = mid
                else:
                    lo = mid + 1
            return stack[lo] if lo < len(stack) else u

        for u in reversed(members):
            blist = bucket[u]
            if blist:
                for x, y in blist:
                    bags.add(resolve(y, u), x)
            while head_arr[u]:
                x = bags.pop(u)
                v = find(x)
                if v == u:
                    continue
                if path_id[v] != pid:
                    h[v] = u
                    bags.splice(u, v)
                    dsu.unite(u, v)
                elif stack and stack[-1] <= v:
                    # Popping must include v == top(S): the cycle through u
                    # closes exactly at the stack top in that case.
                    while stack and stack[-1] <= v:
                        w = stack.pop()
                        h[w] = u
                        bags.splice(u, w)
            stack.append(u)
        for u in reversed(members):
            if h[u]:
                dsu.unite(h[u], u)
    if counters is not None:
        counters["dsu_find_path_nodes"] = counters.get(
            "dsu_find_path_nodes", 0) + dsu.find_path_nodes
        counters["dsu_finds"] = counters.get("dsu_finds", 0) + dsu.finds


def _prepare(g, g_param):
    t, classes = dfs_preorder(g)
    pret = preorder_tree(t)
    gp = default_g(g.n) if g_param is None else g_param
    part = left_paths(pret, fringe_core(pret, gp))
    pre = t.pre
    arcs_pre = [(pre[u], pre[v]) for u, v, _w in g.arcs]
    tree_arc = [c == "tree" for c in classes]
    return t, pret, part, arcs_pre, tree_arc


def _micro_instances(pret, part, arcs_pre, tree_arc):
    per_micro = {s: [] for s in part.mroots}
    for i, (x, y) in enumerate(arcs_pre):
        if part.micro[x] != 0 and part.micro[x] == part.micro[y]:
            per_micro[part.micro[x]].append((x, y, TREE_ARC if tree_arc[i] else OTHER_ARC))
    instances = []
    for s in part.mroots:
        base = s - 1
        size = pret.size[s]
        arcs = tuple((x - base, y - base, lab) for x, y, lab in per_micro[s])
        instances.append(topobatch.MicroInstance(
            n=size, vertex_labels=(0,) * size, arcs=arcs, payload=base))
    return instances


def interval_forest(g, g_param=None, counters=None):
    """Heads h(v) for every vertex; 0 when v heads no cycle.

    Fringe-internal heads come from one topological batch over the
    microtrees; the rest from the core contraction.
    """
    t, pret, part, arcs_pre, tree_arc = _prepare(g, g_param)
    n = g.n
    h = [0] * (n + 1)
    instances = _micro_instances(pret, part, arcs_pre, tree_arc)
    if instances:
        master = max(part.g, 5)
        sols = topobatch.batch_solve(instances, master, _micro_heads_solver,
                                     counters=counters)
        for inst, sol in zip(instances, sols):
            base = inst.payload
            for k, hv in enumerate(sol, start=1):
                if hv:
                    h[base + k] = base + hv
    dsu = DsuForest(n, "by-rank")
    for v in range(n, 1, -1):
        if part.micro[v] != 0 and h[v] != 0:
            dsu.unite(h[v], v)
    _core_heads(pret, part, arcs_pre, h, dsu, counters)
    out = [0] * (n + 1)
    order = t.order
    for k in range(1, n + 1):
        out[order[k]] = order[h[k]] if h[k] else 0
    return out


def compressed_heads_pre(pret, part, arcs_pre, counters=None):
    """H' in preorder space: nearest core ancestor in H per vertex.

    Avoids the per-microtree head computation: fringe strong components are
    collapsed onto their smallest vertex before the core search, and the
    component's head is inherited by its members.
    """
    n = pret.n
    h = [0] * (n + 1)
    dsu = DsuForest(n, "by-rank")
    rep = list(range(n + 1))
    micro = part.micro
    per_micro = {}
    for x, y in arcs_pre:
        if micro[x] != 0 and micro[x] == micro[y]:
            per_micro.setdefault(micro[x], []).append((x, y))
    for s in reversed(part.mroots):
        base = s - 1
        size = pret.size[s]
        adj = [[] for _ in range(size + 1)]
        for x, y in per_micro.get(s, ()):
            adj[x - base].append(y - base)
        for comp in strong_components(size, adj):
            if len(comp) > 1:
                u = min(comp) + base
                for lv in comp:
                    v = lv + base
                    if v != u:
                        rep[v] = u
                        dsu.unite(u, v)
    _core_heads(pret, part, arcs_pre, h, dsu, counters)
    for v in range(1, n + 1):
        if rep[v] != v:
            h[v] = h[rep[v]]
    return h


def compressed_interval_forest(g, g_param=None, counters=None):
    """h'(v): the nearest core ancestor of v in the interval forest."""
    t, pret, part, arcs_pre, _tree_arc = _prepare(g, g_param)
    h = compressed_heads_pre(pret, part, arcs_pre, counters)
    out = [0] * (g.n + 1)
    order = t.order
    for k in range(1, g.n + 1):
        out[order[k]] = order[h[k]] if h[k] else 0
    return out
