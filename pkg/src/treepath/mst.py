"""Borůvka trees, batched tree-path extrema, MST verification, and the
randomized linear-expected-time MST construction.

All weight comparisons use the total order (weight, edge index), which makes
selections, witnesses, and the MST itself unique and reproducible.  Path
extrema on a tree are computed on its Borůvka tree: the Borůvka tree is
2-balanced and preserves tree-path maxima, so Tarjan's postorder link-eval
algorithm with the simple structure covers pairs spanning microtrees, while
pairs inside one microtree are batched as topological computations whose
canonical solution is, per query, the list of tree-arc positions on the
query path (evaluated against each duplicate's own weights).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphio import tree_from_parents
from .linkeval import SimpleLinkEval
from .partition import default_g, fringe_core
from . import topobatch

TREE_ARC = 1
QUERY_ARC = 2


@dataclass
class BoruvkaTree:
    """Component-merge tree: leaves 1..n are the original vertices; the arc
    above node D carries the (weight, edge index) of the edge D selected in
    the pass that contracted it."""

    n: int
    count: int
    parent: list
    arcw: list      # (weight, edge_index) at non-roots, None at the root
    pass_of: list   # Borůvka pass that created each node (0 for leaves)
    root: int


def _boruvka_pass(nodes, edges, next_id):
    """One Borůvka step over a contracted (multi)graph.

    ``edges`` holds (u, v, key, idx) with key the (weight, index) pair.
    Returns (selected idx list, per-node (new component id, selected key),
    contracted edges, new node list, next_id).  Isolated nodes keep a
    component of their own and select nothing.
    """
    best = {}
    for u, v, key, idx in edges:
        if u != v:
            if u not in best or key < best[u][0]:
                best[u] = (key, idx, v)
            if v not in best or key < best[v][0]:
                best[v] = (key, idx, u)
    parent = {v: v for v in nodes}

    def find(x):
        r = x
        while parent[r] != r:
            r = parent[r]
        while parent[x] != r:
            parent[x], x = r, parent[x]
        return r

    selected = []
    seen = set()
    for v in nodes:
        pick = best.get(v)
        if pick is None:
            continue
        key, idx, other = pick
        if idx not in seen:
            seen.add(idx)
            selected.append(idx)
        ru, rv = find(v), find(other)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comp = {}
    new_nodes = []
    for v in nodes:
        r = find(v)
        if r not in comp:
            comp[r] = next_id
            new_nodes.append(next_id)
            next_id += 1
    mapping = {v: comp[find(v)] for v in nodes}
    new_edges = []
    for u, v, key, idx in edges:
        nu, nv = mapping[u], mapping[v]
        if nu != nv:
            new_edges.append((nu, nv, key, idx))
    return selected, best, mapping, new_edges, new_nodes, next_id


def boruvka_tree(n, edges):
    """Borůvka tree of a weighted tree given as (u, v, w) triples."""
    if len(edges) != n - 1:
        raise ValueError("a tree on %d vertices needs %d edges" % (n, n - 1))
    cur_nodes = list(range(1, n + 1))
    cur_edges = [(u, v, (w, i), i) for i, (u, v, w) in enumerate(edges)]
    count = n
    parent = [0] * (n + 1)
    arcw = [None] * (n + 1)
    pass_of = [0] * (n + 1)
    passes = 0
    next_id = n + 1
    while len(cur_nodes) > 1:
        passes += 1
        selected, best, mapping, cur_edges, new_nodes, next_id = _boruvka_pass(
            cur_nodes, cur_edges, next_id)
        count += len(new_nodes)
        parent.extend([0] * len(new_nodes))
        arcw.extend([None] * len(new_nodes))
        pass_of.extend([passes] * len(new_nodes))
        for v in cur_nodes:
            parent[v] = mapping[v]
            arcw[v] = best[v][0]  # the (weight, edge index) key
        cur_nodes = new_nodes
    return BoruvkaTree(n=n, count=count, parent=parent, arcw=arcw,
                       pass_of=pass_of, root=cur_nodes[0])


def _path_list_solver(inst):
    """Canonical-instance program: per query arc, the positions of the tree
    arcs on the query path (a topological computation with linear output)."""
    par = [0] * (inst.n + 1)
    up_arc = [0] * (inst.n + 1)
    depth = [0] * (inst.n + 1)
    for pos, (u, v, lab) in enumerate(inst.arcs):
        if lab == TREE_ARC:
            par[v] = u
            up_arc[v] = pos
    for v in range(2, inst.n + 1):
        depth[v] = depth[par[v]] + 1
    program = []
    for u, v, lab in inst.arcs:
        if lab != QUERY_ARC:
            continue
        a, b = u, v
        positions = []
        while depth[a] > depth[b]:
            positions.append(up_arc[a])
            a = par[a]
        while depth[b] > depth[a]:
            positions.append(up_arc[b])
            b = par[b]
        while a != b:
            positions.append(up_arc[a])
            positions.append(up_arc[b])
            a, b = par[a], par[b]
        program.append(positions)
    return program


def path_extrema(n, edges, queries, variant="max", g=None, counters=None):
    """Per query (v, w), the extreme (weight, edge index) on the tree path,
    or None for v == w.

    ``edges`` is the weighted tree as (u, v, w) triples (index order is the
    tie-break); ``variant`` picks maximum (MST verification) or minimum
    (relative dominators).  Computed on the Borůvka tree: big pairs via the
    postorder link-eval sweep, same-microtree pairs via the batched
    path-list programs.

    The Borůvka tree preserves path maxima only, so minima run through the
    dual order: negate the weights, take maxima, negate back.
    """
    if variant == "min":
        flipped = [(u, v, -w) for u, v, w in edges]
        out = path_extrema(n, flipped, queries, "max", g, counters)
        return [None if a is None else (-a[0], a[1]) for a in out]
    if n == 1:
        return [None for _ in queries]
    B = boruvka_tree(n, edges)
    bt = tree_from_parents(B.parent, B.root)
    if g is None:
        g = default_g(bt.n)
    part = fringe_core(bt, g)
    micro = part.micro

    ans = [None] * len(queries)
    big_pairs = []
    big_idx = []
    per_micro = {}
    for i, (v, w) in enumerate(queries):
        if v == w:
            continue
        if micro[v] != 0 and micro[v] == micro[w]:
            per_micro.setdefault(micro[v], []).append(i)
        else:
            big_pairs.append((v, w))
            big_idx.append(i)

    if big_pairs:
        le = SimpleLinkEval(bt.n, variant="max", worst=(float("-inf"), -1))
        better = le._better
        visited = [False] * (bt.n + 1)
        pend = [[] for _ in range(bt.n + 1)]    # P(v): (other, query slot)
        ready = [[] for _ in range(bt.n + 1)]   # Q(nca): (x, y, query slot)
        for k, (v, w) in enumerate(big_pairs):
            pend[v].append((w, k))
            pend[w].append((v, k))
        for v in bt.postorder():
            for w, k in pend[v]:
                if visited[w]:
                    ready[le.findroot(w)].append((v, w, k))
            for x, y, k in ready[v]:
                ex, ey = le.eval(x), le.eval(y)
                ans[big_idx[k]] = ey if better(ey, ex) else ex
            visited[v] = True
            p = bt.parent[v]
            if p != 0:
                le.link(p, v, B.arcw[v])
        if counters is not None:
            counters["linkeval_path_nodes"] = counters.get(
                "linkeval_path_nodes", 0) + le.path_nodes
            counters["linkeval_ops"] = counters.get("linkeval_ops", 0) + le.ops

    if per_micro:
        pre, order = bt.pre, bt.order
        instances = []
        for s in part.mroots:
            qidx = per_micro.get(s)
            if not qidx:
                continue
            base = pre[s] - 1
            size = bt.size[s]
            arcs = []
            weights = []
            for k in range(base + 2, base + size + 1):
                v = order[k]
                arcs.append((pre[bt.parent[v]] - base, k - base, TREE_ARC))
                weights.append(B.arcw[v])
            for i in qidx:
                a, b = queries[i]
                la, lb = pre[a] - base, pre[b] - base
                if la > lb:
                    la, lb = lb, la
                arcs.append((la, lb, QUERY_ARC))
            instances.append(topobatch.MicroInstance(
                n=size, vertex_labels=(0,) * size, arcs=tuple(arcs),
                payload=(weights, qidx)))

        def run(inst, program):
            weights, qidx = inst.payload
            for positions, i in zip(program, qidx):
                ans[i] = max(weights[p] for p in positions)
            return program

        topobatch.batch_solve(instances, max(g, 5), _path_list_solver,
                              transfer=run, mode="run-per-duplicate",
                              counters=counters)
    return ans


def path_maxima(n, edges, queries, g=None, counters=None):
    """Maximum-weight answers with witnesses: (weight, witness edge index)
    per query pair, None for v == w."""
    return path_extrema(n, edges, queries, variant="max", g=g, counters=counters)


def _spanning_tree_match(g, t):
    """Match each tree edge of ``t`` to a graph edge of ``g`` by endpoints,
    honoring the tree edge's weight when it carries one (else the cheapest
    available parallel copy); returns (tree edge triples with g's weights,
    nontree arc index list)."""
    if t.n != g.n:
        raise ValueError("tree and graph disagree on vertex count")
    if len(t.arcs) != g.n - 1:
        raise ValueError("spanning tree needs n-1 edges")
    by_ends = {}
    for i, (u, v, w) in enumerate(g.arcs):
        if w is None:
            raise ValueError("graph arc %d has no weight" % i)
        key = (u, v) if u <= v else (v, u)
        by_ends.setdefault(key, []).append(i)
    for lst in by_ends.values():
        lst.sort(key=lambda i: (g.arcs[i][2], i))
    used = set()
    tree_edges = []
    for u, v, tw in t.arcs:
        key = (u, v) if u <= v else (v, u)
        lst = by_ends.get(key)
        pick = None
        if lst:
            if tw is None:
                pick = lst.pop(0)
            else:
                for k, i in enumerate(lst):
                    if g.arcs[i][2] == tw:
                        pick = lst.pop(k)
                        break
        if pick is None:
            raise ValueError("tree edge (%d,%d) is not a graph edge" % (u, v))
        gu, gv, gw = g.arcs[pick]
        tree_edges.append((gu, gv, gw, pick))
        used.add(pick)
    nontree = [i for i in range(len(g.arcs)) if i not in used]
    return tree_edges, nontree


def verify_mst(g, t, g_param=None, counters=None):
    """Cycle-rule MST verification: ``t`` is minimum iff every nontree edge
    weighs at least the path maximum between its endpoints.

    Returns (True, None) or (False, violating nontree arc index).
    """
    tree_edges, nontree = _spanning_tree_match(g, t)
    edges = [(u, v, w) for u, v, w, _i in tree_edges]
    queries = [(g.arcs[i][0], g.arcs[i][1]) for i in nontree]
    answers = path_maxima(g.n, edges, queries, g=g_param, counters=counters)
    for i, ans in zip(nontree, answers):
        if ans is None:
            continue  # self-loop: empty path
        if g.arcs[i][2] < ans[0]:
            return False, i
    return True, None


_KKT_BASE_EDGES = 16


def _kruskal_msf(edges):
    """Baseline minimum spanning forest by (weight, index) order."""
    parent = {}

    def find(x):
        r = x
        while parent.setdefault(r, r) != r:
            r = parent[r]
        while parent[x] != r:
            parent[x], x = r, parent[x]
        return r

    out = []
    for u, v, key, idx in sorted(edges, key=lambda e: e[2]):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
            out.append(idx)
    return out


def _forest_path_maxima(nodes, f_edges, queries):
    """Path maxima inside the forest ``f_edges``; None when endpoints are
    disconnected.  Queries and answers use (weight, index) keys."""
    comp_parent = {v: v for v in nodes}

    def find(x):
        r = x
        while comp_parent[r] != r:
            r = comp_parent[r]
        while comp_parent[x] != r:
            comp_parent[x], x = r, comp_parent[x]
        return r

    for u, v, _key, _idx in f_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            comp_parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for u, v, key, idx in f_edges:
        groups.setdefault(find(u), []).append((u, v, key))
    ans = [None] * len(queries)
    per_comp = {}
    for qi, (u, v) in enumerate(queries):
        ru, rv = find(u), find(v)
        if ru == rv and ru in groups:
            per_comp.setdefault(ru, []).append(qi)
    for comp, qidx in per_comp.items():
        ed = groups[comp]
        ids = sorted({x for (u, v, _k) in ed for x in (u, v)})
        local = {x: i + 1 for i, x in enumerate(ids)}
        ledges = [(local[u], local[v], key) for u, v, key in ed]
        lqueries = [(local[queries[qi][0]], local[queries[qi][1]]) for qi in qidx]
        for qi, a in zip(qidx, path_extrema(len(ids), ledges, lqueries, "max")):
            # ledges carry (weight, original index) keys as their weights, so
            # the extreme's first component is the comparable key itself.
            ans[qi] = None if a is None else a[0]
    return ans


def _kkt_msf(nodes, edges, seed):
    """Karger-Klein-Tarjan minimum spanning forest on a contracted graph."""
    if len(edges) <= _KKT_BASE_EDGES:
        return _kruskal_msf(edges)
    rng = random.Random(seed)
    seed_sample = rng.getrandbits(64)
    seed_rest = rng.getrandbits(64)
    selected = []
    next_id = (max(nodes) if nodes else 0) + 1
    for _ in range(2):
        if len(nodes) <= 1 or not edges:
            break
        sel, _best, _mapping, edges, nodes, next_id = _boruvka_pass(
            nodes, edges, next_id)
        selected.extend(sel)
    if len(nodes) <= 1 or not edges:
        return selected
    sample = [e for e in edges if rng.getrandbits(1)]
    forest_idx = set(_kkt_msf(nodes, sample, seed_sample))
    f_edges = [e for e in sample if e[3] in forest_idx]
    rest = [e for e in edges if e[3] not in forest_idx]
    maxima = _forest_path_maxima(nodes, f_edges, [(u, v) for u, v, _k, _i in rest])
    light = list(f_edges)
    for e, mx in zip(rest, maxima):
        if e[0] == e[1]:
            continue  # self-loop after contraction: always heavy
        if mx is None or e[2] <= mx:
            light.append(e)
    selected.extend(_kkt_msf(nodes, light, seed_rest))
    return selected


def build_mst_kkt(g, seed=0):
    """Randomized MST construction: two Borůvka passes, sample at rate 1/2,
    recurse, discard forest-heavy edges by path maxima, recurse on the rest.
    Returns the sorted arc indices of the unique (weight, index)-minimum
    spanning tree; the edge set is seed-independent."""
    if g.n > 1 and not g.arcs:
        raise ValueError("graph is not connected")
    edges = []
    for i, (u, v, w) in enumerate(g.arcs):
        if w is None:
            raise ValueError("graph arc %d has no weight" % i)
        edges.append((u, v, (w, i), i))
    out = sorted(_kkt_msf(list(range(1, g.n + 1)), edges, seed))
    if len(out) != g.n - 1:
        raise ValueError("graph is not connected")
    return out
