"""Immediate dominators of a flowgraph, three ways.

``linear`` is the microtree algorithm: semi-dominators are extended tags
for the initial tags t(w) = min({w} plus arc sources into w); back arcs are
absorbed through the compressed interval forest H', big cross arcs carry
arc tags split into a top part (a range minimum over final extended tags on
the nca's left path) and a bottom part (an eval in a sophisticated
link-eval structure whose fringe values are microtags), and fringe vertices
get their semi-dominators in a second pass batched over microtrees with
rank-compressed tags.  Step 2 (relative dominators) runs as arg-variant
path minima on the DFS tree via the MST machinery, and Step 3 is the
classic top-down resolution.

``lt`` is Lengauer-Tarjan with the simple link-eval structure; ``naive``
answers by per-vertex removal reachability.  All three agree; the two
slower ones serve as oracles for the first.

Everything internal runs in preorder space (vertex == preorder number);
public entry points translate back to input vertex ids.
"""

from __future__ import annotations

from .graphio import dfs_preorder
from .intervals import compressed_heads_pre, preorder_tree, strong_components
from .linkeval import ShadowLinkEval, SimpleLinkEval
from .mst import path_extrema
from .nca import nca_ahu
from .partition import default_g, fringe_core, left_paths
from . import topobatch

INF = float("inf")


class _SegMin:
    """Point-update range-min over a fixed-size array (0-based, inclusive)."""

    __slots__ = ("m", "t")

    def __init__(self, size):
        self.m = size
        self.t = [INF] * (2 * size)

    def update(self, pos, val):
        t = self.t
        i = pos + self.m
        t[i] = val
        i >>= 1
        while i:
            j = i << 1
            left, right = t[j], t[j + 1]
            t[i] = left if left < right else right
            i >>= 1

    def query(self, lo, hi):
        t = self.t
        res = INF
        lo += self.m
        hi += self.m + 1
        while lo < hi:
            if lo & 1:
                if t[lo] < res:
                    res = t[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if t[hi] < res:
                    res = t[hi]
            lo >>= 1
            hi >>= 1
        return res


def initial_tags(n, arcs_pre):
    """t(w) = min of w and all arc sources into w (preorder numbers)."""
    tags = list(range(n + 1))
    for u, v in arcs_pre:
        if u < tags[v]:
            tags[v] = u
    return tags


def _brute_extended_tags(n, arcs_pre, tags):
    """Definition-level extended tags: minimum tag over high-path sources
    (backward closure of w through vertices larger than w).  Check-mode and
    test oracle only."""
    radj = [[] for _ in range(n + 1)]
    for u, v in arcs_pre:
        if u != v:
            radj[v].append(u)
    et = [0] * (n + 1)
    for w in range(1, n + 1):
        best = tags[w]
        seen = [False] * (n + 1)
        seen[w] = True
        stack = [w]
        while stack:
            x = stack.pop()
            for q in radj[x]:
                if q > w and not seen[q]:
                    seen[q] = True
                    if tags[q] < best:
                        best = tags[q]
                    stack.append(q)
        et[w] = best
    return et


def _micro_et_solver(inst):
    """Local extended tags inside one microtree: for each vertex the least
    vertex label over high paths of the induced subgraph (labels are dense
    ranks of the pass-1 external tags)."""
    n = inst.n
    labels = inst.vertex_labels
    radj = [[] for _ in range(n + 1)]
    for u, v, _lab in inst.arcs:
        if u != v:
            radj[v].append(u)
    out = []
    for w in range(1, n + 1):
        best = labels[w - 1]
        seen = [False] * (n + 1)
        seen[w] = True
        stack = [w]
        while stack:
            x = stack.pop()
            for q in radj[x]:
                if q > w and not seen[q]:
                    seen[q] = True
                    if labels[q - 1] < best:
                        best = labels[q - 1]
                    stack.append(q)
        out.append(best)
    return out


def _semidominators_pre(pret, arcs_pre, part, counters=None, check=False):
    """Two-pass semi-dominator computation in preorder space."""
    n = pret.n
    par = pret.parent
    size = pret.size
    micro = part.micro
    path_id, path_pos, paths = part.path_id, part.path_pos, part.paths

    hprime = compressed_heads_pre(pret, part, arcs_pre, counters)
    tags = initial_tags(n, arcs_pre)
    ct = tags[:]
    ext = tags[:]

    # Arc classification: back arcs ride H', small cross arcs stay inside
    # their microtree, big cross arcs get tagged and bucketed by target.
    micro_arcs = {s: [] for s in part.mroots}
    big = []
    for u, v in arcs_pre:
        mu = micro[u]
        if mu != 0 and mu == micro[v]:
            micro_arcs[mu].append((u, v))
            continue
        if u == v:
            continue
        if u <= v < u + size[u]:
            continue  # tree or forward arc: no contribution
        if v <= u < v + size[v]:
            continue  # back arc: handled through H'
        big.append((u, v))
    inbound = [None] * (n + 1)
    for (u, v), a in zip(big, nca_ahu(pret, big)):
        if inbound[v] is None:
            inbound[v] = [(u, a)]
        else:
            inbound[v].append((u, a))

    # Eager initial pushes of fringe tags up H'.
    for v in range(1, n + 1):
        if micro[v] != 0:
            hp = hprime[v]
            if hp and ct[v] < ct[hp]:
                ct[hp] = ct[v]

    le = ShadowLinkEval(n, variant="min", mode="by-rank")
    segs = [_SegMin(len(members)) for _top, _bottom, members in paths]

    if check:
        et_oracle = _brute_extended_tags(n, arcs_pre, tags)

    def arc_tag(u, a):
        """at(u, .) for an arc bucketed at nca a: top part by range minimum
        over the pending segment of a's left path, bottom part by eval."""
        mid = le.findroot(u)
        x = le.eval(u)
        if mid != a:
            pid = path_id[a]
            top = segs[pid].query(path_pos[a] + 1, path_pos[mid])
            if top < x:
                x = top
        return x

    for v in range(n, 0, -1):
        mv = micro[v]
        if mv != 0:
            if mv != v:
                continue
            s = v
            hi = s + size[s]
            # Fold every member's inbound arc tags, pushing up H'.
            for z in range(s, hi):
                lst = inbound[z]
                if lst:
                    cz = ct[z]
                    ez = ext[z]
                    for u, a in lst:
                        x = arc_tag(u, a)
                        if x < cz:
                            cz = x
                        if x < ez:
                            ez = x
                    ct[z] = cz
                    ext[z] = ez
                hp = hprime[z]
                if hp and ct[z] < ct[hp]:
                    ct[hp] = ct[z]
            if check:
                _check_sandwich(s, hi, arcs_pre, tags, ct, ext, et_oracle,
                                inbound, par, size)
            # Microtags: propagate ct minima over strong components of the
            # induced subgraph in topological order.
            base = s - 1
            sz = hi - s
            adj = [[] for _ in range(sz + 1)]
            for x, y in micro_arcs[s]:
                adj[x - base].append(y - base)
            comps = strong_components(sz, adj)
            comp_of = [0] * (sz + 1)
            for ci in range(len(comps) - 1, -1, -1):
                for lv in comps[ci]:
                    comp_of[lv] = ci
            inherited = [INF] * len(comps)
            for ci in range(len(comps) - 1, -1, -1):
                m = inherited[ci]
                for lv in comps[ci]:
                    if ct[base + lv] < m:
                        m = ct[base + lv]
                for lv in comps[ci]:
                    for ly in adj[lv]:
                        cj = comp_of[ly]
                        if cj != ci and m < inherited[cj]:
                            inherited[cj] = m
                for lv in comps[ci]:
                    ct[base + lv] = m
            # Link the finished microtree bottom-up.
            for z in range(hi - 1, s - 1, -1):
                le.link(par[z], z, ct[z])
            continue
        # Core vertex: fold inbound arc tags, then publish et = ct.
        lst = inbound[v]
        if lst:
            cv = ct[v]
            for u, a in lst:
                x = arc_tag(u, a)
                if x < cv:
                    cv = x
            ct[v] = cv
            if cv < ext[v]:
                ext[v] = cv
        hp = hprime[v]
        if hp and ct[v] < ct[hp]:
            ct[hp] = ct[v]
        pid = path_id[v]
        segs[pid].update(path_pos[v], ct[v])
        if path_pos[v] == 0 and v != 1:
            # Path completed: link it bottom-up.  The path holding the root
            # is the last one and needs no links.
            members = paths[pid][2]
            for w in reversed(members):
                le.link(par[w], w, ct[w])

    sdom = ct[:]
    if part.mroots:
        _fringe_pass2(pret, part, micro_arcs, ext, sdom, counters)
    if counters is not None:
        counters["linkeval_path_nodes"] = counters.get(
            "linkeval_path_nodes", 0) + le.path_nodes
        counters["linkeval_ops"] = counters.get("linkeval_ops", 0) + le.ops
    if check:
        for v in range(2, n + 1):
            assert sdom[v] == et_oracle[v], \
                "sdom mismatch at %d: %r != %r" % (v, sdom[v], et_oracle[v])
    return sdom


def _check_sandwich(s, hi, arcs_pre, tags, ct, ext, et_oracle, inbound, par, size):
    """Debug assertion of the pass-1 invariant at a microtree visit:
    et(v) <= ct(v) <= min({t(v)} with external arc tags), and ext equals the
    right-hand side exactly."""
    for z in range(s, hi):
        bound = tags[z]
        for u, a in inbound[z] or ():
            x = INF
            y = u
            while y != a:
                if et_oracle[y] < x:
                    x = et_oracle[y]
                y = par[y]
            if x < bound:
                bound = x
        assert et_oracle[z] <= ct[z] <= bound, \
            "ct sandwich violated at %d" % z
        assert ext[z] == bound, "external tag mismatch at %d" % z


def _fringe_pass2(pret, part, micro_arcs, ext, sdom, counters):
    """Second pass: extended tags inside microtrees via one topological
    batch, with pass-1 external tags rank-compressed to [1, g]."""
    n = pret.n
    micro = part.micro
    bucket = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        if micro[v] != 0:
            bucket[ext[v]].append(v)
    per_vals = {s: [] for s in part.mroots}
    for val in range(1, n + 1):
        for v in bucket[val]:
            lst = per_vals[micro[v]]
            if not lst or lst[-1] != val:
                lst.append(val)
    instances = []
    gp = part.g
    for s in part.mroots:
        base = s - 1
        sz = pret.size[s]
        vals = per_vals[s]
        rank = {val: i + 1 for i, val in enumerate(vals)}
        labels = tuple(rank[ext[base + k]] for k in range(1, sz + 1))
        arcs = tuple((x - base, y - base, 0) for x, y in micro_arcs[s])
        instances.append(topobatch.MicroInstance(
            n=sz, vertex_labels=labels, arcs=arcs, payload=(base, vals)))

    def unrank(inst, sol):
        base, vals = inst.payload
        for k, r in enumerate(sol, start=1):
            sdom[base + k] = vals[r - 1]
        return sol

    topobatch.batch_solve(instances, max(gp, 5), _micro_et_solver,
                          transfer=unrank, mode="run-per-duplicate",
                          counters=counters)


def semidominators(g, g_param=None, counters=None, check=False):
    """Semi-dominators of a flowgraph, in preorder space, plus the context
    (tree, preorder tree, preorder arcs, partition) for the later steps."""
    t, _classes = dfs_preorder(g)
    pret = preorder_tree(t)
    pre = t.pre
    arcs_pre = [(pre[u], pre[v]) for u, v, _w in g.arcs]
    gp = default_g(g.n) if g_param is None else g_param
    part = left_paths(pret, fringe_core(pret, gp))
    sdom = _semidominators_pre(pret, arcs_pre, part, counters, check)
    return sdom, (t, pret, arcs_pre, part)


def relative_dominators(pret, sdom, counters=None):
    """rdom(v): a vertex attaining the minimum sdom on the tree path
    (sdom(v), v], computed as arg-variant path minima over the DFS tree with
    the edge into v labeled sdom(v)."""
    n = pret.n
    rdom = [0] * (n + 1)
    if n == 1:
        return rdom
    par = pret.parent
    edges = [(par[v], v, sdom[v]) for v in range(2, n + 1)]
    queries = [(sdom[v], v) for v in range(2, n + 1)]
    answers = path_extrema(n, edges, queries, variant="min", counters=counters)
    for v, ans in zip(range(2, n + 1), answers):
        rdom[v] = ans[1] + 2  # edge index back to its child vertex
    return rdom


def immediate_dominators(pret, sdom, rdom):
    """Top-down resolution: idom(v) = sdom(v) when sdom(rdom(v)) = sdom(v),
    else idom(rdom(v))."""
    n = pret.n
    idom = [0] * (n + 1)
    for v in range(2, n + 1):
        r = rdom[v]
        idom[v] = sdom[v] if sdom[r] == sdom[v] else idom[r]
    return idom


def _lt_idom_pre(pret, arcs_pre):
    """Textbook Lengauer-Tarjan with the simple link-eval structure."""
    n = pret.n
    par = pret.parent
    radj = [[] for _ in range(n + 1)]
    for u, v in arcs_pre:
        if u != v:
            radj[v].append(u)
    semi = list(range(n + 1))
    idom = [0] * (n + 1)
    le = SimpleLinkEval(n, variant="min", worst=(INF, INF))
    bucket = [[] for _ in range(n + 1)]
    for w in range(n, 1, -1):
        sw = semi[w]
        for q in radj[w]:
            if q < w:
                cand = q
            else:
                _val, node = le.eval_arg(q)
                cand = semi[node]
            if cand < sw:
                sw = cand
        semi[w] = sw
        bucket[sw].append(w)
        p = par[w]
        le.link(p, w, (sw, w))
        if bucket[p]:
            for v in bucket[p]:
                _val, node = le.eval_arg(v)
                idom[v] = node if semi[node] < semi[v] else p
            bucket[p] = []
    for w in range(2, n + 1):
        if idom[w] != semi[w]:
            idom[w] = idom[idom[w]]
    return semi, idom


def _naive_idom_pre(n, arcs_pre):
    """Removal-reachability oracle: v dominates w iff removing v cuts w off
    from the root; idom is the deepest (max preorder) proper dominator."""
    adj = [[] for _ in range(n + 1)]
    for u, v in arcs_pre:
        adj[u].append(v)
    idom = [0] * (n + 1)
    best = [1] * (n + 1)
    for x in range(2, n + 1):
        seen = [False] * (n + 1)
        seen[x] = True  # removed
        seen[1] = True
        stack = [1]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        seen[x] = False
        for w in range(2, n + 1):
            if w != x and not seen[w] and x > best[w]:
                best[w] = x
    for w in range(2, n + 1):
        idom[w] = best[w]
    return idom


ALGOS = ("linear", "lt", "naive")


def dominators(g, algo="linear", g_param=None, counters=None, check=False):
    """Immediate dominators per vertex in input ids; 0 for the root.

    ``algo`` picks the linear microtree algorithm, Lengauer-Tarjan, or the
    naive reachability oracle; all three produce identical arrays.
    """
    if algo not in ALGOS:
        raise ValueError("algo must be one of %s" % (ALGOS,))
    if g.kind != "flow":
        raise ValueError("dominators need a flowgraph")
    t, _classes = dfs_preorder(g)
    n = g.n
    if n == 1:
        return [0, 0]
    pret = preorder_tree(t)
    pre = t.pre
    arcs_pre = [(pre[u], pre[v]) for u, v, _w in g.arcs]
    if algo == "linear":
        gp = default_g(n) if g_param is None else g_param
        part = left_paths(pret, fringe_core(pret, gp))
        sdom = _semidominators_pre(pret, arcs_pre, part, counters, check)
        rdom = relative_dominators(pret, sdom, counters)
        idom_pre = immediate_dominators(pret, sdom, rdom)
    elif algo == "lt":
        _semi, idom_pre = _lt_idom_pre(pret, arcs_pre)
    else:
        idom_pre = _naive_idom_pre(n, arcs_pre)
    order = t.order
    out = [0] * (n + 1)
    for k in range(2, n + 1):
        out[order[k]] = order[idom_pre[k]]
    return out
