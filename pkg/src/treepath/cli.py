"""Command-line front end: one subcommand per algorithm, oracle
cross-check mode, counter stats, and the empirical-linearity benchmark.

Exit codes: 0 success, 1 oracle mismatch or algorithm error, 2 usage error
(argparse's default).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import dominators as dom
from . import generate, intervals, kruskal, mst, nca, oracles
from .dsu import DsuForest
from .graphio import Digraph, GraphFormatError, parse_graph, parse_queries, root_tree
from .partition import default_g, fringe_core


def _read(path):
    with open(path, "rb") as fh:
        return fh.read()


def _emit_stats(out, n, counters):
    rows = []
    if counters.get("dsu_finds") or counters.get("dsu_find_path_nodes"):
        rows.append("dsu,%d,%d,%d" % (n, counters.get("dsu_finds", 0),
                                      counters.get("dsu_find_path_nodes", 0)))
    if counters.get("linkeval_ops") or counters.get("linkeval_path_nodes"):
        rows.append("linkeval,%d,%d,%d" % (n, counters.get("linkeval_ops", 0),
                                           counters.get("linkeval_path_nodes", 0)))
    if counters.get("encoded_tokens"):
        rows.append("topobatch,%d,%d,%d" % (n, counters.get("encoded_tokens", 0),
                                            counters.get("canonical_solves", 0)))
    for row in rows:
        out.write(row + "\n")


def _cmd_nca(args, out):
    tree = parse_graph(_read(args.tree))
    if tree.kind != "tree":
        raise ValueError("nca expects a tree file")
    t = root_tree(tree)
    pairs = parse_queries(_read(args.queries))
    counters = {}
    ans = nca.nca_linear(t, pairs, g=args.g_override, counters=counters)
    if args.oracle and ans != oracles.nca_oracle(t, pairs):
        sys.stderr.write("oracle mismatch: nca_linear disagrees\n")
        return 1
    for (u, v), a in zip(pairs, ans):
        out.write("%d %d %d\n" % (u, v, a))
    if args.stats:
        _emit_stats(out, tree.n, counters)
    return 0


def _cmd_mst_verify(args, out):
    g = parse_graph(_read(args.graph))
    t = parse_graph(_read(args.tree))
    counters = {}
    ok, witness = mst.verify_mst(g, t, g_param=args.g_override, counters=counters)
    if args.oracle:
        want = oracles.mst_weight_oracle(g, t)
        if ok != want:
            sys.stderr.write("oracle mismatch: verify_mst disagrees\n")
            return 1
    if ok:
        out.write("YES\n")
    else:
        u, v, _w = g.arcs[witness]
        out.write("NO\ne %d %d\n" % (u, v))
    if args.stats:
        _emit_stats(out, g.n, counters)
    return 0


def _cmd_mst_build(args, out):
    g = parse_graph(_read(args.graph))
    picked = mst.build_mst_kkt(g, seed=args.seed)
    if args.oracle and picked != oracles.kruskal_mst_oracle(g):
        sys.stderr.write("oracle mismatch: build_mst_kkt disagrees\n")
        return 1
    for i in picked:
        u, v, w = g.arcs[i]
        out.write("a %d %d %r\n" % (u, v, w))
    return 0


def _cmd_intervals(args, out):
    g = parse_graph(_read(args.flow))
    counters = {}
    if args.compressed:
        h = intervals.compressed_interval_forest(g, g_param=args.g_override,
                                                 counters=counters)
        if args.oracle:
            t, _ = intervals.dfs_preorder(g)
            gp = default_g(g.n) if args.g_override is None else args.g_override
            part = fringe_core(intervals.preorder_tree(t), gp)
            core_by_id = [False] * (g.n + 1)
            for k in range(1, g.n + 1):
                core_by_id[t.order[k]] = part.core_flag[k]
            if h != oracles.compressed_heads_oracle(g, core_by_id):
                sys.stderr.write("oracle mismatch: compressed interval forest\n")
                return 1
    else:
        h = intervals.interval_forest(g, g_param=args.g_override, counters=counters)
        if args.oracle and h != oracles.heads_oracle(g):
            sys.stderr.write("oracle mismatch: interval forest\n")
            return 1
    for v in range(1, g.n + 1):
        out.write("%d %d\n" % (v, h[v]))
    if args.stats:
        _emit_stats(out, g.n, counters)
    return 0


def _cmd_dominators(args, out):
    g = parse_graph(_read(args.flow))
    counters = {}
    idom = dom.dominators(g, algo=args.algo, g_param=args.g_override,
                          counters=counters)
    if args.oracle and idom != dom.dominators(g, algo="naive"):
        sys.stderr.write("oracle mismatch: dominators(%s) vs naive\n" % args.algo)
        return 1
    for v in range(1, g.n + 1):
        out.write("%d %d\n" % (v, idom[v]))
    if args.stats:
        _emit_stats(out, g.n, counters)
    return 0


def _cmd_kruskal(args, out):
    g = parse_graph(_read(args.tree))
    if g.kind != "tree":
        raise ValueError("kruskal expects a tree file")
    t = root_tree(g)
    order = kruskal.edge_children(t, [(u, v) for u, v, _w in g.arcs])
    counters = {}
    if args.groups:
        sizes = [int(x) for x in args.groups.split(",")]
        ck = kruskal.compressed_kruskal(t, order, sizes)
        for x in sorted(ck.children):
            kids = " ".join(str(c) for c in ck.children[x])
            out.write("k %d %d %s\n" % (x, ck.group[x] + 1, kids))
        return 0
    if args.linear:
        gp = args.g_override if args.g_override else default_g(t.n)
        kt = kruskal.kruskal_tree_linear(t, order, gp, counters=counters)
    else:
        kt = kruskal.kruskal_tree(t, order, counters=counters)
    if args.oracle:
        base = kruskal.kruskal_tree(t, order)
        if (kt.left, kt.right, kt.num) != (base.left, base.right, base.num):
            sys.stderr.write("oracle mismatch: kruskal trees differ\n")
            return 1
        for x in base.internal_nodes():
            comps = oracles.prefix_components_oracle(t, order, base.num[x])
            if frozenset(base.leaves_under(x)) not in comps:
                sys.stderr.write("oracle mismatch: component law at node %d\n" % x)
                return 1
    for x in kt.internal_nodes():
        out.write("k %d %d %d %d\n" % (x, kt.left[x], kt.right[x], kt.num[x]))
    if args.stats:
        _emit_stats(out, t.n, counters)
    return 0


def _parse_sizes(spec):
    sizes = []
    for tok in spec.split(","):
        tok = tok.strip().lower()
        if tok.endswith("k"):
            sizes.append(int(tok[:-1]) * 1024)
        else:
            sizes.append(int(tok))
    return sizes


def _work_units(counters):
    return (counters.get("dsu_find_path_nodes", 0)
            + counters.get("linkeval_path_nodes", 0)
            + counters.get("encoded_tokens", 0))


def bench_suite(suite, n, seed):
    """One benchmark run; returns (m, counters dict)."""
    rng = generate.make_rng("%s:%d:%d" % (suite, seed, n))
    counters = {}
    if suite == "nca":
        tree = generate.random_recursive_tree(n, rng)
        t = root_tree(tree)
        m = 4 * n
        pairs = [(rng.randrange(1, n + 1), rng.randrange(1, n + 1))
                 for _ in range(m)]
        nca.nca_linear(t, pairs, counters=counters)
    elif suite == "mst":
        m = 4 * n
        g = generate.random_weighted_graph(n, m, rng)
        picked = oracles.kruskal_mst_oracle(g)
        t = Digraph(n=g.n, arcs=tuple(g.arcs[i] for i in picked), kind="tree")
        mst.verify_mst(g, t, counters=counters)
    elif suite == "intervals":
        m = 4 * n
        g = generate.random_flowgraph(n, m, rng)
        intervals.interval_forest(g, counters=counters)
    elif suite == "dominators":
        m = 4 * n
        g = generate.random_flowgraph(n, m, rng)
        dom.dominators(g, algo="linear", counters=counters)
    elif suite == "kruskal":
        m = n - 1
        tree, order_edges = generate.random_tree_with_order(n, rng)
        t = root_tree(tree)
        order = kruskal.edge_children(t, order_edges)
        kruskal.kruskal_tree_linear(t, order, default_g(n), counters=counters)
    elif suite == "dsu-lemma5":
        # Marked-find discipline: big NCA queries over a random tree make
        # every find happen in a set holding a marked core leaf (k = 1).
        tree = generate.random_recursive_tree(n, rng)
        t = root_tree(tree)
        part = fringe_core(intervals.preorder_tree(t), default_g(n))
        m = 4 * n
        pairs = []
        while len(pairs) < m:
            v = rng.randrange(1, n + 1)
            w = rng.randrange(1, n + 1)
            pv, pw = part.micro[t.pre[v]], part.micro[t.pre[w]]
            if pv == 0 or pv != pw:
                pairs.append((v, w))
        dsu = DsuForest(n, "by-rank")
        nca.nca_ahu(t, pairs, dsu=dsu)
        counters["dsu_finds"] = dsu.finds
        counters["dsu_find_path_nodes"] = dsu.find_path_nodes
    else:
        raise ValueError("unknown suite %r" % suite)
    return m, counters


BENCH_SUITES = ("nca", "mst", "intervals", "dominators", "kruskal", "dsu-lemma5")


def bench(suite, sizes, seed, out):
    out.write("suite,n,m,counter,normalized\n")
    for n in sizes:
        start = time.perf_counter()
        m, counters = bench_suite(suite, n, seed)
        elapsed = time.perf_counter() - start
        counter = _work_units(counters)
        out.write("%s,%d,%d,%d,%.6f\n" % (suite, n, m, counter, counter / (n + m)))
        sys.stderr.write("bench %s n=%d done in %.2fs\n" % (suite, n, elapsed))
    return 0


def _cmd_bench(args, out):
    return bench(args.suite, _parse_sizes(args.sizes), args.seed, out)


def build_parser():
    ap = argparse.ArgumentParser(prog="treepath",
                                 description="Tree-path-evaluation algorithms")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, g_override=True, oracle=True, stats=True):
        if g_override:
            p.add_argument("--g-override", type=int, default=None,
                           help="force the microtree size threshold")
        if oracle:
            p.add_argument("--oracle", action="store_true",
                           help="cross-check against the brute-force oracle")
        if stats:
            p.add_argument("--stats", action="store_true",
                           help="append CSV counter rows to the output")

    p = sub.add_parser("nca", help="offline nearest common ancestors")
    p.add_argument("tree")
    p.add_argument("queries")
    common(p)
    p.set_defaults(func=_cmd_nca)

    pm = sub.add_parser("mst", help="minimum spanning trees")
    msub = pm.add_subparsers(dest="mst_cmd", required=True)
    p = msub.add_parser("verify", help="verify a spanning tree")
    p.add_argument("graph")
    p.add_argument("tree")
    common(p)
    p.set_defaults(func=_cmd_mst_verify)
    p = msub.add_parser("build", help="randomized MST construction")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=0)
    common(p, g_override=False, stats=False)
    p.set_defaults(func=_cmd_mst_build)

    p = sub.add_parser("intervals", help="flowgraph interval analysis")
    p.add_argument("flow")
    p.add_argument("--compressed", action="store_true",
                   help="compute the compressed forest H' only")
    common(p)
    p.set_defaults(func=_cmd_intervals)

    p = sub.add_parser("dominators", help="immediate dominators")
    p.add_argument("flow")
    p.add_argument("--algo", choices=dom.ALGOS, default="linear")
    common(p)
    p.set_defaults(func=_cmd_dominators)

    p = sub.add_parser("kruskal", help="Kruskal component trees")
    p.add_argument("tree", help="tree file with edges in weight order")
    p.add_argument("--linear", action="store_true")
    p.add_argument("--groups", default=None,
                   help="comma-separated equal-weight group sizes")
    common(p)
    p.set_defaults(func=_cmd_kruskal)

    p = sub.add_parser("bench", help="empirical-linearity benchmark")
    p.add_argument("--suite", choices=BENCH_SUITES, required=True)
    p.add_argument("--sizes", default="4k,8k,16k",
                   help="comma-separated sizes; k suffix multiplies by 1024")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (GraphFormatError, ValueError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
