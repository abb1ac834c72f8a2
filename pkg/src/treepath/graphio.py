"""Graph, flowgraph, and tree data model plus the shared text format.

Vertices are dense integers ``1..n``; every per-vertex attribute in this
package is a plain list indexed by vertex id with slot 0 unused.  A parsed
:class:`Digraph` is immutable and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


KINDS = ("graph", "flow", "tree")


@dataclass(frozen=True)
class Digraph:
    """A graph in one of three kinds: undirected ``graph``, ``flow`` (rooted
    flowgraph), or ``tree`` (undirected, connected, acyclic).

    ``arcs`` holds ``(u, v, w)`` triples in input order; ``w`` is ``None``
    when the arc carries no weight.  Parallel arcs and self-loops are kept.
    """

    n: int
    arcs: tuple
    kind: str
    root: int | None = None

    def out_adjacency(self):
        """Per-vertex list of (head, arc_index) pairs in input arc order."""
        adj = [[] for _ in range(self.n + 1)]
        for i, (u, v, _w) in enumerate(self.arcs):
            adj[u].append((v, i))
        return adj

    def undirected_adjacency(self):
        """Per-vertex list of (other, arc_index), both directions, input order."""
        adj = [[] for _ in range(self.n + 1)]
        for i, (u, v, _w) in enumerate(self.arcs):
            adj[u].append((v, i))
            if u != v:
                adj[v].append((u, i))
        return adj


@dataclass
class RootedTree:
    """A rooted tree with parent links and DFS preorder numbers.

    ``parent[v]`` is 0 for the root, ``pre`` is a bijection onto ``[1, n]``
    with ``pre[parent[v]] < pre[v]``, ``order[k]`` is the vertex with
    preorder number ``k``, ``children[v]`` lists children in visit order and
    ``size[v]`` is the number of descendants of ``v`` including itself.
    """

    n: int
    root: int
    parent: list
    pre: list
    order: list
    children: list
    size: list

    def postorder(self):
        """Vertices in DFS finish order (children before parents)."""
        out = []
        stack = [(self.root, 0)]
        while stack:
            v, i = stack.pop()
            kids = self.children[v]
            if i < len(kids):
                stack.append((v, i + 1))
                stack.append((kids[i], 0))
            else:
                out.append(v)
        return out


def _tokenize(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def parse_graph(text):
    """Parse the shared text format into a :class:`Digraph`.

    Format: one ``p <kind> <n> <m>`` header (kind in graph/flow/tree), an
    optional ``r <v>`` root line for flowgraphs, and exactly ``m`` lines
    ``a <u> <v> [<w>]``.  Comment lines start with ``c``.  Structural
    requirements are enforced here: trees must be connected and acyclic,
    undirected graphs connected, and flowgraph vertices reachable from the
    root.
    """
    n = m = None
    kind = None
    root = None
    arcs = []
    header_line = None
    for lineno, tok in _tokenize(text):
        tag = tok[0]
        if tag == "p":
            if kind is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tok) != 4:
                raise GraphFormatError("problem line needs 'p <kind> <n> <m>'", lineno)
            kind = tok[1]
            if kind not in KINDS:
                raise GraphFormatError("unknown kind %r" % kind, lineno)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise GraphFormatError("bad vertex/arc count", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError("need n >= 1 and m >= 0", lineno)
            header_line = lineno
        elif tag == "r":
            if kind is None:
                raise GraphFormatError("root line before problem line", lineno)
            if kind != "flow":
                raise GraphFormatError("root line only allowed for flowgraphs", lineno)
            if root is not None:
                raise GraphFormatError("duplicate root line", lineno)
            if len(tok) != 2:
                raise GraphFormatError("root line needs 'r <v>'", lineno)
            try:
                root = int(tok[1])
            except ValueError:
                raise GraphFormatError("bad root id", lineno) from None
            if not 1 <= root <= n:
                raise GraphFormatError("root id out of range", lineno)
        elif tag == "a":
            if kind is None:
                raise GraphFormatError("arc line before problem line", lineno)
            if len(tok) not in (3, 4):
                raise GraphFormatError("arc line needs 'a <u> <v> [<w>]'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError("bad arc endpoint", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError("vertex id out of range", lineno)
            w = None
            if len(tok) == 4:
                try:
                    w = float(tok[3])
                except ValueError:
                    raise GraphFormatError("bad weight", lineno) from None
                if math.isnan(w):
                    raise GraphFormatError("NaN weight rejected", lineno)
            if len(arcs) >= m:
                raise GraphFormatError("more than %d arc lines" % m, lineno)
            arcs.append((u, v, w))
        else:
            raise GraphFormatError("unknown line tag %r" % tag, lineno)
    if kind is None:
        raise GraphFormatError("missing problem line")
    if len(arcs) != m:
        raise GraphFormatError("expected %d arc lines, got %d" % (m, len(arcs)), header_line)
    if kind == "flow" and root is None:
        root = 1
    g = Digraph(n=n, arcs=tuple(arcs), kind=kind, root=root)
    _check_structure(g, header_line)
    return g


def _check_structure(g, lineno):
    if g.kind == "tree":
        if len(g.arcs) != g.n - 1:
            raise GraphFormatError("tree needs exactly n-1 edges", lineno)
        if _undirected_components(g) != 1:
            raise GraphFormatError("tree edges do not connect all vertices", lineno)
    elif g.kind == "graph":
        if _undirected_components(g) != 1:
            raise GraphFormatError("graph is not connected", lineno)
    elif g.kind == "flow":
        seen = _reachable_from(g, g.root)
        if len(seen) != g.n:
            raise GraphFormatError("flowgraph has vertices unreachable from root", lineno)


def _undirected_components(g):
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = g.n
    for u, v, _w in g.arcs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
            comps -= 1
    return comps


def _reachable_from(g, root):
    adj = g.out_adjacency()
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v, _i in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def _format_weight(w):
    return repr(w)


def serialize_graph(g):
    """Canonical text for ``g``; ``parse_graph(serialize_graph(g)) == g``."""
    lines = ["p %s %d %d" % (g.kind, g.n, len(g.arcs))]
    if g.kind == "flow":
        lines.append("r %d" % g.root)
    for u, v, w in g.arcs:
        if w is None:
            lines.append("a %d %d" % (u, v))
        else:
            lines.append("a %d %d %s" % (u, v, _format_weight(w)))
    return "\n".join(lines) + "\n"


def parse_queries(text):
    """Parse a query file of ``q <u> <v>`` lines into a pair list."""
    pairs = []
    for lineno, tok in _tokenize(text):
        if tok[0] != "q" or len(tok) != 3:
            raise GraphFormatError("query line needs 'q <u> <v>'", lineno)
        try:
            pairs.append((int(tok[1]), int(tok[2])))
        except ValueError:
            raise GraphFormatError("bad query endpoint", lineno) from None
    return pairs


def dfs_preorder(g):
    """Deterministic DFS of a flowgraph from its root.

    Visits out-arcs in input order with an explicit stack, so the returned
    spanning tree and preorder are reproducible.  Returns ``(tree, classes)``
    where ``classes[i]`` labels arc ``i`` as ``tree``/``forward``/``back``/
    ``cross`` relative to the returned preorder.
    """
    if g.kind != "flow":
        raise ValueError("dfs_preorder needs a flowgraph")
    n = g.n
    adj = g.out_adjacency()
    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    order = [0] * (n + 1)
    children = [[] for _ in range(n + 1)]
    tree_arc = [False] * len(g.arcs)
    counter = 1
    root = g.root
    pre[root] = 1
    order[1] = root
    stack = [(root, 0)]
    while stack:
        u, i = stack.pop()
        eu = adj[u]
        while i < len(eu):
            v, ai = eu[i]
            i += 1
            if pre[v] == 0:
                counter += 1
                pre[v] = counter
                order[counter] = v
                parent[v] = u
                children[u].append(v)
                tree_arc[ai] = True
                stack.append((u, i))
                stack.append((v, 0))
                break
    if counter != n:
        missing = next(v for v in range(1, n + 1) if pre[v] == 0)
        raise ValueError("vertex %d unreachable from root" % missing)

    size = [1] * (n + 1)
    for k in range(n, 1, -1):
        v = order[k]
        size[parent[v]] += size[v]

    classes = []
    for i, (u, v, _w) in enumerate(g.arcs):
        if tree_arc[i]:
            classes.append("tree")
        elif pre[u] <= pre[v] < pre[u] + size[u]:
            classes.append("forward")
        elif pre[v] <= pre[u] < pre[v] + size[v]:
            classes.append("back")
        else:
            classes.append("cross")
    tree = RootedTree(n=n, root=root, parent=parent, pre=pre, order=order,
                      children=children, size=size)
    return tree, classes


def root_tree(g, root=1):
    """Root an undirected ``tree`` Digraph at ``root`` (default vertex 1)."""
    if g.kind != "tree":
        raise ValueError("root_tree needs a tree")
    n = g.n
    adj = g.undirected_adjacency()
    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    order = [0] * (n + 1)
    children = [[] for _ in range(n + 1)]
    counter = 1
    pre[root] = 1
    order[1] = root
    stack = [(root, 0)]
    while stack:
        u, i = stack.pop()
        eu = adj[u]
        while i < len(eu):
            v, _ai = eu[i]
            i += 1
            if pre[v] == 0:
                counter += 1
                pre[v] = counter
                order[counter] = v
                parent[v] = u
                children[u].append(v)
                stack.append((u, i))
                stack.append((v, 0))
                break
    size = [1] * (n + 1)
    for k in range(n, 1, -1):
        v = order[k]
        size[parent[v]] += size[v]
    return RootedTree(n=n, root=root, parent=parent, pre=pre, order=order,
                      children=children, size=size)


def tree_from_parents(parent, root):
    """Build a RootedTree from a parent array (children in id order)."""
    n = len(parent) - 1
    children = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        if v != root:
            children[parent[v]].append(v)
    pre = [0] * (n + 1)
    order = [0] * (n + 1)
    counter = 1
    pre[root] = 1
    order[1] = root
    stack = [(root, 0)]
    while stack:
        u, i = stack.pop()
        kids = children[u]
        while i < len(kids):
            v = kids[i]
            i += 1
            counter += 1
            pre[v] = counter
            order[counter] = v
            stack.append((u, i))
            stack.append((v, 0))
            break
    if counter != n:
        raise ValueError("parent array does not describe one tree")
    size = [1] * (n + 1)
    for k in range(n, 1, -1):
        v = order[k]
        size[parent[v]] += size[v]
    return RootedTree(n=n, root=root, parent=list(parent), pre=pre, order=order,
                      children=children, size=size)


def ancestor(t, u, v):
    """True iff ``u`` lies on the root-to-``v`` path (reflexive).

    Preorder interval test: ``pre(u) <= pre(v) < pre(u) + size(u)``.
    """
    return t.pre[u] <= t.pre[v] < t.pre[u] + t.size[u]
