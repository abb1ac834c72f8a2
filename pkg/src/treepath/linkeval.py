"""Dynamic path-minimum/maximum (link-eval) structures.

Two structures solve the same problem: maintain a forest under
``link(v, w, x)`` (make root ``v`` the parent of root ``w``, arc value
``x``) so that ``eval(v)`` returns the extreme arc value on the root-to-v
path and ``findroot(v)`` returns the root.

:class:`SimpleLinkEval` compresses the link forest itself and is fast when
that forest ends up balanced.  :class:`ShadowLinkEval` delays links through
a shadow forest partitioned into stacked subtrees so compression always
works on balanced subtrees, with linking-by-size or linking-by-rank.

Values may be numbers or tuples (any totally ordered type); ``worst``
overrides the root sentinel when the default +-inf does not compare with
the value type.  The arg variant tracks, per value, the deepest node under
the arc attaining it; ties are broken toward the deepest such node.
"""

from __future__ import annotations

import math

MIN = "min"
MAX = "max"
BY_SIZE = "by-size"
BY_RANK = "by-rank"


class SimpleLinkEval:
    """Path compression on the compressed link forest; node values, roots
    hold the worst value (+inf for min, -inf for max)."""

    __slots__ = ("n", "variant", "worst", "parent", "value", "argnode",
                 "ops", "path_nodes", "links")

    def __init__(self, n, variant=MIN, worst=None):
        if variant not in (MIN, MAX):
            raise ValueError("variant must be 'min' or 'max'")
        self.n = n
        self.variant = variant
        if worst is None:
            worst = math.inf if variant == MIN else -math.inf
        self.worst = worst
        self.parent = [0] * (n + 1)
        self.value = [worst] * (n + 1)
        self.argnode = list(range(n + 1))
        self.ops = 0
        self.path_nodes = 0
        self.links = 0

    def _better(self, a, b):
        return a < b if self.variant == MIN else a > b

    def link(self, v, w, x):
        if self.parent[v] != 0 or self.parent[w] != 0:
            raise ValueError("link arguments must be roots")
        if v == w:
            raise ValueError("link of a root with itself")
        self.parent[w] = v
        self.value[w] = x
        self.argnode[w] = w
        self.links += 1

    def _compress(self, v):
        """Compress the root-to-v path; returns the root."""
        parent = self.parent
        path = []
        x = v
        px = parent[x]
        while px != 0:
            path.append(x)
            x = px
            px = parent[x]
        self.path_nodes += len(path) + 1
        if len(path) > 1:
            value = self.value
            argnode = self.argnode
            better = self._better
            # path[-1] is the root's child; walk top-down from its child.
            for i in range(len(path) - 2, -1, -1):
                y = path[i]
                parent[y] = x
                if better(value[path[i + 1]], value[y]):
                    value[y] = value[path[i + 1]]
                    argnode[y] = argnode[path[i + 1]]
        return x

    def eval(self, v):
        self.ops += 1
        self._compress(v)
        return self.value[v]

    def eval_arg(self, v):
        """(value, node) where node is the deepest node attaining it; for a
        root returns (worst, v)."""
        self.ops += 1
        self._compress(v)
        return self.value[v], self.argnode[v]

    def findroot(self, v):
        self.ops += 1
        return self._compress(v)

    def stats_row(self, structure="linkeval-simple"):
        return "%s,%d,%d,%d" % (structure, self.n, self.ops + self.links, self.path_nodes)


class ShadowLinkEval:
    """Tarjan's sophisticated link-eval structure with findroot support.

    The forest F defined by the links is represented by a shadow forest R
    whose trees are split into stacked subtrees; ``shp`` is the in-subtree
    parent (0 marks subroots), ``shc`` links each subroot to the next
    subroot down.  Invariants maintained:

      (i)  eval(v) = extreme of b(u) over in-subtree ancestors u of v,
      (ii) b(shc(v)) no worse than b(v),
      (iii) by-rank: rank(shp(v)) > rank(v).

    Compression happens inside subtrees only; Parts 1-3 of ``link`` (plus
    Part 0 for linking-by-rank) restore the invariants.  Part 3 runs after
    Part 2 only, and stops on value ties (strict comparison).  ``size`` is
    kept at subroots (0 marks non-subroots in by-size mode); ranks freeze
    when a node stops being a subroot.  Findroot shortcuts: each non-root
    subroot knows the deepest subroot of its tree (``deep``), the deepest
    subroot knows the tree root (``troot``), and each root caches its own
    deepest subroot (``deeproot``).
    """

    __slots__ = ("n", "variant", "mode", "worst", "b", "barg", "shp", "shc",
                 "size", "rank", "maxrank", "deep", "troot", "deeproot",
                 "is_froot", "ops", "path_nodes", "links")

    def __init__(self, n, variant=MIN, mode=BY_RANK, worst=None):
        if variant not in (MIN, MAX):
            raise ValueError("variant must be 'min' or 'max'")
        if mode not in (BY_SIZE, BY_RANK):
            raise ValueError("mode must be 'by-size' or 'by-rank'")
        self.n = n
        self.variant = variant
        self.mode = mode
        if worst is None:
            worst = math.inf if variant == MIN else -math.inf
        self.worst = worst
        self.b = [worst] * (n + 1)
        self.barg = list(range(n + 1))
        self.shp = [0] * (n + 1)
        self.shc = [0] * (n + 1)
        self.size = [1] * (n + 1)
        self.rank = [0] * (n + 1)
        self.maxrank = [0] * (n + 1)
        self.deep = [0] * (n + 1)
        self.troot = list(range(n + 1))
        self.deeproot = list(range(n + 1))
        self.is_froot = [True] * (n + 1)
        self.is_froot[0] = False
        self.ops = 0
        self.path_nodes = 0
        self.links = 0

    def _better(self, a, b):
        return a < b if self.variant == MIN else a > b

    def _fold(self, u, val, arg):
        if self._better(val, self.b[u]):
            self.b[u] = val
            self.barg[u] = arg

    def link(self, v, w, x):
        if not (self.is_froot[v] and self.is_froot[w]):
            raise ValueError("link arguments must be roots")
        if v == w:
            raise ValueError("link of a root with itself")
        self.links += 1
        b, shp, shc = self.b, self.shp, self.shc
        b[w] = x
        self.barg[w] = w
        self.is_froot[w] = False
        if self.mode == BY_SIZE:
            size = self.size
            sw = size[w]
            if size[v] >= sw:
                self._part1(v, w, x)
            else:
                self._part2(v, w)
                self._part3(v, w, x)
            size[v] += sw
        else:
            mv, mw = self.maxrank[v], self.maxrank[w]
            if mv == mw:
                self._part0(v, w)
            elif mv > mw:
                self.rank[v] = max(self.rank[v], mw + 1)
                self._part1(v, w, x)
            else:
                self._part2_rank(v, w)
                self._part3(v, w, x)

    def _part1(self, v, w, x):
        # Combine v's own subtree with every subtree of w's tree.
        shp, shc, size = self.shp, self.shc, self.size
        fold = self._fold
        u = w
        while u:
            nxt = shc[u]
            shp[u] = v
            shc[u] = 0
            size[u] = 0
            fold(u, x, w)
            u = nxt

    def _part0(self, v, w):
        # Equal maxranks: merge all subtrees of both trees under v.
        shp, shc, size = self.shp, self.shc, self.size
        fold = self._fold
        bw = self.b[w]
        u = shc[v]
        while u:
            nxt = shc[u]
            shp[u] = v
            shc[u] = 0
            size[u] = 0
            u = nxt
        u = w
        while u:
            nxt = shc[u]
            shp[u] = v
            shc[u] = 0
            size[u] = 0
            fold(u, bw, w)
            u = nxt
        shc[v] = 0
        self.maxrank[v] += 1
        self.rank[v] = self.maxrank[v]
        self.deeproot[v] = v

    def _part2(self, v, w):
        # Flatten v's chain into one subtree, then hang w's chain below it.
        shp, shc, size = self.shp, self.shc, self.size
        u = shc[v]
        while u:
            nxt = shc[u]
            shp[u] = v
            shc[u] = 0
            size[u] = 0
            u = nxt
        shc[v] = w
        dw = self.deeproot[w]
        self.deep[w] = dw
        self.troot[dw] = v
        self.deeproot[v] = dw

    def _part2_rank(self, v, w):
        shp, shc = self.shp, self.shc
        if shc[v]:
            self.rank[v] = self.maxrank[v] + 1
            u = shc[v]
            while u:
                nxt = shc[u]
                shp[u] = v
                shc[u] = 0
                self.size[u] = 0
                u = nxt
        self.maxrank[v] = self.maxrank[w]
        shc[v] = w
        dw = self.deeproot[w]
        self.deep[w] = dw
        self.troot[dw] = v
        self.deeproot[v] = dw

    def _part3(self, v, w, x):
        shp, shc, size, rank = self.shp, self.shc, self.size, self.rank
        better = self._better
        by_size = self.mode == BY_SIZE
        while True:
            s0 = shc[v]
            s1 = shc[s0]
            if not s1 or not better(x, self.b[s1]):
                break
            if by_size:
                first_wins = size[s0] - size[s1] >= size[s1] - size[shc[s1]]
            else:
                r0, r1 = rank[s0], rank[s1]
                if r0 == r1:
                    new_rank = r0 + 1
                    if new_rank > self.maxrank[v]:
                        self.maxrank[v] = new_rank
                    rank[s0] = new_rank
                    first_wins = True
                else:
                    first_wins = r0 > r1
            if first_wins:
                nxt = shc[s1]
                shp[s1] = s0
                shc[s0] = nxt
                shc[s1] = 0
                if by_size:
                    size[s1] = 0
                if nxt == 0:
                    # s1 was the deepest subroot; s0 takes over.
                    self.deep[s0] = s0
                    self.troot[s0] = v
                    self.deeproot[v] = s0
            else:
                shp[s0] = s1
                shc[v] = s1
                self.b[s1] = x
                self.barg[s1] = w
                if by_size:
                    size[s1] = size[s0]
                    size[s0] = 0

    def _compress(self, v):
        """Compress the in-subtree path from v's subroot to v; returns the
        subroot."""
        shp = self.shp
        path = []
        x = v
        px = shp[x]
        while px != 0:
            path.append(x)
            x = px
            px = shp[x]
        self.path_nodes += len(path) + 1
        if len(path) > 1:
            b, barg = self.b, self.barg
            better = self._better
            for i in range(len(path) - 2, -1, -1):
                y = path[i]
                shp[y] = x
                prev = path[i + 1]
                if better(b[prev], b[y]):
                    b[y] = b[prev]
                    barg[y] = barg[prev]
        return x

    def eval(self, v):
        self.ops += 1
        if self.shp[v] == 0:
            self.path_nodes += 1
            return self.b[v]
        self._compress(v)
        bp = self.b[self.shp[v]]
        return bp if self._better(bp, self.b[v]) else self.b[v]

    def eval_arg(self, v):
        self.ops += 1
        if self.shp[v] == 0:
            self.path_nodes += 1
            return self.b[v], self.barg[v]
        self._compress(v)
        p = self.shp[v]
        if self._better(self.b[p], self.b[v]):
            return self.b[p], self.barg[p]
        return self.b[v], self.barg[v]

    def findroot(self, v):
        self.ops += 1
        if self.shp[v] == 0:
            s = v
            self.path_nodes += 1
        else:
            s = self._compress(v)
        if self.is_froot[s]:
            return s
        return self.troot[self.deep[s]]

    def stats_row(self, structure="linkeval-shadow"):
        return "%s,%d,%d,%d" % (structure, self.n, self.ops + self.links, self.path_nodes)
