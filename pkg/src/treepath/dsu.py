"""Disjoint set union with designated elements, path compression, and
balanced unions.

Sets are accessed through their *designated element*: ``unite(v, w)``
requires both arguments to be designated and makes ``v`` the designated
element of the union.  The designated element is kept at distance at most
one from its tree root so unions run in constant time.  Roots are flagged
by parent 0; the size/rank field is meaningful only at roots (it doubles as
the non-root marker in by-size mode).  ``find`` compresses and counts the
nodes it traverses, which is the instrumentation every caller's linearity
check is built on.
"""

from __future__ import annotations

BY_SIZE = "by-size"
BY_RANK = "by-rank"


class DsuForest:
    __slots__ = ("n", "mode", "parent", "weight", "designated",
                 "finds", "find_path_nodes", "unites")

    def __init__(self, n, mode=BY_SIZE):
        if n < 1:
            raise ValueError("need at least one element")
        if mode not in (BY_SIZE, BY_RANK):
            raise ValueError("mode must be %r or %r" % (BY_SIZE, BY_RANK))
        self.n = n
        self.mode = mode
        self.parent = [0] * (n + 1)
        self.weight = [1] * (n + 1) if mode == BY_SIZE else [0] * (n + 1)
        self.designated = list(range(n + 1))
        self.finds = 0
        self.find_path_nodes = 0
        self.unites = 0

    def _root_of_designated(self, v):
        p = self.parent[v]
        if p == 0:
            return v
        if self.parent[p] == 0 and self.designated[p] == v:
            return p
        raise ValueError("%d is not a designated element" % v)

    def unite(self, v, w):
        """Merge the sets designated by ``v`` and ``w``; ``v`` designates the
        union.  Balanced-union rule: the larger size / higher rank root
        becomes parent; on ties ``v``'s root wins."""
        rv = self._root_of_designated(v)
        rw = self._root_of_designated(w)
        if rv == rw:
            raise ValueError("unite of elements in the same set")
        weight = self.weight
        if self.mode == BY_SIZE:
            if weight[rv] >= weight[rw]:
                top, bot = rv, rw
            else:
                top, bot = rw, rv
            weight[top] += weight[bot]
            weight[bot] = 0
        else:
            if weight[rv] >= weight[rw]:
                top, bot = rv, rw
                if weight[rv] == weight[rw]:
                    weight[top] += 1
            else:
                top, bot = rw, rv
        self.parent[bot] = top
        # Keep the designated element within one step of the root.
        if v != top and self.parent[v] != top:
            self.parent[v] = top
        self.designated[top] = v
        self.unites += 1

    def find(self, v):
        """Designated element of ``v``'s set; compresses the traversed path
        and adds its node count (root included) to ``find_path_nodes``."""
        parent = self.parent
        path = []
        x = v
        px = parent[x]
        while px != 0:
            path.append(x)
            x = px
            px = parent[x]
        self.finds += 1
        self.find_path_nodes += len(path) + 1
        for y in path:
            parent[y] = x
        return self.designated[x]

    def unite_any(self, x, y):
        """Convenience wrapper allowing arbitrary members as arguments:
        ``unite(find(x), find(y))``.  The new designated element is
        ``find(x)``."""
        v = self.find(x)
        w = self.find(y)
        self.unite(v, w)
        return v

    def stats_row(self, structure="dsu"):
        ops = self.finds + self.unites
        return "%s,%d,%d,%d" % (structure, self.n, ops, self.find_path_nodes)


def make_sets(n, mode=BY_SIZE):
    """``n`` singleton sets, each node its own designated element."""
    return DsuForest(n, mode)


def _ack_saturating(i, j, cap, memo):
    """min(A(i, j), cap + 1) for the Ackermann variant A(1,j)=2^j,
    A(i,1)=A(i-1,2), A(i,j)=A(i-1,A(i,j-1))."""
    key = (i, j)
    got = memo.get(key)
    if got is not None:
        return got
    if i == 1:
        # 2^j > cap  iff  j >= cap.bit_length()
        val = cap + 1 if j >= cap.bit_length() else 2 ** j
    elif j == 1:
        val = _ack_saturating(i - 1, 2, cap, memo)
    else:
        inner = _ack_saturating(i, j - 1, cap, memo)
        if inner > cap:
            # A is increasing, and A(1, inner) = 2^inner already exceeds cap.
            val = cap + 1
        else:
            val = _ack_saturating(i - 1, inner, cap, memo)
    memo[key] = val
    return val


def inverse_ackermann(m, n):
    """alpha(m, n) = min{i >= 1 : A(i, floor(m/n)) > log2 n}.

    Evaluated with overflow-saturating arithmetic; ``floor(m/n)`` is clamped
    to at least 1 so the recurrence's domain (j >= 1) also covers m < n.
    """
    if m < 1 or n < 2:
        raise ValueError("need m >= 1 and n >= 2")
    j = max(m // n, 1)
    # An integer A exceeds log2(n) iff it exceeds floor(log2 n).
    cap = n.bit_length() - 1
    memo = {}
    i = 1
    while _ack_saturating(i, j, cap, memo) <= cap:
        i += 1
    return i
