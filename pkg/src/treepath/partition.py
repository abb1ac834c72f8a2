"""Tree partitioning: bottom-level microtrees (fringe/core), left-path
decomposition of the core, and the full partition used by Kruskal trees.

A subtree T(v) is a microtree iff |T(v)| <= g < |T(parent(v))|; the root
never starts a microtree.  The union of microtrees is the fringe, the rest
the core.  Left paths chain each core vertex to its smallest core child, so
only microtrees hang to the left of a path.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def default_g(n):
    """g = max(1, floor((log2 n)^(1/3)))."""
    if n < 2:
        return 1
    return max(1, int((n.bit_length() - 1) ** (1.0 / 3.0)))


@dataclass
class TreePartition:
    g: int
    micro: list            # microtree-root id per vertex, 0 for core vertices
    core_flag: list
    mroots: list           # microtree roots in preorder
    paths: list = field(default_factory=list)    # (top, bottom, members)
    chosen_child: list = field(default_factory=list)
    path_id: list = field(default_factory=list)  # -1 fringe, else index into paths
    path_pos: list = field(default_factory=list)


def fringe_core(t, g):
    """Bottom-level microtree partition of ``t`` with size threshold ``g``."""
    if g < 1:
        raise ValueError("g must be >= 1")
    n = t.n
    parent, size, order = t.parent, t.size, t.order
    micro = [0] * (n + 1)
    core_flag = [False] * (n + 1)
    mroots = []
    for k in range(1, n + 1):
        v = order[k]
        p = parent[v]
        if p != 0 and size[v] <= g and size[p] > g:
            micro[v] = v
            mroots.append(v)
        elif p != 0 and micro[p] != 0:
            micro[v] = micro[p]
        else:
            core_flag[v] = True
    return TreePartition(g=g, micro=micro, core_flag=core_flag, mroots=mroots)


def left_paths(t, part):
    """Decompose the core into maximal left paths (smallest-core-child rule)
    and fill ``paths``, ``chosen_child``, ``path_id``, ``path_pos``."""
    n = t.n
    pre = t.pre
    core = part.core_flag
    chosen = [0] * (n + 1)
    for v in range(1, n + 1):
        if not core[v]:
            continue
        best = 0
        for c in t.children[v]:
            if core[c] and (best == 0 or pre[c] < pre[best]):
                best = c
        chosen[v] = best
    paths = []
    path_id = [-1] * (n + 1)
    path_pos = [0] * (n + 1)
    for k in range(1, n + 1):
        v = t.order[k]
        if not core[v]:
            continue
        p = t.parent[v]
        if p != 0 and core[p] and chosen[p] == v:
            continue  # not a path top
        members = []
        u = v
        while u:
            path_id[u] = len(paths)
            path_pos[u] = len(members)
            members.append(u)
            u = chosen[u]
        paths.append((v, members[-1], members))
    part.paths = paths
    part.chosen_child = chosen
    part.path_id = path_id
    part.path_pos = path_pos
    return part


@dataclass
class FullPartition:
    g: int
    s: list
    micro: list
    marked: list


def full_partition(t, g):
    """Partition all of ``t`` into microtrees of size <= g by the bottom-up
    residual-size sweep: when the residual size s(v) exceeds g, every child
    of v is marked as a microtree root and s(v) resets to 1."""
    if g < 1:
        raise ValueError("g must be >= 1")
    n = t.n
    order, parent = t.order, t.parent
    s = [1] * (n + 1)
    marked = [False] * (n + 1)
    for k in range(n, 0, -1):
        v = order[k]
        if s[v] > g:
            for c in t.children[v]:
                marked[c] = True
            s[v] = 1
        p = parent[v]
        if p != 0:
            s[p] += s[v]
    micro = [0] * (n + 1)
    micro[t.root] = t.root
    for k in range(2, n + 1):
        v = order[k]
        micro[v] = v if marked[v] else micro[parent[v]]
    return FullPartition(g=g, s=s, micro=micro, marked=marked)
