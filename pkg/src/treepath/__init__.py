"""Tree-path-evaluation algorithms on graphs, flowgraphs, and trees.

The package bundles a family of algorithms that all reduce to evaluating a
function (minimum, maximum, set representative) over paths in a tree:
offline nearest common ancestors, minimum-spanning-tree verification and
randomized construction, flowgraph interval analysis, immediate dominators,
and Kruskal component trees, together with the supporting data structures
(disjoint set union, link-eval forests, microtree partitions, batched
topological computations).
"""

from .graphio import Digraph, RootedTree, parse_graph, serialize_graph, dfs_preorder, ancestor

__all__ = [
    "Digraph",
    "RootedTree",
    "parse_graph",
    "serialize_graph",
    "dfs_preorder",
    "ancestor",
]
