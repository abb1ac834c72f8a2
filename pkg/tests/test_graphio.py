import pytest
from hypothesis import given, settings, strategies as st

from treepath.graphio import (Digraph, GraphFormatError, ancestor, dfs_preorder,
                              parse_graph, root_tree, serialize_graph)


def test_parse_smallest_tree():
    g = parse_graph("p tree 2 1\na 1 2\n")
    assert g.kind == "tree" and g.n == 2
    assert g.arcs == ((1, 2, None),)


def test_parse_flow_three_cycle():
    g = parse_graph("p flow 3 3\nr 1\na 1 2\na 2 3\na 3 1\n")
    assert g.kind == "flow" and g.root == 1 and len(g.arcs) == 3


def test_parse_disconnected_graph_rejected():
    with pytest.raises(GraphFormatError):
        parse_graph("p graph 2 0\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as e:
        parse_graph("c hi\np tree 2 1\na 1 5\n")
    assert e.value.line == 3
    with pytest.raises(GraphFormatError):
        parse_graph("p flow 2 1\na 1 2 nan\n")
    with pytest.raises(GraphFormatError):
        parse_graph("p tree 2 1\nr 1\na 1 2\n")  # root line outside flow
    with pytest.raises(GraphFormatError):
        parse_graph("p flow 2 1\na 1 2\na 1 2\n")  # too many arcs


def test_flow_unreachable_rejected():
    with pytest.raises(GraphFormatError):
        parse_graph("p flow 3 1\nr 1\na 1 2\n")


def test_comments_and_default_root():
    g = parse_graph("c x\np flow 2 1\nc y\na 1 2\n")
    assert g.root == 1


@st.composite
def flowgraphs(draw):
    n = draw(st.integers(2, 40))
    extra = draw(st.integers(0, 60))
    seedpairs = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)),
                              min_size=extra, max_size=extra))
    arcs = [(draw(st.integers(1, v - 1)), v, None) for v in range(2, n + 1)]
    arcs += [(u, v, None) for u, v in seedpairs]
    return Digraph(n=n, arcs=tuple(arcs), kind="flow", root=1)


@settings(max_examples=60, deadline=None)
@given(flowgraphs(), st.booleans())
def test_round_trip(g, weighted):
    if weighted:
        arcs = tuple((u, v, 0.25 + i) for i, (u, v, _w) in enumerate(g.arcs))
        g = Digraph(n=g.n, arcs=arcs, kind="flow", root=1)
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_dfs_forced_forward_arc():
    # r->a, r->b, a->b in adjacency order: (r,b) is examined after b got
    # discovered through a, hence a forward arc.
    g = parse_graph("p flow 3 3\nr 1\na 1 2\na 2 3\na 1 3\n")
    _t, classes = dfs_preorder(g)
    assert classes == ["tree", "tree", "forward"]


def test_dfs_back_arc_on_cycle():
    g = parse_graph("p flow 3 3\nr 1\na 1 2\na 2 3\na 3 1\n")
    _t, classes = dfs_preorder(g)
    assert classes == ["tree", "tree", "back"]


def _chain_ancestor(t, u, v):
    x = v
    while x:
        if x == u:
            return True
        x = t.parent[x]
    return False


@settings(max_examples=40, deadline=None)
@given(flowgraphs())
def test_classification_matches_ancestor_tables(g):
    t, classes = dfs_preorder(g)
    for (u, v, _w), cls in zip(g.arcs, classes):
        if cls == "tree":
            assert t.parent[v] == u or (u == v)
            assert t.parent[v] == u
        elif cls == "forward":
            assert _chain_ancestor(t, u, v)
        elif cls == "back":
            assert _chain_ancestor(t, v, u) and u != v
        else:
            assert not _chain_ancestor(t, u, v) and not _chain_ancestor(t, v, u)
    # partition law: back iff ancestor(v, u) and v != u
    for (u, v, _w), cls in zip(g.arcs, classes):
        assert (cls == "back") == (ancestor(t, v, u) and u != v)


@settings(max_examples=40, deadline=None)
@given(flowgraphs())
def test_ancestor_agrees_with_parent_chain(g):
    t, _ = dfs_preorder(g)
    for u in range(1, g.n + 1):
        for v in range(1, g.n + 1):
            assert ancestor(t, u, v) == _chain_ancestor(t, u, v)
    assert all(ancestor(t, t.root, v) for v in range(1, g.n + 1))
    assert all(ancestor(t, v, v) for v in range(1, g.n + 1))


@settings(max_examples=40, deadline=None)
@given(flowgraphs())
def test_preorder_parent_property(g):
    t, _ = dfs_preorder(g)
    assert sorted(t.pre[1:]) == list(range(1, g.n + 1))
    for v in range(1, g.n + 1):
        if v != t.root:
            assert t.pre[t.parent[v]] < t.pre[v]


def test_root_tree_deterministic():
    g = parse_graph("p tree 4 3\na 1 2\na 2 3\na 1 4\n")
    t = root_tree(g)
    assert t.parent[1:] == [0, 1, 2, 1]
    assert t.postorder() == [3, 2, 4, 1]
