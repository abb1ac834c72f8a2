import random

import pytest

from treepath.generate import make_rng, random_recursive_tree
from treepath.graphio import ancestor, root_tree, tree_from_parents
from treepath.nca import (CartesianTree, cartesian_tree, nca_ahu, nca_linear,
                          range_min, range_minima)
from treepath.oracles import nca_oracle


def chain(n):
    return tree_from_parents([0, 0] + list(range(1, n)), 1)


def test_self_query():
    t = chain(4)
    assert nca_ahu(t, [(3, 3)]) == [3]
    assert nca_linear(t, [(3, 3)], g=2) == [3]


def test_ancestor_case_on_path():
    t = chain(6)
    assert nca_ahu(t, [(6, 3)]) == [3]
    assert nca_ahu(t, [(3, 6)]) == [3]


@pytest.mark.parametrize("seed", range(8))
def test_random_trees_match_oracle(seed):
    rng = make_rng(seed)
    n = rng.randrange(2, 160)
    t = root_tree(random_recursive_tree(n, rng))
    pairs = [(rng.randrange(1, n + 1), rng.randrange(1, n + 1))
             for _ in range(60)]
    want = nca_oracle(t, pairs)
    assert nca_ahu(t, pairs) == want
    for g in (1, 2, 4):
        assert nca_linear(t, pairs, g=g) == want


def test_small_tree_single_batch():
    rng = make_rng(42)
    t = root_tree(random_recursive_tree(4, rng))
    pairs = [(u, v) for u in range(1, 5) for v in range(1, 5)]
    assert nca_linear(t, pairs, g=6) == nca_ahu(t, pairs)


def test_mixed_workload_forced_g4():
    rng = make_rng(1234)
    n = 400
    t = root_tree(random_recursive_tree(n, rng))
    pairs = [(rng.randrange(1, n + 1), rng.randrange(1, n + 1))
             for _ in range(3000)]
    assert nca_linear(t, pairs, g=4) == nca_ahu(t, pairs)


@pytest.mark.parametrize("seed", range(4))
def test_answers_are_maximal_common_ancestors(seed):
    rng = make_rng(50 + seed)
    n = rng.randrange(2, 120)
    t = root_tree(random_recursive_tree(n, rng))
    pairs = [(rng.randrange(1, n + 1), rng.randrange(1, n + 1))
             for _ in range(40)]
    for (v, w), a in zip(pairs, nca_linear(t, pairs, g=2)):
        assert ancestor(t, a, v) and ancestor(t, a, w)
        for c in t.children[a]:
            assert not (ancestor(t, c, v) and ancestor(t, c, w))


def test_cartesian_tree_examples():
    ct = cartesian_tree([3, 1, 2])
    assert ct.root == 2
    ct = cartesian_tree([1, 2, 3, 4])
    assert ct.root == 1 and ct.right[1] == 2 and ct.right[2] == 3


def test_cartesian_tree_tie_leftmost():
    ct = cartesian_tree([2, 1, 1, 1])
    assert ct.root == 2


def _inorder(ct):
    out = []
    stack = [(ct.root, 0)]
    while stack:
        v, phase = stack.pop()
        if not v:
            continue
        if phase == 0:
            stack.append((v, 1))
            stack.append((ct.left[v], 0))
        else:
            out.append(v)
            stack.append((ct.right[v], 0))
    return out


@pytest.mark.parametrize("seed", range(6))
def test_cartesian_tree_properties(seed):
    rng = random.Random(seed)
    values = [rng.randrange(0, 8) for _ in range(rng.randrange(1, 80))]
    ct = cartesian_tree(values)
    assert _inorder(ct) == list(range(1, len(values) + 1))
    for v in range(1, len(values) + 1):
        if ct.parent[v]:
            assert values[ct.parent[v] - 1] <= values[v - 1]


def test_cartesian_tree_empty_rejected():
    with pytest.raises(ValueError):
        cartesian_tree([])


def test_range_min_examples():
    ct = cartesian_tree([5, 4, 3, 2, 1])
    assert range_min(ct, 1, 5) == (5, 1)
    assert range_min(ct, 2, 2) == (2, 4)
    with pytest.raises(ValueError):
        range_min(ct, 3, 2)


@pytest.mark.parametrize("seed", range(5))
def test_range_minima_match_scan(seed):
    rng = random.Random(100 + seed)
    values = [rng.randrange(0, 9) for _ in range(rng.randrange(1, 90))]
    n = len(values)
    ct = cartesian_tree(values)
    ranges = []
    for _ in range(60):
        i = rng.randrange(1, n + 1)
        j = rng.randrange(i, n + 1)
        ranges.append((i, j))
    got = range_minima(ct, ranges)
    for (i, j), (pos, val) in zip(ranges, got):
        lo = min(values[i - 1:j])
        assert val == lo
        assert pos == i + values[i - 1:j].index(lo)  # leftmost minimum
