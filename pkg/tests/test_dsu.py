import random

import pytest
from hypothesis import given, settings, strategies as st

from treepath.dsu import DsuForest, inverse_ackermann, make_sets


def test_singleton():
    f = make_sets(1)
    assert f.find(1) == 1


def test_all_finds_distinct():
    f = make_sets(5)
    assert len({f.find(v) for v in range(1, 6)}) == 5


def test_counters_zero_after_construction():
    f = make_sets(4, "by-rank")
    assert f.finds == 0 and f.find_path_nodes == 0


def test_unite_designates_first_argument():
    f = make_sets(3)
    f.unite(1, 2)
    assert f.find(2) == 1
    f.unite(1, 3)
    assert f.find(3) == 1


def test_unite_errors():
    with pytest.raises(ValueError):
        make_sets(0)
    f = make_sets(4)
    f.unite(1, 2)
    with pytest.raises(ValueError):
        f.unite(1, 2)   # 2 no longer designated
    with pytest.raises(ValueError):
        f.unite(1, f.find(2))  # same set
    with pytest.raises(ValueError):
        DsuForest(3, "by-magic")


def test_find_counts_path_nodes():
    f = make_sets(2)
    f.find(1)
    assert f.find_path_nodes == 1  # singleton path has one node


def test_second_find_is_shorter_after_compression():
    # Build a by-rank chain of depth 3 (4 nodes), then find the deepest
    # twice; the second traversal must be shorter than the first.
    f = make_sets(4, "by-rank")
    f.unite(1, 2)
    f.unite(3, 4)
    f.unite(1, 3)   # rank tie: 1 wins; 4 now two steps deep
    before = f.find_path_nodes
    f.find(4)
    first = f.find_path_nodes - before
    f.find(4)
    second = f.find_path_nodes - before - first
    assert first == 3 and second <= 2


class NaiveDsu:
    """Quick-union without compression or balancing; the trace oracle."""

    def __init__(self, n):
        self.parent = list(range(n + 1))
        self.designated = list(range(n + 1))

    def find(self, v):
        while self.parent[v] != v:
            v = self.parent[v]
        return self.designated[v]

    def unite(self, v, w):
        rv, rw = v, w
        while self.parent[rv] != rv:
            rv = self.parent[rv]
        while self.parent[rw] != rw:
            rw = self.parent[rw]
        self.parent[rw] = rv
        self.designated[rv] = v


@pytest.mark.parametrize("mode", ["by-size", "by-rank"])
def test_random_trace_matches_naive_oracle(mode):
    rng = random.Random(12345)
    n = 300
    f = make_sets(n, mode)
    g = NaiveDsu(n)
    designated = set(range(1, n + 1))
    for _ in range(10_000):
        if len(designated) > 1 and rng.random() < 0.4:
            v, w = rng.sample(sorted(designated), 2)
            f.unite(v, w)
            g.unite(v, w)
            designated.discard(w)
        else:
            x = rng.randrange(1, n + 1)
            assert f.find(x) == g.find(x)
    assert all(f.find(x) == g.find(x) for x in range(1, n + 1))


def _reference_heights(n, mode, unions):
    """Replay unions only (no finds) and count nodes per height."""
    f = make_sets(n, mode)
    for v, w in unions:
        f.unite(v, w)
    heights = [0] * (n + 1)
    depth_children = [[] for _ in range(n + 1)]
    for x in range(1, n + 1):
        if f.parent[x]:
            depth_children[f.parent[x]].append(x)
    order = []
    roots = [x for x in range(1, n + 1) if f.parent[x] == 0]
    stack = list(roots)
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(depth_children[x])
    h = [0] * (n + 1)
    for x in reversed(order):
        for c in depth_children[x]:
            h[x] = max(h[x], h[c] + 1)
    counts = {}
    for x in range(1, n + 1):
        counts[h[x]] = counts.get(h[x], 0) + 1
    return counts


@pytest.mark.parametrize("mode", ["by-size", "by-rank"])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_reference_forest_is_two_balanced(mode, seed):
    rng = random.Random(seed)
    n = 256
    # Interleave finds with unions, then rebuild the reference forest from
    # the union trace alone: #nodes at height h <= n / 2^h.
    f = make_sets(n, mode)
    designated = set(range(1, n + 1))
    unions = []
    while len(designated) > 1:
        v, w = rng.sample(sorted(designated), 2)
        f.unite(v, w)
        unions.append((v, w))
        designated.discard(w)
        for _ in range(2):
            f.find(rng.randrange(1, n + 1))
    counts = _reference_heights(n, mode, unions)
    for h, c in counts.items():
        assert c <= n / 2 ** h


def test_designated_element_law():
    rng = random.Random(7)
    n = 64
    f = make_sets(n)
    members = {v: {v} for v in range(1, n + 1)}
    designated = set(members)
    while len(designated) > 1:
        v, w = rng.sample(sorted(designated), 2)
        f.unite(v, w)
        members[v] |= members.pop(w)
        designated.discard(w)
        assert all(f.find(x) == v for x in members[v])


def test_compression_never_changes_partition():
    rng = random.Random(99)
    n = 128
    f = make_sets(n, "by-rank")
    designated = set(range(1, n + 1))
    for _ in range(400):
        if len(designated) > 1 and rng.random() < 0.5:
            v, w = rng.sample(sorted(designated), 2)
            f.unite(v, w)
            designated.discard(w)
        before = [f.find(x) for x in range(1, n + 1)]
        f.find(rng.randrange(1, n + 1))
        assert [f.find(x) for x in range(1, n + 1)] == before


def test_alpha_of_2_16_is_4():
    assert inverse_ackermann(2 ** 16, 2 ** 16) == 4


def test_alpha_one_for_dense():
    # A(1, j) = 2^j beats log n as soon as j >= log log n.
    for n in (4, 16, 2 ** 10, 2 ** 20):
        m = n * max(n.bit_length(), 1)
        assert inverse_ackermann(m, n) == 1


def test_alpha_nonincreasing_in_m():
    for n in (2, 7, 64, 1000, 2 ** 16):
        vals = [inverse_ackermann(m, n)
                for m in (1, n // 2 + 1, n, 2 * n, 8 * n, n * n)]
        assert vals == sorted(vals, reverse=True)


def test_alpha_at_most_four_up_to_2_64():
    for n in (2, 3, 2 ** 8, 2 ** 16, 2 ** 21 + 5, 2 ** 32, 2 ** 50, 2 ** 64):
        assert 1 <= inverse_ackermann(n, n) <= 4


def test_alpha_domain_errors():
    with pytest.raises(ValueError):
        inverse_ackermann(0, 4)
    with pytest.raises(ValueError):
        inverse_ackermann(4, 1)
