import itertools
import random

import pytest

from treepath.topobatch import (InstanceGroup, MicroInstance, SolverError,
                                batch_solve, encode, group,
                                radix_sort_sequences, solve_and_transfer)


def inst(n, labels, arcs):
    return MicroInstance(n=n, vertex_labels=tuple(labels), arcs=tuple(arcs))


def test_encode_single_vertex():
    assert encode(inst(1, [0], []), 4) == [1, 1, 0]


def test_isomorphic_instances_encode_equal():
    a = inst(3, [1, 0, 2], [(1, 2, 0), (1, 3, 0)])
    b = MicroInstance(n=3, vertex_labels=(1, 0, 2),
                      arcs=((1, 2, 0), (1, 3, 0)), payload="other")
    assert encode(a, 4) == encode(b, 4)


def test_different_labels_encode_differently():
    a = inst(2, [0, 1], [(1, 2, 0)])
    b = inst(2, [0, 2], [(1, 2, 0)])
    assert encode(a, 4) != encode(b, 4)


def test_encode_errors():
    with pytest.raises(ValueError):
        encode(inst(9, [0] * 9, []), 4)
    with pytest.raises(ValueError):
        encode(inst(1, [9], []), 4)


def test_radix_sort_matches_sorted():
    rng = random.Random(3)
    for _ in range(50):
        seqs = [[rng.randrange(0, 7) for _ in range(rng.randrange(0, 6))]
                for _ in range(rng.randrange(1, 30))]
        order = radix_sort_sequences(seqs, 7)
        assert sorted(order) == list(range(len(seqs)))
        assert [seqs[i] for i in order] == sorted(seqs)
        # stability: equal keys keep input order
        for a, b in zip(order, order[1:]):
            if seqs[a] == seqs[b]:
                assert a < b


def test_group_identical_instances():
    xs = [inst(2, [0, 0], [(1, 2, 0)]) for _ in range(5)]
    gs = group([encode(x, 4) for x in xs], 4)
    assert len(gs) == 1 and gs[0].members == [0, 1, 2, 3, 4]
    assert gs[0].canonical == 0


def test_group_all_distinct():
    xs = [inst(1, [k], []) for k in range(5)]
    gs = group([encode(x, 6) for x in xs], 6)
    assert len(gs) == 5
    assert sorted(g.canonical for g in gs) == [0, 1, 2, 3, 4]


def test_group_count_matches_enumeration():
    # All labeled 2-vertex digraphs over a 2-letter arc alphabet with at
    # most one arc: group count equals the count of distinct encodings.
    universe = []
    for lab1, lab2 in itertools.product((1, 2), repeat=2):
        universe.append(inst(2, [lab1, lab2], []))
        for u, v in ((1, 2), (2, 1)):
            for alab in (1, 2):
                universe.append(inst(2, [lab1, lab2], [(u, v, alab)]))
    rng = random.Random(0)
    pool = [rng.choice(universe) for _ in range(200)]
    encs = [encode(x, 5) for x in pool]
    gs = group(encs, 5)
    assert len(gs) == len({tuple(e) for e in encs})
    covered = sorted(i for g in gs for i in g.members)
    assert covered == list(range(len(pool)))


def test_transfer_identity_solver():
    xs = [inst(2, [0, 0], [(1, 2, 0)]) for _ in range(4)]
    sols = batch_solve(xs, 4, solver=lambda i: list(range(i.n)))
    assert sols == [[0, 1]] * 4


def test_transfer_soundness_random_collections():
    rng = random.Random(9)

    def solver(i):
        # any deterministic structural computation: per-vertex indegree
        deg = [0] * (i.n + 1)
        for _u, v, _lab in i.arcs:
            deg[v] += 1
        return deg[1:]

    pool = []
    for _ in range(120):
        n = rng.randrange(1, 5)
        arcs = [(rng.randrange(1, n + 1), rng.randrange(1, n + 1),
                 rng.randrange(0, 2)) for _ in range(rng.randrange(0, 4))]
        pool.append(inst(n, [0] * n, arcs))
    sols = batch_solve(pool, 6, solver)
    assert sols == [solver(x) for x in pool]


def test_run_per_duplicate_mode():
    # canonical "program": list of arc positions; evaluation sums payload
    xs = [MicroInstance(n=2, vertex_labels=(0, 0), arcs=((1, 2, 0),),
                        payload=[w]) for w in (3.0, 5.0, 7.0)]

    def solver(i):
        return [0]  # positions of arcs to sum

    def run(instance, program):
        return sum(instance.payload[p] for p in program)

    sols = solve_and_transfer(xs, group([encode(x, 4) for x in xs], 4),
                              solver, transfer=run, mode="run-per-duplicate")
    assert sols == [3.0, 5.0, 7.0]


def test_solver_error_carries_instance_id():
    xs = [inst(1, [0], [])]

    def solver(i):
        raise RuntimeError("boom")

    with pytest.raises(SolverError) as e:
        batch_solve(xs, 4, solver)
    assert "instance 0" in str(e.value)


def test_encoded_size_counter_is_linear():
    rng = random.Random(4)
    totals = []
    for count in (100, 200, 400):
        pool = []
        for _ in range(count):
            n = rng.randrange(1, 4)
            pool.append(inst(n, [0] * n, [(1, n, 0)] if n > 1 else []))
        counters = {}
        batch_solve(pool, 5, lambda i: None, counters=counters)
        totals.append(counters["encoded_tokens"] / count)
    # per-instance encoded size stays bounded as the collection doubles
    assert max(totals) <= 2 * min(totals)
