"""Batched topological graph computations.

Small labeled instances are encoded as token sequences over one master list
(tokens are master-list positions, represented as dense ints), grouped into
isomorphism classes with a bucket radix sort for variable-length lists, and
solved once per class.  Solutions are either copied to duplicates through
the position bijection (``transfer`` mode) or re-evaluated per duplicate
against its own data (``run-per-duplicate`` mode, for comparison-style
solutions whose outputs reference instance-local values).
"""

from __future__ import annotations

from dataclasses import dataclass, field


class SolverError(RuntimeError):
    """Wraps a canonical-instance solver failure with the instance id."""


@dataclass(frozen=True)
class MicroInstance:
    """A small labeled graph with vertices prenumbered 1..n in preorder.

    ``arcs`` holds (u, v, label) triples; labels are small non-negative ints
    (0 = unlabeled).  For undirected instances the caller orders endpoints
    increasingly.  ``payload`` is instance-local data excluded from the
    encoding (vertex maps, weights, ...).
    """

    n: int
    vertex_labels: tuple
    arcs: tuple
    payload: object = None


@dataclass
class InstanceGroup:
    canonical: int
    members: list
    solution: object = None


def encode(inst, master_size):
    """Token sequence for ``inst`` over a master list of ``master_size``
    positions; instance handles are excluded so token-equal sequences mean
    label-isomorphic instances."""
    if inst.n > master_size:
        raise ValueError("instance with %d vertices exceeds master list" % inst.n)
    seq = [inst.n]
    for i, lab in enumerate(inst.vertex_labels, start=1):
        if lab > master_size:
            raise ValueError("vertex label %d exceeds master list" % lab)
        seq.append(i)
        seq.append(lab)
    for u, v, lab in inst.arcs:
        if lab > master_size:
            raise ValueError("arc label %d exceeds master list" % lab)
        seq.append(u)
        seq.append(v)
        seq.append(lab)
    return seq


def radix_sort_sequences(seqs, alphabet):
    """Indices of ``seqs`` in lexicographic order (shorter prefix first).

    Bucket radix sort for variable-length lists: pairs (position, symbol)
    are bucket-sorted to find the nonempty symbols per position, then the
    sequences are distributed longest-first, one position per pass, touching
    only nonempty buckets.  Linear in total length plus alphabet size.
    """
    if not seqs:
        return []
    lmax = max(len(s) for s in seqs)
    # Nonempty symbol sets per position, in symbol order: bucket by symbol,
    # then by position, then deduplicate.
    by_symbol = [[] for _ in range(alphabet + 1)]
    for s in seqs:
        for p, a in enumerate(s):
            by_symbol[a].append(p)
    nonempty = [[] for _ in range(lmax)]
    for a in range(alphabet + 1):
        for p in by_symbol[a]:
            bucket = nonempty[p]
            if not bucket or bucket[-1] != a:
                bucket.append(a)
    by_len = [[] for _ in range(lmax + 1)]
    for i, s in enumerate(seqs):
        by_len[len(s)].append(i)
    buckets = [[] for _ in range(alphabet + 1)]
    cur = []
    for p in range(lmax, 0, -1):
        cur = by_len[p] + cur
        for i in cur:
            buckets[seqs[i][p - 1]].append(i)
        cur = []
        for a in nonempty[p - 1]:
            cur.extend(buckets[a])
            buckets[a].clear()
    return by_len[0] + cur


def group(encodings, alphabet):
    """Group token-equal encodings; the first instance of each class (in
    input order) is canonical.  Returns InstanceGroups in sorted-key order."""
    order = radix_sort_sequences(encodings, alphabet)
    groups = []
    prev = None
    for i in order:
        if prev is not None and encodings[i] == encodings[prev]:
            groups[-1].members.append(i)
        else:
            groups.append(InstanceGroup(canonical=i, members=[i]))
        prev = i
    return groups


def solve_and_transfer(instances, groups, solver, transfer=None, mode="transfer"):
    """Solve one canonical instance per group and spread the solutions.

    ``transfer`` semantics depend on ``mode``: in ``transfer`` mode it maps
    the canonical solution onto a duplicate (default: the identity, valid
    because token-equal instances are position-aligned); in
    ``run-per-duplicate`` mode the canonical solution is a program evaluated
    by ``transfer(instance, program)`` for every member, canonical included.
    """
    if mode not in ("transfer", "run-per-duplicate"):
        raise ValueError("unknown mode %r" % mode)
    solutions = [None] * len(instances)
    for grp in groups:
        try:
            sol = solver(instances[grp.canonical])
        except Exception as exc:
            raise SolverError("solver failed on instance %d" % grp.canonical) from exc
        grp.solution = sol
        if mode == "transfer":
            for m in grp.members:
                if m == grp.canonical or transfer is None:
                    solutions[m] = sol
                else:
                    solutions[m] = transfer(instances[m], sol)
        else:
            for m in grp.members:
                solutions[m] = transfer(instances[m], sol)
    return solutions


def batch_solve(instances, master_size, solver, transfer=None, mode="transfer",
                counters=None):
    """Encode, group, solve, transfer; the one-call front door."""
    encodings = [encode(inst, master_size) for inst in instances]
    if counters is not None:
        counters["encoded_tokens"] = counters.get("encoded_tokens", 0) + sum(
            len(e) for e in encodings)
        counters["canonical_solves"] = counters.get("canonical_solves", 0)
    groups = group(encodings, master_size)
    if counters is not None:
        counters["canonical_solves"] += len(groups)
    return solve_and_transfer(instances, groups, solver, transfer, mode)
