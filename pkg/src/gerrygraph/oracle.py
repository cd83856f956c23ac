"""Exhaustive ground-truth solver for tree instances, plus random generators.

On a tree, connected k-partitions correspond exactly to (k-1)-subsets of
deleted edges, so the brute force enumerates edge subsets in lexicographic
order over the sorted edge list.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .core import (
    CapacityError,
    Instance,
    Partition,
    UnsupportedInstanceError,
    cut_components,
    evaluate_partition,
)

DEFAULT_ENUMERATION_CAP = 10_000_000


@dataclass(frozen=True)
class OracleResult:
    answer: bool
    witness: Partition | None
    partitions_examined: int


def _tree_frame(inst: Instance):
    """Index the tree for fast cut evaluation.

    Returns (verts, order, parent, parent_edge_id, edge list) where ``order``
    is a BFS order from the lowest vertex id and parent_edge_id[v] is the
    position of the edge {parent[v], v} in the sorted edge list.
    """
    verts = sorted(inst.weight)
    n = len(verts)
    if inst.mode != "connected" or len(inst.edges) != n - 1:
        raise UnsupportedInstanceError("instance is not a tree")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[a], index[b]) for a, b in inst.edges]
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (a, b) in enumerate(edges):
        adj[a].append((b, eid))
        adj[b].append((a, eid))
    order = [0]
    parent = [-1] * n
    pedge = [-1] * n
    seen = [False] * n
    seen[0] = True
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for w, eid in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                pedge[w] = eid
                order.append(w)
    if len(order) != n:
        raise UnsupportedInstanceError("instance is not a tree")
    return verts, order, parent, pedge, edges


def solve_brute_force(inst: Instance, cap: int = DEFAULT_ENUMERATION_CAP) -> OracleResult:
    """Decide a tree instance by trying every (k-1)-subset of edges.

    Stops at the first solution; its partition (in lexicographic edge order)
    is returned as the witness.  Raises CapacityError when the number of
    subsets exceeds ``cap``.
    """
    verts, order, parent, pedge, _ = _tree_frame(inst)
    n = len(verts)
    k = inst.k
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    if math.comb(n - 1, k - 1) > cap:
        raise CapacityError(
            f"C({n - 1},{k - 1}) = {math.comb(n - 1, k - 1)} subsets exceed cap {cap}"
        )
    colors = list(inst.colors)
    cindex = {c: i for i, c in enumerate(colors)}
    nc = len(colors)
    pidx = cindex[inst.target]
    cvec = [0] * n
    wvec = [0] * n
    for i, v in enumerate(verts):
        cvec[i] = cindex[inst.color_of[v]]
        wvec[i] = inst.weight[v]

    order1 = order[1:]
    comp = [0] * n
    examined = 0
    for cut in combinations(range(n - 1), k - 1):
        examined += 1
        for v in order1:
            comp[v] = v if pedge[v] in cut else comp[parent[v]]
        buckets: dict[int, list[int]] = {}
        get = buckets.get
        for v in range(n):
            b = get(comp[v])
            if b is None:
                b = buckets[comp[v]] = [0] * nc
            b[cvec[v]] += wvec[v]
        x = 0
        counts = [0] * nc
        zero = 0
        for b in buckets.values():
            mx = max(b)
            if mx == 0:
                zero += 1
                continue
            first = -1
            multi = False
            for ci in range(nc):
                if b[ci] == mx:
                    counts[ci] += 1
                    if first < 0:
                        first = ci
                    else:
                        multi = True
            if not multi and first == pidx:
                x += 1
        if zero:
            counts = [cnt + zero for cnt in counts]
            if nc == 1:
                x += zero
        ok = True
        for ci in range(nc):
            if ci != pidx and counts[ci] >= x:
                ok = False
                break
        if ok:
            members: dict[int, list[int]] = {}
            for v in range(n):
                members.setdefault(comp[v], []).append(verts[v])
            blocks = tuple(
                frozenset(b) for b in sorted(members.values(), key=lambda b: b[0])
            )
            witness = Partition(blocks)
            report = evaluate_partition(inst, witness)
            if not report.is_solution:
                raise RuntimeError("internal error: brute-force witness failed verification")
            return OracleResult(True, witness, examined)
    return OracleResult(False, None, examined)


def enumerate_connected_partitions(
    inst: Instance, k: int, visitor=None, cap: int = DEFAULT_ENUMERATION_CAP
) -> int:
    """Enumerate every connected k-partition of a tree; returns the count.

    The count always equals C(n-1, k-1).  ``visitor``, when given, is called
    with each Partition in lexicographic edge-subset order.
    """
    _tree_frame(inst)  # shape check
    n = inst.n
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    total = math.comb(n - 1, k - 1)
    if total > cap:
        raise CapacityError(f"C({n - 1},{k - 1}) = {total} subsets exceed cap {cap}")
    count = 0
    for cut in combinations(inst.edges, k - 1):
        count += 1
        if visitor is not None:
            visitor(cut_components(inst, cut))
    return count


def pruefer_decode(seq, n: int) -> list[tuple[int, int]]:
    """Edge list of the labeled tree on {0..n-1} encoded by a Pruefer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    seq = list(seq)
    if len(seq) != max(0, n - 2):
        raise ValueError(f"sequence length must be n-2 = {max(0, n - 2)}")
    if any(not 0 <= x < n for x in seq):
        raise ValueError("sequence entry out of range")
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x) if leaf <= x else (x, leaf))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
    u = -1
    for i in range(n):
        if degree[i] == 1:
            if u < 0:
                u = i
            else:
                edges.append((u, i))
                break
    return edges


def random_tree(n: int, seed: int) -> list[tuple[int, int]]:
    """Uniform random labeled tree on {0..n-1} via Pruefer decoding."""
    rng = random.Random(seed)
    if n < 1:
        raise ValueError("n must be >= 1")
    seq = [rng.randrange(n) for _ in range(max(0, n - 2))]
    return pruefer_decode(seq, n)


def color_palette(count: int) -> list[str]:
    """Deterministic color tokens; the target color is always first."""
    base = ["p", "q", "r", "s"]
    if count <= len(base):
        return base[:count]
    return base + [f"c{i}" for i in range(len(base), count)]


def random_instance(
    n: int, num_colors: int, max_weight: int, k: int, seed: int
) -> Instance:
    """Random tree instance: uniform tree, colors, and weights in [1, max_weight]."""
    if n < 1 or num_colors < 1 or max_weight < 1 or not 1 <= k <= n:
        raise ValueError("bad generator arguments")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(max(0, n - 2))]
    edges = pruefer_decode(seq, n)
    colors = color_palette(num_colors)
    color_of = {v: colors[rng.randrange(num_colors)] for v in range(n)}
    weight = {v: rng.randint(1, max_weight) for v in range(n)}
    return Instance(
        edges=tuple(edges),
        weight=weight,
        color_of=color_of,
        colors=tuple(colors),
        target=colors[0],
        k=k,
    )
