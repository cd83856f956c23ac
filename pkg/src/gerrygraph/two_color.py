"""Exact solver for two-color tree instances by bottom-up dynamic programming.

For every vertex u, child-prefix i, and part count k', the table stores
L = the best number of strictly-winning target districts among the parts
not containing u, and W = the best winning margin (target weight minus
opponent weight) of u's still-undecided part among partitions attaining L.
Maximizing (L, W) lexicographically is a valid dominance: a unit of L is
worth at least as much as any margin, since the margin only ever converts
into one extra district.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Instance,
    Partition,
    UnsupportedInstanceError,
    evaluate_partition,
)
from .oracle import OracleResult

_CUT = 0
_MERGE = 1


@dataclass(frozen=True)
class DpEntry:
    L: int
    W: int


class DpTable:
    """Filled DP tables with backpointers, addressed by original vertex ids.

    entry(u, i, kp) is the cell for the subtree slice made of u plus the
    subtrees of its first i children (children sorted by id); kp ranges over
    1..min(slice size, k).
    """

    def __init__(self, inst, root, verts, index, children, sizes, tabs, bps, margins):
        self.instance = inst
        self.root = root
        self._verts = verts
        self._index = index
        self._children = children
        self._sizes = sizes
        self._tabs = tabs
        self._bps = bps
        self._margins = margins

    def children(self, u: int) -> list[int]:
        return [self._verts[c] for c in self._children[self._index[u]]]

    def prefix_size(self, u: int, i: int) -> int:
        ui = self._index[u]
        return 1 + sum(self._sizes[c] for c in self._children[ui][:i])

    def max_parts(self, u: int, i: int) -> int:
        return len(self._tabs[self._index[u]][i][0])

    def entry(self, u: int, i: int, kp: int) -> DpEntry:
        larr, warr = self._tabs[self._index[u]][i]
        if not 1 <= kp <= len(larr):
            raise ValueError(f"k'={kp} out of range for ({u},{i})")
        return DpEntry(L=larr[kp - 1], W=warr[kp - 1])

    def slice_vertices(self, u: int, i: int) -> frozenset[int]:
        ui = self._index[u]
        out = [self._verts[ui]]
        stack = list(self._children[ui][:i])
        while stack:
            w = stack.pop()
            out.append(self._verts[w])
            stack.extend(self._children[w])
        return frozenset(out)


def _prepare(inst: Instance):
    verts = sorted(inst.weight)
    n = len(verts)
    if inst.mode != "connected" or len(inst.edges) != n - 1:
        raise UnsupportedInstanceError("instance is not a tree")
    if len(inst.colors) != 2:
        raise UnsupportedInstanceError("two-color solver needs exactly two colors")
    index = {v: i for i, v in enumerate(verts)}
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in inst.edges:
        ia, ib = index[a], index[b]
        adj[ia].append(ib)
        adj[ib].append(ia)
    p = inst.target
    margin = [0] * n
    for v, i in index.items():
        w = inst.weight[v]
        margin[i] = w if inst.color_of[v] == p else -w
    return verts, index, adj, margin


def _default_root(verts, adj) -> int:
    # lowest-id leaf; every tree has one, and for paths this makes the
    # single-child recurrence O(1) per cell
    for i in range(len(verts)):
        if len(adj[i]) <= 1:
            return i
    return 0


def _fill(inst: Instance, root_idx: int, verts, index, adj, margin, k: int):
    """Bottom-up fill; returns (children, sizes, tabs, bps, margins_total).

    tabs[u][i] = (Larr, Warr); bps[u][i] = backpointer array of (case, j)
    tuples, entries for k' >= 2 (index k'-2).
    """
    n = len(verts)
    parent = [-1] * n
    order = [root_idx]
    seen = [False] * n
    seen[root_idx] = True
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    if len(order) != n:
        raise UnsupportedInstanceError("instance is not a tree")
    children: list[list[int]] = [[] for _ in range(n)]
    for u in order[1:]:
        children[parent[u]].append(u)
    for cs in children:
        cs.sort()

    sizes = [1] * n
    totals = list(margin)
    tabs: list[list[tuple[list[int], list[int]]]] = [None] * n  # type: ignore
    bps: list[list[list[tuple[int, int]]]] = [None] * n  # type: ignore

    for u in reversed(order):
        ltab = [0]
        wtab = [margin[u]]
        utabs = [(ltab, wtab)]
        ubps: list[list[tuple[int, int]]] = [[]]
        size = 1
        total = margin[u]
        for v in children[u]:
            lc, wc = tabs[v][-1]
            ncc = len(lc)
            npc = len(ltab)
            size += sizes[v]
            total += totals[v]
            cap = size if size < k else k
            nl = [0] * cap
            nw = [0] * cap
            nb: list[tuple[int, int]] = [(0, 0)] * max(0, cap - 1)
            nw[0] = total
            lp, wp = ltab, wtab
            for kp in range(2, cap + 1):
                # cut: child subtree split off as kp-j parts, its root part
                # now decided and counted when its margin is positive
                bl = -1
                bw = 0
                bj = 0
                jlo = kp - ncc
                if jlo < 1:
                    jlo = 1
                jhi = kp - 1
                if jhi > npc:
                    jhi = npc
                for j in range(jlo, jhi + 1):
                    ci = kp - j - 1
                    val = lp[j - 1] + lc[ci] + (1 if wc[ci] > 0 else 0)
                    if val > bl or (val == bl and wp[j - 1] > bw):
                        bl = val
                        bw = wp[j - 1]
                        bj = j
                # merge: child's undecided part joins u's part
                ml = -1
                mw = 0
                mj = 0
                jlo = kp + 1 - ncc
                if jlo < 1:
                    jlo = 1
                jhi = kp if kp < npc else npc
                for j in range(jlo, jhi + 1):
                    ci = kp - j
                    val = lp[j - 1] + lc[ci]
                    w = wp[j - 1] + wc[ci]
                    if val > ml or (val == ml and w > mw):
                        ml = val
                        mw = w
                        mj = j
                if bl > ml or (bl == ml and bw >= mw):
                    nl[kp - 1] = bl
                    nw[kp - 1] = bw
                    nb[kp - 2] = (_CUT, bj)
                else:
                    nl[kp - 1] = ml
                    nw[kp - 1] = mw
                    nb[kp - 2] = (_MERGE, mj)
            ltab, wtab = nl, nw
            utabs.append((ltab, wtab))
            ubps.append(nb)
        tabs[u] = utabs
        bps[u] = ubps
        sizes[u] = size
        totals[u] = total
    return children, sizes, tabs, bps, totals


def dp_tables(inst: Instance, root: int) -> DpTable:
    """Fill and return the full DP tables rooted at ``root``."""
    verts, index, adj, margin = _prepare(inst)
    if root not in index:
        raise ValueError(f"unknown root vertex {root}")
    children, sizes, tabs, bps, totals = _fill(
        inst, index[root], verts, index, adj, margin, inst.k
    )
    return DpTable(inst, root, verts, index, children, sizes, tabs, bps, totals)


def _reconstruct(inst, verts, children, bps, root_idx, k) -> Partition:
    cut_children: set[int] = set()
    stack = [(root_idx, None, k)]
    while stack:
        u, i, kp = stack.pop()
        if i is None:
            i = len(children[u])
        if kp == 1 or i == 0:
            continue
        case, j = bps[u][i][kp - 2]
        v = children[u][i - 1]
        if case == _CUT:
            cut_children.add(v)
            stack.append((u, i - 1, j))
            stack.append((v, None, kp - j))
        else:
            stack.append((u, i - 1, j))
            stack.append((v, None, kp - j + 1))
    # one top-down pass labels each vertex with its block representative
    n = len(verts)
    comp = [0] * n
    comp[root_idx] = root_idx
    order = [root_idx]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        cu = comp[u]
        for v in children[u]:
            comp[v] = v if v in cut_children else cu
            order.append(v)
    members: dict[int, list[int]] = {}
    for idx in range(n):
        members.setdefault(comp[idx], []).append(verts[idx])
    blocks = tuple(frozenset(b) for b in sorted(members.values(), key=lambda b: b[0]))
    return Partition(blocks)


def solve_two_color_tree(inst: Instance) -> OracleResult:
    """Decide a two-color tree instance; O(n^2 k) time.

    The answer reads off the root table: with k parts, the target wins iff
    the count of strictly-winning parts, plus one more if the root part's
    margin is positive, exceeds k/2.  Any root gives the same answer; the
    lowest-id leaf is used.
    """
    verts, index, adj, margin = _prepare(inst)
    n = len(verts)
    k = inst.k
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    root_idx = _default_root(verts, adj)
    children, sizes, tabs, bps, _ = _fill(inst, root_idx, verts, index, adj, margin, k)
    larr, warr = tabs[root_idx][-1]
    lval = larr[k - 1]
    wval = warr[k - 1]
    answer = 2 * (lval + (1 if wval > 0 else 0)) > k
    if not answer:
        return OracleResult(False, None, 0)
    witness = _reconstruct(inst, verts, children, bps, root_idx, k)
    report = evaluate_partition(inst, witness)
    if not report.is_solution:
        raise RuntimeError("internal error: DP witness failed verification")
    return OracleResult(True, witness, 0)
