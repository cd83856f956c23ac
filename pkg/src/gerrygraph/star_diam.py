"""Exact polynomial solvers for trees of diameter at most 3, any color count.

In a star every part not containing the center is a single leaf, so a
solution is determined by which leaves stay in the center block.  The solver
guesses the block's winning color and how many target- and winning-colored
leaves are excluded; exchange arguments fix *which* leaves those are
(heaviest winners kept, lightest other-colored kept), and prefix sums over
descending weights give the forced exclusion count per color.  A diameter-3
tree is two stars joined at the centers; the center edge is either kept
(one merged block) or cut (one block per star, solved with per-star
guesses).
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import accumulate

from .core import (
    Instance,
    Partition,
    UnsupportedInstanceError,
    evaluate_partition,
)
from .oracle import OracleResult


def beta_count(sorted_weights, budget: int, strict: bool = False) -> int:
    """Smallest b such that the sum of all but the b heaviest stays in budget.

    ``sorted_weights`` must be descending.  The comparison is <= budget, or
    strictly < when ``strict``.  When even excluding everything does not fit
    (negative budget, or zero budget under strict), returns the list length.
    """
    ws = list(sorted_weights)
    for i in range(len(ws) - 1):
        if ws[i] < ws[i + 1]:
            raise ValueError("weights must be sorted in descending order")
    prefix = [0, *accumulate(ws)]
    need = prefix[-1] - budget
    b = bisect_right(prefix, need) if strict else bisect_left(prefix, need)
    return b if b <= len(ws) else len(ws)


@dataclass(frozen=True)
class CaseGuess:
    """One candidate configuration: block color(s) and excluded-leaf counts.

    Tuples have one entry in the merged case and two in the split case (one
    per star, the first star being the one with the smaller center id).
    When q_star is the target color, alpha_qstar must equal alpha_p.
    """

    case: str  # "merged" | "split"
    q_star: tuple[str, ...]
    alpha_p: tuple[int, ...]
    alpha_qstar: tuple[int, ...]


@dataclass(frozen=True)
class FeasibilityOutcome:
    feasible: bool
    x: int
    beta: dict[str, int]  # forced singleton count per color, summed over sides
    partition: Partition | None


class _Side:
    """One star's leaf pool: per color, leaves sorted heaviest first."""

    __slots__ = ("centers", "center_w", "items", "prefix")

    def __init__(self, inst: Instance, centers: list[int], leaves: list[int], cindex):
        self.centers = centers
        nc = len(cindex)
        self.center_w = [0] * nc
        for v in centers:
            self.center_w[cindex[inst.color_of[v]]] += inst.weight[v]
        self.items: list[list[tuple[int, int]]] = [[] for _ in range(nc)]
        for v in leaves:
            self.items[cindex[inst.color_of[v]]].append((inst.weight[v], v))
        self.prefix: list[list[int]] = []
        for ci in range(nc):
            self.items[ci].sort(key=lambda t: (-t[0], t[1]))
            self.prefix.append([0, *accumulate(w for w, _ in self.items[ci])])


def _beta_from_prefix(prefix, budget, strict) -> int:
    need = prefix[-1] - budget
    b = bisect_right(prefix, need) if strict else bisect_left(prefix, need)
    last = len(prefix) - 1
    return b if b <= last else last


class _Solver:
    def __init__(self, inst: Instance, sides: list[_Side]):
        self.inst = inst
        self.colors = list(inst.colors)
        self.cindex = {c: i for i, c in enumerate(self.colors)}
        self.nc = len(self.colors)
        self.pidx = self.cindex[inst.target]
        self.sides = sides
        self.examined = 0

    def try_config(self, configs: list[tuple[int, int, int]]) -> FeasibilityOutcome:
        """Test one guess: per side (q_star index, alpha_p, alpha_qstar).

        Builds the base configuration exactly, then greedily turns further
        leaves into singletons (lightest first, most per-color slack first)
        until the part count reaches k.  All counting is exact, including
        ties, so a returned partition always verifies.
        """
        self.examined += 1
        inst = self.inst
        nc = self.nc
        pidx = self.pidx
        k = inst.k
        infeasible = FeasibilityOutcome(False, 0, {}, None)

        # (items, start, end) per side and color: items[:start] are forced
        # singletons, items[start:end] stay in the block, items[end:] are
        # singletons removed from the light end (only for q*)
        windows: list[list[tuple[int, int]]] = []
        blk_w: list[list[int]] = []
        blk_max: list[int] = []
        singles: list[tuple[int, int]] = []  # (color idx, weight)
        single_ids: list[int] = []
        beta_total: dict[str, int] = {}

        for side, (qi, a_p, a_q) in zip(self.sides, configs):
            strict = qi == pidx
            n_q = len(side.items[qi])
            n_p = len(side.items[pidx])
            if a_q > n_q or a_p > n_p or (strict and a_q != a_p):
                return infeasible
            w_blk = side.center_w[qi] + side.prefix[qi][n_q - a_q]
            win: list[tuple[int, int]] = [(0, 0)] * nc
            wc = [0] * nc
            for ci in range(nc):
                items = side.items[ci]
                m = len(items)
                if ci == qi:
                    win[ci] = (0, m - a_q)
                    wc[ci] = w_blk
                    for w, vid in items[m - a_q :]:
                        singles.append((ci, w))
                        single_ids.append(vid)
                    continue
                if ci == pidx:
                    start = a_p
                    wcur = side.center_w[ci] + side.prefix[ci][m] - side.prefix[ci][a_p]
                    if wcur > w_blk:
                        return infeasible
                else:
                    budget = w_blk - side.center_w[ci]
                    start = _beta_from_prefix(side.prefix[ci], budget, strict)
                    wcur = side.center_w[ci] + side.prefix[ci][m] - side.prefix[ci][start]
                    if wcur > w_blk or (strict and wcur >= w_blk):
                        return infeasible
                    beta_total[self.colors[ci]] = beta_total.get(self.colors[ci], 0) + start
                win[ci] = (start, m)
                wc[ci] = wcur
                for w, vid in items[:start]:
                    singles.append((ci, w))
                    single_ids.append(vid)
            windows.append(win)
            blk_w.append(wc)
            blk_max.append(w_blk)

        # exact uniquely-target and per-color district counts of the base
        x = 0
        counts = [0] * nc
        for side_i, (qi, _, _) in enumerate(configs):
            if qi == pidx:
                x += 1
            wc = blk_w[side_i]
            mx = blk_max[side_i]
            for ci in range(nc):
                if wc[ci] == mx:
                    counts[ci] += 1
        for ci, w in singles:
            if w > 0:
                counts[ci] += 1
                if ci == pidx:
                    x += 1
            else:
                for ri in range(nc):
                    counts[ri] += 1
                if nc == 1:
                    x += 1
        for ci in range(nc):
            if ci != pidx and counts[ci] >= x:
                return infeasible

        parts = len(self.sides) + len(singles)
        if parts > k:
            return infeasible
        need = k - parts

        # greedy removals to reach exactly k parts
        while need > 0:
            best = None  # (slack, color idx, side idx, weight)
            for side_i, (qi, _, _) in enumerate(configs):
                side = self.sides[side_i]
                win = windows[side_i]
                for ci in range(nc):
                    if ci == pidx or ci == qi:
                        continue
                    start, end = win[ci]
                    if end <= start:
                        continue
                    w = side.items[ci][end - 1][0]
                    if w > 0:
                        newc = counts[ci] + 1 - (1 if blk_w[side_i][ci] == blk_max[side_i] else 0)
                        if newc > x - 1:
                            continue
                        slack = (x - 1) - newc
                    else:
                        if nc > 1 and any(
                            counts[ri] + 1 > x - 1 for ri in range(nc) if ri != pidx
                        ):
                            continue
                        slack = min(
                            ((x - 1) - (counts[ri] + 1) for ri in range(nc) if ri != pidx),
                            default=x,
                        )
                    cand = (slack, -ci, -side_i, w)
                    if best is None or cand > best:
                        best = cand
                        best_move = (side_i, ci)
            if best is None:
                return infeasible
            side_i, ci = best_move
            side = self.sides[side_i]
            start, end = windows[side_i][ci]
            w, vid = side.items[ci][end - 1]
            windows[side_i][ci] = (start, end - 1)
            if w > 0:
                if blk_w[side_i][ci] == blk_max[side_i]:
                    counts[ci] -= 1
                blk_w[side_i][ci] -= w
                counts[ci] += 1
            else:
                for ri in range(nc):
                    counts[ri] += 1
                if nc == 1:
                    x += 1
            singles.append((ci, w))
            single_ids.append(vid)
            need -= 1

        blocks = []
        for side_i, side in enumerate(self.sides):
            members = list(side.centers)
            win = windows[side_i]
            for ci in range(nc):
                start, end = win[ci]
                members.extend(vid for _, vid in side.items[ci][start:end])
            blocks.append(frozenset(members))
        blocks.extend(frozenset((vid,)) for vid in sorted(single_ids))
        partition = Partition(tuple(blocks))
        report = evaluate_partition(inst, partition)
        if not report.is_solution:
            raise RuntimeError("internal error: star/diam3 witness failed verification")
        beta = {c: beta_total.get(c, 0) for c in self.colors if c != inst.target}
        return FeasibilityOutcome(True, x, beta, partition)


def _tree_adjacency(inst: Instance):
    verts = sorted(inst.weight)
    n = len(verts)
    if inst.mode != "connected" or len(inst.edges) != n - 1:
        raise UnsupportedInstanceError("instance is not a tree")
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in inst.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise UnsupportedInstanceError("instance is not a tree")
    return verts, adj


def _merged_sweep(solver: _Solver, k: int) -> FeasibilityOutcome | None:
    """Iterate merged-case guesses in lexicographic (q*, alpha_p, alpha_q*) order."""
    pidx = solver.pidx
    side = solver.sides[0]
    for qi in range(solver.nc):
        n_q = len(side.items[qi])
        n_p = len(side.items[pidx])
        if qi == pidx:
            for a_p in range(min(n_p, k - 1) + 1):
                out = solver.try_config([(qi, a_p, a_p)])
                if out.feasible:
                    return out
            continue
        for a_p in range(min(n_p, k - 1) + 1):
            for a_q in range(min(n_q, k - 1 - a_p) + 1):
                out = solver.try_config([(qi, a_p, a_q)])
                if out.feasible:
                    return out
    return None


def solve_star(inst: Instance) -> OracleResult:
    """Decide an instance whose tree has diameter at most two."""
    verts, adj = _tree_adjacency(inst)
    k = inst.k
    if not 1 <= k <= len(verts):
        raise ValueError("k out of range")
    center = max(verts, key=lambda v: (len(adj[v]), -v))
    if any(v != center and center not in adj[v] for v in verts):
        raise UnsupportedInstanceError("tree diameter exceeds 2")
    leaves = [v for v in verts if v != center]
    solver = _Solver(inst, [_Side(inst, [center], leaves, {c: i for i, c in enumerate(inst.colors)})])
    out = _merged_sweep(solver, k)
    if out is not None:
        return OracleResult(True, out.partition, solver.examined)
    return OracleResult(False, None, solver.examined)


def solve_diameter3(inst: Instance) -> OracleResult:
    """Decide an instance whose tree has diameter exactly three.

    Tries the merged case (both centers in one block) first, then the split
    case; within each, guesses run in lexicographic order, so the witness is
    the first feasible configuration.
    """
    verts, adj = _tree_adjacency(inst)
    k = inst.k
    if not 1 <= k <= len(verts):
        raise ValueError("k out of range")
    internal = [v for v in verts if len(adj[v]) >= 2]
    if len(internal) != 2 or internal[1] not in adj[internal[0]]:
        raise UnsupportedInstanceError("tree diameter is not 3")
    r1, r2 = internal
    leaves1 = [v for v in adj[r1] if v != r2]
    leaves2 = [v for v in adj[r2] if v != r1]
    cindex = {c: i for i, c in enumerate(inst.colors)}

    merged = _Solver(inst, [_Side(inst, [r1, r2], leaves1 + leaves2, cindex)])
    out = _merged_sweep(merged, k)
    examined = merged.examined
    if out is not None:
        return OracleResult(True, out.partition, examined)

    if k >= 2:
        split = _Solver(
            inst,
            [_Side(inst, [r1], leaves1, cindex), _Side(inst, [r2], leaves2, cindex)],
        )
        pidx = split.pidx
        np1 = len(split.sides[0].items[pidx])
        np2 = len(split.sides[1].items[pidx])
        for q1 in range(split.nc):
            nq1 = len(split.sides[0].items[q1])
            for q2 in range(split.nc):
                nq2 = len(split.sides[1].items[q2])
                for a1p in range(min(np1, k - 2) + 1):
                    for a2p in range(min(np2, k - 2 - a1p) + 1):
                        used = a1p + a2p
                        r1q = [a1p] if q1 == pidx else range(min(nq1, k - 2 - used) + 1)
                        for a1q in r1q:
                            used2 = used + (0 if q1 == pidx else a1q)
                            r2q = [a2p] if q2 == pidx else range(min(nq2, k - 2 - used2) + 1)
                            for a2q in r2q:
                                out = split.try_config(
                                    [(q1, a1p, a1q), (q2, a2p, a2q)]
                                )
                                if out.feasible:
                                    return OracleResult(
                                        True, out.partition, examined + split.examined
                                    )
        examined += split.examined
    return OracleResult(False, None, examined)


def evaluate_guess(inst: Instance, guess: CaseGuess) -> FeasibilityOutcome:
    """Test a single configuration against a star or diameter-3 instance."""
    verts, adj = _tree_adjacency(inst)
    cindex = {c: i for i, c in enumerate(inst.colors)}
    if guess.case == "merged":
        internal = [v for v in verts if len(adj[v]) >= 2]
        if len(internal) <= 1:
            center = max(verts, key=lambda v: (len(adj[v]), -v))
            centers = [center]
            leaves = [v for v in verts if v != center]
        else:
            if len(internal) != 2:
                raise UnsupportedInstanceError("tree diameter exceeds 3")
            centers = internal
            leaves = [v for v in verts if v not in internal]
        solver = _Solver(inst, [_Side(inst, centers, leaves, cindex)])
        cfg = [(cindex[guess.q_star[0]], guess.alpha_p[0], guess.alpha_qstar[0])]
    else:
        internal = [v for v in verts if len(adj[v]) >= 2]
        if len(internal) != 2 or internal[1] not in adj[internal[0]]:
            raise UnsupportedInstanceError("tree diameter is not 3")
        r1, r2 = internal
        solver = _Solver(
            inst,
            [
                _Side(inst, [r1], [v for v in adj[r1] if v != r2], cindex),
                _Side(inst, [r2], [v for v in adj[r2] if v != r1], cindex),
            ],
        )
        cfg = [
            (cindex[guess.q_star[0]], guess.alpha_p[0], guess.alpha_qstar[0]),
            (cindex[guess.q_star[1]], guess.alpha_p[1], guess.alpha_qstar[1]),
        ]
    return solver.try_config(cfg)
