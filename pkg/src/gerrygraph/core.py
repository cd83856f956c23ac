"""Instance model, structural predicates, and the partition evaluator.

Vertices are non-negative integer ids, colors are arbitrary string tokens.
A district ("block") wins for a color when that color's total weight is
maximal within the block; it wins *uniquely* when the maximum is strict.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class CapacityError(Exception):
    """Raised when an enumeration or construction exceeds its configured cap."""


class UnsupportedInstanceError(Exception):
    """Raised when a solver is handed an instance outside its shape contract."""


def _norm_edge(e) -> tuple[int, int]:
    a, b = e
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Instance:
    """A colored, weighted graph with a target color and district count.

    ``weight`` and ``color_of`` share the same key set, which defines the
    vertex set.  ``mode`` is "connected" for ordinary instances; generated
    multi-component instances carry mode "disconnected" and are accepted by
    the evaluator but refused by solvers.
    """

    edges: tuple[tuple[int, int], ...]
    weight: dict[int, int]
    color_of: dict[int, str]
    colors: tuple[str, ...]
    target: str
    k: int
    mode: str = "connected"

    def __post_init__(self):
        # canonical edge storage: (min, max) pairs, sorted; duplicates kept
        # so validate_instance can report them
        canon = tuple(sorted(_norm_edge(e) for e in self.edges))
        object.__setattr__(self, "edges", canon)

    @property
    def n(self) -> int:
        return len(self.weight)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.weight))

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.weight}
        for a, b in self.edges:
            if a in adj and b in adj:
                adj[a].append(b)
                adj[b].append(a)
        return adj


@dataclass(frozen=True)
class Partition:
    """An ordered list of disjoint vertex blocks; order matters only for I/O."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class BlockTally:
    """Per-color weight sums of one block plus its winner status."""

    weight_by_color: dict[str, int]
    colored_as: frozenset[str]
    uniquely: str | None


@dataclass(frozen=True)
class EvalReport:
    valid: bool
    violation: str | None
    uniquely_p_count: int
    colored_count: dict[str, int]  # colors absent from the dict have count 0
    is_solution: bool


@dataclass(frozen=True)
class ShapeReport:
    is_tree: bool
    is_path: bool
    diameter: int | None  # None when the graph is disconnected
    shape: str  # path | star | diam3-tree | tree | general-connected | disconnected


def _components(vertices, adj) -> list[list[int]]:
    """Connected components as vertex lists, each sorted, ordered by minimum."""
    seen: set[int] = set()
    comps = []
    for start in sorted(vertices):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def validate_instance(inst: Instance) -> list[str]:
    """Check instance invariants; returns a list of violations (empty = valid)."""
    out: list[str] = []
    n = inst.n
    if n == 0:
        return ["no vertices"]
    if set(inst.weight) != set(inst.color_of):
        out.append("weight and color maps disagree on the vertex set")
    if len(set(inst.colors)) != len(inst.colors):
        out.append("duplicate color in color set")
    if inst.target not in inst.colors:
        out.append("target not in colors")
    for v in sorted(inst.weight):
        if inst.weight[v] < 0:
            out.append(f"negative weight at vertex {v}")
    for v in sorted(inst.color_of):
        if inst.color_of[v] not in inst.colors:
            out.append(f"vertex {v} colored {inst.color_of[v]} not in colors")
    if inst.mode not in ("connected", "disconnected"):
        out.append(f"unknown mode {inst.mode!r}")
    seen_edges = set()
    for a, b in inst.edges:
        if a == b:
            out.append(f"self-loop at vertex {a}")
        elif a not in inst.weight or b not in inst.weight:
            out.append(f"edge ({a},{b}) references unknown vertex")
        elif (a, b) in seen_edges:
            out.append(f"duplicate edge ({a},{b})")
        seen_edges.add((a, b))
    if not 1 <= inst.k <= n:
        out.append("k out of range")
    if not out and inst.mode == "connected":
        if len(_components(inst.weight, inst.adjacency())) > 1:
            out.append("disconnected")
    return out


def _tree_diameter(adj, start) -> int:
    """Exact diameter of a tree by two BFS sweeps."""

    def farthest(src):
        dist = {src: 0}
        queue = deque([src])
        far, fd = src, 0
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    if dist[w] > fd:
                        far, fd = w, dist[w]
                    queue.append(w)
        return far, fd

    a, _ = farthest(start)
    _, d = farthest(a)
    return d


def classify_shape(inst: Instance) -> ShapeReport:
    """Classify the instance graph for algorithm dispatch.

    The shape is the most specific applicable label; a graph that is both a
    path and a star (e.g. three vertices in a line) reports "path".
    """
    adj = inst.adjacency()
    comps = _components(inst.weight, adj)
    if len(comps) > 1:
        return ShapeReport(is_tree=False, is_path=False, diameter=None, shape="disconnected")
    n = inst.n
    is_tree = len(inst.edges) == n - 1
    if not is_tree:
        # all-pairs BFS; non-tree inputs stay small in practice
        diam = 0
        for v in inst.weight:
            dist = {v: 0}
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            diam = max(diam, max(dist.values()))
        return ShapeReport(is_tree=False, is_path=False, diameter=diam, shape="general-connected")
    diam = _tree_diameter(adj, next(iter(inst.weight)))
    is_path = all(len(nbrs) <= 2 for nbrs in adj.values())
    if is_path:
        shape = "path"
    elif diam <= 2:
        shape = "star"
    elif diam == 3:
        shape = "diam3-tree"
    else:
        shape = "tree"
    return ShapeReport(is_tree=True, is_path=is_path, diameter=diam, shape=shape)


def block_tally(inst: Instance, block) -> BlockTally:
    """Tally one block's weight per color and decide its winner status.

    Ties are compared over all of C, so a block whose every color weighs 0
    is colored as the whole color set.
    """
    members = list(block)
    if not members:
        raise ValueError("block must be non-empty")
    wbc = {c: 0 for c in inst.colors}
    for v in members:
        if v not in inst.weight:
            raise ValueError(f"unknown vertex id {v}")
        wbc[inst.color_of[v]] += inst.weight[v]
    mx = max(wbc.values())
    colored = frozenset(c for c in inst.colors if wbc[c] == mx)
    uniquely = next(iter(colored)) if len(colored) == 1 else None
    return BlockTally(weight_by_color=wbc, colored_as=colored, uniquely=uniquely)


def evaluate_partition(inst: Instance, part: Partition) -> EvalReport:
    """Decide whether ``part`` is a valid connected k-partition and a solution.

    A solution needs the number of uniquely target-colored blocks to exceed,
    for every other color r, the number of r-colored blocks (ties count for
    r).  Counts are computed whenever the blocks genuinely partition V, even
    if the partition is invalid for another reason (wrong block count,
    disconnected block).
    """
    blocks = part.blocks
    block_of: dict[int, int] = {}
    broken = None
    for bi, block in enumerate(blocks):
        if not block:
            broken = "not a partition (empty block)"
            break
        for v in block:
            if v not in inst.weight or v in block_of:
                broken = "not a partition"
                break
            block_of[v] = bi
        if broken:
            break
    if broken is None and len(block_of) != inst.n:
        broken = "not a partition (vertices missing)"
    if broken is not None:
        return EvalReport(False, broken, 0, {}, False)

    # per-block sparse tallies
    tallies: list[dict[str, int]] = [dict() for _ in blocks]
    for v, bi in block_of.items():
        c = inst.color_of[v]
        t = tallies[bi]
        t[c] = t.get(c, 0) + inst.weight[v]
    uniquely_p = 0
    colored_count: dict[str, int] = {}
    zero_blocks = 0
    p = inst.target
    for t in tallies:
        mx = max(t.values())
        if mx == 0:
            zero_blocks += 1  # tied across the whole color set
            continue
        winners = [c for c, w in t.items() if w == mx]
        if len(winners) == 1 and winners[0] == p:
            uniquely_p += 1
        for c in winners:
            colored_count[c] = colored_count.get(c, 0) + 1
    if zero_blocks:
        colored_count = {c: colored_count.get(c, 0) + zero_blocks for c in inst.colors}
        if len(inst.colors) == 1:
            uniquely_p += zero_blocks

    violation = None
    if len(blocks) != inst.k:
        violation = "wrong block count"
    else:
        # connectivity of every induced block in one sweep over the edges
        parent = {v: v for v in block_of}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in inst.edges:
            if block_of.get(a) == block_of.get(b) and a in parent and b in parent:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        for block in blocks:
            it = iter(block)
            root = find(next(it))
            if any(find(v) != root for v in it):
                violation = "disconnected block"
                break

    valid = violation is None
    max_other = max((cnt for c, cnt in colored_count.items() if c != p), default=0)
    is_solution = valid and uniquely_p > max_other
    return EvalReport(valid, violation, uniquely_p, colored_count, is_solution)


def cut_components(inst: Instance, cut) -> Partition:
    """Blocks induced by deleting ``cut`` from the instance's edge set.

    Works on any instance (the graph need not be a tree or even connected);
    blocks are ordered by their smallest vertex.
    """
    removed = set()
    edge_set = set(inst.edges)
    for e in cut:
        ne = _norm_edge(e)
        if ne not in edge_set:
            raise ValueError(f"edge {ne} not in instance")
        removed.add(ne)
    adj: dict[int, list[int]] = {v: [] for v in inst.weight}
    for e in inst.edges:
        if e not in removed:
            a, b = e
            adj[a].append(b)
            adj[b].append(a)
    return Partition(tuple(frozenset(c) for c in _components(inst.weight, adj)))


def partition_from_edge_cut(inst: Instance, cut) -> Partition:
    """Partition of a tree instance given the set of deleted edges.

    Deleting j edges of a tree yields exactly j+1 connected blocks.
    """
    if inst.mode != "connected" or len(inst.edges) != inst.n - 1:
        raise UnsupportedInstanceError("instance is not a tree")
    if len(_components(inst.weight, inst.adjacency())) != 1:
        raise UnsupportedInstanceError("instance is not a tree")
    return cut_components(inst, cut)
