"""Generators for the two hardness constructions, with witness partitions.

clique_to_path turns a regular graph plus a clique size into a unit-weight
path (or disjoint-paths) instance that has a solution exactly when the graph
has a clique of that size.  partition_to_tree turns a multiset of integers
into a three-color tree instance that has a solution exactly when half of
the integers can be picked to reach half the total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Instance, Partition, _norm_edge, cut_components


@dataclass(frozen=True)
class SourceGraph:
    """Plain undirected graph used as reduction input."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = sorted(set(_norm_edge(e) for e in self.edges))
        for a, b in canon:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a},{b}) out of range")
        object.__setattr__(self, "edges", tuple(canon))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg


@dataclass(frozen=True)
class CliquePathParams:
    n: int
    m: int
    d: int
    ell: int
    N: int
    M: int
    z: int
    connected: bool
    k: int


@dataclass(frozen=True)
class CliquePathGadgets:
    """Vertex ids of every gadget, in path order.

    In connected mode ids are consecutive along the single path, so every
    edge of the instance joins consecutive ids.
    """

    vertex_paths: dict[int, tuple[int, ...]]
    edge_paths: dict[tuple[int, int], tuple[int, ...]]
    s_vertices: tuple[int, ...]  # target-colored first, then q-colored
    connectors: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CliquePathResult:
    instance: Instance
    params: CliquePathParams
    gadgets: CliquePathGadgets


def clique_to_path(source: SourceGraph, ell: int, connected: bool = False) -> CliquePathResult:
    """Build the unit-weight path instance encoding "source has an ell-clique".

    Disconnected mode produces z separate paths (the instance carries mode
    "disconnected"); connected mode splices them into one path with
    unique-colored connector runs of M vertices.
    """
    n, m = source.n, len(source.edges)
    if n < 1:
        raise ValueError("source graph is empty")
    degs = source.degrees()
    d = degs[0] if degs else 0
    if any(x != d for x in degs):
        raise ValueError("source graph is not regular")
    if not 1 <= ell <= n:
        raise ValueError("ell out of range")
    N = 4 * n * n
    M = 4 * N * n + 3 * m
    z = 2 * N + ell + m + 1
    if connected:
        k = (n - ell) * 3 * N + ell * d + math.comb(ell, 2) + (z - 1) * (M + 1)
    else:
        k = (n - ell) * 3 * N + ell * d + math.comb(ell, 2) + z

    fresh_counter = 0
    color_of: dict[int, str] = {}
    weight: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    fresh_colors: list[str] = []
    next_id = 0

    def fresh() -> str:
        nonlocal fresh_counter
        c = f"fresh_{fresh_counter}"
        fresh_counter += 1
        fresh_colors.append(c)
        return c

    def add_run(colors_seq) -> tuple[int, ...]:
        nonlocal next_id
        ids = tuple(range(next_id, next_id + len(colors_seq)))
        next_id += len(colors_seq)
        for vid, c in zip(ids, colors_seq):
            color_of[vid] = c
            weight[vid] = 1
        edges.extend((ids[i], ids[i + 1]) for i in range(len(ids) - 1))
        return ids

    def vertex_path_colors(v: int) -> list[str]:
        cols = ["q"] * (N - 1)
        for _ in range(N):
            cols.append(fresh())
            cols.append(fresh())
            cols.append(f"cv_{v}")
        return cols

    # component chunks in splice order: vertex gadgets, edge gadgets, S
    chunk_colors: list[list[str]] = [vertex_path_colors(v) for v in range(n)]
    for a, b in source.edges:
        chunk_colors.append([f"cv_{a}", "r", "r", f"cv_{b}"])
    s_count_p = N + 1
    s_count_q = N - (n - ell)
    for _ in range(s_count_p):
        chunk_colors.append(["p"])
    for _ in range(s_count_q):
        chunk_colors.append(["q"])
    assert len(chunk_colors) == z

    vertex_paths: dict[int, tuple[int, ...]] = {}
    edge_paths: dict[tuple[int, int], tuple[int, ...]] = {}
    s_vertices: list[int] = []
    connectors: list[tuple[int, ...]] = []
    for ci, cols in enumerate(chunk_colors):
        if connected and ci > 0:
            conn_ids = add_run([fresh() for _ in range(M)])
            connectors.append(conn_ids)
            edges.append((conn_ids[0] - 1, conn_ids[0]))  # attach to previous chunk
            ids = add_run(cols)
            edges.append((conn_ids[-1], ids[0]))
        else:
            ids = add_run(cols)
        if ci < n:
            vertex_paths[ci] = ids
        elif ci < n + m:
            edge_paths[source.edges[ci - n]] = ids
        else:
            s_vertices.append(ids[0])

    colors = ("p", "q", "r") + tuple(f"cv_{v}" for v in range(n)) + tuple(fresh_colors)
    inst = Instance(
        edges=tuple(edges),
        weight=weight,
        color_of=color_of,
        colors=colors,
        target="p",
        k=k,
        mode="connected" if connected else "disconnected",
    )
    params = CliquePathParams(n=n, m=m, d=d, ell=ell, N=N, M=M, z=z, connected=connected, k=k)
    gadgets = CliquePathGadgets(
        vertex_paths=vertex_paths,
        edge_paths=edge_paths,
        s_vertices=tuple(s_vertices),
        connectors=tuple(connectors),
    )
    return CliquePathResult(instance=inst, params=params, gadgets=gadgets)


def _witness_cut_ids(result: CliquePathResult, K: frozenset[int]) -> list[tuple[int, int]]:
    params = result.params
    g = result.gadgets
    N = params.N
    cuts: list[tuple[int, int]] = []
    for v, ids in g.vertex_paths.items():
        if v in K:
            continue
        # every edge except those between two q-colored vertices
        for i in range(N - 2, len(ids) - 1):
            cuts.append((ids[i], ids[i + 1]))
    for (a, b), ids in g.edge_paths.items():
        if a in K:
            cuts.append((ids[0], ids[1]))
        if b in K:
            cuts.append((ids[2], ids[3]))
        if a in K and b in K:
            cuts.append((ids[1], ids[2]))
    if params.connected:
        for ci, conn in enumerate(g.connectors):
            first_attach = (conn[0] - 1, conn[0])
            for i in range(len(conn) - 1):
                cuts.append((conn[i], conn[i + 1]))
            cuts.append((conn[-1], conn[-1] + 1))
            if ci == 0:
                # leave the very first attaching edge intact: one connector
                # vertex rides along with the previous block, which keeps
                # every color-count identity while making the part count
                # come out at exactly k
                pass
            else:
                cuts.append(first_attach)
    return cuts


def clique_witness(source: SourceGraph, ell: int, K, connected: bool = False) -> Partition:
    """Solution partition certifying the clique K on the generated instance."""
    kset = frozenset(K)
    if len(kset) != ell:
        raise ValueError(f"K has {len(kset)} vertices, expected {ell}")
    if not all(0 <= v < source.n for v in kset):
        raise ValueError("K contains unknown vertices")
    edge_set = set(source.edges)
    members = sorted(kset)
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if (a, b) not in edge_set:
                raise ValueError(f"K is not a clique: missing edge ({a},{b})")
    result = clique_to_path(source, ell, connected)
    cuts = _witness_cut_ids(result, kset)
    return cut_components(result.instance, cuts)


def validate_clique_path(result: CliquePathResult) -> list[str]:
    """Structural checks on a generated clique-path instance."""
    out: list[str] = []
    inst = result.instance
    params = result.params
    N, n, m, ell = params.N, params.n, params.m, params.ell
    if any(w != 1 for w in inst.weight.values()):
        out.append("non-unit weight")
    if N != 4 * n * n:
        out.append("N formula violated")
    if params.z != 2 * N + ell + m + 1:
        out.append("z formula violated")
    base = (n - ell) * 3 * N + ell * params.d + math.comb(ell, 2)
    expect_k = base + ((params.z - 1) * (params.M + 1) if params.connected else params.z)
    if inst.k != expect_k:
        out.append("k formula violated")
    s_cols = [inst.color_of[v] for v in result.gadgets.s_vertices]
    if s_cols.count("p") != N + 1:
        out.append("S does not hold N+1 target-colored vertices")
    if s_cols.count("q") != N - (n - ell):
        out.append("S does not hold N-(n-ell) q-colored vertices")
    for v, ids in result.gadgets.vertex_paths.items():
        if len(ids) != 4 * N - 1:
            out.append(f"vertex gadget {v} has wrong length")
            continue
        if any(inst.color_of[ids[i]] != "q" for i in range(N - 1)):
            out.append(f"vertex gadget {v} q-prefix broken")
        marks = [inst.color_of[ids[N - 2 + 3 * i]] for i in range(1, N + 1)]
        if any(c != f"cv_{v}" for c in marks):
            out.append(f"vertex gadget {v} marker coloring broken")
    for (a, b), ids in result.gadgets.edge_paths.items():
        cols = [inst.color_of[i] for i in ids]
        if cols != [f"cv_{a}", "r", "r", f"cv_{b}"]:
            out.append(f"edge gadget ({a},{b}) miscolored")
    # component structure
    adj: dict[int, list[int]] = {v: [] for v in inst.weight}
    for a, b in inst.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen: set[int] = set()
    comps = 0
    for v in inst.weight:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    if params.connected:
        if comps != 1:
            out.append("connected mode is not connected")
        if len(inst.edges) != inst.n - 1 or any(len(x) > 2 for x in adj.values()):
            out.append("connected mode is not a single path")
    elif comps != params.z:
        out.append(f"expected {params.z} components, found {comps}")
    return out


@dataclass(frozen=True)
class PartitionTreeParams:
    elements: tuple[int, ...]  # after normalization
    original_elements: tuple[int, ...]
    scale: int  # 1 when no normalization was needed
    n: int
    s: int
    N: int
    M: int
    k: int
    center: int
    leaves: tuple[int, ...]
    gadgets: dict[int, dict[str, int]]  # 1-based index -> {xq, xr, yq, yr}


@dataclass(frozen=True)
class PartitionTreeResult:
    instance: Instance
    params: PartitionTreeParams


def partition_to_tree(elements) -> PartitionTreeResult:
    """Three-color tree instance encoding a half-half partition problem.

    Requires an even number of elements; when their sum is not divisible by
    the count, every element is scaled up by the count first (recorded in
    params.scale), which preserves the answer.
    """
    original = tuple(int(a) for a in elements)
    n = len(original)
    if n == 0:
        raise ValueError("element multiset is empty")
    if n % 2 != 0:
        raise ValueError("element count must be even")
    if any(a < 0 for a in original):
        raise ValueError("elements must be non-negative")
    scale = 1
    elems = original
    if sum(elems) % n != 0:
        scale = n
        elems = tuple(a * n for a in original)
    s = sum(elems)
    N = s + 1
    M = N * (2**n) * (n + 1) + s // 2 + 2  # smallest value above the stability bound
    k = 3 * n // 2 + 1

    center = 0
    weight = {center: M * n + s // 2 + 1}
    color_of = {center: "p"}
    leaves = tuple(range(1, n // 2 + 1))
    for v in leaves:
        weight[v] = 1
        color_of[v] = "p"
    edges = [(center, v) for v in leaves]
    gadgets: dict[int, dict[str, int]] = {}
    nid = n // 2 + 1
    for i in range(1, n + 1):
        a_i = elems[i - 1]
        xq, xr, yq, yr = nid, nid + 1, nid + 2, nid + 3
        nid += 4
        weight[xq] = M + N * 2**i + a_i
        weight[xr] = M - N * 2**i
        weight[yq] = M - N * 2**i
        weight[yr] = M + N * 2**i - a_i + 2 * s // n
        color_of[xq] = "q"
        color_of[yq] = "q"
        color_of[xr] = "r"
        color_of[yr] = "r"
        edges.extend([(center, xq), (xq, xr), (center, yq), (yq, yr)])
        gadgets[i] = {"xq": xq, "xr": xr, "yq": yq, "yr": yr}

    inst = Instance(
        edges=tuple(edges),
        weight=weight,
        color_of=color_of,
        colors=("p", "q", "r"),
        target="p",
        k=k,
    )
    params = PartitionTreeParams(
        elements=elems,
        original_elements=original,
        scale=scale,
        n=n,
        s=s,
        N=N,
        M=M,
        k=k,
        center=center,
        leaves=leaves,
        gadgets=gadgets,
    )
    return PartitionTreeResult(instance=inst, params=params)


def partition_witness(elements, index_set) -> Partition:
    """Solution partition for indices I (1-based) picking half the total sum."""
    result = partition_to_tree(elements)
    params = result.params
    chosen = frozenset(int(i) for i in index_set)
    if not all(1 <= i <= params.n for i in chosen):
        raise ValueError("index out of range")
    if len(chosen) != params.n // 2:
        raise ValueError(f"need exactly {params.n // 2} indices, got {len(chosen)}")
    picked = sum(params.elements[i - 1] for i in chosen)
    if 2 * picked != params.s:
        raise ValueError(f"chosen indices sum to {picked}, need {params.s // 2}")
    big = [params.center]
    for i in sorted(chosen):
        g = params.gadgets[i]
        big.extend([g["xq"], g["xr"], g["yq"], g["yr"]])
    blocks = [frozenset(big)]
    blocks.extend(frozenset((v,)) for v in params.leaves)
    rest = sorted(set(range(1, params.n + 1)) - chosen)
    for i in rest:
        g = params.gadgets[i]
        blocks.append(frozenset((g["xq"], g["xr"])))
    for i in rest:
        g = params.gadgets[i]
        blocks.append(frozenset((g["yq"], g["yr"])))
    return Partition(tuple(blocks))
