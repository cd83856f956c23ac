"""Line-oriented text formats for instances, partitions, and source graphs.

Instance files: header lines (colors / target / k, optionally mode), then
one ``v <id> <color> <weight>`` line per vertex, then ``e <id> <id>`` per
edge.  ``#`` starts a comment.  Partition files hold one block per line as
whitespace-separated vertex ids.
"""

from __future__ import annotations

from .core import Instance, Partition
from .reductions import SourceGraph


class FormatError(ValueError):
    """Malformed instance, partition, or graph text."""


def _int(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: malformed integer {tok!r} in {what}") from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_instance(text: str) -> Instance:
    colors: tuple[str, ...] | None = None
    target: str | None = None
    k: int | None = None
    mode = "connected"
    weight: dict[int, int] = {}
    color_of: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    saw_edge = False
    for lineno, line in _content_lines(text):
        toks = line.split()
        kind = toks[0]
        if kind == "colors":
            if colors is not None:
                raise FormatError(f"line {lineno}: duplicate colors header")
            if len(toks) < 2:
                raise FormatError(f"line {lineno}: colors header needs at least one color")
            colors = tuple(toks[1:])
        elif kind == "target":
            if target is not None or len(toks) != 2:
                raise FormatError(f"line {lineno}: bad target header")
            target = toks[1]
        elif kind == "k":
            if k is not None or len(toks) != 2:
                raise FormatError(f"line {lineno}: bad k header")
            k = _int(toks[1], "k", lineno)
        elif kind == "mode":
            if len(toks) != 2 or toks[1] not in ("connected", "disconnected"):
                raise FormatError(f"line {lineno}: bad mode header")
            mode = toks[1]
        elif kind == "v":
            if saw_edge:
                raise FormatError(f"line {lineno}: vertex line after edge lines")
            if len(toks) != 4:
                raise FormatError(f"line {lineno}: vertex line needs id, color, weight")
            vid = _int(toks[1], "vertex id", lineno)
            if vid in weight:
                raise FormatError(f"line {lineno}: duplicate vertex {vid}")
            color_of[vid] = toks[2]
            weight[vid] = _int(toks[3], "weight", lineno)
        elif kind == "e":
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: edge line needs two ids")
            a = _int(toks[1], "edge", lineno)
            b = _int(toks[2], "edge", lineno)
            if a not in weight or b not in weight:
                raise FormatError(f"line {lineno}: edge ({a},{b}) references unknown vertex")
            saw_edge = True
            edges.append((a, b))
        else:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
    if colors is None or target is None or k is None:
        raise FormatError("missing header (colors, target, and k are required)")
    if not weight:
        raise FormatError("instance has no vertices")
    return Instance(
        edges=tuple(edges),
        weight=weight,
        color_of=color_of,
        colors=colors,
        target=target,
        k=k,
        mode=mode,
    )


def write_instance(inst: Instance) -> str:
    lines = []
    if inst.mode == "disconnected":
        lines.append("# mode disconnected")
    lines.append("colors " + " ".join(inst.colors))
    lines.append(f"target {inst.target}")
    lines.append(f"k {inst.k}")
    if inst.mode != "connected":
        lines.append(f"mode {inst.mode}")
    for v in sorted(inst.weight):
        lines.append(f"v {v} {inst.color_of[v]} {inst.weight[v]}")
    for a, b in inst.edges:
        lines.append(f"e {a} {b}")
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> Partition:
    blocks = []
    for lineno, line in _content_lines(text):
        ids = [_int(tok, "partition block", lineno) for tok in line.split()]
        blocks.append(frozenset(ids))
    if not blocks:
        raise FormatError("partition file has no blocks")
    return Partition(tuple(blocks))


def write_partition(part: Partition) -> str:
    lines = [" ".join(str(v) for v in sorted(block)) for block in part.blocks]
    return "\n".join(lines) + "\n"


def parse_source_graph(text: str) -> SourceGraph:
    """Graph file: an ``n <count>`` header, then one ``<u> <v>`` line per edge."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, line in _content_lines(text):
        toks = line.split()
        if toks[0] == "n":
            if n is not None or len(toks) != 2:
                raise FormatError(f"line {lineno}: bad n header")
            n = _int(toks[1], "n", lineno)
        elif len(toks) == 2:
            edges.append((_int(toks[0], "edge", lineno), _int(toks[1], "edge", lineno)))
        else:
            raise FormatError(f"line {lineno}: expected 'n <count>' or '<u> <v>'")
    if n is None:
        raise FormatError("missing 'n <count>' header")
    try:
        return SourceGraph(n=n, edges=tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
