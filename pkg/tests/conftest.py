"""Shared instance builders for the test suite."""

from __future__ import annotations

import pytest

from gerrygraph import Instance
from gerrygraph.oracle import color_palette


def make_path(weights, colors_of, colors=("p", "q"), target="p", k=1) -> Instance:
    """Path 0-1-2-... with the given per-vertex weights and colors."""
    n = len(weights)
    return Instance(
        edges=tuple((i, i + 1) for i in range(n - 1)),
        weight={i: w for i, w in enumerate(weights)},
        color_of={i: c for i, c in enumerate(colors_of)},
        colors=tuple(colors),
        target=target,
        k=k,
    )


def make_star(center_color, center_weight, leaves, colors=("p", "q"), target="p", k=1) -> Instance:
    """Star with center vertex 0; ``leaves`` is a list of (color, weight)."""
    n = 1 + len(leaves)
    weight = {0: center_weight}
    color_of = {0: center_color}
    for i, (c, w) in enumerate(leaves, start=1):
        weight[i] = w
        color_of[i] = c
    return Instance(
        edges=tuple((0, v) for v in range(1, n)),
        weight=weight,
        color_of=color_of,
        colors=tuple(colors),
        target=target,
        k=k,
    )


def make_diam3(center_colors, center_weights, leaves1, leaves2,
               colors=("p", "q"), target="p", k=1) -> Instance:
    """Two adjacent centers 0 and 1; per-center leaf lists of (color, weight)."""
    weight = {0: center_weights[0], 1: center_weights[1]}
    color_of = {0: center_colors[0], 1: center_colors[1]}
    edges = [(0, 1)]
    nid = 2
    for c, w in leaves1:
        weight[nid] = w
        color_of[nid] = c
        edges.append((0, nid))
        nid += 1
    for c, w in leaves2:
        weight[nid] = w
        color_of[nid] = c
        edges.append((1, nid))
        nid += 1
    return Instance(
        edges=tuple(edges),
        weight=weight,
        color_of=color_of,
        colors=tuple(colors),
        target=target,
        k=k,
    )


def random_star(rng, n, num_colors, max_weight, k) -> Instance:
    cols = tuple(color_palette(num_colors))
    return Instance(
        edges=tuple((0, v) for v in range(1, n)),
        weight={v: rng.randint(1, max_weight) for v in range(n)},
        color_of={v: cols[rng.randrange(num_colors)] for v in range(n)},
        colors=cols,
        target=cols[0],
        k=k,
    )


def random_diam3(rng, n, num_colors, max_weight, k) -> Instance:
    assert n >= 4
    cols = tuple(color_palette(num_colors))
    n1 = rng.randint(1, n - 3)
    n2 = n - 2 - n1
    edges = [(0, 1)]
    edges += [(0, v) for v in range(2, 2 + n1)]
    edges += [(1, v) for v in range(2 + n1, n)]
    return Instance(
        edges=tuple(edges),
        weight={v: rng.randint(1, max_weight) for v in range(n)},
        color_of={v: cols[rng.randrange(num_colors)] for v in range(n)},
        colors=cols,
        target=cols[0],
        k=k,
    )


@pytest.fixture
def fig1() -> Instance:
    """Six-vertex worked example: two colors, target black, one 4-cycle."""
    # 0=u 1=v 2=w 3=x 4=y 5=z
    return Instance(
        edges=((0, 2), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)),
        weight={0: 1, 1: 1, 2: 1, 3: 1, 4: 2, 5: 4},
        color_of={0: "black", 1: "white", 2: "black", 3: "white", 4: "white", 5: "black"},
        colors=("black", "white"),
        target="black",
        k=2,
    )
