"""Shared builders for randomized tests.

Everything here is seeded by the caller, so test runs are reproducible.
`rotate_fan_direct` is the independent shift-then-color formulation of fan
rotation used to cross-check the library's fused implementation.
"""

from __future__ import annotations

import random

from mgcolor import EdgeColoring, Fan, Graph, gnp_graph


def rand_graph(rng: random.Random, n_max: int = 10) -> Graph:
    n = rng.randint(0, n_max)
    p = rng.choice([0.0, 0.15, 0.35, 0.6, 0.9])
    return gnp_graph(n, p, rng.randrange(2**63))


def rand_proper_coloring(
    rng: random.Random,
    g: Graph,
    palette: int | None = None,
    steps: int | None = None,
) -> EdgeColoring:
    """Random reachable coloring state: a random valid mutation sequence.

    Attempts `steps` random recolorings (including uncolorings) and applies
    each one only when it is valid, so every state produced here is
    reachable from the empty coloring through the validated setter.
    """
    if palette is None:
        palette = g.max_degree() + 1
    coloring = EdgeColoring(g, palette)
    edges = g.edge_set()
    if not edges:
        return coloring
    if steps is None:
        steps = rng.randint(0, 4 * len(edges))
    for _ in range(steps):
        u, v = edges[rng.randrange(len(edges))]
        color = rng.choice([None] + list(range(palette)))
        if coloring.edge_color_valid(u, v, color):
            coloring.set_edge_color(u, v, color)
    return coloring


def uncolored_edges(coloring: EdgeColoring) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u, v in coloring.graph.edge_set()
        if coloring.color_of(u, v) is None
    ]


def pick_rotation_color(
    rng: random.Random, coloring: EdgeColoring, fan: Fan
) -> int | None:
    """A random color valid for the last fan edge; None when nothing else is."""
    x = fan.center
    shared = [
        c
        for c in coloring.free_colors_on(x)
        if coloring.is_free(fan.last(), c)
    ]
    if shared and rng.random() < 0.9:
        return rng.choice(shared)
    return None


def rotate_fan_direct(
    coloring: EdgeColoring, fan: Fan, color: int | None
) -> EdgeColoring:
    """Reference rotation: snapshot, uncolor the fan, then color the shift.

    Works on a copy and returns it; the original is untouched. Every write
    goes through the validated setter, so this independently demonstrates
    that the shifted assignment is reachable by valid recolorings.
    """
    out = coloring.copy()
    x = fan.center
    seq = fan.seq
    old = [coloring.color_of(x, f) for f in seq]
    for f in seq:
        out.set_edge_color(x, f, None)
    for i in range(len(seq) - 1):
        out.set_edge_color(x, seq[i], old[i + 1])
    out.set_edge_color(x, seq[-1], color)
    return out
