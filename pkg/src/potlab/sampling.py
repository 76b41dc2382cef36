"""Random multigraphs and colorings for the property suites."""
from __future__ import annotations

import random

from .multigraph import Multigraph
from .pots import EdgeColoring


def random_connected_multigraph(
    rng: random.Random, max_order: int = 6, max_extra: int = 4, loops: bool = True
) -> Multigraph:
    """Random spanning tree plus a few extra edges (parallel edges and loops allowed)."""
    n = rng.randint(1, max_order)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    extra = rng.randint(0 if n > 1 else 1, max_extra)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        edges.append((u, v))
    if not edges:
        edges.append((0, 0))
    return Multigraph.from_edges(n, edges)


def random_coloring(rng: random.Random, g: Multigraph, max_colors: int = 4) -> EdgeColoring:
    arcs = tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges)
    colors = tuple(rng.randint(1, max_colors) for _ in g.edges)
    return EdgeColoring(g, arcs, colors)


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(perm)
