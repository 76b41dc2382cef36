"""Known pots and colorings used by the checks, tests and bundled data files."""
from __future__ import annotations

from .multigraph import Multigraph, cube, vertex_id
from .pots import EdgeColoring, Pot

P1 = Pot([[1, 1, 1], [2, 2, 2], [-2, -3, -3], [-1, -4, -4], [-1, 3, -5], [-2, 4, 5]])
P2 = Pot([[1, 1, 1], [2, 2, 2], [-2, -3, -3], [-1, -4, -4], [3, 4, 5], [-1, -2, -5]])


def _cube_coloring(arcs_by_label: list[tuple[str, str, int]]) -> EdgeColoring:
    q = cube()
    index = {e: i for i, e in enumerate(q.edges)}
    arcs: list = [None] * q.size
    colors: list = [None] * q.size
    for tail, head, color in arcs_by_label:
        t, h = vertex_id(tail), vertex_id(head)
        e = index[(min(t, h), max(t, h))]
        arcs[e] = (t, h)
        colors[e] = color
    return EdgeColoring(q, tuple(arcs), tuple(colors))


def p1_witness() -> EdgeColoring:
    """Cube coloring inducing P1: 3-stars of colors 1, 2 out of 000 and 111,
    2-stars of colors 3, 4 into 011 and 100, color 5 matching out of 101 and 110."""
    return _cube_coloring([
        ("000", "100", 1), ("000", "010", 1), ("000", "001", 1),
        ("111", "011", 2), ("111", "101", 2), ("111", "110", 2),
        ("010", "011", 3), ("001", "011", 3),
        ("101", "100", 4), ("110", "100", 4),
        ("101", "001", 5), ("110", "010", 5),
    ])


def p2_witness() -> EdgeColoring:
    """Cube coloring inducing P2: 3-stars out of 000 and 011, colors 3, 4 into
    111 and 100, color 5 matching out of 101 and 110."""
    return _cube_coloring([
        ("000", "100", 1), ("000", "010", 1), ("000", "001", 1),
        ("011", "111", 2), ("011", "001", 2), ("011", "010", 2),
        ("110", "111", 3), ("101", "111", 3),
        ("101", "100", 4), ("110", "100", 4),
        ("101", "001", 5), ("110", "010", 5),
    ])


def small_example() -> EdgeColoring:
    """Four-vertex coloring with a loop and a digon whose tiles are
    {1,2,2}, {-1,-2,3}, {1,-2,-3}, {1,-1,-1}."""
    g = Multigraph.from_edges(4, [(0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3)])
    arcs = ((0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3))
    return EdgeColoring(g, arcs, (1, 2, 2, 3, 1, 1))


# vertex -> expected tile, as tabulated for the two witnesses
P1_TABLE = {
    "000": [1, 1, 1], "111": [2, 2, 2], "100": [-1, -4, -4], "011": [-2, -3, -3],
    "001": [-1, 3, -5], "010": [-1, 3, -5], "101": [-2, 4, 5], "110": [-2, 4, 5],
}
P2_TABLE = {
    "000": [1, 1, 1], "011": [2, 2, 2], "111": [-2, -3, -3], "100": [-1, -4, -4],
    "101": [3, 4, 5], "110": [3, 4, 5], "001": [-1, -2, -5], "010": [-1, -2, -5],
}
