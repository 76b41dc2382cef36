"""Enumeration of the connected graphs a pot can realize, up to a bounded order.

For each valid usage vector the vertices receive their tiles, and for each
color the ``+c`` half-edges are paired with the ``-c`` half-edges.  Half-edges
of one sign and color at one vertex are interchangeable, so a pairing is a
nonnegative integer table (tail vertex x head vertex) with the half-edge
counts as margins; a diagonal entry is a loop.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator

from .multigraph import CanonicalForm, Multigraph, canonical_form
from .pots import EdgeColoring, Pot, Tile
from .spectrum import UsageVector, usage_vectors

MAX_OUTPUT_ORDER = 12


class OrderBoundError(ValueError):
    pass


@dataclass(frozen=True)
class OutputClass:
    form: CanonicalForm
    graph: Multigraph
    witness: EdgeColoring
    usage: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.graph.order

    def to_json(self) -> dict:
        return {
            "canonical": list(self.form.code),
            "order": self.order,
            "size": self.graph.size,
            "usage": list(self.usage),
            "witness": self.witness.to_json(),
        }


def _check_bound(max_order: int) -> None:
    if max_order > MAX_OUTPUT_ORDER:
        raise OrderBoundError(f"output enumeration is limited to order {MAX_OUTPUT_ORDER}, got {max_order}")


def _split(supply: int, caps: list[int], ties: list[int]) -> Iterator[list[int]]:
    """Vectors a with sum(a) == supply, a[j] <= caps[j], and a[j] <= a[ties[j]]
    whenever ties[j] >= 0."""
    n = len(caps)
    a = [0] * n
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + caps[j]

    def rec(j: int, left: int):
        if j == n:
            if left == 0:
                yield list(a)
            return
        if left > suffix[j]:
            return
        hi = min(caps[j], left)
        if ties[j] >= 0:
            hi = min(hi, a[ties[j]])
        for x in range(hi, -1, -1):
            a[j] = x
            yield from rec(j + 1, left - x)
        a[j] = 0

    yield from rec(0, supply)


def realizations_of_usage(
    p: Pot,
    usage: UsageVector,
    allow_loops: bool = True,
    allow_multiedges: bool = True,
    connected: bool = True,
) -> Iterator[EdgeColoring]:
    """Colorings whose vertex ``v`` carries the v-th tile of the expanded usage vector.

    Untouched vertices with the same tile are interchangeable, so only one
    representative assignment is produced for each run of them; the result
    covers every isomorphism class but may still contain isomorphic copies.
    """
    tiles: list[Tile] = [t for t, r in zip(p.tiles, usage.counts) for _ in range(r)]
    n = len(tiles)
    if n == 0:
        return
    counts = [t.counts() for t in tiles]
    tile_id = [p.tiles.index(t) for t in tiles]
    colors = p.colors
    touched = [0] * n
    pair_mult: Counter = Counter()
    arcs: list[tuple[int, int]] = []
    arc_colors: list[int] = []

    plan = []
    for c in colors:
        pos = [v for v in range(n) if counts[v][c]]
        neg = [v for v in range(n) if counts[v][-c]]
        if sum(counts[v][c] for v in pos) != sum(counts[v][-c] for v in neg):
            return
        if pos:
            plan.append((c, pos, neg))

    def place(step: int, k: int, remaining: list[int]):
        if step == len(plan):
            if connected and not _connected(n, arcs):
                return
            g = Multigraph.from_edges(n, arcs)
            yield EdgeColoring(g, tuple(arcs), tuple(arc_colors))
            return
        c, pos, neg = plan[step]
        if k == len(pos):
            yield from place(step + 1, 0, None)
            return
        if remaining is None:
            remaining = [counts[v][-c] for v in neg]
        u = pos[k]
        caps = []
        for j, v in enumerate(neg):
            cap = remaining[j]
            if v == u and not allow_loops:
                cap = 0
            if not allow_multiedges and v != u:
                cap = min(cap, 1 - pair_mult[(min(u, v), max(u, v))])
            if v == u and not allow_multiedges:
                cap = min(cap, 1 - pair_mult[(u, u)])
            caps.append(max(cap, 0))
        ties = [-1] * len(neg)
        for j in range(1, len(neg)):
            v, w = neg[j - 1], neg[j]
            if (
                v != u and w != u and not touched[v] and not touched[w]
                and tile_id[v] == tile_id[w] and remaining[j - 1] == remaining[j]
            ):
                ties[j] = j - 1
        for split in _split(counts[u][c], caps, ties):
            added = 0
            for j, x in enumerate(split):
                if not x:
                    continue
                v = neg[j]
                key = (min(u, v), max(u, v))
                pair_mult[key] += x
                touched[u] += x
                touched[v] += x
                for _ in range(x):
                    arcs.append((u, v))
                    arc_colors.append(c)
                added += x
            nxt = [r - x for r, x in zip(remaining, split)]
            yield from place(step, k + 1, nxt)
            for j, x in enumerate(split):
                if not x:
                    continue
                v = neg[j]
                key = (min(u, v), max(u, v))
                pair_mult[key] -= x
                touched[u] -= x
                touched[v] -= x
            del arcs[len(arcs) - added:]
            del arc_colors[len(arc_colors) - added:]

    yield from place(0, 0, None)


def _connected(n: int, arcs: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for a, b in arcs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


def iter_outputs(
    p: Pot, order: int, allow_loops: bool = True, allow_multiedges: bool = True
) -> Iterator[tuple[UsageVector, EdgeColoring]]:
    """Connected labeled realizations of exactly ``order`` vertices (with repeats)."""
    _check_bound(order)
    for usage in usage_vectors(p, order):
        for coloring in realizations_of_usage(p, usage, allow_loops, allow_multiedges):
            yield usage, coloring


def enumerate_outputs(
    p: Pot, max_order: int, allow_loops: bool = True, allow_multiedges: bool = True
) -> list[OutputClass]:
    """One class per isomorphism type of connected graph realizable with <= max_order vertices."""
    _check_bound(max_order)
    found: dict[CanonicalForm, OutputClass] = {}
    for n in range(1, max_order + 1):
        for usage, coloring in iter_outputs(p, n, allow_loops, allow_multiedges):
            form = canonical_form(coloring.graph)
            if form not in found:
                found[form] = OutputClass(form, coloring.graph, coloring, usage.counts)
    return sorted(found.values(), key=lambda oc: oc.form)


def outputs_below(p: Pot, order: int, **options) -> list[OutputClass]:
    return enumerate_outputs(p, order - 1, **options) if order > 1 else []


def find_output(
    p: Pot, orders, accept: Callable[[Multigraph], bool]
) -> tuple[UsageVector, EdgeColoring] | None:
    """First connected realization (orders scanned in the given order) whose graph is accepted."""
    for n in orders:
        for usage, coloring in iter_outputs(p, n):
            if accept(coloring.graph):
                return usage, coloring
    return None
