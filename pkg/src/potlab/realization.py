"""Deciding whether a pot realizes a graph, and in which scenario."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .multigraph import Multigraph, canonical_form
from .outputs import find_output
from .pots import EdgeColoring, Pot, induced_pot, induced_tiles, usage_vector
from .spectrum import usage_vectors


class DisconnectedGraph(ValueError):
    pass


@dataclass(frozen=True)
class RealizationWitness:
    coloring: EdgeColoring
    pot: Pot
    usage: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "coloring": self.coloring.to_json(),
            "pot": self.pot.to_json(),
            "usage": list(self.usage),
        }


def validate_witness(coloring: EdgeColoring, p: Pot) -> list[str]:
    """Problems with ``coloring`` as a realization through ``p`` (empty if valid)."""
    problems = []
    tiles = induced_tiles(coloring)
    deg = coloring.graph.degrees()
    for v, t in enumerate(tiles):
        if len(t) != deg[v]:
            problems.append(f"vertex {v}: tile size {len(t)} != degree {deg[v]}")
        if t not in p:
            problems.append(f"vertex {v}: tile {t} not in pot")
    balance = Counter()
    for t in tiles:
        for c in t:
            balance[abs(c)] += 1 if c > 0 else -1
    if any(balance.values()):
        problems.append("signed colors do not balance")
    if not coloring.graph.is_connected():
        problems.append("graph is disconnected")
    return problems


def _twins(g: Multigraph) -> list[tuple[int, int]]:
    """Pairs u < v whose transposition is an automorphism of g."""
    adj = g.adjacency()
    out = []
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if adj[u][u] != adj[v][v]:
                continue
            if all(adj[u][w] == adj[v][w] for w in range(g.order) if w not in (u, v)):
                out.append((u, v))
    return out


def realize(g: Multigraph, p: Pot, strict: bool = False) -> RealizationWitness | None:
    """A coloring of an orientation of g whose induced pot lies in p, or None.

    With ``strict`` the coloring must also use every color of p.
    """
    if not g.is_connected():
        raise DisconnectedGraph("realization is defined for connected graphs")
    deg = g.degrees()
    if not usage_vectors(p, g.order, Counter(deg)):
        return None

    order = sorted(range(g.order), key=lambda v: (-deg[v], v))
    position = {v: i for i, v in enumerate(order)}
    by_size: dict[int, list[int]] = {}
    for i, t in enumerate(p.tiles):
        by_size.setdefault(len(t), []).append(i)
    # edges to settle when vertex v is placed: those whose other end is already placed
    pending: dict[int, list[int]] = {v: [] for v in range(g.order)}
    for e, (a, b) in enumerate(g.edges):
        later = a if position[a] >= position[b] else b
        pending[later].append(e)
    must_not_exceed: dict[int, list[int]] = {v: [] for v in range(g.order)}
    for u, v in _twins(g):
        first, second = sorted((u, v), key=position.__getitem__)
        must_not_exceed[second].append(first)

    tile_of = [-1] * g.order
    rem: list[Counter] = [Counter() for _ in range(g.order)]
    arcs: list = [None] * g.size
    colors: list = [None] * g.size
    all_colors = set(p.colors)

    def assign_edges(v: int, k: int):
        edges = pending[v]
        if k == len(edges):
            yield True
            return
        e = edges[k]
        a, b = g.edges[e]
        u = b if a == v else a
        if u == v:
            for c in sorted(x for x in rem[v] if x > 0 and rem[v][x] and rem[v][-x]):
                rem[v][c] -= 1
                rem[v][-c] -= 1
                arcs[e], colors[e] = (v, v), c
                yield from assign_edges(v, k + 1)
                rem[v][c] += 1
                rem[v][-c] += 1
            return
        for s in sorted(x for x in rem[v] if rem[v][x]):
            if not rem[u][-s]:
                continue
            rem[v][s] -= 1
            rem[u][-s] -= 1
            arcs[e] = (v, u) if s > 0 else (u, v)
            colors[e] = abs(s)
            yield from assign_edges(v, k + 1)
            rem[v][s] += 1
            rem[u][-s] += 1

    def place(i: int):
        if i == g.order:
            if strict and set(colors) != all_colors:
                return
            yield True
            return
        v = order[i]
        floor = max((tile_of[u] for u in must_not_exceed[v]), default=-1)
        for ti in by_size.get(deg[v], ()):
            if ti < floor:
                continue
            tile_of[v] = ti
            rem[v] = p.tiles[ti].counts()
            for _ in assign_edges(v, 0):
                yield from place(i + 1)
        tile_of[v] = -1
        rem[v] = Counter()

    for _ in place(0):
        coloring = EdgeColoring(g, tuple(arcs), tuple(colors))
        return RealizationWitness(coloring, induced_pot(coloring), usage_vector(coloring, p))
    return None


class IsoCache:
    """Memoized "is this labeled graph isomorphic to the target" test."""

    def __init__(self, target: Multigraph):
        self.target = target
        self.form = canonical_form(target)
        self.degrees = sorted(target.degrees())
        self.simple = target.is_simple()
        self._memo: dict = {}

    def __call__(self, h: Multigraph) -> bool:
        if h.order != self.target.order or h.size != self.target.size:
            return False
        if self.simple and not h.is_simple():
            return False
        key = tuple(sorted(h.edges))
        hit = self._memo.get(key)
        if hit is None:
            hit = sorted(h.degrees()) == self.degrees and canonical_form(h) == self.form
            self._memo[key] = hit
        return hit


@dataclass(frozen=True)
class ScenarioFlags:
    realized: bool
    scenario2: bool
    scenario3: bool
    witness: RealizationWitness | None = None
    smaller: EdgeColoring | None = field(default=None)
    same_order: EdgeColoring | None = field(default=None)

    @property
    def scenario(self) -> int:
        """Largest i with g in O_i(p), 0 if not realized."""
        return 3 if self.scenario3 else 2 if self.scenario2 else 1 if self.realized else 0

    def to_json(self) -> dict:
        return {
            "realized": self.realized,
            "scenario2": self.scenario2,
            "scenario3": self.scenario3,
            "witness": self.witness.to_json() if self.witness else None,
            "smaller_counterexample": self.smaller.to_json() if self.smaller else None,
            "same_order_counterexample": self.same_order.to_json() if self.same_order else None,
        }


def smaller_output(p: Pot, n: int) -> EdgeColoring | None:
    hit = find_output(p, range(1, n), lambda h: True)
    return hit[1] if hit else None


def nonisomorphic_output(p: Pot, g: Multigraph, iso: IsoCache | None = None) -> EdgeColoring | None:
    iso = iso or IsoCache(g)
    hit = find_output(p, [g.order], lambda h: not iso(h))
    return hit[1] if hit else None


def classify_scenarios(g: Multigraph, p: Pot, iso: IsoCache | None = None) -> ScenarioFlags:
    """Scenario membership of g for p.  Orders up to |V(g)| are searched exhaustively."""
    if not g.is_connected():
        raise DisconnectedGraph("scenarios are defined for connected graphs")
    witness = realize(g, p)
    if witness is None:
        return ScenarioFlags(False, False, False)
    smaller = smaller_output(p, g.order)
    if smaller is not None:
        return ScenarioFlags(True, False, False, witness, smaller=smaller)
    same = nonisomorphic_output(p, g, iso)
    return ScenarioFlags(True, True, same is None, witness, same_order=same)


def scenario3_counterexample(p: Pot, g: Multigraph, iso: IsoCache | None = None) -> EdgeColoring | None:
    """For a pot known to realize g: an output defeating scenario 3, or None if it holds."""
    smaller = smaller_output(p, g.order)
    if smaller is not None:
        return smaller
    return nonisomorphic_output(p, g, iso)


def same_color_same_direction_check(coloring: EdgeColoring) -> bool:
    """At every vertex, equal-colored edges are all outgoing or all ingoing."""
    if isinstance(coloring, RealizationWitness):
        coloring = coloring.coloring
    if coloring.graph.has_loops():
        raise ValueError("the direction check applies to loopless graphs")
    seen: dict[tuple[int, int], int] = {}
    for (t, h), c in zip(coloring.arcs, coloring.colors):
        for v, direction in ((t, 1), (h, -1)):
            if seen.setdefault((v, c), direction) != direction:
                return False
    return True
