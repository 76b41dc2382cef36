"""Exhaustive searches over colorings of small graphs.

The cube census works with color classes: every class of a 3-realization of
the cube is a star with at most three edges or an antipodal pair
``{e, e + 111}``.  Partitions of the twelve edges into such classes are taken
up to the 48 cube automorphisms, and each class is oriented up to a whole-class
flip (stars point out of their center; antipodal pairs keep two relative
orientations).  Each resulting coloring's induced pot is then checked by
output enumeration.
"""
from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .multigraph import (
    Multigraph,
    are_isomorphic,
    automorphism_group,
    cube,
    edge_image,
    is_star,
    vertex_label,
)
from .pots import (
    EdgeColoring,
    Pot,
    Tile,
    induced_pot,
    pot_isomorphisms,
    structural_flags,
)
from .realization import IsoCache, scenario3_counterexample, smaller_output

ANTIPODE = 0b111


@dataclass(frozen=True)
class ColorClass:
    edges: tuple[int, ...]
    kind: str  # "star1", "star2", "star3" or "matching"
    center: int | None

    def label(self, q: Multigraph) -> str:
        if self.kind == "matching":
            pairs = ", ".join("{" + ",".join(vertex_label(v) for v in q.edges[e]) + "}" for e in self.edges)
            return f"matching {pairs}"
        return f"{self.kind} at {vertex_label(self.center)}"


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[ColorClass, ...]

    @property
    def star3_count(self) -> int:
        return sum(c.kind == "star3" for c in self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(c.edges) for c in self.classes), reverse=True))

    def to_json(self, q: Multigraph) -> list[dict]:
        return [
            {"kind": c.kind, "center": None if c.center is None else vertex_label(c.center),
             "edges": [[vertex_label(v) for v in q.edges[e]] for e in c.edges]}
            for c in self.classes
        ]


def _antipodal(q: Multigraph, e: int) -> int:
    u, v = q.edges[e]
    return q.edges.index(tuple(sorted((u ^ ANTIPODE, v ^ ANTIPODE))))


def allowed_classes(q: Multigraph | None = None) -> list[ColorClass]:
    """Every star of 1-3 edges and every antipodal pair of the cube."""
    q = q or cube()
    out: dict[tuple[int, ...], ColorClass] = {}
    for v in range(q.order):
        inc = q.incident(v)
        for k in (1, 2, 3):
            for edges in itertools.combinations(inc, k):
                center = v if k > 1 else min(q.edges[edges[0]])
                out.setdefault(edges, ColorClass(edges, f"star{k}", center))
    for e in range(q.size):
        pair = tuple(sorted((e, _antipodal(q, e))))
        out.setdefault(pair, ColorClass(pair, "matching", None))
    return sorted(out.values(), key=lambda c: c.edges)


class CubeSymmetry:
    def __init__(self):
        self.q = cube()
        self.automorphisms = automorphism_group(self.q)
        self.edge_maps = [edge_image(self.q, a) for a in self.automorphisms]
        self.classes = {c.edges: c for c in allowed_classes(self.q)}

    def canonical(self, blocks) -> tuple[tuple[int, ...], ...]:
        return min(
            tuple(sorted(tuple(sorted(m[e] for e in b)) for b in blocks)) for m in self.edge_maps
        )


_SYMMETRY: CubeSymmetry | None = None


def cube_symmetry() -> CubeSymmetry:
    global _SYMMETRY
    if _SYMMETRY is None:
        _SYMMETRY = CubeSymmetry()
    return _SYMMETRY


def raw_class_partitions(c: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every partition of E(Q) into exactly c allowed classes (labeled edges, unlabeled classes)."""
    sym = cube_symmetry()
    m = sym.q.size
    by_first: dict[int, list[tuple[int, ...]]] = {}
    for edges in sym.classes:
        by_first.setdefault(edges[0], []).append(edges)
    covered = [False] * m
    chosen: list[tuple[int, ...]] = []

    def rec(left: int):
        first = next((e for e in range(m) if not covered[e]), None)
        if first is None:
            if left == 0:
                yield tuple(chosen)
            return
        uncovered = sum(not x for x in covered)
        if left == 0 or uncovered > 3 * left:
            return
        for block in by_first.get(first, ()):
            if any(covered[e] for e in block):
                continue
            for e in block:
                covered[e] = True
            chosen.append(block)
            yield from rec(left - 1)
            chosen.pop()
            for e in block:
                covered[e] = False

    yield from rec(c)


def enumerate_class_partitions(c: int) -> list[ClassPartition]:
    """Class partitions of the cube into c colors, one per Aut(Q)-orbit."""
    if not 1 <= c <= 12:
        raise ValueError("color count must be in 1..12")
    sym = cube_symmetry()
    reps = sorted({sym.canonical(blocks) for blocks in raw_class_partitions(c)})
    return [ClassPartition(tuple(sym.classes[b] for b in rep)) for rep in reps]


def lift_colorings(partition: ClassPartition) -> Iterator[EdgeColoring]:
    """Colorings with color i on the i-th class, one per choice of relative
    orientation inside antipodal pairs.  Stars point out of their center."""
    q = cube()
    base_arcs: list = [None] * q.size
    colors: list = [None] * q.size
    matchings = []
    for i, cls in enumerate(partition.classes, start=1):
        for e in cls.edges:
            colors[e] = i
            u, v = q.edges[e]
            if cls.kind == "matching":
                base_arcs[e] = (u, v)
            else:
                base_arcs[e] = (cls.center, v if u == cls.center else u)
        if cls.kind == "matching":
            matchings.append(cls.edges[1])
    for flips in itertools.product((False, True), repeat=len(matchings)):
        arcs = list(base_arcs)
        for e, flip in zip(matchings, flips):
            if flip:
                arcs[e] = arcs[e][::-1]
        yield EdgeColoring(q, tuple(arcs), tuple(colors))


def pot_invariant(p: Pot):
    """Cheap invariant of a pot's isomorphism class, used for bucketing."""
    shapes = tuple(sorted(t.shape() for t in p))
    profiles = []
    for c in p.colors:
        prof = []
        for t in p:
            cnt = t.counts()
            if cnt[c] or cnt[-c]:
                prof.append((t.shape(), min(cnt[c], cnt[-c]), max(cnt[c], cnt[-c])))
        profiles.append(tuple(sorted(prof)))
    return (len(p), len(p.colors), shapes, tuple(sorted(profiles)))


class PotClasses:
    """Groups pots by isomorphism, keeping the first member as representative."""

    def __init__(self):
        self._buckets: dict = {}
        self.reps: list[Pot] = []

    def find(self, p: Pot) -> int | None:
        for idx in self._buckets.get(pot_invariant(p), ()):
            if pot_isomorphisms(self.reps[idx], p):
                return idx
        return None

    def add(self, p: Pot) -> tuple[int, bool]:
        idx = self.find(p)
        if idx is not None:
            return idx, False
        self.reps.append(p)
        self._buckets.setdefault(pot_invariant(p), []).append(len(self.reps) - 1)
        return len(self.reps) - 1, True


@dataclass
class Candidate:
    partition: ClassPartition
    coloring: EdgeColoring
    pot: Pot
    counterexample: EdgeColoring | None

    @property
    def survives(self) -> bool:
        return self.counterexample is None

    @property
    def monochromatic(self) -> int:
        return structural_flags(self.pot).monochromatic_count


@dataclass
class ColorSweep:
    colors: int
    partitions: int
    raw_partitions: int
    candidates: list[Candidate]

    @property
    def survivors(self) -> list[Candidate]:
        return [c for c in self.candidates if c.survives]


def sweep(c: int, max_pot_size: int | None = None) -> ColorSweep:
    """Scenario-3 check of every lifted coloring with c colors.

    With ``max_pot_size`` only colorings whose pot is at most that large are
    checked (the rest are skipped, not recorded).
    """
    q = cube()
    iso = IsoCache(q)
    partitions = enumerate_class_partitions(c)
    raw = sum(1 for _ in raw_class_partitions(c))
    memo: dict[Pot, EdgeColoring | None] = {}
    candidates = []
    for part in partitions:
        for coloring in lift_colorings(part):
            p = induced_pot(coloring)
            if max_pot_size is not None and len(p) > max_pot_size:
                continue
            if p not in memo:
                memo[p] = scenario3_counterexample(p, q, iso)
            candidates.append(Candidate(part, coloring, p, memo[p]))
    return ColorSweep(c, len(partitions), raw, candidates)


@dataclass
class CensusReport:
    sweep: ColorSweep
    classes: list[dict]
    runtime: float

    @property
    def representatives(self) -> list[Pot]:
        return [c["pot"] for c in self.classes]

    def stats(self) -> dict:
        survivors = self.sweep.survivors
        sizes = Counter(len(c.pot) for c in survivors)
        return {
            "colors": self.sweep.colors,
            "raw_partitions": self.sweep.raw_partitions,
            "partition_orbits": self.sweep.partitions,
            "colorings": len(self.sweep.candidates),
            "distinct_pots": len({c.pot for c in self.sweep.candidates}),
            "pruned": len(self.sweep.candidates) - len(survivors),
            "surviving_colorings": len(survivors),
            "surviving_pot_sizes": {str(k): v for k, v in sorted(sizes.items())},
            "min_surviving_pot_size": min(sizes) if sizes else None,
        }

    def to_json(self, certificates: bool = False) -> dict:
        q = cube()
        data = {
            "stats": self.stats(),
            "classes": [
                {
                    "pot": c["pot"].to_json(),
                    "size": len(c["pot"]),
                    "colors": len(c["pot"].colors),
                    "members": c["members"],
                    "witness": c["witness"].to_json(),
                    "partition": c["partition"].to_json(q),
                }
                for c in self.classes
            ],
            "runtime_s": round(self.runtime, 3),
        }
        if certificates:
            data["candidates"] = [
                {
                    "pot": cand.pot.to_json(),
                    "partition": cand.partition.to_json(q),
                    "survives": cand.survives,
                    "counterexample": None if cand.survives else cand.counterexample.graph.to_json(),
                }
                for cand in self.sweep.candidates
            ]
        return data


def census_cube(c: int = 5, biminimal_only: bool = True) -> CensusReport:
    """Scenario-3 survivors among c-color cube colorings, grouped by pot isomorphism.

    With ``biminimal_only`` only survivors of minimum pot size are grouped.
    """
    start = time.perf_counter()
    sw = sweep(c)
    survivors = sw.survivors
    if biminimal_only and survivors:
        least = min(len(s.pot) for s in survivors)
        survivors = [s for s in survivors if len(s.pot) == least]
    groups = PotClasses()
    classes: list[dict] = []
    for s in sorted(survivors, key=lambda s: s.pot.tiles):
        idx, new = groups.add(s.pot)
        if new:
            classes.append({"pot": s.pot, "members": 0, "witness": s.coloring, "partition": s.partition})
        classes[idx]["members"] += 1
    classes.sort(key=lambda c: c["pot"].tiles)
    return CensusReport(sw, classes, time.perf_counter() - start)


def census_biminimal_cube() -> CensusReport:
    return census_cube(5, biminimal_only=True)


def lower_bound_certificate(max_colors: int = 7) -> dict:
    """Evidence for B_3(Q) >= 5 and T_3(Q) >= 6.

    No coloring with at most 4 colors survives, and for 5..max_colors colors no
    surviving pot has fewer than 6 tiles.  A pot with at most 5 tiles of size 3
    carries at most 7 colors (each color shows up with both signs), so the
    default covers every pot smaller than 6.
    """
    start = time.perf_counter()
    per_colors = {}
    for c in range(1, 5):
        sw = sweep(c)
        per_colors[c] = {
            "partition_orbits": sw.partitions,
            "colorings": len(sw.candidates),
            "survivors": len(sw.survivors),
            "defeated_by": [
                {"pot": cand.pot.to_json(), "counterexample": cand.counterexample.graph.to_json()}
                for cand in sw.candidates
            ],
        }
    five = sweep(5)
    sizes = [len(s.pot) for s in five.survivors]
    small = {}
    for c in range(5, max_colors + 1):
        sw = five if c == 5 else sweep(c, max_pot_size=5)
        small[c] = {
            "checked": sum(len(cand.pot) <= 5 for cand in sw.candidates),
            "survivors": sum(cand.survives and len(cand.pot) <= 5 for cand in sw.candidates),
        }
    counting = []
    for s in five.survivors:
        c1 = s.partition.star3_count
        counting.append(12 <= 3 * c1 + 2 * (5 - c1) and c1 >= 2)
    return {
        "B3_at_least_5": {
            "holds": all(per_colors[c]["survivors"] == 0 for c in per_colors),
            "per_colors": per_colors,
        },
        "T3_at_least_6": {
            "holds": bool(sizes) and min(sizes) == 6 and all(v["survivors"] == 0 for v in small.values()),
            "min_pot_size_5_colors": min(sizes) if sizes else None,
            "small_pots_by_colors": small,
        },
        "counting_bound": {"holds": all(counting), "survivors": len(counting)},
        "runtime_s": round(time.perf_counter() - start, 3),
    }


def verify_lower_bounds() -> dict:
    return lower_bound_certificate()


# ---------------------------------------------------------------------------
# T_i / B_i by bounded search over colorings


class BudgetExceeded(ValueError):
    pass


DEFAULT_BUDGET = 10**9


@dataclass
class ExtremalStats:
    scenario: int
    T: int | None
    B: int | None
    T_witness: Pot | None
    B_witness: Pot | None
    tile_bound: int
    color_bound: int
    colorings_visited: int
    pot_classes_checked: int
    T_unconditional: bool
    B_unconditional: bool
    notes: list[str] = field(default_factory=list)

    @property
    def biminimal(self) -> Pot | None:
        return self.T_witness if self.T_witness is not None and len(self.T_witness.colors) == self.B else None

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "T": self.T,
            "B": self.B,
            "T_witness": self.T_witness.to_json() if self.T_witness else None,
            "B_witness": self.B_witness.to_json() if self.B_witness else None,
            "bounds": {"tiles": self.tile_bound, "colors": self.color_bound},
            "colorings_visited": self.colorings_visited,
            "pot_classes_checked": self.pot_classes_checked,
            "T_unconditional": self.T_unconditional,
            "B_unconditional": self.B_unconditional,
            "notes": self.notes,
        }


def _stirling2(n: int, k: int) -> int:
    return sum((-1) ** i * math.comb(k, i) * (k - i) ** n for i in range(k + 1)) // math.factorial(k)


def search_budget(g: Multigraph, color_bound: int) -> int:
    """Colorings up to color renaming and whole-class flips, before tile pruning."""
    m = g.size
    return sum(_stirling2(m, c) * 2 ** (m - c) for c in range(1, min(color_bound, m) + 1))


def colorings_up_to_flips(g: Multigraph, color_bound: int, tile_bound: int) -> Iterator[EdgeColoring]:
    """Directed colorings of g with at most color_bound colors and at most
    tile_bound distinct tiles, one per color renaming and whole-class flip.

    Colors appear in first-use order along a BFS edge order; the first edge
    of each class keeps its default direction, and loops (whose tile is the
    same either way) are never flipped.
    """
    n = g.order
    seen = {0}
    bfs = [0]
    for v in bfs:
        for e in g.incident(v):
            for w in g.edges[e]:
                if w not in seen:
                    seen.add(w)
                    bfs.append(w)
    pos = {v: i for i, v in enumerate(bfs)}
    order = sorted(range(g.size), key=lambda e: (max(pos[x] for x in g.edges[e]), min(pos[x] for x in g.edges[e]), e))
    last = {}
    for k, e in enumerate(order):
        for v in g.edges[e]:
            last[v] = k
    completes: dict[int, list[int]] = {}
    for v, k in last.items():
        completes.setdefault(k, []).append(v)

    arcs: list = [None] * g.size
    colors: list = [None] * g.size
    partial: list[list[int]] = [[] for _ in range(n)]
    tiles_seen: Counter = Counter()

    def rec(k: int, used: int):
        if k == len(order):
            yield EdgeColoring(g, tuple(arcs), tuple(colors))
            return
        e = order[k]
        u, v = g.edges[e]
        for c in range(1, min(used + 1, color_bound) + 1):
            directions = [(u, v)] if (c == used + 1 or u == v) else [(u, v), (v, u)]
            for t, h in directions:
                arcs[e], colors[e] = (t, h), c
                partial[t].append(c)
                partial[h].append(-c)
                done = [Tile(partial[x]) for x in completes.get(k, ())]
                for tile in done:
                    tiles_seen[tile] += 1
                if len(tiles_seen) <= tile_bound:
                    yield from rec(k + 1, max(used, c))
                for tile in done:
                    tiles_seen[tile] -= 1
                    if not tiles_seen[tile]:
                        del tiles_seen[tile]
                partial[t].pop()
                partial[h].pop()

    yield from rec(0, 0)


def _mixed(p: Pot) -> int:
    """Tiles holding both signs of some color; used to prefer sign-pure witnesses on ties."""
    return sum(any(-c in t.colors for c in t.colors if c > 0) for t in p)


def _passes(p: Pot, g: Multigraph, scenario: int, iso: IsoCache) -> bool:
    if scenario == 1:
        return True
    if scenario == 2:
        return smaller_output(p, g.order) is None
    return scenario3_counterexample(p, g, iso) is None


def minimal_pot_stats(
    g: Multigraph,
    scenario: int,
    tile_bound: int = 4,
    color_bound: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> ExtremalStats:
    """T_i(g) and B_i(g) over pots with at most tile_bound tiles and color_bound colors.

    Every minimal pot i-realizing g is the induced pot of a realization of g,
    so it suffices to scan colorings of g.  For the cube in scenario 3 the
    scan runs over class partitions (stars and antipodal pairs) instead.
    """
    if scenario not in (1, 2, 3):
        raise ValueError("scenario must be 1, 2 or 3")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.order > 8:
        raise BudgetExceeded("minimal_pot_stats handles graphs of order <= 8")
    max_deg = max(g.degrees())
    iso = IsoCache(g)
    notes: list[str] = []

    if scenario == 3 and are_isomorphic(g, cube()) is not None:
        sweeps = [sweep(c) for c in range(1, color_bound + 1)]
        visited = sum(len(s.candidates) for s in sweeps)
        checked = len({cand.pot for s in sweeps for cand in s.candidates})
        passing = [(cand.pot, cand.pot) for s in sweeps for cand in s.survivors if len(cand.pot) <= tile_bound]
        notes.append("cube scenario 3: colorings restricted to star / antipodal-pair classes")
    else:
        need = search_budget(g, color_bound)
        if need > budget:
            raise BudgetExceeded(f"search needs ~{need} colorings, budget is {budget}")
        pots: dict[Pot, EdgeColoring] = {}
        visited = 0
        for coloring in colorings_up_to_flips(g, color_bound, tile_bound):
            visited += 1
            pots.setdefault(induced_pot(coloring), coloring)
        groups = PotClasses()
        for p in sorted(pots, key=lambda p: (len(p), len(p.colors), p.tiles)):
            groups.add(p)
        checked = len(groups.reps)
        passing = [(p, p) for p in groups.reps if _passes(p, g, scenario, iso)]

    t_pot = min((p for p, _ in passing), key=lambda p: (len(p), len(p.colors), _mixed(p), p.tiles), default=None)
    b_pot = min((p for p, _ in passing), key=lambda p: (len(p.colors), len(p), _mixed(p), p.tiles), default=None)
    T = len(t_pot) if t_pot else None
    B = len(b_pot.colors) if b_pot else None

    degs = sorted(set(g.degrees()))
    t_uncond = T is not None and color_bound >= ((T - 1) * max_deg) // 2
    if B is None:
        b_uncond = False
    elif B == 1:
        b_uncond = True
    else:
        signed = 2 * (B - 1)
        possible = sum(math.comb(signed + d - 1, d) for d in degs)
        b_uncond = tile_bound >= possible
    if notes:
        # the class restriction is exact for 3-realizations of the cube; every
        # sweep below B covered all pot sizes, and pots under 6 tiles use <= 7 colors
        t_uncond = T is not None and color_bound >= min(7, ((T - 1) * max_deg) // 2)
        b_uncond = B is not None and all(not s.survivors for s in sweeps[: B - 1])
    return ExtremalStats(
        scenario, T, B, t_pot, b_pot, tile_bound, color_bound, visited, checked, t_uncond, b_uncond, notes
    )


def classes_of(coloring: EdgeColoring) -> list[tuple[str, int | None]]:
    """Shape of every color class of a cube coloring: star size or antipodal pair."""
    q = coloring.graph
    out = []
    for c, edges in coloring.color_classes().items():
        center = is_star(q, edges)
        if center is not None and len(edges) <= 3:
            out.append((f"star{len(edges)}", center))
        elif len(edges) == 2 and _antipodal(q, edges[0]) == edges[1]:
            out.append(("matching", None))
        else:
            out.append(("other", None))
    return out
