"""Tiles, pots, edge-colorings of orientations and pot isomorphisms."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .multigraph import Multigraph, Orientation, automorphism_group, edge_image


@dataclass(frozen=True, order=False)
class Tile:
    """Multiset of nonzero signed colors, kept sorted ascending."""

    colors: tuple[int, ...]

    def __init__(self, colors: Iterable[int]):
        colors = tuple(sorted(int(c) for c in colors))
        if not colors:
            raise ValueError("a tile needs at least one signed color")
        if 0 in colors:
            raise ValueError("0 is not a color")
        object.__setattr__(self, "colors", colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.colors)) + "}"

    def counts(self) -> Counter:
        return Counter(self.colors)

    def absolute(self) -> Tile:
        return Tile(abs(c) for c in self.colors)

    def negated(self) -> Tile:
        return Tile(-c for c in self.colors)

    def support(self) -> frozenset[int]:
        return frozenset(abs(c) for c in self.colors)

    def shape(self) -> tuple[int, ...]:
        """Multiplicity pattern of the absolute colors; invariant under pot isomorphism."""
        return tuple(sorted(Counter(abs(c) for c in self.colors).values(), reverse=True))

    def sort_key(self):
        absolute = tuple(sorted(abs(c) for c in self.colors))
        # ties on absolute colors: +c before -c
        signs = tuple(sorted((abs(c), c < 0) for c in self.colors))
        return (len(self.colors), len(set(absolute)), absolute, signs)

    def __lt__(self, other: Tile) -> bool:
        return self.sort_key() < other.sort_key()


def _multiset_meet(a: Counter, b: Counter) -> int:
    return sum(min(n, b[k]) for k, n in a.items())


@dataclass(frozen=True)
class Pot:
    """Set of distinct tiles in canonical order (size, #colors, absolute colors, signed colors)."""

    tiles: tuple[Tile, ...]

    def __init__(self, tiles: Iterable):
        tiles = {t if isinstance(t, Tile) else Tile(t) for t in tiles}
        object.__setattr__(self, "tiles", tuple(sorted(tiles, key=Tile.sort_key)))

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def __contains__(self, tile) -> bool:
        return (tile if isinstance(tile, Tile) else Tile(tile)) in set(self.tiles)

    def __repr__(self) -> str:
        return "Pot{" + ", ".join(map(repr, self.tiles)) + "}"

    @property
    def colors(self) -> tuple[int, ...]:
        """The positive colors used, ascending."""
        return tuple(sorted({abs(c) for t in self.tiles for c in t.colors}))

    def issubset(self, other: Pot) -> bool:
        return set(self.tiles) <= set(other.tiles)

    def to_json(self) -> list[list[int]]:
        return [list(t.colors) for t in self.tiles]

    @classmethod
    def from_json(cls, data) -> Pot:
        if not isinstance(data, list) or not all(isinstance(t, list) for t in data):
            raise ValueError("pot JSON must be a list of integer lists")
        return cls(data)


def absolute_pot(p: Pot) -> Pot:
    return Pot(t.absolute() for t in p)


@dataclass(frozen=True)
class StructuralFlags:
    loop_possible: bool
    multiedge_possible: bool
    monochromatic_count: int
    bichromatic_count: int


def structural_flags(p: Pot) -> StructuralFlags:
    counts = [t.counts() for t in p]
    negs = [t.negated().counts() for t in p]
    loop = any(_multiset_meet(neg, c) >= 2 for neg, c in zip(negs, counts))
    multi = any(_multiset_meet(negs[i], counts[j]) >= 2 for i in range(len(p)) for j in range(len(p)))
    return StructuralFlags(
        loop_possible=loop,
        multiedge_possible=multi,
        monochromatic_count=sum(len(t.support()) == 1 for t in p),
        bichromatic_count=sum(len(t.support()) == 2 for t in p),
    )


# ---------------------------------------------------------------------------
# edge colorings


@dataclass(frozen=True)
class EdgeColoring:
    """Color per edge id, on an orientation (``arcs``) or on the undirected graph (``arcs is None``)."""

    graph: Multigraph
    arcs: tuple[tuple[int, int], ...] | None
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.size:
            raise ValueError("every edge needs a color")
        if any(int(c) < 1 for c in self.colors):
            raise ValueError("colors are positive integers")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.arcs is not None:
            Orientation(self.graph, self.arcs)  # validates
            object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))

    @classmethod
    def on(cls, orientation: Orientation, colors: Sequence[int]) -> EdgeColoring:
        return cls(orientation.graph, orientation.arcs, tuple(colors))

    @property
    def directed(self) -> bool:
        return self.arcs is not None

    @property
    def orientation(self) -> Orientation:
        if self.arcs is None:
            raise ValueError("undirected coloring has no orientation")
        return Orientation(self.graph, self.arcs)

    def color_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            classes.setdefault(c, []).append(e)
        return dict(sorted(classes.items()))

    def used_colors(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colors)))

    def normalized(self) -> EdgeColoring:
        """Same coloring with colors renamed onto ``1..c`` in increasing order."""
        rename = {c: i + 1 for i, c in enumerate(self.used_colors())}
        return EdgeColoring(self.graph, self.arcs, tuple(rename[c] for c in self.colors))

    def to_json(self) -> dict:
        arcs = self.arcs if self.arcs is not None else self.graph.edges
        data = {
            "graph": self.graph.to_json(),
            "edges": [
                {"id": i, "tail": t, "head": h, "color": c}
                for i, ((t, h), c) in enumerate(zip(arcs, self.colors))
            ],
        }
        if self.arcs is None:
            data["directed"] = False
        return data

    @classmethod
    def from_json(cls, data: dict) -> EdgeColoring:
        try:
            graph = Multigraph.from_json(data["graph"])
            records = sorted(data["edges"], key=lambda r: int(r["id"]))
            if [int(r["id"]) for r in records] != list(range(graph.size)):
                raise ValueError("edge ids must be 0..m-1")
            arcs = tuple((int(r["tail"]), int(r["head"])) for r in records)
            colors = tuple(int(r["color"]) for r in records)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed coloring JSON: {exc}") from exc
        return cls(graph, None if data.get("directed", True) is False else arcs, colors)


def induced_tile(coloring: EdgeColoring, x: int) -> Tile:
    """Signed colors at x: +c at a tail, -c at a head, both for a directed loop.

    Undirected colorings contribute c per end, so an undirected loop gives {c, c}.
    """
    out: list[int] = []
    g = coloring.graph
    for e, c in enumerate(coloring.colors):
        if coloring.arcs is None:
            a, b = g.edges[e]
            out.extend([c] * ((a == x) + (b == x)))
            continue
        tail, head = coloring.arcs[e]
        if tail == x:
            out.append(c)
        if head == x:
            out.append(-c)
    return Tile(out)


def induced_tiles(coloring: EdgeColoring) -> list[Tile]:
    """Tile of every vertex, in vertex order."""
    acc: list[list[int]] = [[] for _ in range(coloring.graph.order)]
    if coloring.arcs is None:
        for (a, b), c in zip(coloring.graph.edges, coloring.colors):
            acc[a].append(c)
            acc[b].append(c)
    else:
        for (t, h), c in zip(coloring.arcs, coloring.colors):
            acc[t].append(c)
            acc[h].append(-c)
    return [Tile(a) for a in acc]


def induced_pot(coloring: EdgeColoring) -> Pot:
    return Pot(induced_tiles(coloring))


def underlying_coloring(coloring: EdgeColoring) -> EdgeColoring:
    return EdgeColoring(coloring.graph, None, coloring.colors)


def usage_vector(coloring: EdgeColoring, p: Pot) -> tuple[int, ...]:
    """How many vertices carry each tile of p (canonical tile order)."""
    counts = Counter(induced_tiles(coloring))
    return tuple(counts.get(t, 0) for t in p)


# ---------------------------------------------------------------------------
# pot isomorphisms


@dataclass(frozen=True)
class PotIsomorphism:
    """Sign-odd bijection; ``mapping[i]`` is the signed image of the positive color i."""

    source: Pot
    target: Pot
    mapping: tuple[tuple[int, int], ...]

    def __init__(self, source: Pot, target: Pot, mapping: Mapping[int, int]):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "mapping", tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def __call__(self, signed: int) -> int:
        image = self.as_dict()[abs(signed)]
        return image if signed > 0 else -image

    def positive(self, color: int) -> int:
        return abs(self(color))

    def tile(self, t: Tile) -> Tile:
        m = self.as_dict()
        return Tile(m[c] if c > 0 else -m[-c] for c in t.colors)

    def pot(self, p: Pot) -> Pot:
        return Pot(self.tile(t) for t in p)

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping)


def _color_profiles(p: Pot) -> dict[int, tuple]:
    prof: dict[int, list] = {c: [] for c in p.colors}
    for t in p:
        cnt = t.counts()
        shape = t.shape()
        for c in t.support():
            prof[c].append((shape, cnt[c], cnt[-c]))
    return {c: tuple(sorted(v)) for c, v in prof.items()}


def _swap_profile(profile: tuple) -> tuple:
    return tuple(sorted((s, neg, pos) for s, pos, neg in profile))


def pot_isomorphisms(p: Pot, q: Pot) -> list[PotIsomorphism]:
    """Every sign-odd color bijection mapping p onto q."""
    src, dst = p.colors, q.colors
    if len(p) != len(q) or len(src) != len(dst):
        return []
    if sorted(len(t) for t in p) != sorted(len(t) for t in q):
        return []
    prof_p, prof_q = _color_profiles(p), _color_profiles(q)
    options: dict[int, list[int]] = {}
    for c in src:
        opts = []
        for d in dst:
            if prof_q[d] == prof_p[c]:
                opts.append(d)
            if prof_q[d] == _swap_profile(prof_p[c]):
                opts.append(-d)
        if not opts:
            return []
        options[c] = opts
    targets = set(q.tiles)
    # tiles become checkable once their last color is assigned
    order = sorted(src, key=lambda c: len(options[c]))
    position = {c: i for i, c in enumerate(order)}
    ready: dict[int, list[Tile]] = {}
    for t in p:
        ready.setdefault(max(position[c] for c in t.support()), []).append(t)

    found: list[PotIsomorphism] = []
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> None:
        if k == len(order):
            found.append(PotIsomorphism(p, q, dict(mapping)))
            return
        c = order[k]
        for image in options[c]:
            if abs(image) in used:
                continue
            mapping[c] = image
            used.add(abs(image))
            ok = all(
                Tile(mapping[x] if x > 0 else -mapping[-x] for x in t.colors) in targets
                for t in ready.get(k, ())
            )
            if ok:
                extend(k + 1)
            used.discard(abs(image))
            del mapping[c]

    extend(0)
    return sorted(found, key=lambda f: f.mapping)


def are_isomorphic_pots(p: Pot, q: Pot) -> PotIsomorphism | None:
    isos = pot_isomorphisms(p, q)
    return isos[0] if isos else None


def negate_colors(p: Pot, colors: Iterable[int]) -> Pot:
    flip = set(colors)
    return Pot(Tile(-c if abs(c) in flip else c for c in t.colors) for t in p)


def apply_pot_isomorphism(coloring: EdgeColoring, f: PotIsomorphism) -> EdgeColoring:
    """Reverse the edges whose color gets a negative image, then recolor by |f|.

    The induced pot of the result is ``f`` applied to the induced pot of ``coloring``.
    """
    if not coloring.directed:
        raise ValueError("pot isomorphisms act on colorings of orientations")
    domain = f.as_dict()
    if any(c not in domain for c in coloring.colors):
        raise ValueError("coloring uses colors outside the isomorphism's domain")
    if not induced_pot(coloring).issubset(f.source):
        raise ValueError("coloring does not realize through the isomorphism's source pot")
    arcs = tuple(
        (h, t) if domain[c] < 0 else (t, h) for (t, h), c in zip(coloring.arcs, coloring.colors)
    )
    return EdgeColoring(coloring.graph, arcs, tuple(abs(domain[c]) for c in coloring.colors))


def class_flips(coloring: EdgeColoring, colors: Iterable[int]) -> frozenset[int]:
    """Edge ids of the given color classes: an orientation map reversing whole classes."""
    flip = set(colors)
    return frozenset(e for e, c in enumerate(coloring.colors) if c in flip)


def retarget_realization(
    coloring: EdgeColoring,
    g: Mapping[int, int] | None = None,
    sigma: Iterable[int] = (),
    rho: Sequence[int] | None = None,
) -> EdgeColoring:
    """Recolor by ``g``, reverse the edges in ``sigma``, then move everything along ``rho``.

    ``sigma`` must reverse each color class entirely or not at all and ``rho``
    must be an automorphism of the base graph.
    """
    if not coloring.directed:
        raise ValueError("retargeting needs a coloring of an orientation")
    graph = coloring.graph
    used = coloring.used_colors()
    g = dict(g) if g is not None else {c: c for c in used}
    if any(c not in g for c in used):
        raise ValueError("color map must cover every used color")
    if len({g[c] for c in used}) != len(used) or any(g[c] < 1 for c in used):
        raise ValueError("color map must be injective onto positive colors")
    sigma = frozenset(sigma)
    for c, members in coloring.color_classes().items():
        hit = sum(e in sigma for e in members)
        if hit not in (0, len(members)):
            raise ValueError(f"orientation map splits color class {c}")
    if rho is None:
        rho = tuple(range(graph.order))
    rho = tuple(rho)
    if sorted(rho) != list(range(graph.order)):
        raise ValueError("rho must be a vertex permutation")
    edge_to = edge_image(graph, rho)

    arcs: list = [None] * graph.size
    colors: list = [None] * graph.size
    for e, ((t, h), c) in enumerate(zip(coloring.arcs, coloring.colors)):
        if e in sigma:
            t, h = h, t
        arcs[edge_to[e]] = (rho[t], rho[h])
        colors[edge_to[e]] = g[c]
    return EdgeColoring(graph, tuple(arcs), tuple(colors))


def is_automorphism(graph: Multigraph, rho: Sequence[int]) -> bool:
    return graph.relabel(rho).adjacency() == graph.adjacency()


__all__ = [
    "Tile",
    "Pot",
    "EdgeColoring",
    "PotIsomorphism",
    "StructuralFlags",
    "absolute_pot",
    "structural_flags",
    "induced_tile",
    "induced_tiles",
    "induced_pot",
    "underlying_coloring",
    "usage_vector",
    "pot_isomorphisms",
    "are_isomorphic_pots",
    "negate_colors",
    "apply_pot_isomorphism",
    "class_flips",
    "retarget_realization",
    "is_automorphism",
    "automorphism_group",
]
