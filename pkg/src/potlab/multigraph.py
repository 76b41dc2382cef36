"""Small undirected multigraphs with loops and parallel edges.

Vertices are ``0..order-1``; each edge is a record ``(u, v)`` with ``u <= v``
whose position in :attr:`Multigraph.edges` is its edge id.  Parallel edges
are repeated records, a loop is ``(v, v)``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MAX_ORDER = 12


class UnsupportedSize(ValueError):
    """Raised when an exact search is asked for a graph above :data:`MAX_ORDER`."""


@dataclass(frozen=True)
class Multigraph:
    order: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        normalized = []
        for edge in self.edges:
            u, v = edge
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {edge} has an endpoint outside 0..{self.order - 1}")
            normalized.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> Multigraph:
        return cls(order, tuple((int(u), int(v)) for u, v in edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_loop(self, edge_id: int) -> bool:
        u, v = self.edges[edge_id]
        return u == v

    def loops(self, v: int) -> int:
        return sum(1 for a, b in self.edges if a == b == v)

    def degree(self, v: int) -> int:
        # a loop counts twice
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def incident(self, v: int) -> list[int]:
        return [i for i, (a, b) in enumerate(self.edges) if v in (a, b)]

    def adjacency(self) -> list[list[int]]:
        """Multiplicity matrix; the diagonal holds loop counts."""
        adj = [[0] * self.order for _ in range(self.order)]
        for a, b in self.edges:
            adj[a][b] += 1
            if a != b:
                adj[b][a] += 1
        return adj

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.edges)

    def has_multiedges(self) -> bool:
        return any(n > 1 for (a, b), n in Counter(self.edges).items() if a != b)

    def is_simple(self) -> bool:
        return not self.has_loops() and not self.has_multiedges()

    def is_connected(self) -> bool:
        if self.order == 0:
            return False
        adj = [[] for _ in range(self.order)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def relabel(self, perm: Sequence[int]) -> Multigraph:
        """Image of the graph under the vertex map ``v -> perm[v]``; edge ids are kept."""
        return Multigraph(self.order, tuple((perm[a], perm[b]) for a, b in self.edges))

    def to_json(self) -> dict:
        return {"order": self.order, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> Multigraph:
        try:
            order = int(data["order"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc
        return cls.from_edges(order, edges)


@dataclass(frozen=True)
class Orientation:
    """One head/tail choice per edge id of ``graph``."""

    graph: Multigraph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.arcs) != self.graph.size:
            raise ValueError("orientation must direct every edge exactly once")
        for i, (tail, head) in enumerate(self.arcs):
            if (min(tail, head), max(tail, head)) != self.graph.edges[i]:
                raise ValueError(f"arc {(tail, head)} does not match edge {self.graph.edges[i]}")
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))

    @classmethod
    def default(cls, graph: Multigraph) -> Orientation:
        return cls(graph, graph.edges)

    def reversed(self, edge_ids: Iterable[int]) -> Orientation:
        flip = set(edge_ids)
        return Orientation(
            self.graph, tuple((h, t) if i in flip else (t, h) for i, (t, h) in enumerate(self.arcs))
        )


# ---------------------------------------------------------------------------
# constructors


def _positive(k: int, what: str) -> None:
    if k < 1:
        raise ValueError(f"{what} needs k >= 1, got {k}")


def cycle(k: int) -> Multigraph:
    """``C_k``; ``cycle(1)`` is a single loop and ``cycle(2)`` a digon."""
    _positive(k, "cycle")
    return Multigraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Multigraph:
    """Path on ``k`` vertices (length ``k - 1``)."""
    _positive(k, "path")
    return Multigraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> Multigraph:
    """Star with ``k`` edges; vertex 0 is the center."""
    _positive(k, "star")
    return Multigraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def matching(k: int) -> Multigraph:
    _positive(k, "matching")
    return Multigraph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complete(k: int) -> Multigraph:
    _positive(k, "complete graph")
    return Multigraph.from_edges(k, itertools.combinations(range(k), 2))


def moebius_ladder(k: int) -> Multigraph:
    """``C_{2k}`` plus the ``k`` antipodal chords."""
    n = 2 * k
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)])


def is_star(g: Multigraph, edge_ids: Iterable[int]) -> int | None:
    """Center of the star formed by ``edge_ids``, or None."""
    edge_ids = list(edge_ids)
    if not edge_ids or any(g.is_loop(e) for e in edge_ids):
        return None
    common = set(g.edges[edge_ids[0]])
    for e in edge_ids[1:]:
        common &= set(g.edges[e])
    if len(edge_ids) > 1 and len(common) != 1:
        return None
    return min(common)


def is_matching(g: Multigraph, edge_ids: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in edge_ids:
        u, v = g.edges[e]
        if u == v or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _parse_element(x, dims: int) -> tuple[int, ...]:
    if isinstance(x, str):
        bits = tuple(int(ch) for ch in x)
    elif isinstance(x, int):
        bits = tuple((x >> (dims - 1 - i)) & 1 for i in range(dims))
    else:
        bits = tuple(int(b) % 2 for b in x)
    if len(bits) != dims or any(b not in (0, 1) for b in bits):
        raise ValueError(f"{x!r} is not an element of Z_2^{dims}")
    return bits


def build_cayley(dims: int, connection_set: Iterable) -> Multigraph:
    """Cayley graph on ``Z_2^dims``; elements may be bit strings like ``"101"``.

    Vertex ids follow the lexicographic order of the bit tuples, so for the cube
    ``ijk`` gets id ``4i + 2j + k``.
    """
    if dims < 1:
        raise ValueError("dims must be positive")
    conn = {_parse_element(x, dims) for x in connection_set}
    if not conn:
        raise ValueError("empty connection set gives an edgeless graph")
    zero = (0,) * dims
    if zero in conn:
        raise ValueError("connection set must not contain the identity")
    elements = list(itertools.product((0, 1), repeat=dims))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(elements)), 2)
        if tuple(a ^ b for a, b in zip(elements[i], elements[j])) in conn
    ]
    return Multigraph.from_edges(len(elements), edges)


def cube() -> Multigraph:
    return build_cayley(3, ["100", "010", "001"])


def vertex_label(v: int, dims: int = 3) -> str:
    return format(v, f"0{dims}b")


def vertex_id(label: str) -> int:
    return int(label, 2)


# ---------------------------------------------------------------------------
# bipartiteness


def is_bipartite(g: Multigraph) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    side = [-1] * g.order
    adj = [[] for _ in range(g.order)]
    for a, b in g.edges:
        if a == b:
            return False, None
        adj[a].append(b)
        adj[b].append(a)
    for s in range(g.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False, None
    parts = (
        frozenset(v for v in range(g.order) if side[v] == 0),
        frozenset(v for v in range(g.order) if side[v] == 1),
    )
    return True, parts


# ---------------------------------------------------------------------------
# canonical form and isomorphism


class CanonicalForm(NamedTuple):
    """Order, edge count and the upper triangle (with loop diagonal) of the
    lexicographically least relabeled multiplicity matrix found by the search."""

    order: int
    size: int
    code: tuple[int, ...]


def _check_size(g: Multigraph) -> None:
    if g.order > MAX_ORDER:
        raise UnsupportedSize(f"order {g.order} exceeds the exact-search limit of {MAX_ORDER}")


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; colors are relabeled by sorted signature,
    which keeps the result independent of vertex names."""
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], adj[v][w]) for w in range(n) if w != v and adj[v][w])))
            for v in range(n)
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [index[s] for s in sigs]
        if len(index) == ncolors:
            return colors
        ncolors = len(index)


def _initial_colors(adj: list[list[int]]) -> list[int]:
    sigs = [(sum(row) + row[v], row[v]) for v, row in enumerate(adj)]
    index = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [index[s] for s in sigs]


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(2 * c + (0 if w == v or c != colors[v] else 1)) for w, c in enumerate(colors)]
    index = {k: i for i, k in enumerate(sorted(set(keyed)))}
    return [index[k] for k in keyed]


def _certificate(adj: list[list[int]], ordering: Sequence[int]) -> tuple[int, ...]:
    return tuple(adj[ordering[i]][ordering[j]] for j in range(len(ordering)) for i in range(j + 1))


def canonical_labeling(g: Multigraph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form plus an ordering ``pi`` with ``pi[i]`` the vertex placed at position i."""
    _check_size(g)
    adj = g.adjacency()
    n = g.order
    best: list = [None, None]  # certificate, ordering
    automorphisms: list[tuple[int, ...]] = []

    def search(colors: list[int], fixed: tuple[int, ...]) -> None:
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            ordering = tuple(sorted(range(n), key=colors.__getitem__))
            cert = _certificate(adj, ordering)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, ordering
            elif cert == best[0]:
                gamma = [0] * n
                for a, b in zip(best[1], ordering):
                    gamma[a] = b
                automorphisms.append(tuple(gamma))
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        explored: list[int] = []
        for v in cells[target]:
            if explored and _same_orbit(v, explored, fixed, automorphisms):
                continue
            explored.append(v)
            search(_individualize(colors, v), fixed + (v,))

    search(_initial_colors(adj) if n else [], ())
    if n == 0:
        return CanonicalForm(0, 0, ()), ()
    return CanonicalForm(n, g.size, best[0]), best[1]


def _same_orbit(v: int, explored: list[int], fixed: tuple[int, ...], automorphisms) -> bool:
    gens = [a for a in automorphisms if all(a[x] == x for x in fixed)]
    if not gens:
        return False
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for a in gens:
            y = a[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return any(u in orbit for u in explored)


def canonical_form(g: Multigraph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def are_isomorphic(g: Multigraph, h: Multigraph) -> tuple[int, ...] | None:
    """A vertex bijection ``phi`` (as ``phi[v]``) carrying g onto h, or None."""
    if g.order != h.order or g.size != h.size:
        _check_size(g)
        _check_size(h)
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, pg = canonical_labeling(g)
    ch, ph = canonical_labeling(h)
    if cg != ch:
        return None
    phi = [0] * g.order
    for a, b in zip(pg, ph):
        phi[a] = b
    return tuple(phi)


def automorphism_group(g: Multigraph) -> list[tuple[int, ...]]:
    """Every vertex permutation preserving adjacency multiplicities, sorted (identity first)."""
    _check_size(g)
    adj = g.adjacency()
    n = g.order
    colors = _refine(adj, _initial_colors(adj)) if n else []
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used[w] or colors[w] != colors[v] or adj[w][w] != adj[v][v]:
                continue
            if any(adj[v][u] != adj[w][image[u]] for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    return sorted(found)


def edge_image(g: Multigraph, perm: Sequence[int]) -> list[int]:
    """Edge ids of g hit by each edge under the automorphism ``perm``.

    Parallel copies are matched in increasing id order.
    """
    buckets: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(g.edges):
        buckets.setdefault(e, []).append(i)
    cursor: Counter = Counter()
    out = []
    for a, b in g.edges:
        key = (min(perm[a], perm[b]), max(perm[a], perm[b]))
        ids = buckets.get(key)
        if ids is None or cursor[key] >= len(ids):
            raise ValueError("vertex permutation is not an automorphism")
        out.append(ids[cursor[key]])
        cursor[key] += 1
    return out


# ---------------------------------------------------------------------------
# catalogs


def _cubic_graphs_rooted(n: int) -> Iterable[list[tuple[int, int]]]:
    """Labeled simple cubic graphs on n vertices with N(0) = {1, 2, 3}.

    Every cubic graph has such a labeling, so the isomorphism classes are all hit.
    """
    deg = [0] * n
    adj = [[False] * n for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for w in (1, 2, 3):
        edges.append((0, w))
        adj[0][w] = adj[w][0] = True
        deg[0] += 1
        deg[w] += 1

    def fill(v: int, start: int):
        if v == n:
            yield list(edges)
            return
        if deg[v] == 3:
            yield from fill(v + 1, v + 2)
            return
        for w in range(max(start, v + 1), n):
            if deg[w] < 3 and not adj[v][w]:
                adj[v][w] = adj[w][v] = True
                deg[v] += 1
                deg[w] += 1
                edges.append((v, w))
                yield from fill(v, w + 1)
                edges.pop()
                deg[v] -= 1
                deg[w] -= 1
                adj[v][w] = adj[w][v] = False

    yield from fill(1, 2)


def catalog_cubic(n: int) -> list[Multigraph]:
    """Connected simple cubic graphs of order n up to isomorphism, by canonical form."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need an even order >= 4")
    found: dict[CanonicalForm, Multigraph] = {}
    for edges in _cubic_graphs_rooted(n):
        g = Multigraph.from_edges(n, edges)
        if not g.is_connected():
            continue
        key = canonical_form(g)
        found.setdefault(key, g)
    return [found[k] for k in sorted(found)]


def catalog_cubic8() -> list[Multigraph]:
    return catalog_cubic(8)
