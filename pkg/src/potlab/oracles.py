"""Brute-force reference computations.

Deliberately naive and independent of the search code they are used to check:
isomorphism by trying every vertex permutation, outputs by trying every
bijection of labeled half-edges.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .multigraph import Multigraph
from .pots import Pot


def multigraph_suite(n: int, max_edges: int = 7, max_mult: int = 3) -> Iterator[list[tuple[int, int]]]:
    """Edge lists of every labeled multigraph on n vertices within the limits (loops included)."""
    slots = [(i, j) for i in range(n) for j in range(i, n)]

    def rec(k: int, left: int, cur: list):
        if k == len(slots):
            yield list(cur)
            return
        for m in range(min(max_mult, left) + 1):
            cur.extend([slots[k]] * m)
            yield from rec(k + 1, left - m, cur)
            del cur[len(cur) - m:]

    yield from rec(0, max_edges, [])


def brute_force_keys(n: int, edge_lists: list[list[tuple[int, int]]], base: int = 8) -> np.ndarray:
    """Least permuted upper-triangle code over all n! relabelings, per graph."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    slots = [(i, j) for j in range(n) for i in range(j + 1)]
    rows = perms[:, [i for i, _ in slots]]
    cols = perms[:, [j for _, j in slots]]
    weights = base ** np.arange(len(slots) - 1, -1, -1, dtype=np.int64)
    keys = np.empty(len(edge_lists), dtype=np.int64)
    chunk = 4096
    for start in range(0, len(edge_lists), chunk):
        batch = edge_lists[start:start + chunk]
        adj = np.zeros((len(batch), n, n), dtype=np.int64)
        for b, edges in enumerate(batch):
            for u, v in edges:
                adj[b, u, v] += 1
                if u != v:
                    adj[b, v, u] += 1
        codes = adj[:, rows, cols] @ weights
        keys[start:start + len(batch)] = codes.min(axis=1)
    return keys


def brute_force_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    a, b = g.adjacency(), h.adjacency()
    n = g.order
    return any(
        all(a[i][j] == b[p[i]][p[j]] for i in range(n) for j in range(n))
        for p in itertools.permutations(range(n))
    )


def brute_force_automorphisms(g: Multigraph) -> int:
    a = g.adjacency()
    n = g.order
    return sum(
        all(a[i][j] == a[p[i]][p[j]] for i in range(n) for j in range(n))
        for p in itertools.permutations(range(n))
    )


def brute_force_key(g: Multigraph) -> tuple:
    a = g.adjacency()
    n = g.order
    return min(
        tuple(a[p[i]][p[j]] for j in range(n) for i in range(j + 1))
        for p in itertools.permutations(range(n))
    )


def naive_outputs(p: Pot, max_order: int) -> set[tuple]:
    """Brute-force keys of every connected graph built by pairing labeled half-edges.

    Every multiset of tiles is tried (no balance system), and for each color
    every bijection from +c half-edges to -c half-edges.
    """
    tiles = list(p.tiles)
    found: set[tuple] = set()
    for n in range(1, max_order + 1):
        for combo in itertools.combinations_with_replacement(range(len(tiles)), n):
            vertex_tiles = [tiles[i] for i in combo]
            per_color = []
            ok = True
            for c in p.colors:
                pos = [v for v, t in enumerate(vertex_tiles) for x in t if x == c]
                neg = [v for v, t in enumerate(vertex_tiles) for x in t if x == -c]
                if len(pos) != len(neg):
                    ok = False
                    break
                per_color.append((pos, neg))
            if not ok:
                continue
            choices = [
                {tuple(zip(pos, perm)) for perm in itertools.permutations(neg)} for pos, neg in per_color
            ]
            for pick in itertools.product(*choices):
                edges = [e for part in pick for e in part]
                g = Multigraph.from_edges(n, edges)
                if g.is_connected():
                    found.add((n, brute_force_key(g)))
    return found
