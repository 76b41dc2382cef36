"""Net-color balance system on tile usage counts.

A vertex set carrying tile ``t_i`` exactly ``R_i`` times can only be paired
into a graph if, for every color, the ``+c`` and ``-c`` half-edges balance.
Solutions are necessary conditions (lower-bound certificates) only; whether a
connected pairing exists is decided in :mod:`potlab.outputs`.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .pots import Pot, Tile


@dataclass(frozen=True)
class NetColorMatrix:
    colors: tuple[int, ...]
    tiles: tuple[Tile, ...]
    rows: tuple[tuple[int, ...], ...]

    def residual(self, usage) -> tuple[int, ...]:
        return tuple(sum(a * r for a, r in zip(row, usage)) for row in self.rows)

    def equations(self) -> list[str]:
        """Human-readable rows such as ``3R1 - R3 - R5 = 0``."""
        out = []
        for row in self.rows:
            terms = []
            for i, a in enumerate(row, start=1):
                if a == 0:
                    continue
                mag = "" if abs(a) == 1 else str(abs(a))
                sign = "-" if a < 0 else "+"
                terms.append((sign, f"{mag}R{i}"))
            if not terms:
                out.append("0 = 0")
                continue
            text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for sign, body in terms[1:]:
                text += f" {sign} {body}"
            out.append(text + " = 0")
        return out

    def to_json(self) -> dict:
        return {
            "colors": list(self.colors),
            "tiles": [list(t.colors) for t in self.tiles],
            "rows": [list(r) for r in self.rows],
        }


@dataclass(frozen=True)
class UsageVector:
    counts: tuple[int, ...]

    @property
    def order(self) -> int:
        return sum(self.counts)

    def __iter__(self):
        return iter(self.counts)


def build_system(p: Pot) -> NetColorMatrix:
    if len(p) == 0:
        raise ValueError("empty pot")
    colors = p.colors
    counts = [t.counts() for t in p]
    rows = tuple(tuple(cnt[c] - cnt[-c] for cnt in counts) for c in colors)
    return NetColorMatrix(colors, p.tiles, rows)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(system: NetColorMatrix) -> list[tuple[Fraction, ...]]:
    """Rational basis of the kernel, one vector per free column."""
    n = len(system.tiles)
    m, pivots = _rref([[Fraction(x) for x in row] for row in system.rows], n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            vec[pc] = -row[f]
        basis.append(tuple(vec))
    return basis


class _Solver:
    """Pivot columns expressed through the free ones: ``x_p = -sum(row[f] * x_f)``."""

    def __init__(self, system: NetColorMatrix):
        self.n = len(system.tiles)
        m, pivots = _rref([[Fraction(x) for x in row] for row in system.rows], self.n)
        self.pivots = pivots
        self.free = [c for c in range(self.n) if c not in pivots]
        self.coef = [[-row[f] for f in self.free] for row in m]

    def solutions(self, max_order: int) -> Iterator[tuple[int, ...]]:
        """All nonnegative integer solutions with 0 < sum <= max_order."""
        k = len(self.free)
        for free_vals in _bounded_compositions(k, max_order):
            x = [0] * self.n
            for f, val in zip(self.free, free_vals):
                x[f] = val
            ok = True
            for pc, coefs in zip(self.pivots, self.coef):
                val = sum((a * v for a, v in zip(coefs, free_vals)), Fraction(0))
                if val.denominator != 1 or val < 0:
                    ok = False
                    break
                x[pc] = int(val)
            if ok and 0 < sum(x) <= max_order:
                yield tuple(x)


def _bounded_compositions(k: int, total: int) -> Iterator[tuple[int, ...]]:
    """Tuples of k nonnegative ints with sum <= total."""
    if k == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _bounded_compositions(k - 1, total - first):
            yield (first,) + rest


def all_solutions(p: Pot, max_order: int) -> list[UsageVector]:
    """Every valid usage vector of order 1..max_order, sorted by (order, counts)."""
    sols = _Solver(build_system(p)).solutions(max_order)
    return sorted((UsageVector(s) for s in set(sols)), key=lambda u: (u.order, u.counts))


def usage_vectors(
    p: Pot, order: int, size_histogram: Mapping[int, int] | None = None
) -> list[UsageVector]:
    """Valid usage vectors of exactly ``order`` vertices.

    With ``size_histogram`` (tile size -> vertex count), only vectors placing
    that many tiles of each size are kept.
    """
    out = []
    for u in all_solutions(p, order):
        if u.order != order:
            continue
        if size_histogram is not None:
            per_size = Counter()
            for t, r in zip(p.tiles, u.counts):
                per_size[len(t)] += r
            if {k: v for k, v in per_size.items() if v} != {k: v for k, v in size_histogram.items() if v}:
                continue
        out.append(u)
    return out


def minimal_solutions(p: Pot, max_order: int) -> list[UsageVector]:
    """Irreducible usage vectors of order <= max_order.

    A vector is kept when it is not the sum of two nonzero valid vectors, so
    every valid vector within the bound is a nonnegative integer combination
    of the returned ones.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    sols = all_solutions(p, max_order)
    keep = []
    for v in sols:
        reducible = any(
            u.order < v.order and all(a <= b for a, b in zip(u.counts, v.counts)) for u in sols
        )
        if not reducible:
            keep.append(v)
    return keep


@dataclass(frozen=True)
class MinOrder:
    value: int | None
    status: str  # "found", "infeasible" or "unknown"
    bound: int

    def to_json(self):
        if self.status == "found":
            return self.value
        if self.status == "infeasible":
            return "infeasible"
        return f"unknown(>{self.bound})"


def min_order(p: Pot, bound: int = 64) -> MinOrder:
    solver = _Solver(build_system(p))
    if not solver.free:
        return MinOrder(None, "infeasible", bound)
    best = None
    for s in solver.solutions(bound):
        total = sum(s)
        if best is None or total < best:
            best = total
    if best is None:
        return MinOrder(None, "unknown", bound)
    return MinOrder(best, "found", bound)


def combinations_reach(generators: list[UsageVector], target: tuple[int, ...]) -> bool:
    """Whether ``target`` is a nonnegative integer combination of ``generators``."""
    target = tuple(target)
    if not any(target):
        return True

    seen = set()
    stack = [target]
    while stack:
        t = stack.pop()
        if not any(t):
            return True
        if t in seen:
            continue
        seen.add(t)
        for g in generators:
            rest = tuple(a - b for a, b in zip(t, g.counts))
            if min(rest) >= 0:
                stack.append(rest)
    return False


def brute_force_solutions(p: Pot, max_order: int) -> list[tuple[int, ...]]:
    """Oracle: scan every vector with sum <= max_order and test the system directly."""
    system = build_system(p)
    n = len(p)
    out = []
    for total in range(1, max_order + 1):
        for combo in itertools.combinations_with_replacement(range(n), total):
            vec = [0] * n
            for i in combo:
                vec[i] += 1
            if not any(system.residual(vec)):
                out.append(tuple(vec))
    return out
