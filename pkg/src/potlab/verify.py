"""One-shot verification of the cube results, used by ``potlab verify-paper``."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .extremal import census_biminimal_cube, minimal_pot_stats, verify_lower_bounds
from .multigraph import (
    Multigraph,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    catalog_cubic8,
    cube,
    is_bipartite,
)
from .oracles import brute_force_keys, multigraph_suite
from .outputs import enumerate_outputs, outputs_below
from .pots import (
    Pot,
    absolute_pot,
    apply_pot_isomorphism,
    class_flips,
    induced_pot,
    induced_tiles,
    negate_colors,
    pot_isomorphisms,
    retarget_realization,
    underlying_coloring,
)
from .realization import realize, validate_witness
from .reference import P1, P2
from .sampling import random_coloring, random_connected_multigraph, random_permutation
from .spectrum import min_order, minimal_solutions

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "checks"],
    "properties": {
        "status": {"enum": ["pass", "fail"]},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "anchor", "expected", "computed", "passed", "runtime_s"],
                "properties": {
                    "id": {"type": "string"},
                    "anchor": {"type": "string"},
                    "expected": {},
                    "computed": {},
                    "passed": {"type": "boolean"},
                    "runtime_s": {"type": "number"},
                },
            },
        },
    },
}


@dataclass
class CheckResult:
    id: str
    anchor: str
    expected: object
    computed: object
    passed: bool
    runtime_s: float

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
            "runtime_s": round(self.runtime_s, 3),
        }


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"status": "pass" if self.passed else "fail", "checks": [c.to_json() for c in self.checks]}

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if c.passed else 'FAIL'}] {c.id}: {c.anchor} ({c.runtime_s:.2f}s)" for c in self.checks]
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return out


def _literal(p: Pot):
    return p.to_json()


def check_pot_identity(p1: Pot, p2: Pot):
    computed = {"p1": _literal(p1), "p2": _literal(p2)}
    expected = {"p1": _literal(P1), "p2": _literal(P2)}
    return expected, computed, p1 == P1 and p2 == P2


def check_realize(p1: Pot, p2: Pot):
    q = cube()
    computed = {}
    ok = True
    for name, pot in (("p1", p1), ("p2", p2)):
        w = realize(q, pot)
        if w is None:
            computed[name] = None
            ok = False
            continue
        tiles = [t.colors for t in induced_tiles(w.coloring)]
        computed[name] = [list(t) for t in tiles]
        ok &= not validate_witness(w.coloring, pot)
        ok &= bool(pot_isomorphisms(w.pot, P1 if name == "p1" else P2))
    return "witness tiles isomorphic to the tabulated pots", computed, ok


def check_spectrum(p1: Pot, p2: Pot):
    computed = {}
    for name, pot in (("p1", p1), ("p2", p2)):
        gens = [list(u.counts) for u in minimal_solutions(pot, 16)]
        computed[name] = {"generators": gens, "min_order": min_order(pot).to_json()}
    expected = {n: {"generators": [[1, 1, 1, 1, 2, 2]], "min_order": 8} for n in ("p1", "p2")}
    return expected, computed, computed == expected


def check_outputs(p1: Pot, p2: Pot):
    qf = canonical_form(cube())
    computed = {}
    ok = True
    for name, pot in (("p1", p1), ("p2", p2)):
        outs = enumerate_outputs(pot, 8)
        below = outputs_below(pot, 8)
        computed[name] = {"classes": len(outs), "is_cube": [o.form == qf for o in outs], "below_8": len(below)}
        ok &= len(outs) == 1 and outs[0].form == qf and not below
    return "exactly the cube up to order 8", computed, ok


def check_catalog():
    cat = catalog_cubic8()
    bip = [g for g in cat if is_bipartite(g)[0]]
    distinct = len({canonical_form(g) for g in cat})
    computed = {
        "count": len(cat),
        "pairwise_distinct": distinct,
        "bipartite": len(bip),
        "bipartite_is_cube": bool(bip) and are_isomorphic(bip[0], cube()) is not None,
    }
    expected = {"count": 5, "pairwise_distinct": 5, "bipartite": 1, "bipartite_is_cube": True}
    return expected, computed, computed == expected


def check_pot_iso(p1: Pot, p2: Pot):
    cross = pot_isomorphisms(p1, p2)
    self_isos = pot_isomorphisms(p1, p1)
    negated = pot_isomorphisms(p1, negate_colors(p1, [5]))
    computed = {
        "p1_p2": len(cross),
        "p1_p1_has_identity": any(f.is_identity() for f in self_isos),
        "negated_color_5": len(negated),
    }
    ok = not cross and computed["p1_p1_has_identity"] and len(negated) > 0
    return {"p1_p2": 0, "p1_p1_has_identity": True, "negated_color_5": ">0"}, computed, ok


def check_census():
    report = census_biminimal_cube()
    reps = report.representatives
    match = sorted(
        ("P1" if pot_isomorphisms(r, P1) else "P2" if pot_isomorphisms(r, P2) else "other") for r in reps
    )
    computed = {"classes": len(reps), "matches": match, "stats": report.stats()}
    return {"classes": 2, "matches": ["P1", "P2"]}, computed, len(reps) == 2 and match == ["P1", "P2"]


def check_lower_bounds():
    cert = verify_lower_bounds()
    computed = {
        "survivors_4_colors": cert["B3_at_least_5"]["per_colors"][4]["survivors"],
        "min_pot_size_5_colors": cert["T3_at_least_6"]["min_pot_size_5_colors"],
        "small_pots": cert["T3_at_least_6"]["small_pots_by_colors"],
    }
    ok = cert["B3_at_least_5"]["holds"] and cert["T3_at_least_6"]["holds"] and cert["counting_bound"]["holds"]
    return {"survivors_4_colors": 0, "min_pot_size_5_colors": 6}, computed, ok


def check_monochromatic():
    report = census_biminimal_cube()
    rows = []
    ok = True
    for cand in report.sweep.survivors:
        mono = cand.monochromatic
        stars = cand.partition.star3_count
        rows.append({"pot_size": len(cand.pot), "monochromatic": mono, "star3": stars})
        ok &= mono >= 2 and mono == stars
    return "monochromatic >= 2 and equal to 3-star count", rows, ok and bool(rows)


def check_minpot():
    q = cube()
    s1 = minimal_pot_stats(q, 1, tile_bound=2, color_bound=1)
    s2 = minimal_pot_stats(q, 2, tile_bound=4, color_bound=3)
    computed = {
        "scenario1": {"T": s1.T, "B": s1.B, "exhaustive": s1.T_unconditional and s1.B_unconditional},
        "scenario2": {"T": s2.T, "B": s2.B, "exhaustive": s2.T_unconditional and s2.B_unconditional},
    }
    expected = {
        "scenario1": {"T": 2, "B": 1, "exhaustive": True},
        "scenario2": {"T": 3, "B": 2, "exhaustive": True},
    }
    return expected, computed, computed == expected


def property_failures(cases: int, seed: int) -> dict[str, int]:
    """Failure counts of the randomized suites (absolute-pot projection, signed
    balance, pot-preserving transforms, self-realization)."""
    rng = random.Random(seed)
    fails = {"projection": 0, "balance": 0, "transforms": 0, "self_realization": 0}
    for _ in range(cases):
        g = random_connected_multigraph(rng)
        lam = random_coloring(rng, g)
        pot = induced_pot(lam)
        under = induced_pot(underlying_coloring(lam))
        if under != absolute_pot(pot) or len(under) > len(pot):
            fails["projection"] += 1
        total = {}
        for t in induced_tiles(lam):
            for c in t:
                total[abs(c)] = total.get(abs(c), 0) + (1 if c > 0 else -1)
        if any(total.values()) or sum(len(t) for t in induced_tiles(lam)) != 2 * g.size:
            fails["balance"] += 1
        if not _transform_round_trip(rng, g, lam, pot):
            fails["transforms"] += 1
        w = realize(g, pot)
        if w is None or validate_witness(w.coloring, pot):
            fails["self_realization"] += 1
    return fails


def _transform_round_trip(rng: random.Random, g: Multigraph, lam, pot: Pot) -> bool:
    used = lam.used_colors()
    shuffled = rng.sample(range(1, len(used) + 3), len(used))
    gmap = dict(zip(used, shuffled))
    flips = class_flips(lam, [c for c in used if rng.random() < 0.5])
    auts = automorphism_group(g)
    rho = auts[rng.randrange(len(auts))]
    moved = retarget_realization(lam, gmap, flips, rho)
    moved_pot = induced_pot(moved)
    if not pot_isomorphisms(pot, moved_pot):
        return False
    isos = pot_isomorphisms(moved_pot, pot)
    back = apply_pot_isomorphism(moved, isos[rng.randrange(len(isos))])
    return induced_pot(back) == pot and realize(g, moved_pot) is not None


def check_properties(cases: int, seed: int):
    fails = property_failures(cases, seed)
    return {k: 0 for k in fails}, fails, not any(fails.values())


def isomorphism_oracle_discrepancies(max_order: int = 5) -> int:
    bad = 0
    for n in range(1, max_order + 1):
        lists = list(multigraph_suite(n))
        brute = brute_force_keys(n, lists).tolist()
        mine = [canonical_form(Multigraph.from_edges(n, e)) for e in lists]
        pairs = set(zip(mine, brute))
        bad += (len(pairs) - len(set(mine))) + (len(pairs) - len(set(brute)))
    return bad


def check_oracles():
    outs = enumerate_outputs(Pot([[1, -1]]), 6)
    family = [Multigraph.from_edges(1, [(0, 0)])] + [
        Multigraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)]) for k in range(2, 7)
    ]
    expected_forms = sorted(canonical_form(g) for g in family)
    cycles_ok = sorted(o.form for o in outs) == expected_forms
    discrepancies = isomorphism_oracle_discrepancies()
    computed = {"cycle_family": cycles_ok, "isomorphism_discrepancies": discrepancies}
    return {"cycle_family": True, "isomorphism_discrepancies": 0}, computed, cycles_ok and discrepancies == 0


def run_checks(p1: Pot = P1, p2: Pot = P2, cases: int = 1000, seed: int = 0,
               only: list[str] | None = None) -> VerificationReport:
    plan: list[tuple[str, str, Callable]] = [
        ("pot-identity", "bundled pots equal the two biminimal pots", lambda: check_pot_identity(p1, p2)),
        ("realize", "both pots realize the cube", lambda: check_realize(p1, p2)),
        ("spectrum", "usage vectors r(1,1,1,1,2,2), order >= 8", lambda: check_spectrum(p1, p2)),
        ("outputs", "both pots 3-realize the cube", lambda: check_outputs(p1, p2)),
        ("catalog", "five connected cubic graphs of order 8, one bipartite", check_catalog),
        ("pot-iso", "the two pots are not isomorphic", lambda: check_pot_iso(p1, p2)),
        ("census", "biminimal pots are unique up to isomorphism", check_census),
        ("lower-bounds", "B_3(Q) = 5 and T_3(Q) = 6", check_lower_bounds),
        ("monochromatic", "at least two monochromatic tiles", check_monochromatic),
        ("minpot", "T_1, B_1, T_2, B_2 of the cube", check_minpot),
        ("properties", "randomized pot-calculus properties", lambda: check_properties(cases, seed)),
        ("oracles", "brute-force oracle agreement", check_oracles),
    ]
    report = VerificationReport()
    for cid, anchor, fn in plan:
        if only and cid not in only:
            continue
        start = time.perf_counter()
        try:
            expected, computed, passed = fn()
        except Exception as exc:  # a crashing check is a failed check
            expected, computed, passed = None, f"error: {exc!r}", False
        report.checks.append(CheckResult(cid, anchor, expected, computed, bool(passed), time.perf_counter() - start))
    return report
