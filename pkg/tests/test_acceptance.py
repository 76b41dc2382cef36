"""The eleven acceptance criteria, each at zero tolerance, one pass/fail line apiece."""
from __future__ import annotations

import itertools
import time

import pytest

from conftest import ACCEPTANCE_LINES
from potlab.extremal import census_biminimal_cube, minimal_pot_stats, sweep, verify_lower_bounds
from potlab.multigraph import (
    Multigraph,
    are_isomorphic,
    build_cayley,
    canonical_form,
    catalog_cubic8,
    cube,
    cycle,
    is_bipartite,
)
from potlab.outputs import enumerate_outputs, outputs_below
from potlab.pots import Pot, negate_colors, pot_isomorphisms
from potlab.realization import realize, validate_witness
from potlab.reference import P1, P1_TABLE, P2, P2_TABLE
from potlab.spectrum import min_order, minimal_solutions
from potlab.verify import isomorphism_oracle_discrepancies, property_failures


def record(number: int, title: str, passed: bool, elapsed: float, limit: float, detail: str = "") -> None:
    within = elapsed < limit
    status = "PASS" if passed and within else "FAIL"
    line = f"[{status}] criterion {number:2d}: {title} ({elapsed:.2f}s, limit {limit:.0f}s)"
    if detail:
        line += f" {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line
    assert within, line


def test_criterion_01_realize_cube():
    start = time.perf_counter()
    ok = True
    for pot, table in ((P1, P1_TABLE), (P2, P2_TABLE)):
        w = realize(cube(), pot)
        ok &= w is not None and not validate_witness(w.coloring, pot)
        ok &= bool(pot_isomorphisms(w.pot, Pot(table.values())))
    record(1, "realize(Q, P1) and realize(Q, P2) match the tables", ok, time.perf_counter() - start, 1)


def test_criterion_02_spectrum():
    start = time.perf_counter()
    gens = {name: [u.counts for u in minimal_solutions(p, 16)] for name, p in (("P1", P1), ("P2", P2))}
    orders = {name: min_order(p).value for name, p in (("P1", P1), ("P2", P2))}
    ok = all(g == [(1, 1, 1, 1, 2, 2)] for g in gens.values()) and set(orders.values()) == {8}
    record(2, "single generator (1,1,1,1,2,2), min order 8", ok, time.perf_counter() - start, 1,
           f"generators={gens} min_order={orders}")


@pytest.mark.parametrize("name, pot", [("P1", P1), ("P2", P2)])
def test_criterion_03_outputs(name, pot):
    start = time.perf_counter()
    outs = enumerate_outputs(pot, 8)
    below = outputs_below(pot, 8)
    ok = [o.form for o in outs] == [canonical_form(cube())] and below == []
    record(3, f"enumerate_outputs({name}, 8) = {{Q}} and nothing below 8", ok, time.perf_counter() - start, 300,
           f"classes={len(outs)} below={len(below)}")


def test_criterion_04_catalog():
    start = time.perf_counter()
    cat = catalog_cubic8()
    distinct = all(are_isomorphic(a, b) is None for a, b in itertools.combinations(cat, 2))
    bip = [g for g in cat if is_bipartite(g)[0]]
    q = build_cayley(3, ["100", "010", "001"])
    ok = len(cat) == 5 and distinct and len(bip) == 1 and are_isomorphic(bip[0], q) is not None
    record(4, "five cubic graphs of order 8, one bipartite, the cube", ok, time.perf_counter() - start, 60,
           f"count={len(cat)} bipartite={len(bip)}")


def test_criterion_05_pot_isomorphism():
    start = time.perf_counter()
    cross = pot_isomorphisms(P1, P2)
    ident = any(f.is_identity() for f in pot_isomorphisms(P1, P1))
    negated = pot_isomorphisms(P1, negate_colors(P1, [5]))
    ok = cross == [] and ident and len(negated) > 0
    record(5, "P1 !~ P2, identity on P1, negated color found", ok, time.perf_counter() - start, 1)


def test_criterion_06_census():
    start = time.perf_counter()
    reps = census_biminimal_cube().representatives
    hits = sorted("P1" if pot_isomorphisms(r, P1) else "P2" if pot_isomorphisms(r, P2) else "?" for r in reps)
    ok = len(reps) == 2 and hits == ["P1", "P2"]
    record(6, "biminimal census has exactly the classes of P1 and P2", ok, time.perf_counter() - start, 1800,
           f"classes={hits}")


def test_criterion_07_lower_bounds():
    start = time.perf_counter()
    cert = verify_lower_bounds()
    four = cert["B3_at_least_5"]["per_colors"][4]["survivors"]
    least = cert["T3_at_least_6"]["min_pot_size_5_colors"]
    ok = four == 0 and least == 6 and cert["B3_at_least_5"]["holds"] and cert["T3_at_least_6"]["holds"]
    record(7, "B_3(Q) = 5 and T_3(Q) = 6", ok, time.perf_counter() - start, 1800,
           f"4-color survivors={four} min 5-color pot={least}")


def test_criterion_08_monochromatic():
    start = time.perf_counter()
    survivors = sweep(5).survivors
    ok = bool(survivors) and all(
        s.monochromatic >= 2 and s.monochromatic == s.partition.star3_count for s in survivors
    )
    record(8, "survivors: >= 2 monochromatic tiles, count = 3-stars", ok, time.perf_counter() - start, 1800,
           f"survivors={len(survivors)}")


def test_criterion_09_minpot():
    start = time.perf_counter()
    s1 = minimal_pot_stats(cube(), 1, tile_bound=2, color_bound=1)
    s2 = minimal_pot_stats(cube(), 2, tile_bound=4, color_bound=3)
    exhaustive = s1.T_unconditional and s1.B_unconditional and s2.T_unconditional and s2.B_unconditional
    ok = (s1.T, s1.B, s2.T, s2.B) == (2, 1, 3, 2) and exhaustive
    record(9, "T_1=2, B_1=1, T_2=3, B_2=2 for the cube", ok, time.perf_counter() - start, 600,
           f"(T1,B1,T2,B2)=({s1.T},{s1.B},{s2.T},{s2.B}) exhaustive={exhaustive}")


def test_criterion_10_properties():
    start = time.perf_counter()
    fails = property_failures(1000, seed=20240601)
    ok = not any(fails.values())
    record(10, "1000-case property suites", ok, time.perf_counter() - start, 120, f"failures={fails}")


def test_criterion_11_oracles():
    start = time.perf_counter()
    outs = enumerate_outputs(Pot([[1, -1]]), 6)
    family = [Multigraph.from_edges(1, [(0, 0)])] + [cycle(k) for k in range(2, 7)]
    cycles_ok = sorted(o.form for o in outs) == sorted(canonical_form(g) for g in family)
    bad = isomorphism_oracle_discrepancies(5)
    record(11, "cycle family and brute-force isomorphism oracle", cycles_ok and bad == 0,
           time.perf_counter() - start, 300, f"cycle family ok={cycles_ok} discrepancies={bad}")
