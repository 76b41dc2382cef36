from __future__ import annotations

import random
from collections import Counter

import pytest

from potlab.extremal import (
    BudgetExceeded,
    allowed_classes,
    census_biminimal_cube,
    classes_of,
    enumerate_class_partitions,
    lift_colorings,
    minimal_pot_stats,
    raw_class_partitions,
    sweep,
    verify_lower_bounds,
)
from potlab.multigraph import automorphism_group, complete, cube, cycle, vertex_id
from potlab.pots import Pot, class_flips, induced_pot, pot_isomorphisms, retarget_realization
from potlab.realization import realize, scenario3_counterexample
from potlab.reference import P1, P2, p1_witness, p2_witness


@pytest.fixture(scope="module")
def census():
    return census_biminimal_cube()


@pytest.fixture(scope="module")
def five():
    return sweep(5)


def test_allowed_classes_count():
    kinds = Counter(c.kind for c in allowed_classes())
    # 12 single edges, 8 * 3 two-stars, 8 three-stars, 6 antipodal pairs
    assert kinds == {"star1": 12, "star2": 24, "star3": 8, "matching": 6}


def test_four_colors_are_four_three_stars():
    parts = enumerate_class_partitions(4)
    assert parts
    for part in parts:
        assert [c.kind for c in part.classes] == ["star3"] * 4


def test_five_color_size_multisets():
    sizes = {part.sizes() for part in enumerate_class_partitions(5)}
    assert sizes == {(3, 3, 3, 2, 1), (3, 3, 2, 2, 2)}


def test_partition_orbit_counts():
    assert [len(enumerate_class_partitions(c)) for c in (3, 4, 5)] == [0, 1, 7]
    assert sum(1 for _ in raw_class_partitions(4)) == 2


def test_lift_respects_classes():
    part = enumerate_class_partitions(5)[0]
    lifts = list(lift_colorings(part))
    matchings = sum(c.kind == "matching" for c in part.classes)
    assert len(lifts) == 2 ** matchings
    for lam in lifts:
        assert len(lam.used_colors()) == 5


def test_p1_witness_partition_shapes():
    shapes = classes_of(p1_witness())
    kinds = Counter(k for k, _ in shapes)
    assert kinds == {"star3": 2, "star2": 2, "matching": 1}
    centers = {center for kind, center in shapes if kind == "star3"}
    assert centers == {vertex_id("000"), vertex_id("111")}
    assert Counter(k for k, _ in classes_of(p2_witness())) == {"star3": 2, "star2": 2, "matching": 1}


def test_census_finds_exactly_two_classes(census):
    reps = census.representatives
    assert len(reps) == 2
    assert sorted(bool(pot_isomorphisms(r, P1)) for r in reps) == [False, True]
    assert sorted(bool(pot_isomorphisms(r, P2)) for r in reps) == [False, True]
    assert pot_isomorphisms(P1, P2) == []


def test_representatives_match_literally_after_renaming(census):
    for rep in census.representatives:
        target = P1 if pot_isomorphisms(rep, P1) else P2
        assert pot_isomorphisms(rep, target)[0].pot(rep) == target


def test_census_stats(census):
    stats = census.stats()
    assert stats["min_surviving_pot_size"] == 6
    assert stats["partition_orbits"] == 7
    assert stats["raw_partitions"] == 96


def test_survivors_have_two_monochromatic_tiles(five):
    assert five.survivors
    for cand in five.survivors:
        assert cand.monochromatic >= 2
        assert cand.monochromatic == cand.partition.star3_count


def test_census_audit_random_symmetries(census, five):
    rng = random.Random(2718)
    auts = automorphism_group(cube())
    reps = census.representatives
    biminimal = [s for s in five.survivors if len(s.pot) == 6]
    for _ in range(100):
        cand = rng.choice(biminimal)
        lam = cand.coloring
        used = lam.used_colors()
        gmap = dict(zip(used, rng.sample(range(1, 9), len(used))))
        flips = class_flips(lam, [c for c in used if rng.random() < 0.5])
        moved = retarget_realization(lam, gmap, flips, rng.choice(auts))
        assert any(pot_isomorphisms(induced_pot(moved), r) for r in reps)


def test_transformed_survivor_still_survives(census):
    rng = random.Random(1)
    lam = census.classes[0]["witness"]
    moved = retarget_realization(lam, sigma=class_flips(lam, [1, 3]), rho=rng.choice(automorphism_group(cube())))
    assert scenario3_counterexample(induced_pot(moved), cube()) is None


def test_classes_rederived_by_unrestricted_realize(five):
    for pot in {s.pot for s in five.survivors}:
        w = realize(cube(), pot)
        assert w is not None
        assert all(kind != "other" for kind, _ in classes_of(w.coloring))


def test_lower_bounds():
    cert = verify_lower_bounds()
    assert cert["B3_at_least_5"]["holds"]
    assert cert["B3_at_least_5"]["per_colors"][4]["survivors"] == 0
    assert cert["T3_at_least_6"]["min_pot_size_5_colors"] == 6
    assert cert["T3_at_least_6"]["holds"]
    assert cert["counting_bound"]["holds"]


def test_minpot_cube_scenario_one():
    s = minimal_pot_stats(cube(), 1, tile_bound=2, color_bound=1)
    assert (s.T, s.B) == (2, 1)
    assert pot_isomorphisms(s.T_witness, Pot([[1, 1, 1], [-1, -1, -1]]))
    assert s.T_unconditional and s.B_unconditional


def test_minpot_cycle_scenario_one():
    s = minimal_pot_stats(cycle(4), 1, tile_bound=4, color_bound=3)
    assert (s.T, s.B) == (1, 1)
    assert s.T_witness == Pot([[1, -1]])


def test_minpot_cube_scenario_three(census):
    s = minimal_pot_stats(cube(), 3, tile_bound=6, color_bound=5)
    assert (s.T, s.B) == (6, 5)
    assert s.B_unconditional
    assert any(pot_isomorphisms(s.biminimal, r) for r in census.representatives)


def test_minpot_input_checks():
    with pytest.raises(ValueError):
        minimal_pot_stats(cube(), 4)
    with pytest.raises(BudgetExceeded):
        minimal_pot_stats(complete(8), 1, color_bound=8, budget=10)


@pytest.mark.slow
def test_minpot_cube_scenario_two():
    s = minimal_pot_stats(cube(), 2, tile_bound=4, color_bound=3)
    assert (s.T, s.B) == (3, 2)
    assert s.T_unconditional and s.B_unconditional
