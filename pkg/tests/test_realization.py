from __future__ import annotations

import random

import pytest

from potlab.multigraph import (
    Multigraph,
    automorphism_group,
    catalog_cubic8,
    complete,
    cube,
    cycle,
    moebius_ladder,
    vertex_id,
)
from potlab.pots import (
    EdgeColoring,
    Pot,
    Tile,
    class_flips,
    induced_pot,
    induced_tile,
    induced_tiles,
    pot_isomorphisms,
    retarget_realization,
)
from potlab.realization import (
    DisconnectedGraph,
    classify_scenarios,
    realize,
    same_color_same_direction_check,
    validate_witness,
)
from potlab.reference import P1, P1_TABLE, P2, P2_TABLE, p1_witness
from potlab.sampling import random_coloring, random_connected_multigraph, random_permutation


@pytest.mark.parametrize("pot, table", [(P1, P1_TABLE), (P2, P2_TABLE)])
def test_cube_realization_matches_table(pot, table):
    w = realize(cube(), pot)
    assert w is not None
    assert validate_witness(w.coloring, pot) == []
    assert Pot(table.values()) == pot
    tiles = induced_tiles(w.coloring)
    matches = [
        (f, rho)
        for f in pot_isomorphisms(w.pot, pot)
        for rho in automorphism_group(cube())
        if all(f.tile(tiles[rho[vertex_id(label)]]) == Tile(t) for label, t in table.items())
    ]
    assert matches


def test_p1_table_literal():
    w = realize(cube(), P1)
    assert induced_tile(w.coloring, vertex_id("000")) == Tile([1, 1, 1])
    assert induced_tile(w.coloring, vertex_id("111")) == Tile([2, 2, 2])


def test_single_edge_and_degree_mismatch():
    w = realize(complete(2), Pot([[1], [-1]]))
    assert w is not None and w.coloring.colors == (1,)
    assert realize(cycle(3), P1) is None
    with pytest.raises(DisconnectedGraph):
        realize(Multigraph.from_edges(2, []), P1)


def test_strict_requires_all_colors():
    pot = Pot([[1, -1], [2, -2]])
    assert realize(cycle(3), pot) is not None
    assert realize(cycle(1), pot, strict=True) is None
    assert realize(cycle(3), Pot([[1, -1], [1, 1]]), strict=True) is not None


def test_self_realization_round_trip():
    rng = random.Random(17)
    for _ in range(300):
        g = random_connected_multigraph(rng)
        lam = random_coloring(rng, g)
        w = realize(g, induced_pot(lam))
        assert w is not None
        assert validate_witness(w.coloring, induced_pot(lam)) == []


def test_isomorphism_invariance():
    rng = random.Random(4)
    pots = [P1, P2, Pot([[1, 1, 1], [-1, -1, -1]]), Pot([[1, 1, -2], [2, -1, -1], [1, 2, -2]])]
    for g in catalog_cubic8() + [moebius_ladder(4)]:
        for pot in pots:
            h = g.relabel(random_permutation(rng, g.order))
            assert (realize(g, pot) is None) == (realize(h, pot) is None)


def test_transform_closure_on_witnesses():
    rng = random.Random(8)
    q = cube()
    w = realize(q, P1)
    auts = automorphism_group(q)
    for _ in range(50):
        used = w.coloring.used_colors()
        gmap = dict(zip(used, rng.sample(range(1, 8), len(used))))
        flips = class_flips(w.coloring, [c for c in used if rng.random() < 0.5])
        moved = retarget_realization(w.coloring, gmap, flips, rng.choice(auts))
        pot = induced_pot(moved)
        assert pot_isomorphisms(P1, pot)
        assert validate_witness(moved, pot) == []


def test_scenarios_of_cube():
    flags = classify_scenarios(cube(), P1)
    assert (flags.realized, flags.scenario2, flags.scenario3) == (True, True, True)
    assert flags.scenario == 3


def test_triple_edge_defeats_scenario_two():
    flags = classify_scenarios(cube(), Pot([[1, 1, 1], [-1, -1, -1]]))
    assert flags.realized and not flags.scenario2 and not flags.scenario3
    assert flags.smaller.graph.order == 2
    assert flags.smaller.graph.edges == ((0, 1),) * 3


def test_unrealizable_scenario():
    flags = classify_scenarios(cube(), Pot([[1, -1]]))
    assert not flags.realized and flags.scenario == 0
    assert flags.to_json()["witness"] is None


def test_direction_check():
    assert same_color_same_direction_check(p1_witness())
    c4 = cycle(4)
    mixed = EdgeColoring(c4, ((0, 1), (1, 2), (2, 3), (3, 0)), (1, 1, 2, 2))
    assert not same_color_same_direction_check(mixed)
    injective = EdgeColoring(c4, ((0, 1), (1, 2), (2, 3), (3, 0)), (1, 2, 3, 4))
    assert same_color_same_direction_check(injective)
    with pytest.raises(ValueError):
        same_color_same_direction_check(EdgeColoring(cycle(1), ((0, 0),), (1,)))


def test_witness_json_round_trip():
    w = realize(cube(), P2)
    data = w.to_json()
    assert EdgeColoring.from_json(data["coloring"]) == w.coloring
    assert Pot.from_json(data["pot"]) == w.pot
