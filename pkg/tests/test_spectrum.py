from __future__ import annotations

import random

import pytest

from potlab.outputs import enumerate_outputs
from potlab.pots import Pot, induced_pot, usage_vector
from potlab.realization import realize
from potlab.reference import P1, P2, p1_witness
from potlab.sampling import random_coloring, random_connected_multigraph
from potlab.spectrum import (
    all_solutions,
    brute_force_solutions,
    build_system,
    combinations_reach,
    min_order,
    minimal_solutions,
    nullspace,
    usage_vectors,
)


def test_p1_system():
    system = build_system(P1)
    assert sorted(system.equations()) == sorted([
        "3R1 - R3 - R5 = 0",
        "3R2 - R4 - R6 = 0",
        "-2R3 + R6 = 0",
        "-2R4 + R5 = 0",
        "-R5 + R6 = 0",
    ])


def test_small_systems():
    assert build_system(Pot([[1, -1]])).rows == ((0,),)
    assert build_system(Pot([[1, 1, 1], [-1, -1, -1]])).rows == ((3, -3),)
    with pytest.raises(ValueError):
        build_system(Pot([]))


@pytest.mark.parametrize("pot", [P1, P2])
def test_generator(pot):
    gens = minimal_solutions(pot, 16)
    assert [g.counts for g in gens] == [(1, 1, 1, 1, 2, 2)]
    assert {u.order for u in all_solutions(pot, 16)} == {8, 16}
    assert len(nullspace(build_system(pot))) == 1


def test_loop_tile_generator():
    assert [g.counts for g in minimal_solutions(Pot([[1, -1]]), 3)] == [(1,)]
    assert {u.order for u in all_solutions(Pot([[1, -1]]), 3)} == {1, 2, 3}
    with pytest.raises(ValueError):
        minimal_solutions(P1, 0)


def test_min_order_examples():
    assert min_order(P1).value == 8
    assert min_order(Pot([[1, 1, 1], [-1, -1, -1]])).value == 2
    assert min_order(Pot([[1, 1], [1, -1]])).value == 1
    m = min_order(Pot([[1, 1], [2, 2]]))
    assert m.status == "infeasible" and m.to_json() == "infeasible"
    assert min_order(P1, bound=7).to_json() == "unknown(>7)"


def _random_pot(rng: random.Random) -> Pot:
    tiles = []
    for _ in range(rng.randint(1, 6)):
        tiles.append([rng.choice([1, 2, 3, -1, -2, -3]) for _ in range(rng.randint(1, 3))])
    return Pot(tiles)


def test_solutions_match_brute_force():
    rng = random.Random(7)
    for _ in range(150):
        p = _random_pot(rng)
        bound = 6
        mine = sorted(u.counts for u in all_solutions(p, bound))
        assert mine == sorted(brute_force_solutions(p, bound))
        gens = minimal_solutions(p, bound)
        for v in mine:
            assert combinations_reach(gens, v)
        for g in gens:
            assert g.counts in mine


def test_usage_vectors_filter_by_degree():
    vecs = usage_vectors(P1, 8, {3: 8})
    assert [u.counts for u in vecs] == [(1, 1, 1, 1, 2, 2)]
    assert usage_vectors(P1, 8, {2: 8}) == []


def test_witness_usage_satisfies_system():
    rng = random.Random(1)
    colorings = [p1_witness()] + [random_coloring(rng, random_connected_multigraph(rng)) for _ in range(200)]
    for lam in colorings:
        pot = induced_pot(lam)
        assert not any(build_system(pot).residual(usage_vector(lam, pot)))


def test_min_order_bounds_outputs():
    for pot in (Pot([[1, -1]]), Pot([[1, 1, 1], [-1, -1, -1]]), Pot([[1, 1], [-1, -1], [1, -1]])):
        outs = enumerate_outputs(pot, 5)
        assert outs
        assert min(o.order for o in outs) >= min_order(pot).value
        orders = {u.order for u in all_solutions(pot, 5)}
        assert {o.order for o in outs} <= orders


def test_realize_uses_feasible_vector():
    w = realize(p1_witness().graph, P1)
    assert not any(build_system(P1).residual(w.usage))
