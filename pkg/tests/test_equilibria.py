import random
from fractions import Fraction as F

from twobytwo.core import (
    MarginalPair,
    Player,
    game_from_flat,
    joint,
    product_joint,
)
from twobytwo.equilibria import (
    cce_constraints,
    cce_polytope,
    deviation_gain,
    halfspace_rows,
    is_nash,
    joint_in_cce,
    nash_product_joints,
    nash_set,
    _matrix_rank,
)
from twobytwo.graphs import BRGraph, br_graph
from twobytwo import verify

from conftest import SAFETY, HORSEPLAY, TRAFFIC_LIGHTS


def boxes(ns):
    return {(b.p_low, b.p_high, b.q_low, b.q_high) for b in ns.components}


# --- constraints ----------------------------------------------------------------


def test_cce_constraints_matching_pennies_row_to_a(mp):
    con = cce_constraints(mp)[0]
    assert con.player is Player.ROW and con.deviation_action == 0
    assert con.coeffs == (0, 0, 2, -2)


def test_cce_constraints_all_zero(all_zero):
    for con in cce_constraints(all_zero):
        assert con.coeffs == (0, 0, 0, 0)


def test_cce_constraints_pd_row_to_b(pd):
    con = cce_constraints(pd)[1]
    assert con.player is Player.ROW and con.deviation_action == 1
    assert con.coeffs == (1, 1, 0, 0)


def test_constraint_coeffs_vanish_on_own_action_cells():
    rng = random.Random(2)
    for _ in range(40):
        g = verify.random_game(rng)
        for con in cce_constraints(g):
            for cell, (r, c) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
                own = r if con.player is Player.ROW else c
                if own == con.deviation_action:
                    assert con.coeffs[cell] == 0


# --- polytopes ------------------------------------------------------------------


def test_cce_polytope_matching_pennies(mp):
    poly = cce_polytope(mp)
    assert poly.dimension == 0
    assert len(poly.vertices) == 1
    assert poly.vertices[0].prob == (F(1, 4),) * 4
    assert poly.edges == ()


def test_cce_polytope_all_zero_full_simplex(all_zero):
    poly = cce_polytope(all_zero)
    assert poly.dimension == 3
    assert {v.prob for v in poly.vertices} == {
        (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    }
    assert len(poly.edges) == 6


def test_cce_polytope_pd_single_point(pd):
    poly = cce_polytope(pd)
    assert poly.dimension == 0
    assert [v.prob for v in poly.vertices] == [(0, 0, 0, 1)]


def test_cce_polytope_coordination_contains_pure_equilibria(coordination):
    vertices = {v.prob for v in cce_polytope(coordination).vertices}
    assert (1, 0, 0, 0) in vertices  # both players play A
    assert (0, 0, 0, 1) in vertices  # both players play B


def test_vertices_canonically_sorted_and_deduplicated():
    rng = random.Random(3)
    for _ in range(30):
        poly = cce_polytope(verify.random_game(rng))
        probs = [v.prob for v in poly.vertices]
        assert probs == sorted(probs)
        assert len(set(probs)) == len(probs)


def test_vertex_tightness_and_edges():
    rng = random.Random(5)
    for _ in range(40):
        g = verify.random_game(rng)
        poly = cce_polytope(g)
        rows = halfspace_rows(g)
        tight_sets = []
        for vertex in poly.vertices:
            tight = [
                k for k, row in enumerate(rows)
                if sum(vertex.prob[j] * row[j] for j in range(4)) == 0
            ]
            tight_sets.append(set(tight))
            assert _matrix_rank([rows[k] for k in tight]) >= 3
        for i, j in poly.edges:
            assert len(tight_sets[i] & tight_sets[j]) >= 2


# --- nash sets -------------------------------------------------------------------


def test_nash_set_pd_single_point(pd):
    assert boxes(nash_set(pd)) == {(0, 0, 0, 0)}


def test_nash_set_coordination_three_components(coordination):
    third = F(1, 3)
    assert boxes(nash_set(coordination)) == {
        (0, 0, 0, 0), (third, third, third, third), (1, 1, 1, 1),
    }


def test_nash_set_all_zero_full_box(all_zero):
    assert boxes(nash_set(all_zero)) == {(0, 1, 0, 1)}


def test_nash_set_safety_segment_plus_point():
    ns = nash_set(game_from_flat(SAFETY))
    assert boxes(ns) == {(0, 0, 0, F(1, 2)), (1, 1, 1, 1)}
    shapes = sorted(("point" if b.is_point else "segment") for b in ns.components)
    assert shapes == ["point", "segment"]


def test_nash_set_horseplay_zigzag():
    ns = nash_set(game_from_flat(HORSEPLAY))
    half = F(1, 2)
    assert boxes(ns) == {(0, 0, 0, half), (0, 1, half, half), (1, 1, half, 1)}
    assert all(b.is_segment for b in ns.components)


def test_nash_components_never_nested():
    rng = random.Random(7)
    for _ in range(80):
        ns = nash_set(verify.random_game(rng))
        assert ns.components, "nash set must be nonempty"
        for a in ns.components:
            for b in ns.components:
                if a is b:
                    continue
                nested = (
                    a.p_low <= b.p_low and b.p_high <= a.p_high
                    and a.q_low <= b.q_low and b.q_high <= a.q_high
                )
                assert not nested


# --- membership tests ---------------------------------------------------------------


def test_is_nash_matching_pennies_center(mp):
    assert is_nash(mp, MarginalPair(F(1, 2), F(1, 2)))
    assert not is_nash(mp, MarginalPair(F(1, 2), F(1, 3)))


def test_is_nash_pd_mutual_cooperation_fails(pd):
    assert not is_nash(pd, MarginalPair(F(1), F(1)))
    assert is_nash(pd, MarginalPair(F(0), F(0)))


def test_is_nash_coordination_mixed(coordination):
    assert is_nash(coordination, MarginalPair(F(1, 3), F(1, 3)))


def test_traffic_lights_structure():
    tl = game_from_flat(TRAFFIC_LIGHTS)
    tenth = F(1, 10)
    assert boxes(nash_set(tl)) == {
        (0, 0, 1, 1), (tenth, tenth, tenth, tenth), (1, 1, 0, 0),
    }
    # the sensible correlated solution: 50/50 on the off-diagonal
    assert joint_in_cce(tl, joint((0, F(1, 2), F(1, 2), 0)))
    # and its mixed equilibrium joint
    assert joint_in_cce(tl, product_joint(MarginalPair(tenth, tenth)))


def test_joint_in_cce_matching_pennies_uniform(mp):
    assert joint_in_cce(mp, joint((F(1, 4),) * 4))
    assert not joint_in_cce(mp, joint((1, 0, 0, 0)))


def test_joint_in_cce_pd_point_mass_aa(pd):
    assert not joint_in_cce(pd, joint((1, 0, 0, 0)))


def test_joint_in_cce_agrees_with_deviation_gains():
    rng = random.Random(11)
    for _ in range(60):
        g = verify.random_game(rng)
        dist = verify.random_joint(rng)
        direct = all(
            deviation_gain(g, p, a, dist) <= 0 for p in Player for a in (0, 1)
        )
        assert joint_in_cce(g, dist) == direct


# --- cross-module invariants ----------------------------------------------------------


def test_ne_subset_of_cce():
    rng = random.Random(13)
    for _ in range(50):
        g = verify.random_game(rng)
        for dist in nash_product_joints(nash_set(g)):
            assert joint_in_cce(g, dist)


def test_equilibria_invariant_under_affine_transform():
    rng = random.Random(17)
    for _ in range(25):
        g = verify.random_game(rng)
        assert not verify.check_affine_invariance(g, rng)


def test_equilibria_equivariant_under_symmetries():
    rng = random.Random(19)
    for _ in range(12):
        g = verify.random_game(rng)
        assert not verify.check_permute_equivariance(g)


def test_cyclic_games_have_unique_interior_equilibrium():
    """Strict best-response 4-cycles: one mixed NE, zero-dimensional CCE set."""
    rng = random.Random(23)
    count = 0
    while count < 25:
        g = verify.random_game(rng)
        graph = br_graph(g)
        if None in graph.fields():
            continue
        if graph not in (BRGraph(0, 1, 1, 0), BRGraph(1, 0, 0, 1)):
            continue
        count += 1
        ns = nash_set(g)
        assert len(ns.components) == 1
        box = ns.components[0]
        assert box.is_point
        assert 0 < box.p_low < 1 and 0 < box.q_low < 1
        assert cce_polytope(g).dimension == 0
