import random
from fractions import Fraction as F

import pytest

from twobytwo.core import (
    JointDistribution,
    MarginalPair,
    Player,
    SYMMETRY_FLAGS,
    as_rational,
    best_response_set,
    conditional,
    expected_payoff,
    format_rational,
    game_from_flat,
    game_to_flat,
    joint,
    marginals_from_joint,
    permute,
    product_joint,
    transform_affine,
)


def random_rational(rng, bound=9):
    return F(rng.randint(-bound, bound), rng.randint(1, 6))


def random_game(rng):
    return game_from_flat([random_rational(rng) for _ in range(8)])


# --- rational parsing ---------------------------------------------------------


def test_decimal_strings_parse_exactly():
    assert as_rational(".4") == F(2, 5)
    assert as_rational("0.25") == F(1, 4)
    assert as_rational("-.5") == F(-1, 2)
    assert as_rational("2/3") == F(2, 3)
    assert as_rational("-7/2") == F(-7, 2)


@pytest.mark.parametrize("bad", ["abc", "1/0", "", "1.2.3", "nan"])
def test_bad_rational_literals(bad):
    with pytest.raises(ValueError):
        as_rational(bad)


def test_format_rational_round_trips():
    for value in (F(0), F(-3), F(1, 3), F(-22, 7), F(10, 2)):
        assert as_rational(format_rational(value)) == value


# --- game construction ----------------------------------------------------------


def test_game_from_flat_prisoners_dilemma(pd):
    assert pd.payoff(Player.ROW, 1, 0) == 0  # G1(B,A)
    assert pd.payoff(Player.COL, 0, 1) == 0  # G2(A,B)
    assert pd.row == (F(-1), F(-3), F(0), F(-2))
    assert pd.col == (F(-1), F(0), F(-3), F(-2))


def test_game_from_flat_all_zero(all_zero):
    assert all(v == 0 for v in game_to_flat(all_zero))


def test_game_from_flat_coordination(coordination):
    assert coordination.payoff(Player.ROW, 0, 0) == 2
    assert coordination.payoff(Player.COL, 0, 0) == 2


def test_game_from_flat_arity():
    with pytest.raises(ValueError, match="8"):
        game_from_flat((1, 2, 3))


def test_flat_round_trip_random():
    rng = random.Random(11)
    for _ in range(200):
        flat = tuple(random_rational(rng) for _ in range(8))
        assert game_to_flat(game_from_flat(flat)) == flat


# --- expected payoff --------------------------------------------------------------


def test_expected_payoff_pure_bb(pd):
    assert expected_payoff(pd, Player.ROW, joint((0, 0, 0, 1))) == -2


def test_expected_payoff_point_mass_aa():
    rng = random.Random(5)
    for _ in range(20):
        g = random_game(rng)
        for p in Player:
            assert expected_payoff(g, p, joint((1, 0, 0, 0))) == g.payoff(p, 0, 0)


def test_expected_payoff_matching_pennies_uniform(mp):
    # independent oracle: the average of the four entries
    uniform = joint((F(1, 4),) * 4)
    for p in Player:
        assert expected_payoff(mp, p, uniform) == sum(mp.payoffs(p)) / 4
    assert expected_payoff(mp, Player.ROW, uniform) == 0


def test_expected_payoff_linear_in_joint():
    rng = random.Random(7)
    for _ in range(50):
        g = random_game(rng)
        s1 = random_joint(rng)
        s2 = random_joint(rng)
        alpha = F(rng.randint(0, 10), 10)
        mix = JointDistribution(
            tuple(alpha * a + (1 - alpha) * b for a, b in zip(s1.prob, s2.prob))
        )
        for p in Player:
            expected = alpha * expected_payoff(g, p, s1) + (1 - alpha) * expected_payoff(g, p, s2)
            assert expected_payoff(g, p, mix) == expected


def random_joint(rng):
    weights = [F(rng.randint(0, 9)) for _ in range(4)]
    if sum(weights) == 0:
        weights[0] = F(1)
    total = sum(weights)
    return JointDistribution(tuple(w / total for w in weights))


# --- best responses ---------------------------------------------------------------


def test_best_response_pd_always_defects(pd):
    for q in (F(0), F(1, 3), F(1, 2), F(1)):
        assert best_response_set(pd, Player.ROW, q) == {1}


def test_best_response_tie_matching_pennies(mp):
    assert best_response_set(mp, Player.ROW, F(1, 2)) == {0, 1}


def test_best_response_coordination_half(coordination):
    # payoffs of A vs B at q=1/2: 1 vs 1/2
    assert best_response_set(coordination, Player.ROW, F(1, 2)) == {0}


def test_best_response_domain_error(mp):
    with pytest.raises(ValueError):
        best_response_set(mp, Player.ROW, F(3, 2))
    with pytest.raises(ValueError):
        best_response_set(mp, Player.COL, F(-1, 10))


def test_best_response_affine_invariance():
    rng = random.Random(13)
    for _ in range(100):
        g = random_game(rng)
        p = rng.choice((Player.ROW, Player.COL))
        scale = F(rng.randint(1, 9), rng.randint(1, 4))
        g2 = transform_affine(g, p, scale, random_rational(rng), random_rational(rng))
        q = F(rng.randint(0, 12), 12)
        for player in Player:
            assert best_response_set(g2, player, q) == best_response_set(g, player, q)


# --- distributions ----------------------------------------------------------------


def test_marginals_table_example():
    m = marginals_from_joint(joint((".4", ".3", ".1", ".2")))
    assert (m.row_prob_a, m.col_prob_a) == (F(7, 10), F(1, 2))


def test_marginals_point_mass_bb():
    m = marginals_from_joint(joint((0, 0, 0, 1)))
    assert (m.row_prob_a, m.col_prob_a) == (0, 0)


def test_marginals_uniform():
    m = marginals_from_joint(joint((F(1, 4),) * 4))
    assert (m.row_prob_a, m.col_prob_a) == (F(1, 2), F(1, 2))


def test_conditional_rows_example():
    table = conditional(joint((".4", ".3", ".1", ".2")), Player.ROW)
    assert table.rows[0] == (F(4, 7), F(3, 7))
    assert table.rows[1] == (F(1, 3), F(2, 3))


def test_conditional_zero_row_absent():
    table = conditional(joint((".5", ".5", 0, 0)), Player.ROW)
    assert table.rows[0] == (F(1, 2), F(1, 2))
    assert table.rows[1] is None


def test_conditional_product_joint_is_independent():
    table = conditional(joint((".01", ".09", ".09", ".81")), Player.ROW)
    assert table.rows[0] == table.rows[1] == (F(1, 10), F(9, 10))


def test_product_joint_examples():
    assert product_joint(MarginalPair(F(1, 10), F(1, 10))).prob == (
        F(1, 100), F(9, 100), F(9, 100), F(81, 100),
    )
    assert product_joint(MarginalPair(F(1), F(0))).prob == (0, 1, 0, 0)
    assert product_joint(MarginalPair(F(1, 2), F(1, 2))).prob == (F(1, 4),) * 4


def test_product_marginal_round_trip():
    rng = random.Random(17)
    for _ in range(100):
        m = MarginalPair(F(rng.randint(0, 8), 8), F(rng.randint(0, 8), 8))
        dist = product_joint(m)
        back = marginals_from_joint(dist)
        assert (back.row_prob_a, back.col_prob_a) == (m.row_prob_a, m.col_prob_a)
        assert product_joint(back) == dist


def test_joint_invariants_enforced():
    with pytest.raises(ValueError):
        joint((1, 1, 0, 0))
    with pytest.raises(ValueError):
        joint((-1, 1, 1, 0))


# --- affine transforms -------------------------------------------------------------


def test_transform_affine_identity():
    rng = random.Random(19)
    g = random_game(rng)
    assert transform_affine(g, Player.ROW, 1, 0, 0) == g


def test_transform_affine_scale_row(pd):
    doubled = transform_affine(pd, Player.ROW, 2, 0, 0)
    assert doubled.row == (F(-2), F(-6), F(0), F(-4))
    assert doubled.col == pd.col


def test_transform_affine_col_offsets(coordination):
    # Offsets are indexed by the opponent's (row player's) action.
    shifted = transform_affine(coordination, Player.COL, 1, -2, -1)
    assert shifted.col == (F(0), F(-2), F(-1), F(0))
    assert shifted.row == coordination.row


def test_transform_affine_rejects_nonpositive_scale(pd):
    for bad in (0, F(-1, 2)):
        with pytest.raises(ValueError):
            transform_affine(pd, Player.ROW, bad, 0, 0)


# --- symmetries ---------------------------------------------------------------------


def test_permute_identity(coordination):
    assert permute(coordination) == coordination


def test_permute_row_swap_gives_anticoordination(coordination):
    swapped = permute(coordination, swap_row_actions=True)
    assert swapped.row == (F(0), F(1), F(2), F(0))


def test_permute_player_swap_involution():
    rng = random.Random(23)
    for _ in range(30):
        g = random_game(rng)
        assert permute(permute(g, swap_players=True), swap_players=True) == g


def _apply(flags, game):
    return permute(game, *flags)


def test_permute_is_a_group_action():
    """Composing flag applications always lands back in the 8-element set,
    and every element's order divides 4."""
    rng = random.Random(29)
    generic = game_from_flat([F(i * i + 1, i + 1) for i in range(8)])
    for f in SYMMETRY_FLAGS:
        for g in SYMMETRY_FLAGS:
            composed = _apply(f, _apply(g, generic))
            matches = [h for h in SYMMETRY_FLAGS if _apply(h, generic) == composed]
            assert len(matches) == 1
            h = matches[0]
            # the same composite must hold on arbitrary games
            for _ in range(5):
                other = random_game(rng)
                assert _apply(f, _apply(g, other)) == _apply(h, other)
    for f in SYMMETRY_FLAGS:
        g1 = _apply(f, generic)
        g2 = _apply(f, g1)
        g4 = _apply(f, _apply(f, g2))
        assert g4 == generic


def test_permute_flags_all_distinct():
    generic = game_from_flat([F(i * i + 1, i + 1) for i in range(8)])
    images = {game_to_flat(_apply(f, generic)) for f in SYMMETRY_FLAGS}
    assert len(images) == 8
