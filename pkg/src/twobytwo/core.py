"""Exact primitives for 2x2 games: payoffs, distributions, best responses, symmetries.

All payoffs and probabilities are `fractions.Fraction` values, so every
comparison (ties, indifference, constraint feasibility) is decided exactly.
No floating point enters any equilibrium-bearing computation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

# Joint-action cells in flat order, row-major for the row player.
CELLS = ((0, 0), (0, 1), (1, 0), (1, 1))
CELL_NAMES = ("AA", "AB", "BA", "BB")
ACTION_NAMES = ("A", "B")

# Flat-index permutations of the cells (AA, AB, BA, BB).
_SWAP_ROW = (2, 3, 0, 1)
_SWAP_COL = (1, 0, 3, 2)
_TRANSPOSE = (0, 2, 1, 3)


class Player(enum.Enum):
    ROW = 0
    COL = 1


def as_rational(value: RationalLike) -> Fraction:
    """Coerce a payoff literal to an exact rational.

    Decimal strings are parsed as exact decimal fractions (".4" -> 2/5),
    never as binary floats.  Accepts "n/d" fraction syntax.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational literal {value!r}") from exc
    raise ValueError(f"invalid rational literal {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialize exactly: `num/den`, or plain integer when den == 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Game:
    """A 2x2 game: one payoff per player per joint action.

    Payoff tuples are in flat cell order (AA, AB, BA, BB); the first action
    index is the row player's, the second the column player's.
    """

    row: tuple[Fraction, Fraction, Fraction, Fraction]
    col: tuple[Fraction, Fraction, Fraction, Fraction]

    def payoff(self, player: Player, row_action: int, col_action: int) -> Fraction:
        table = self.row if player is Player.ROW else self.col
        return table[2 * row_action + col_action]

    def payoffs(self, player: Player) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.row if player is Player.ROW else self.col


@dataclass(frozen=True)
class JointDistribution:
    """A distribution over the four joint actions; a point in the 3-simplex."""

    prob: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.prob):
            raise ValueError(f"negative joint probability in {self.prob}")
        if sum(self.prob) != 1:
            raise ValueError(f"joint probabilities must sum to 1, got {self.prob}")

    def __getitem__(self, cell: int) -> Fraction:
        return self.prob[cell]


@dataclass(frozen=True)
class MarginalPair:
    """Each player's probability of playing action A."""

    row_prob_a: Fraction
    col_prob_a: Fraction

    def __post_init__(self) -> None:
        for value in (self.row_prob_a, self.col_prob_a):
            if not 0 <= value <= 1:
                raise ValueError(f"marginal probability {value} outside [0, 1]")


@dataclass(frozen=True)
class ConditionalTable:
    """Distributions over the other player's actions, one per conditioning action.

    A row is None exactly when the conditioning action has probability zero.
    """

    rows: tuple[tuple[Fraction, Fraction] | None, tuple[Fraction, Fraction] | None]


def joint(values: Iterable[RationalLike]) -> JointDistribution:
    """Build a JointDistribution from four probability literals."""
    probs = tuple(as_rational(v) for v in values)
    if len(probs) != 4:
        raise ValueError(f"expected 4 joint probabilities, got {len(probs)}")
    return JointDistribution(probs)


def game_from_flat(values: Sequence[RationalLike]) -> Game:
    """Build a Game from the flat 8-tuple: row player row-major, then column player."""
    flat = tuple(as_rational(v) for v in values)
    if len(flat) != 8:
        raise ValueError(f"expected 8 payoff values, got {len(flat)}")
    return Game(row=flat[:4], col=flat[4:])


def game_to_flat(game: Game) -> tuple[Fraction, ...]:
    return game.row + game.col


def expected_payoff(game: Game, player: Player, dist: JointDistribution) -> Fraction:
    """Expected payoff of `player` under the joint distribution, exact."""
    table = game.payoffs(player)
    return sum((dist.prob[i] * table[i] for i in range(4)), Fraction(0))


def best_response_set(
    game: Game, player: Player, opponent_mix: RationalLike
) -> frozenset[int]:
    """Actions maximizing `player`'s expected payoff against the opponent mix.

    `opponent_mix` is the opponent's probability of playing action A.  Both
    actions are returned exactly when the expected payoffs tie.
    """
    q = as_rational(opponent_mix)
    if not 0 <= q <= 1:
        raise ValueError(f"opponent mix {q} outside [0, 1]")
    table = game.payoffs(player)
    if player is Player.ROW:
        value_a = q * table[0] + (1 - q) * table[1]
        value_b = q * table[2] + (1 - q) * table[3]
    else:
        value_a = q * table[0] + (1 - q) * table[2]
        value_b = q * table[1] + (1 - q) * table[3]
    if value_a > value_b:
        return frozenset((0,))
    if value_b > value_a:
        return frozenset((1,))
    return frozenset((0, 1))


def marginals_from_joint(dist: JointDistribution) -> MarginalPair:
    p = dist.prob
    return MarginalPair(row_prob_a=p[0] + p[1], col_prob_a=p[0] + p[2])


def conditional(dist: JointDistribution, conditioning_player: Player) -> ConditionalTable:
    """Condition the joint on each of one player's actions.

    Rows with zero conditioning probability are absent (None), not invented.
    """
    p = dist.prob
    if conditioning_player is Player.ROW:
        groups = ((p[0], p[1]), (p[2], p[3]))
    else:
        groups = ((p[0], p[2]), (p[1], p[3]))
    rows = []
    for pair in groups:
        total = pair[0] + pair[1]
        rows.append(None if total == 0 else (pair[0] / total, pair[1] / total))
    return ConditionalTable(rows=(rows[0], rows[1]))


def product_joint(marginals: MarginalPair) -> JointDistribution:
    """Outer product of the two marginals."""
    p, q = marginals.row_prob_a, marginals.col_prob_a
    return JointDistribution(
        (p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q))
    )


def transform_affine(
    game: Game,
    player: Player,
    scale: RationalLike,
    offset_given_opponent_a: RationalLike,
    offset_given_opponent_b: RationalLike,
) -> Game:
    """Rescale one player's payoffs and shift them per opponent action.

    The offset is indexed by the *opponent's* action, which is what leaves
    best responses (and hence all equilibrium sets) unchanged.
    """
    s = as_rational(scale)
    if s <= 0:
        raise ValueError(f"scale must be positive, got {s}")
    offsets = (as_rational(offset_given_opponent_a), as_rational(offset_given_opponent_b))
    if player is Player.ROW:
        # Opponent is the column player: offset indexed by the column action.
        new_row = tuple(s * game.row[i] + offsets[i % 2] for i in range(4))
        return Game(row=new_row, col=game.col)
    # Opponent is the row player: offset indexed by the row action.
    new_col = tuple(s * game.col[i] + offsets[i // 2] for i in range(4))
    return Game(row=game.row, col=new_col)


def _apply_cell_permutation(
    table: tuple[Fraction, ...], perm: tuple[int, int, int, int]
) -> tuple[Fraction, ...]:
    return tuple(table[perm[i]] for i in range(4))


def permute(
    game: Game,
    swap_row_actions: bool = False,
    swap_col_actions: bool = False,
    swap_players: bool = False,
) -> Game:
    """Apply a symmetry of the game: relabel actions and/or exchange players.

    Applied in a fixed order: player swap first, then row-action swap, then
    column-action swap (the action flags refer to the resulting orientation).
    The 8 flag combinations realize the full order-8 symmetry group.
    """
    row, col = game.row, game.col
    if swap_players:
        row, col = _apply_cell_permutation(col, _TRANSPOSE), _apply_cell_permutation(
            row, _TRANSPOSE
        )
    if swap_row_actions:
        row = _apply_cell_permutation(row, _SWAP_ROW)
        col = _apply_cell_permutation(col, _SWAP_ROW)
    if swap_col_actions:
        row = _apply_cell_permutation(row, _SWAP_COL)
        col = _apply_cell_permutation(col, _SWAP_COL)
    return Game(row=row, col=col)


#: All 8 symmetry flags as (swap_row_actions, swap_col_actions, swap_players).
SYMMETRY_FLAGS = tuple(
    (bool(r), bool(c), bool(t)) for t in (0, 1) for r in (0, 1) for c in (0, 1)
)
