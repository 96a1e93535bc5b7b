"""Exact equilibrium sets of 2x2 games.

Nash equilibria are found by a closed-form case analysis on the sign of each
player's payoff advantage line; the result is a finite union of axis-aligned
boxes in marginal space.  The coarse-correlated-equilibrium set is a convex
polytope in the joint-strategy simplex, enumerated exactly: every subset of
three inequality constraints is solved against the sum-to-one equality and
feasible solutions are kept.  For two-action games the correlated and
coarse-correlated sets coincide, so this polytope serves as both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Game,
    JointDistribution,
    MarginalPair,
    Player,
    best_response_set,
    product_joint,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class DeviationConstraint:
    """One linear no-gain constraint: sum_a sigma(a) * coeffs[a] <= 0.

    coeffs[a] is the player's payoff gain at cell `a` from switching to the
    deviation action; it is zero on cells already playing that action.
    """

    player: Player
    deviation_action: int
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Box:
    """An axis-aligned product of intervals in marginal space [0,1]^2.

    Degenerate intervals give points and segments; p is the row player's
    probability of action A, q the column player's.
    """

    p_low: Fraction
    p_high: Fraction
    q_low: Fraction
    q_high: Fraction

    @property
    def is_point(self) -> bool:
        return self.p_low == self.p_high and self.q_low == self.q_high

    @property
    def is_segment(self) -> bool:
        return (self.p_low == self.p_high) != (self.q_low == self.q_high)

    def contains(self, m: MarginalPair) -> bool:
        return (
            self.p_low <= m.row_prob_a <= self.p_high
            and self.q_low <= m.col_prob_a <= self.q_high
        )

    def corners(self) -> tuple[MarginalPair, ...]:
        ps = {self.p_low, self.p_high}
        qs = {self.q_low, self.q_high}
        return tuple(
            MarginalPair(p, q) for p in sorted(ps) for q in sorted(qs)
        )


@dataclass(frozen=True)
class NashSet:
    """The complete Nash set as a normalized union of boxes."""

    components: tuple[Box, ...]

    def contains(self, m: MarginalPair) -> bool:
        return any(box.contains(m) for box in self.components)


@dataclass(frozen=True)
class CcePolytope:
    """Vertices, edges, and defining halfspaces of the CCE set inside the simplex.

    `halfspaces` holds 8 coefficient rows r with the meaning r . sigma <= 0:
    the four deviation constraints first, then the four nonnegativity rows.
    Vertices are deduplicated and sorted lexicographically by coordinates;
    edges are index pairs into the vertex list.
    """

    deviation_constraints: tuple[DeviationConstraint, ...]
    halfspaces: tuple[tuple[Fraction, Fraction, Fraction, Fraction], ...]
    vertices: tuple[JointDistribution, ...]
    edges: tuple[tuple[int, int], ...]
    dimension: int


def _advantages(game: Game, player: Player) -> tuple[Fraction, Fraction]:
    # Payoff gain of action A over B, against each opponent pure action.
    if player is Player.ROW:
        r = game.row
        return (r[0] - r[2], r[1] - r[3])
    c = game.col
    return (c[0] - c[1], c[2] - c[3])


def cce_constraints(game: Game) -> tuple[DeviationConstraint, ...]:
    """The four no-gain constraints, one per (player, deviation action)."""
    a, b = _advantages(game, Player.ROW)
    c, d = _advantages(game, Player.COL)
    return (
        DeviationConstraint(Player.ROW, 0, (_ZERO, _ZERO, a, b)),
        DeviationConstraint(Player.ROW, 1, (-a, -b, _ZERO, _ZERO)),
        DeviationConstraint(Player.COL, 0, (_ZERO, c, _ZERO, d)),
        DeviationConstraint(Player.COL, 1, (-c, _ZERO, -d, _ZERO)),
    )


def joint_in_cce(game: Game, dist: JointDistribution) -> bool:
    """Exact membership test: all four deviation constraints hold."""
    return all(
        sum((dist.prob[i] * con.coeffs[i] for i in range(4)), _ZERO) <= 0
        for con in cce_constraints(game)
    )


def halfspace_rows(game: Game) -> tuple[tuple[Fraction, ...], ...]:
    """All 8 inequality rows r with r . sigma <= 0 (deviations, then nonnegativity)."""
    rows = [con.coeffs for con in cce_constraints(game)]
    for i in range(4):
        rows.append(tuple(-_ONE if j == i else _ZERO for j in range(4)))
    return tuple(rows)


def _solve_tight(rows: list[tuple[Fraction, ...]]) -> tuple[Fraction, ...] | None:
    """Solve the 3 tight rows plus sum-to-one by Gaussian elimination; None if singular."""
    mat = [list(r) + [_ZERO] for r in rows]
    mat.append([_ONE, _ONE, _ONE, _ONE, _ONE])
    n = 4
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return None
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
    return tuple(mat[i][n] for i in range(n))


def _matrix_rank(rows: list[tuple[Fraction, ...]]) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def cce_polytope(game: Game) -> CcePolytope:
    """Exact vertex enumeration of the CCE polytope (at most C(8,3) linear solves)."""
    rows = halfspace_rows(game)
    vertices: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(range(8), 3):
        point = _solve_tight([rows[i] for i in subset])
        if point is None:
            continue
        if all(x >= 0 for x in point) and all(
            sum((point[j] * row[j] for j in range(4)), _ZERO) <= 0 for row in rows[:4]
        ):
            vertices.add(point)
    ordered = sorted(vertices)
    joints = tuple(JointDistribution(v) for v in ordered)

    tight_sets = [
        frozenset(
            i
            for i, row in enumerate(rows)
            if sum((v[j] * row[j] for j in range(4)), _ZERO) == 0
        )
        for v in ordered
    ]
    edges = []
    for i, j in itertools.combinations(range(len(ordered)), 2):
        common = tight_sets[i] & tight_sets[j]
        # Bounded-polytope adjacency: no third vertex may be tight on all of `common`.
        if not any(
            common <= tight_sets[k] for k in range(len(ordered)) if k != i and k != j
        ):
            edges.append((i, j))

    if len(ordered) <= 1:
        dimension = 0
    else:
        base = ordered[0]
        diffs = [tuple(v[k] - base[k] for k in range(4)) for v in ordered[1:]]
        dimension = _matrix_rank(diffs)
    return CcePolytope(
        deviation_constraints=cce_constraints(game),
        halfspaces=rows,
        vertices=joints,
        edges=tuple(edges),
        dimension=dimension,
    )


def _reaction_boxes(
    adv: tuple[Fraction, Fraction]
) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Boxes (own_low, own_high, opp_low, opp_high) of best-response-consistent profiles.

    `adv` is the payoff advantage of the player's action A against each
    opponent pure action; the advantage at opponent mix y is
    y*adv[0] + (1-y)*adv[1].
    """
    a, b = adv
    if a == 0 and b == 0:
        return [(_ZERO, _ONE, _ZERO, _ONE)]
    if a >= 0 and b >= 0:
        boxes = [(_ONE, _ONE, _ZERO, _ONE)]
        if a == 0:  # indifferent exactly when the opponent plays A surely
            boxes.append((_ZERO, _ONE, _ONE, _ONE))
        if b == 0:
            boxes.append((_ZERO, _ONE, _ZERO, _ZERO))
        return boxes
    if a <= 0 and b <= 0:
        boxes = [(_ZERO, _ZERO, _ZERO, _ONE)]
        if a == 0:
            boxes.append((_ZERO, _ONE, _ONE, _ONE))
        if b == 0:
            boxes.append((_ZERO, _ONE, _ZERO, _ZERO))
        return boxes
    ystar = b / (b - a)  # unique interior indifference point
    if a > 0:  # prefers B below ystar, A above
        return [
            (_ZERO, _ZERO, _ZERO, ystar),
            (_ZERO, _ONE, ystar, ystar),
            (_ONE, _ONE, ystar, _ONE),
        ]
    return [
        (_ONE, _ONE, _ZERO, ystar),
        (_ZERO, _ONE, ystar, ystar),
        (_ZERO, _ZERO, ystar, _ONE),
    ]


def _intersect(b1: Box, b2: Box) -> Box | None:
    p_low, p_high = max(b1.p_low, b2.p_low), min(b1.p_high, b2.p_high)
    q_low, q_high = max(b1.q_low, b2.q_low), min(b1.q_high, b2.q_high)
    if p_low > p_high or q_low > q_high:
        return None
    return Box(p_low, p_high, q_low, q_high)


def _contains_box(outer: Box, inner: Box) -> bool:
    return (
        outer.p_low <= inner.p_low
        and inner.p_high <= outer.p_high
        and outer.q_low <= inner.q_low
        and inner.q_high <= outer.q_high
    )


def _merge(b1: Box, b2: Box) -> Box | None:
    """The union if it is itself a box (shared interval on one axis, touching on the other)."""
    if (b1.p_low, b1.p_high) == (b2.p_low, b2.p_high):
        if b1.q_low <= b2.q_high and b2.q_low <= b1.q_high:
            return Box(b1.p_low, b1.p_high, min(b1.q_low, b2.q_low), max(b1.q_high, b2.q_high))
    if (b1.q_low, b1.q_high) == (b2.q_low, b2.q_high):
        if b1.p_low <= b2.p_high and b2.p_low <= b1.p_high:
            return Box(min(b1.p_low, b2.p_low), max(b1.p_high, b2.p_high), b1.q_low, b1.q_high)
    return None


def _normalize(boxes: list[Box]) -> tuple[Box, ...]:
    work = list(boxes)
    changed = True
    while changed:
        changed = False
        # drop boxes nested inside another
        kept: list[Box] = []
        for box in work:
            if any(
                other is not box and _contains_box(other, box) and other != box
                for other in work
            ) or box in kept:
                continue
            kept.append(box)
        if len(kept) != len(work):
            work, changed = kept, True
            continue
        for i, j in itertools.combinations(range(len(work)), 2):
            merged = _merge(work[i], work[j])
            if merged is not None and merged != work[i]:
                work = [b for k, b in enumerate(work) if k not in (i, j)] + [merged]
                changed = True
                break
            if merged is not None and merged == work[i]:
                work = [b for k, b in enumerate(work) if k != j]
                changed = True
                break
    return tuple(sorted(work, key=lambda b: (b.p_low, b.p_high, b.q_low, b.q_high)))


def nash_set(game: Game) -> NashSet:
    """The complete Nash set, from the sign analysis of both advantage lines."""
    row_boxes = [
        Box(p_low=own_lo, p_high=own_hi, q_low=opp_lo, q_high=opp_hi)
        for own_lo, own_hi, opp_lo, opp_hi in _reaction_boxes(_advantages(game, Player.ROW))
    ]
    col_boxes = [
        Box(p_low=opp_lo, p_high=opp_hi, q_low=own_lo, q_high=own_hi)
        for own_lo, own_hi, opp_lo, opp_hi in _reaction_boxes(_advantages(game, Player.COL))
    ]
    pieces = []
    for rb in row_boxes:
        for cb in col_boxes:
            hit = _intersect(rb, cb)
            if hit is not None:
                pieces.append(hit)
    return NashSet(components=_normalize(pieces))


def is_nash(game: Game, m: MarginalPair) -> bool:
    """True iff neither player gains by any pure deviation against the product joint."""
    row_support = {i for i, prob in ((0, m.row_prob_a), (1, 1 - m.row_prob_a)) if prob > 0}
    col_support = {i for i, prob in ((0, m.col_prob_a), (1, 1 - m.col_prob_a)) if prob > 0}
    return row_support <= best_response_set(
        game, Player.ROW, m.col_prob_a
    ) and col_support <= best_response_set(game, Player.COL, m.row_prob_a)


def deviation_gain(game: Game, player: Player, deviation: int, dist: JointDistribution) -> Fraction:
    """The raw no-regret sum: expected gain from always switching to `deviation`."""
    total = _ZERO
    for cell, (r_act, c_act) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        if player is Player.ROW:
            gain = game.payoff(player, deviation, c_act) - game.payoff(player, r_act, c_act)
        else:
            gain = game.payoff(player, r_act, deviation) - game.payoff(player, r_act, c_act)
        total += dist.prob[cell] * gain
    return total


def nash_product_joints(ns: NashSet) -> tuple[JointDistribution, ...]:
    """Product joints of the corner profiles of every component (dedup, sorted)."""
    joints = {product_joint(m).prob for box in ns.components for m in box.corners()}
    return tuple(JointDistribution(p) for p in sorted(joints))
