"""Exact analysis and vector-graphics rendering of 2x2 normal-form games."""

from .core import (
    Game,
    JointDistribution,
    MarginalPair,
    Player,
    Rational,
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
from .embedding import advantage, class_of_embedding, embed
from .equilibria import cce_constraints, cce_polytope, is_nash, joint_in_cce, nash_set
from .graphs import br_class, br_graph, census, ordinal_graph

__version__ = "0.1.0"
