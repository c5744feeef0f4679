"""Exact combinatorial optimization and geometric query toolkit.

Four solver families, each paired with an independent brute-force oracle:

- allocation: minimum-cost selection of disjoint resource 3-tuples
- collector: the decaying multi-pile collection game
- metrics: distance selection and packing under weighted L1/Linf metrics
- guessing: the adaptive permutation guessing engine

All arithmetic is exact (arbitrary-precision integers and rationals).
"""

from .allocation import (ResourceInstance, TripleSelection, min_cost_backward,
                         min_cost_incomplete_dp, reconstruct_selection)
from .collector import (GameValueTable, PileGame, max_collect,
                        max_collect_no_decay, max_collect_no_disappear,
                        optimal_strategy, replay_strategy, solve_value_table)
from .errors import GuardError, InconsistentAnswerError, InvalidInstanceError
from .guessing import (AdversarialReferee, FixedReferee, GuessState,
                       adversarial_answer, answer_for_secret, apply_answer,
                       choose_question, has_consistent_secret, play, up_new)
from .matching import min_cost_assignment
from .metrics import (PointSet, count_pairs_in_range, count_pairs_within,
                      diameter_l1, diameter_linf, is_packing_feasible,
                      kth_smallest_distance, l1_to_linf_embed,
                      max_packing_factor, rotate45)
from .oracles import (oracle_collector, oracle_kth_distance, oracle_matching,
                      oracle_packing, oracle_triples)
from .rangetree import RangeCountTree

__version__ = "0.1.0"

__all__ = [
    "AdversarialReferee",
    "FixedReferee",
    "GameValueTable",
    "GuardError",
    "GuessState",
    "InconsistentAnswerError",
    "InvalidInstanceError",
    "PileGame",
    "PointSet",
    "RangeCountTree",
    "ResourceInstance",
    "TripleSelection",
    "adversarial_answer",
    "answer_for_secret",
    "apply_answer",
    "choose_question",
    "count_pairs_in_range",
    "count_pairs_within",
    "diameter_l1",
    "diameter_linf",
    "has_consistent_secret",
    "is_packing_feasible",
    "kth_smallest_distance",
    "l1_to_linf_embed",
    "max_collect",
    "max_collect_no_decay",
    "max_collect_no_disappear",
    "max_packing_factor",
    "min_cost_assignment",
    "min_cost_backward",
    "min_cost_incomplete_dp",
    "optimal_strategy",
    "oracle_collector",
    "oracle_kth_distance",
    "oracle_matching",
    "oracle_packing",
    "oracle_triples",
    "play",
    "reconstruct_selection",
    "replay_strategy",
    "rotate45",
    "solve_value_table",
    "up_new",
]
