"""Reachability sets of 2-dimensional branching vector addition systems with states."""

from .accel import AccelReport, accelerate, check_cone, per_plus
from .cone2d import Cone2, clip_to_quadrant, conP_formula, is_v_stable, span, stabilize
from .errors import BvassError, ParseError, ResourceLimitError
from .explore import (CycleVectors, Exploration, ExplorationNode, ExploreConfig, NodeLabel,
                      explore, validate_exploration)
from .model import (Bvass, Config, InstantiatedVass, TransitionRule, instantiate,
                    iteration_constant, parse_bvass, post_step, serialize_bvass)
from .oracle import bounded_reach, check_post_closure, check_soundness, perp_oracle
from .periodic import (PeriodicSet, basis, equal_sem, member, min_solutions, reduce,
                       shifted_inclusion, sum_sets)
from .semilinear import LinearSetEntry, SemilinearPresentation, assemble, member_config

__all__ = [
    "AccelReport", "Bvass", "BvassError", "Config", "Cone2", "CycleVectors", "Exploration",
    "ExplorationNode", "ExploreConfig", "InstantiatedVass", "LinearSetEntry", "NodeLabel",
    "ParseError", "PeriodicSet", "ResourceLimitError", "SemilinearPresentation",
    "TransitionRule", "accelerate", "assemble", "basis", "bounded_reach", "check_cone",
    "check_post_closure", "check_soundness", "clip_to_quadrant", "conP_formula", "equal_sem",
    "explore", "instantiate", "is_v_stable", "iteration_constant", "member", "member_config",
    "min_solutions", "parse_bvass", "per_plus", "perp_oracle", "post_step", "reduce",
    "serialize_bvass", "shifted_inclusion", "span", "stabilize", "sum_sets",
    "validate_exploration",
]
