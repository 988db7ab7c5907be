"""Symbolic T1/T2 calculus on arithmetic progressions for the Collatz map."""

from .cycles import CyclePair, CycleSolution, Outcome, scan, solve_pair
from .indexing import IndexMap, OperatorWord, compose, density, identity_map, seed_from_word, seed_progression
from .invariants import AllOddReport, all_odd_path, lemma_step_check, min_seed_growth
from .oracle import Trajectory, Variant, detect_value_repeat, run, step_compact, step_full
from .progression import (
    Op,
    ParityClass,
    Progression,
    classify_parity,
    split_parity,
    step_even,
    step_odd_compact,
    t1,
    t2,
    value_at,
)
from .tree import Tree, TreeNode, build, descend, expand_node

__version__ = "0.1.0"
