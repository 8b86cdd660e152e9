"""Ogden's-lemma machinery for the witness family z_n."""
from .cases import LEAVES, CaseLabel, UnreachableCase, balancing_i, classify, prescribed_i
from .coloring import ColorCounts, Decomposition, color_counts, cond_A, cond_B, marks
from .pumping import Reason, WitnessIndex, exit_reason, pump
from .search import (
    CaseTargeted,
    ExhaustiveWindow,
    RandomSample,
    Refutation,
    SearchConfig,
    alt_bound,
    candidate_exponents,
    decompositions,
    exhaustive_window,
    random_sample,
    refute,
    verify_theorem_instance,
    window_total,
)
from .targets import case_targeted, unmarked_v_example
