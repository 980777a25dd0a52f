"""Configuration matrices of complete-intersection Calabi-Yau threefolds, their
antiholomorphic involutions, and the Betti numbers of the resulting barely G2 quotients."""

from .config import ConfigurationMatrix, ValidationReport, canonical_form, invariant_under_row_swaps, validate
from .dataset import ConfigRecord, DatasetError, format_dataset, load_corpus, parse_dataset
from .expansion import ExpansionStep, expand_row, expansions_to_count
from .involutions import (
    BCombination,
    CCombination,
    InvolutionAssignment,
    b_admissible,
    enumerate_b_combinations,
    enumerate_c_combinations,
    enumerate_free_assignments,
)
from .pipeline import AnalysisResult, BatchOptions, Report, analyze, render_decorated, run_batch
from .poly import MultiPoly, coefficient, linear_form, truncated_mul
from .topology import (
    BettiNumbers,
    ChernCubic,
    ConsistencyError,
    HodgePair,
    barely_betti,
    chern_cubic,
    euler_characteristic,
    hodge_from_euler,
    product_betti,
)

__version__ = "0.1.0"
