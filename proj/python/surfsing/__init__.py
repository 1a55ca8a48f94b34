"""Exact discrepancy, Riemann-Roch and singularity bound computations for log del Pezzo surfaces."""

from ._surfsing import (
    DualGraph,
    HypothesisError,
    InputError,
    InternalError,
    basket_bound,
    builtin_counterexample_program,
    chi_anti_pluricanonical,
    cyclic_contribution,
    discrepancies,
    gorenstein_rank_one_baskets,
    h0_lower_bound,
    ks_squared,
    reproduce,
    run_blowup_program,
    singularity_category,
    tau,
    worst_case_bound,
)

__all__ = [
    "DualGraph",
    "HypothesisError",
    "InputError",
    "InternalError",
    "basket_bound",
    "builtin_counterexample_program",
    "chi_anti_pluricanonical",
    "cyclic_contribution",
    "discrepancies",
    "gorenstein_rank_one_baskets",
    "h0_lower_bound",
    "ks_squared",
    "reproduce",
    "run_blowup_program",
    "singularity_category",
    "tau",
    "worst_case_bound",
]
