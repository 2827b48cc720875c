"""Certified error bounds for the regularized sampling series."""

from shannonreg.bounds.certificates import (
    BoundPair,
    BoundParams,
    MillsEpsilon,
    UpperBoundTerms,
    bound_pair,
    c_const,
    certified_c_floor,
    e1_lower_bound,
    e2_tail_bound,
    f0_truncation_bound,
    lower_bound_general,
    lower_bound_opt,
    n_min,
    r_corridor,
    sufficient_c,
    theoretical_rate,
    upper_bound_general,
    upper_bound_opt,
    upper_bound_terms,
)
from shannonreg.bounds.lemmas import LemmaReport, lemma_checks


__all__ = [
    "BoundPair",
    "BoundParams",
    "bound_pair",
    "LemmaReport",
    "MillsEpsilon",
    "UpperBoundTerms",
    "c_const",
    "certified_c_floor",
    "e1_lower_bound",
    "e2_tail_bound",
    "f0_truncation_bound",
    "lemma_checks",
    "lower_bound_general",
    "lower_bound_opt",
    "n_min",
    "r_corridor",
    "sufficient_c",
    "theoretical_rate",
    "upper_bound_general",
    "upper_bound_opt",
    "upper_bound_terms",
]
