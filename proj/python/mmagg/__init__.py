"""Multiclass MinMax rank aggregation."""

from ._mmagg import (
    Error,
    Instance,
    PartialRanking,
    Permutation,
    aggregate,
    brute_force,
    kemeny,
    kendall_tau,
    minmax_objective,
    parse_instance,
    partial_footrule,
    relaxation_value,
    sample_instance,
    sample_mallows,
    spearman_footrule,
)

__all__ = [
    "Error",
    "Instance",
    "PartialRanking",
    "Permutation",
    "aggregate",
    "brute_force",
    "kemeny",
    "kendall_tau",
    "minmax_objective",
    "parse_instance",
    "partial_footrule",
    "relaxation_value",
    "sample_instance",
    "sample_mallows",
    "spearman_footrule",
]
