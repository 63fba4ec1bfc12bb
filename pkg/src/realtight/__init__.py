"""Exact-arithmetic census of real tight contact structures on solid
tori and lens spaces: slope and Farey arithmetic, dividing-set
enumeration, classification counts, rational Thurston-Bennequin
invariants, and chain-surgery identification."""

from .slopes import (
    CurveClass,
    MappingClass,
    NegCF,
    Slope,
    act,
    cf_bracket_inverse,
    class_of_slope,
    dehn_twist,
    eigen_slope,
    neg_cf_eval,
    neg_cf_expand,
    slope_of_class,
)

__all__ = [
    "CurveClass",
    "MappingClass",
    "NegCF",
    "Slope",
    "act",
    "cf_bracket_inverse",
    "class_of_slope",
    "dehn_twist",
    "eigen_slope",
    "neg_cf_eval",
    "neg_cf_expand",
    "slope_of_class",
]
