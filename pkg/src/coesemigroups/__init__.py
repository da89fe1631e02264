"""Coe-semigroups: numerical semigroups in which every odd element x has x - 1 and x + 1."""

from .coe import ChainRecord, CoeMonoid, chain_to_full, classify_monoid, coe_closure, coe_sanity, is_coe
from .constructions import (
    DoubleLift,
    MedLift,
    double_lift,
    double_unlift,
    ed3_formulas,
    is_med,
    med_lift,
    med_unlift,
    wilf_transfer_check,
)
from .core import (
    FULL,
    GeneratorSet,
    NumericalSemigroup,
    apery_set,
    fill_frobenius,
    from_generators,
    intersection,
    is_symmetric,
    remove_element,
    remove_pair,
    small_count,
    sylvester,
    wilf_holds,
)
from .errors import SemigroupError
from .trees import EnumerationBound, Family, TreeEdge, TreeNode, TreeSpec, count_by_genus, enumerate_tree

__all__ = [
    "FULL",
    "ChainRecord",
    "CoeMonoid",
    "DoubleLift",
    "EnumerationBound",
    "Family",
    "GeneratorSet",
    "MedLift",
    "NumericalSemigroup",
    "SemigroupError",
    "TreeEdge",
    "TreeNode",
    "TreeSpec",
    "apery_set",
    "chain_to_full",
    "classify_monoid",
    "coe_closure",
    "coe_sanity",
    "count_by_genus",
    "double_lift",
    "double_unlift",
    "ed3_formulas",
    "enumerate_tree",
    "fill_frobenius",
    "from_generators",
    "intersection",
    "is_coe",
    "is_med",
    "is_symmetric",
    "med_lift",
    "med_unlift",
    "remove_element",
    "remove_pair",
    "small_count",
    "sylvester",
    "wilf_holds",
    "wilf_transfer_check",
]
