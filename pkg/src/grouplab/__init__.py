"""Finite permutation groups and criteria for p-nilpotence and p-supersolvability."""

from .catalog import builtin, builtin_catalog, fixture_216_153, load_catalog, load_group
from .core import (
    ElementSet,
    EnumerationTooLarge,
    Group,
    GroupTooLarge,
    Subgroup,
    all_subgroups,
    center,
    centralizer,
    conjugate_subgroup,
    generate_group,
    is_normal,
    is_subnormal,
    maximal_subgroups,
    normal_closure,
    normalizer,
    permutes,
    product_set,
    subgroup_generated,
    subgroups_of_order,
)
from .perm import Permutation
from .theorems import LemmaId, TheoremId, TheoremReport, evaluate, lemma_suite

__version__ = "0.1.0"

__all__ = [
    "ElementSet", "EnumerationTooLarge", "Group", "GroupTooLarge", "LemmaId", "Permutation", "Subgroup",
    "TheoremId", "TheoremReport", "all_subgroups", "builtin", "builtin_catalog", "center", "centralizer",
    "conjugate_subgroup", "evaluate", "fixture_216_153", "generate_group", "is_normal",
    "is_subnormal", "lemma_suite", "load_catalog", "load_group", "maximal_subgroups", "normal_closure",
    "normalizer", "permutes", "product_set", "subgroup_generated", "subgroups_of_order",
]
