"""Coset meet groupoids of finite groups, the functors between groups and
groupoids, and the checks that they are mutually inverse."""
from .autgroup import (AutPresentation, Theta, aut_report, basis_subgroup, centralizer_kernel_check,
                       delta, gamma, inn_out, split_extension_check, theta)
from .catalog import CATALOG, get, load_group
from .equivalence import (NaturalitySquare, check_naturality_g, check_naturality_m, eta_g, eta_m,
                          is_object_of_MM, roundtrip_report)
from .functor_g import FullFilter, enumerate_full_filters, filter_to_aut, g_of_m, hat
from .functor_w import build_w, close_basis, w_on_morphism
from .groupoid import MeetGroupoid, check_axioms, find_isomorphism
from .perm import GroupHom, Perm, PermGroup, SubgroupFamily, all_subgroups, trivial_chain
from .profinite import InverseSystem, LevelCoset, level_ops, refine_filter, truncate

__all__ = [
    "AutPresentation",
    "Theta",
    "aut_report",
    "basis_subgroup",
    "centralizer_kernel_check",
    "delta",
    "gamma",
    "inn_out",
    "split_extension_check",
    "theta",
    "CATALOG",
    "get",
    "load_group",
    "NaturalitySquare",
    "check_naturality_g",
    "check_naturality_m",
    "eta_g",
    "eta_m",
    "is_object_of_MM",
    "roundtrip_report",
    "FullFilter",
    "enumerate_full_filters",
    "filter_to_aut",
    "g_of_m",
    "hat",
    "build_w",
    "close_basis",
    "w_on_morphism",
    "MeetGroupoid",
    "check_axioms",
    "find_isomorphism",
    "GroupHom",
    "Perm",
    "PermGroup",
    "SubgroupFamily",
    "all_subgroups",
    "trivial_chain",
    "InverseSystem",
    "LevelCoset",
    "level_ops",
    "refine_filter",
    "truncate",
]

__version__ = "0.1.0"
