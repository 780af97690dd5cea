"""Mapping class groups of finite topological spaces."""

from .space import (
    FiniteSpace,
    Poset,
    Preorder,
    QuotientMap,
    indistinguishability_classes,
    is_continuous,
    order_topology,
    specialization_preorder,
    t0_quotient,
    validate_topology,
)
from .mcg import homeo_group, kernel_subgroup, mod_group, theorem1_check
from .perms import PermGroup, group_iso

__version__ = "0.1.0"
