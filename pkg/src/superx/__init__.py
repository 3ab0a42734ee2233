"""Superextension semigroups of small finite groups.

Enumerate maximal linked systems, evaluate the extended product, build
Cayley tables, and analyze self-linked sets and invariant systems.
"""

from .errors import CapacityError, ConsistencyError, GroupParseError, SuperxError
from .families import (
    MaximalLinkedSystem,
    SetFamily,
    enumerate_mls,
    extend_to_mls,
    generate_family,
    majority_family,
    principal_ultrafilter,
    shift_mls,
)
from .groups import (
    FiniteGroup,
    build_group,
    difference_set,
    element_order,
    enumerate_subgroups,
    is_odd_group,
    translate_set,
)
from .semigroups import SemigroupTable
from .superext import build_lambda_table, circ, orbit_quotient, shift_orbits

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "FiniteGroup",
    "GroupParseError",
    "MaximalLinkedSystem",
    "SemigroupTable",
    "SetFamily",
    "SuperxError",
    "build_group",
    "build_lambda_table",
    "circ",
    "difference_set",
    "element_order",
    "enumerate_mls",
    "enumerate_subgroups",
    "extend_to_mls",
    "generate_family",
    "is_odd_group",
    "majority_family",
    "orbit_quotient",
    "principal_ultrafilter",
    "shift_mls",
    "shift_orbits",
    "translate_set",
    "__version__",
]
