"""Rough approximations over finite set-valued maps and finite rings."""

from ._kernels import BACKEND
from .errors import (
    NotPowerful,
    ParseError,
    RoughRingError,
    SizeCapExceeded,
    StructuralError,
)
from .finite_ring import (
    Congruence,
    FiniteRing,
    RingHom,
    congruence_from_ideal,
    congruence_from_partition,
    enumerate_congruences,
    enumerate_homs,
    enumerate_ideals,
    enumerate_subrings,
    find_isomorphism,
    hom_from_table,
    is_ideal,
    is_subring,
    quotient_by_congruence,
    quotient_by_subgroup,
    ring_from_tables,
    ring_product,
    ring_zmod,
)
from .finite_sets import RoughPair, SetValuedMap, Subset, Universe, lower_approx, rough_pair, upper_approx
from .lawcheck import check_law, revalidate
from .powerset_ring import PowersetRing, ps_as_finite_ring, ps_check_axioms
from .rough_hom import (
    SetValuedRingHom,
    classes_svh,
    fundamental_theorem,
    induced_svh,
    is_powerful,
    kernel,
    singleton_svh,
)
from .textformat import Document, emit, parse

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Congruence",
    "Document",
    "FiniteRing",
    "NotPowerful",
    "ParseError",
    "PowersetRing",
    "RingHom",
    "RoughPair",
    "RoughRingError",
    "SetValuedMap",
    "SetValuedRingHom",
    "SizeCapExceeded",
    "StructuralError",
    "Subset",
    "Universe",
    "check_law",
    "classes_svh",
    "congruence_from_ideal",
    "congruence_from_partition",
    "emit",
    "enumerate_congruences",
    "enumerate_homs",
    "enumerate_ideals",
    "enumerate_subrings",
    "find_isomorphism",
    "fundamental_theorem",
    "hom_from_table",
    "induced_svh",
    "is_ideal",
    "is_powerful",
    "is_subring",
    "kernel",
    "lower_approx",
    "parse",
    "ps_as_finite_ring",
    "ps_check_axioms",
    "quotient_by_congruence",
    "quotient_by_subgroup",
    "revalidate",
    "ring_from_tables",
    "ring_product",
    "ring_zmod",
    "rough_pair",
    "singleton_svh",
    "upper_approx",
    "__version__",
]
