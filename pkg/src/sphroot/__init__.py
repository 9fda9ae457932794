"""Demazure roots of affine spherical varieties under ``SL2 x| torus``, computed exactly."""

__version__ = "0.1.0"

from .cone_roots import (RootDescription, RootFamily, StructuralError, enumerate_roots, is_root,
                         roots_of_cone, semisimple_roots)
from .divisors import PolyDivisor, pd_degree, pd_evaluate, pd_is_proper, principal_divisor_parts, section_contains
from .engine import (Certificate, RootSet, certify, demazure_roots, enumerate_and_certify, gamma_cone,
                     normalize_spec)
from .lattice import Cone, Polyhedron, QuasiFan, Sublattice
from .symbolic import Derivation, GradedElement, RatFunc
from .type1 import (SphericalDataI, ValidationError, catalog_homogeneous, colored_cone, from_colored_cone,
                    roots_homogeneous, sl2_triple, validate_type1)
from .type2 import Type2Data, colored_cone_type2, roots_type2, validate_type2

__all__ = [
    "Certificate", "Cone", "Derivation", "GradedElement", "PolyDivisor", "Polyhedron", "QuasiFan",
    "RatFunc", "RootDescription", "RootFamily", "RootSet", "SphericalDataI", "StructuralError",
    "Sublattice", "Type2Data", "ValidationError", "catalog_homogeneous", "certify", "colored_cone",
    "colored_cone_type2", "demazure_roots", "enumerate_and_certify", "enumerate_roots",
    "from_colored_cone", "gamma_cone", "is_root", "normalize_spec", "pd_degree", "pd_evaluate",
    "pd_is_proper", "principal_divisor_parts", "roots_homogeneous", "roots_of_cone", "roots_type2",
    "section_contains", "semisimple_roots", "sl2_triple", "validate_type1", "validate_type2",
]
