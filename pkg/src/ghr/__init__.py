"""Finite Gamma-hemirings, their crisp and fuzzy h-ideals, and extensions of fuzzy ideals."""

from .core import (
    GammaHemiring,
    Homomorphism,
    StructureError,
    h_reachable,
    product_hemiring,
    validate_hemiring,
)
from .crisp import IdealError, crisp_extension, enumerate_h_ideals, h_closure, is_h_ideal, is_prime_h_ideal
from .extension import fuzzy_extension, iterated_extension_chain
from .fuzzy import (
    FuzzySubset,
    characteristic,
    classify_fuzzy,
    constant,
    fuzzy,
    generalized_h_product,
    h_product,
    is_prime_fuzzy,
)
from .harness import InstanceFamily, run_claims

__version__ = "0.1.0"

__all__ = [
    "FuzzySubset",
    "GammaHemiring",
    "Homomorphism",
    "IdealError",
    "InstanceFamily",
    "StructureError",
    "characteristic",
    "classify_fuzzy",
    "constant",
    "crisp_extension",
    "enumerate_h_ideals",
    "fuzzy",
    "fuzzy_extension",
    "generalized_h_product",
    "h_closure",
    "h_product",
    "h_reachable",
    "is_h_ideal",
    "is_prime_fuzzy",
    "is_prime_h_ideal",
    "iterated_extension_chain",
    "product_hemiring",
    "run_claims",
    "validate_hemiring",
]
