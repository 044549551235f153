"""Ideal theory of finite commutative semirings, computed exhaustively."""

from .checks import CheckReport, run_checks
from .core import (
    FiniteSemiring,
    direct_product,
    gallery,
    gallery_by_name,
    units,
    validate_semiring,
)
from .decomposition import (
    irreducible_decomposition,
    minimal_primes,
    minimize,
    primary_decomposition,
)
from .errors import SemiringError
from .ideals import (
    Ideal,
    add_ideals,
    colon,
    enumerate_ideals,
    generate_ideal,
    intersect_ideals,
    mul_ideals,
    radical,
)
from .localization import localize, localize_at_prime, localize_ideal, prime_correspondence
from .morphisms import SemiringHom, contract, extend, kernel, validate_hom
from .semimodules import FiniteSemimodule, is_zero_locally, validate_semimodule
from .spectrum import is_maximal, is_primary, is_prime, maximal_disjoint_ideals, spec, v_of

__all__ = [
    "CheckReport", "run_checks",
    "FiniteSemiring", "direct_product", "gallery", "gallery_by_name", "units", "validate_semiring",
    "irreducible_decomposition", "minimal_primes", "minimize", "primary_decomposition",
    "SemiringError",
    "Ideal", "add_ideals", "colon", "enumerate_ideals", "generate_ideal", "intersect_ideals",
    "mul_ideals", "radical",
    "localize", "localize_at_prime", "localize_ideal", "prime_correspondence",
    "SemiringHom", "contract", "extend", "kernel", "validate_hom",
    "FiniteSemimodule", "is_zero_locally", "validate_semimodule",
    "is_maximal", "is_primary", "is_prime", "maximal_disjoint_ideals", "spec", "v_of",
]
