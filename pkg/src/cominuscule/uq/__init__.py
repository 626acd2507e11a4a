"""Exact symbolic quantized enveloping algebras."""

from __future__ import annotations

from .algebra import Element, UqAlgebra, commutator, omega, total_weights, weight
from .braid import (
    Direction,
    RootVectorCache,
    TheoremReport,
    bootstrap,
    cartan_check,
    clear_caches,
    lusztig_T,
    root_vector,
    root_vector_by_T,
    serre_commutes,
    serre_element,
    verify_theorem,
)
from .shuffle import canonical, equal, in_levi, is_pure_positive, is_zero

__all__ = [
    "Element", "UqAlgebra", "commutator", "omega", "weight", "total_weights",
    "Direction", "RootVectorCache", "TheoremReport", "bootstrap", "cartan_check", "clear_caches",
    "lusztig_T", "root_vector", "root_vector_by_T", "serre_commutes", "serre_element",
    "verify_theorem", "canonical", "equal", "in_levi", "is_pure_positive", "is_zero",
]
