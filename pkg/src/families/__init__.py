"""
Встроенные семейства графов и их данные о близнецах
"""
from ..services.number_theory import nth_prime, prime_power_decompose
from .bundle import FamilyBundle
from .extended_star import collapse_iso_extended_star, column_transposition, extended_star
from .clique_chain import clique_chain
from .ray import ray, ray_bundle
from .registry import FamilyRegistry, get_registry

__all__ = [
    "nth_prime", "prime_power_decompose",
    "FamilyBundle",
    "collapse_iso_extended_star", "column_transposition", "extended_star",
    "clique_chain",
    "ray", "ray_bundle",
    "FamilyRegistry", "get_registry",
]
