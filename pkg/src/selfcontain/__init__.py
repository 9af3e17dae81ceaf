"""
Самосодержащиеся графы: свидетели удаляемости, чередующие автоморфизмы, кручение
"""
from .witnesses import RemovableWitness, WellManneredWitness, require_removable, transport_witness, verify_removable
from .alternating import (
    AlternatingFamily,
    beta,
    standard_isomorphism,
    standard_isomorphism_fixing_first,
    verify_family,
)
from .well_mannered import reverse_witness, sewing_isomorphism, verify_alternating
from .removable_ops import compose_removable, disjoint_copies, split_removable
from .torsion import TorsionCatalogue, TwistVerdict, is_twisted_vertex, torsion

__all__ = [
    "RemovableWitness", "WellManneredWitness", "require_removable", "transport_witness", "verify_removable",
    "AlternatingFamily", "beta", "standard_isomorphism", "standard_isomorphism_fixing_first", "verify_family",
    "reverse_witness", "sewing_isomorphism", "verify_alternating",
    "compose_removable", "disjoint_copies", "split_removable",
    "TorsionCatalogue", "TwistVerdict", "is_twisted_vertex", "torsion",
]
