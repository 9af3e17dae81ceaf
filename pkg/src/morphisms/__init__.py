"""
Алгебра отображений: выражения, вычисление, сужение, продолжение и проверка на окнах
"""
from .vertex_map import VertexMap, identity_map
from .expr import Beta, Compose, Identity, Inverse, MorphismExpr, Named, Power, compose, format_expr, inverse, power
from .evaluator import MorphismEnv, apply
from .verification import VerificationReport, maps_equal_on_window, verify_embedding_window, verify_iso_window
from .operations import lift_by_identity, restrict

__all__ = [
    "VertexMap", "identity_map",
    "Beta", "Compose", "Identity", "Inverse", "MorphismExpr", "Named", "Power",
    "compose", "format_expr", "inverse", "power",
    "MorphismEnv", "apply",
    "VerificationReport", "maps_equal_on_window", "verify_embedding_window", "verify_iso_window",
    "lift_by_identity", "restrict",
]
