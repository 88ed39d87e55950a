"""Bergman kernels, automorphisms and proper maps of Fock-Bargmann-Hartogs domains."""

from .automorphism import (
    Automorphism,
    LinearBiholomorphism,
    compose,
    decompose_linear_biholomorphism,
    identity,
    inverse,
    jacobian_det,
)
from .domain import DomainError, FBHDomain, Point, classify_point, defining_function, volume_closed_form
from .kernel import KernelValue, SeriesControl, kernel, kernel_scalar, t_matrix
from .proper_map import PowerProperMap, local_inverses, transformation_rule_residual

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "DomainError",
    "FBHDomain",
    "KernelValue",
    "LinearBiholomorphism",
    "Point",
    "PowerProperMap",
    "SeriesControl",
    "classify_point",
    "compose",
    "decompose_linear_biholomorphism",
    "defining_function",
    "identity",
    "inverse",
    "jacobian_det",
    "kernel",
    "kernel_scalar",
    "local_inverses",
    "t_matrix",
    "transformation_rule_residual",
    "volume_closed_form",
]
