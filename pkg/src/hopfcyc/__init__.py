"""Exact Hopf-cyclic cohomology of finite-dimensional Hopf algebras."""

from .fields import RATIONALS, FieldSpec, cyclotomic_field, parse_scalar, format_scalar
from .tensormap import TensorMap, compose, tensor
from .hopf import HopfAlgebra, ModularPair, validate_hopf, modular_pair, dual, dual_pair
from .cyclic import CocyclicModule, LevelCapExceeded, NotInInvolution
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "RATIONALS", "FieldSpec", "cyclotomic_field", "parse_scalar", "format_scalar",
    "TensorMap", "compose", "tensor",
    "HopfAlgebra", "ModularPair", "validate_hopf", "modular_pair", "dual", "dual_pair",
    "CocyclicModule", "LevelCapExceeded", "NotInInvolution", "Report",
]
