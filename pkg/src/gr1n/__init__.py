"""Exact computations for standard modules of the rational Cherednik algebra of G(r,1,n)."""

__version__ = "0.1.0"

from .combinatorics import MultiPartition, StandardTableau, syt_count, syt_enumerate
from .errors import MathematicalRefusal, SpectrumNotSimple
from .scalars import Cyclotomic, FactoredScalar, LinearForm, ParamPoint

__all__ = [
    "MultiPartition", "StandardTableau", "syt_count", "syt_enumerate",
    "MathematicalRefusal", "SpectrumNotSimple",
    "Cyclotomic", "FactoredScalar", "LinearForm", "ParamPoint",
]
