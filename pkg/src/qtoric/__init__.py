"""Exact combinatorics and Betti numbers of quasitoric spaces of simple polytopes."""

from .exactnum import RATIONAL, FieldSpec, Scalar, scalar_format, scalar_parse, scalar_sign
from .polytope import Polytope, PolytopeSpec, load_spec, parse_spec
from .pipeline import Analysis, analyze

__version__ = "0.1.0"

__all__ = [
    "RATIONAL",
    "FieldSpec",
    "Scalar",
    "scalar_format",
    "scalar_parse",
    "scalar_sign",
    "Polytope",
    "PolytopeSpec",
    "load_spec",
    "parse_spec",
    "Analysis",
    "analyze",
]
