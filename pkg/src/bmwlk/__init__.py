"""Exact linear algebra for the Lawrence-Krammer representation of the BMW algebra."""

from .exact import L, M, R, LaurentPoly, ParamSpec, RatFunc
from .lkrep import LKRep, build_cij, build_e, build_nu, verify_relations
from .subspace import compute_K, decide_reducible

__all__ = [
    "L",
    "M",
    "R",
    "LaurentPoly",
    "ParamSpec",
    "RatFunc",
    "LKRep",
    "build_cij",
    "build_e",
    "build_nu",
    "verify_relations",
    "compute_K",
    "decide_reducible",
]
