"""Gauss-Legendre polynomial bases and curve evaluation."""
from .curve_engine import GLCurve, PreparedCurve, eval_many, eval_point, prepare, random_curve
from .gl_basis import Kind, basis_rep, eval_basis, eval_basis_all, eval_basis_derivative
from .ortho_core import DomainError, legendre_roots

__all__ = [
    "DomainError",
    "GLCurve",
    "Kind",
    "PreparedCurve",
    "basis_rep",
    "eval_basis",
    "eval_basis_all",
    "eval_basis_derivative",
    "eval_many",
    "eval_point",
    "legendre_roots",
    "prepare",
    "random_curve",
]
