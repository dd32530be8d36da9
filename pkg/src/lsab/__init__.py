"""Exact verification and construction for left-symmetric (pre-Lie) algebras,
their bialgebras, the S-equation and the classical Yang-Baxter equation."""
from .algebra import Algebra, CheckReport, ConstructionError, Violation
from .arith import SingularMatrixError, format_rational, parse_rational, qarray

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "CheckReport",
    "ConstructionError",
    "SingularMatrixError",
    "Violation",
    "format_rational",
    "parse_rational",
    "qarray",
]
