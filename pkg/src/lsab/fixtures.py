"""Small named algebras and forms used as worked examples and test corpus.

Indices are 0-based: ``e1`` of the usual notation is basis index 0.
"""
from __future__ import annotations

import numpy as np

from .algebra import Algebra, zero_algebra
from .arith import qarray, zeros


def _table(n, entries, name, kind):
    c = np.array(zeros((n, n, n)))
    for (i, j, k), v in entries.items():
        c[i, j, k] = v
    return Algebra(c, name, kind)


def _lie(n, brackets, name):
    """Skew table from the brackets [e_i, e_j] = sum v e_k listed for i < j."""
    c = np.array(zeros((n, n, n)))
    for (i, j, k), v in brackets.items():
        c[i, j, k] += v
        c[j, i, k] -= v
    return Algebra(c, name, "lie")


def Z(n: int) -> Algebra:
    return zero_algebra(n, f"Z{n}")


Z1, Z2, Z3 = Z(1), Z(2), Z(3)

# F with e.e = e
E1 = _table(1, {(0, 0, 0): 1}, "E1", "left-symmetric")

# e1.e2 = e2
A2 = _table(2, {(0, 1, 1): 1}, "A2", "left-symmetric")

# u0*u1 = u0, u1*u1 = u1: x D(y) on the dual numbers with D(u1) = u0
N2 = _table(2, {(0, 1, 0): 1, (1, 1, 1): 1}, "N2", "novikov")

# e1*e1 = -e1, e2*e1 = -e2: the compatible product of [e1,e2] = e2, omega(e1,e2) = 1
S2 = _table(2, {(0, 0, 0): -1, (1, 0, 1): -1}, "S2", "left-symmetric")

# e1e1 = 2e1, e1e2 = e2, e2e2 = 2e1: Hessian with B = identity (orthonormal constants)
HESS2 = _table(2, {(0, 0, 0): 2, (0, 1, 1): 1, (1, 1, 0): 2}, "H2", "left-symmetric")

# e1.e2 = e1 only; (e1,e2,e2) = e1 but (e2,e1,e2) = 0
NOT_LS2 = _table(2, {(0, 1, 0): 1}, "notLS2", "generic")

# commutative associative dual numbers: u0 unit, u1^2 = 0
DUAL_NUMBERS = _table(2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}, "dual", "associative")
D_DUAL = qarray([[0, 1], [0, 0]])  # D u0 = 0, D u1 = u0

LIE_AFF = _lie(2, {(0, 1, 1): 1}, "aff2")  # [e1,e2] = e2
OMEGA_AFF = qarray([[0, 1], [-1, 0]])

HEIS3 = _lie(3, {(0, 1, 2): 1}, "heis3")  # [e1,e2] = e3

HEIS4 = _lie(4, {(0, 1, 2): 1}, "heis3+F")  # [e1,e2] = e3 plus a central e4
OMEGA_HEIS4 = qarray(
    [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, -1, 0, 0],
        [-1, 0, 0, 0],
    ]
)

# the fixture corpus of left-symmetric algebras
LSA_FIXTURES = (Z1, Z2, E1, A2, N2, S2)


def hyperbolic(n: int, sign: int = 1) -> np.ndarray:
    """[[0, I], [sign I, 0]] on F^n + F^n."""
    m = np.array(zeros((2 * n, 2 * n)))
    for i in range(n):
        m[i, n + i] = 1
        m[n + i, i] = sign
    return qarray(m)


__all__ = [
    "A2",
    "D_DUAL",
    "DUAL_NUMBERS",
    "E1",
    "HEIS3",
    "HESS2",
    "HEIS4",
    "LIE_AFF",
    "LSA_FIXTURES",
    "N2",
    "NOT_LS2",
    "OMEGA_AFF",
    "OMEGA_HEIS4",
    "S2",
    "Z",
    "Z1",
    "Z2",
    "Z3",
    "hyperbolic",
]
