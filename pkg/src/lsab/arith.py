"""Exact rational linear algebra on numpy object arrays.

Every array handed out by this module holds ``fractions.Fraction`` entries and
is marked read-only.  Matrices act on coordinate columns: column ``j`` of a
matrix is the image of the ``j``-th basis vector.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

import numpy as np

__all__ = [
    "Fraction",
    "SingularMatrixError",
    "qarray",
    "zeros",
    "eye",
    "is_zero",
    "solve_linear",
    "invert",
    "rank",
    "det",
    "leading_minors",
    "in_column_space",
    "nullspace",
    "swap_legs",
    "sigma_123",
    "sigma_132",
    "parse_rational",
    "format_rational",
]


class SingularMatrixError(ValueError):
    pass


def _q(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x, lenient=True)
    return Fraction(x)


_vq = np.frompyfunc(_q, 1, 1)


def qarray(data, shape=None) -> np.ndarray:
    """Read-only object array of Fractions built from anything array-like."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.size:
        arr = np.asarray(_vq(arr), dtype=object)
    if arr.ndim == 0:
        arr = np.array(arr.item(), dtype=object)
    arr.flags.writeable = False
    return arr


def zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    arr.flags.writeable = False
    return arr


def eye(n: int) -> np.ndarray:
    arr = np.empty((n, n), dtype=object)
    arr.fill(Fraction(0))
    for i in range(n):
        arr[i, i] = Fraction(1)
    arr.flags.writeable = False
    return arr


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def _echelon(M):
    """Reduced row echelon form of a copy of ``M``; returns (rows, pivot columns)."""
    A = [[_q(x) for x in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def solve_linear(M, b) -> np.ndarray:
    """Unique solution of ``M x = b``; raises ``SingularMatrixError`` if M is singular."""
    M = np.asarray(M, dtype=object)
    b = np.asarray(b, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"solve_linear needs a square matrix, got shape {M.shape}")
    n = M.shape[0]
    squeeze = b.ndim == 1
    B = b.reshape(n, -1) if b.shape[0] == n else None
    if B is None:
        raise ValueError(f"right-hand side of length {b.shape[0]} for {n}x{n} system")
    aug = np.concatenate([M, B], axis=1)
    R, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    sol = qarray([row[n:] for row in R[:n]])
    return qarray(sol[:, 0]) if squeeze else sol


def invert(M) -> np.ndarray:
    M = np.asarray(M, dtype=object)
    return solve_linear(M, eye(M.shape[0]))


def rank(M) -> int:
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    return len(_echelon(M)[1])


def nullspace(M) -> np.ndarray:
    """Basis of the kernel of ``M`` as the columns of the returned matrix."""
    M = np.asarray(M, dtype=object)
    ncols = M.shape[1]
    R, pivots = _echelon(M) if M.shape[0] else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return zeros((ncols, 0))
    return qarray(np.array(basis, dtype=object).T)


def det(M) -> Fraction:
    A = [[_q(x) for x in row] for row in np.asarray(M, dtype=object)]
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def leading_minors(M) -> list[Fraction]:
    M = np.asarray(M, dtype=object)
    return [det(M[:k, :k]) for k in range(1, M.shape[0] + 1)]


def in_column_space(P, v) -> bool:
    P = np.asarray(P, dtype=object)
    v = np.asarray(v, dtype=object).reshape(-1, 1)
    return rank(np.concatenate([P, v], axis=1)) == rank(P)


def swap_legs(t) -> np.ndarray:
    """The exchange map x (x) y -> y (x) x on a rank-2 tensor."""
    return qarray(np.asarray(t, dtype=object).T)


def sigma_123(t) -> np.ndarray:
    """x (x) y (x) z -> z (x) x (x) y, i.e. out[i,j,k] = t[j,k,i]."""
    return qarray(np.transpose(np.asarray(t, dtype=object), (2, 0, 1)))


def sigma_132(t) -> np.ndarray:
    """x (x) y (x) z -> y (x) z (x) x, i.e. out[i,j,k] = t[k,i,j]."""
    return qarray(np.transpose(np.asarray(t, dtype=object), (1, 2, 0)))


_RATIONAL = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


def parse_rational(text: str, lenient: bool = False) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.  Unless ``lenient``, q must be positive and p/q reduced."""
    if not isinstance(text, str):
        raise ValueError(f"rational must be given as text, got {text!r}")
    m = _RATIONAL.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}; expected 'p' or 'p/q'")
    sign, p, q = m.group(1), int(m.group(2)), m.group(3)
    if q is None:
        return Fraction(-p if sign else p)
    q = int(q)
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    if not lenient and gcd(p, q) != 1:
        raise ValueError(f"rational not in lowest terms: {text!r}")
    return Fraction(-p if sign else p, q)


def format_rational(x) -> str:
    x = _q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
