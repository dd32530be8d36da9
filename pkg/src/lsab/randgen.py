"""Seeded random generators for tables, tensors and pairs.

Entries are drawn from {-2, -1, -1/2, 0, 1/2, 1, 2}; structures are obtained
by rejection against the relevant checker.  Every generator takes a numpy
Generator so that suites can derive per-case streams from one root seed.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .algebra import Algebra, check_left_symmetric, is_nondegenerate
from .arith import SingularMatrixError, invert, qarray, zeros

VALUES = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
NONZERO = tuple(v for v in VALUES if v != 0)


def make_rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def case_seeds(root: int, count: int) -> list[int]:
    """Independent per-case seeds derived from one root seed."""
    return [int(s) for s in np.random.SeedSequence(root).generate_state(count)]


def scalar(rng, zero_weight: float = 0.0) -> Fraction:
    if rng.random() < zero_weight:
        return Fraction(0)
    return NONZERO[rng.integers(len(NONZERO))]


def matrix(rng, shape, density: float = 0.5) -> np.ndarray:
    flat = [scalar(rng, 1 - density) for _ in range(int(np.prod(shape)))]
    return qarray(np.array(flat, dtype=object).reshape(shape))


def tensor2(rng, n: int, density: float = 0.5) -> np.ndarray:
    return matrix(rng, (n, n), density)


def symmetric_tensor(rng, n: int, density: float = 0.5) -> np.ndarray:
    m = np.array(zeros((n, n)))
    for i in range(n):
        for j in range(i, n):
            m[i, j] = m[j, i] = scalar(rng, 1 - density)
    return qarray(m)


def skew_tensor(rng, n: int, density: float = 0.5) -> np.ndarray:
    m = np.array(zeros((n, n)))
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = scalar(rng, 1 - density)
            m[j, i] = -m[i, j]
    return qarray(m)


def nondegenerate_symmetric(rng, n: int, density: float = 0.6, tries: int = 1000) -> np.ndarray:
    for _ in range(tries):
        r = symmetric_tensor(rng, n, density)
        if is_nondegenerate(r):
            return r
    raise RuntimeError("no nondegenerate symmetric tensor found")


def invertible(rng, n: int, density: float = 0.6, tries: int = 1000) -> np.ndarray:
    for _ in range(tries):
        P = matrix(rng, (n, n), density)
        if is_nondegenerate(P):
            return P
    raise RuntimeError("no invertible matrix found")


def sparse_table(rng, n: int, nnz: int) -> np.ndarray:
    c = np.array(zeros((n, n, n)))
    for _ in range(nnz):
        i, j, k = (int(x) for x in rng.integers(n, size=3))
        c[i, j, k] = scalar(rng)
    return qarray(c)


def change_basis(A: Algebra, P) -> Algebra:
    """Constants of A in the basis given by the columns of P."""
    P = qarray(P)
    Pi = invert(P)
    c = np.einsum("ia,jb,ijk,zk->abz", P, P, A.c, Pi)
    return Algebra(c, A.name, A.kind)


def random_lsa(rng, n: int, max_nnz: int | None = None, basis_change: bool = True, tries: int = 10000) -> Algebra:
    """A left-symmetric table of dimension n with at least one nonzero product.

    Sparse tables are rejection-filtered; a random change of basis then makes
    the constants dense.
    """
    if n == 0:
        return Algebra(zeros((0, 0, 0)), "", "left-symmetric")
    max_nnz = max_nnz or max(2, n + 1)
    for _ in range(tries):
        c = sparse_table(rng, n, int(rng.integers(1, max_nnz + 1)))
        if all(x == 0 for x in c.flat):
            continue
        A = Algebra(c, "", "left-symmetric")
        if not check_left_symmetric(A):
            continue
        if basis_change and rng.random() < 0.5:
            try:
                A = change_basis(A, invertible(rng, n))
            except SingularMatrixError:
                pass
        return A
    raise RuntimeError(f"no left-symmetric table of dimension {n} found")


def random_lsa_pair(rng, n: int):
    """Two left-symmetric tables of the same dimension (A, Adual)."""
    from .bialgebra import BialgebraPair

    return BialgebraPair(random_lsa(rng, n), random_lsa(rng, n))


__all__ = [
    "NONZERO",
    "VALUES",
    "case_seeds",
    "change_basis",
    "invertible",
    "make_rng",
    "matrix",
    "nondegenerate_symmetric",
    "random_lsa",
    "random_lsa_pair",
    "scalar",
    "skew_tensor",
    "sparse_table",
    "symmetric_tensor",
    "tensor2",
]
