"""Ways of producing left-symmetric algebras out of other data.

Each builder checks its precondition unless called with ``check=False``; the
unchecked path exists so that "if and only if" statements can be tested by
running the construction on bad input and looking at what comes out.
"""
from __future__ import annotations

import numpy as np

from .algebra import (
    Algebra,
    CheckReport,
    ConstructionError,
    as_form,
    check_associative,
    check_commutative,
    check_jacobi,
    check_lie_2cocycle,
    check_novikov,
    combine,
    is_nondegenerate,
    precondition_failed,
    report_from_residuals,
    require,
)
from .arith import SingularMatrixError, qarray, solve_linear, zeros


def _as_map(R, n: int, what: str = "linear map") -> np.ndarray:
    R = qarray(R)
    if R.shape != (n, n):
        raise ValueError(f"{what} must be {n} x {n}, got shape {R.shape}")
    return R


def _images(R, c):
    """X[i, j, k] = coordinates of R(e_i) e_j, given structure constants c."""
    return np.einsum("ai,ajk->ijk", R, c)


# ---------------------------------------------------------------------------
# derivations of commutative associative algebras
# ---------------------------------------------------------------------------


def check_derivation(A: Algebra, D) -> CheckReport:
    """D(xy) = D(x)y + xD(y) on basis pairs."""
    D = _as_map(D, A.dim, "derivation")
    c = A.c
    lhs = np.einsum("ijm,km->ijk", c, D)
    rhs = np.einsum("mi,mjk->ijk", D, c) + np.einsum("mj,imk->ijk", D, c)
    return report_from_residuals("derivation", lhs - rhs, 2)


def novikov_from_derivation(A: Algebra, D, a=0, variant: str = "gelfand", check: bool = True) -> Algebra:
    """x * y = x D(y) + a x y.

    ``variant`` picks what ``a`` is: ``gelfand`` forces a = 0, ``filipov``
    takes a scalar, ``xu`` takes a coordinate vector of A.
    """
    n = A.dim
    D = _as_map(D, n, "derivation")
    if check:
        require(
            combine("commutative-associative", check_commutative(A), check_associative(A)),
            "base algebra is not commutative associative",
        )
        require(check_derivation(A, D), "map is not a derivation")
    c = A.c
    out = np.einsum("mj,imk->ijk", D, c)
    if variant == "gelfand":
        pass
    elif variant == "filipov":
        out = out + qarray(a).item() * c
    elif variant == "xu":
        a = qarray(a)
        if a.shape != (n,):
            raise ValueError(f"xu variant needs an element of A (length {n}), got shape {a.shape}")
        ax = np.einsum("m,mil->il", a, c)  # a . e_i
        out = out + np.einsum("il,ljk->ijk", ax, c)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    B = Algebra(out, f"{variant}({A.name})" if A.name else variant, "novikov")
    if check:
        require(check_novikov(B), "derived product is not Novikov")
    return B


# ---------------------------------------------------------------------------
# operator form of CYBE, Rota-Baxter operators, dot-vector algebras
# ---------------------------------------------------------------------------


def check_operator_cybe(G: Algebra, R) -> CheckReport:
    """[R x, R y] = R([R x, y] + [x, R y]) on basis pairs."""
    jac = check_jacobi(G)
    if not jac:
        return precondition_failed("operator-cybe", "bracket fails Jacobi", jac)
    R = _as_map(R, G.dim)
    g = G.c
    lhs = np.einsum("ai,bj,abk->ijk", R, R, g)
    inner = np.einsum("ai,ajk->ijk", R, g) + np.einsum("bj,ibk->ijk", R, g)
    rhs = np.einsum("ijm,km->ijk", inner, R)
    return report_from_residuals("operator-cybe", lhs - rhs, 2)


def lsa_from_rmatrix(G: Algebra, R, check: bool = True) -> Algebra:
    """x * y = [R x, y]."""
    R = _as_map(R, G.dim)
    if check:
        require(check_operator_cybe(G, R), "operator does not satisfy the operator CYBE")
    return Algebra(_images(R, G.c), f"rmat({G.name})" if G.name else "", "left-symmetric")


def check_rota_baxter(A: Algebra, R) -> CheckReport:
    """R(x)R(y) + R(xy) = R(R(x)y + xR(y))."""
    R = _as_map(R, A.dim)
    c = A.c
    lhs = np.einsum("ai,bj,abk->ijk", R, R, c) + np.einsum("ijm,km->ijk", c, R)
    inner = np.einsum("ai,ajk->ijk", R, c) + np.einsum("bj,ibk->ijk", R, c)
    rhs = np.einsum("ijm,km->ijk", inner, R)
    return report_from_residuals("rota-baxter", lhs - rhs, 2)


def lsa_from_rota_baxter(A: Algebra, R, check: bool = True) -> Algebra:
    """x * y = R(x) y - y R(x) - x y."""
    R = _as_map(R, A.dim)
    if check:
        require(check_associative(A), "base algebra is not associative")
        require(check_rota_baxter(A, R), "operator is not Rota-Baxter")
    c = A.c
    out = np.einsum("ai,ajk->ijk", R, c) - np.einsum("ai,jak->ijk", R, c) - c
    return Algebra(out, f"rb({A.name})" if A.name else "", "left-symmetric")


def lsa_from_dot_vector(n: int, a) -> Algebra:
    """u * v = (u, v) a + (u, a) v with the standard dot product."""
    a = qarray(a)
    if a.shape != (n,):
        raise ValueError(f"vector must have length {n}, got shape {a.shape}")
    c = np.array(zeros((n, n, n)))
    for i in range(n):
        c[i, i, :] += a
        for j in range(n):
            c[i, j, j] += a[i]
    return Algebra(c, f"dot{n}", "left-symmetric")


# ---------------------------------------------------------------------------
# symplectic Lie algebras and central extensions
# ---------------------------------------------------------------------------


def lsa_from_symplectic(G: Algebra, omega, check: bool = True) -> Algebra:
    """The compatible product with omega(x*y, z) = -omega(y, [x, z]).

    Solved one basis pair at a time: omega^T p = rhs where p holds the
    coordinates of e_i * e_j.
    """
    n = G.dim
    omega = as_form(omega, n)
    if check:
        require(check_lie_2cocycle(G, omega), "form is not a 2-cocycle")
        if not is_nondegenerate(omega):
            raise ConstructionError("form is degenerate")
    g = G.c
    out = np.empty((n, n, n), dtype=object)
    wt = omega.T
    for i in range(n):
        for j in range(n):
            rhs = [-sum(g[i, k, m] * omega[j, m] for m in range(n)) for k in range(n)]
            try:
                out[i, j, :] = solve_linear(wt, rhs)
            except SingularMatrixError as exc:
                raise ConstructionError("form is degenerate") from exc
    return Algebra(out, f"sympl({G.name})" if G.name else "", "left-symmetric")


def central_extension(A: Algebra, B) -> Algebra:
    """x * y = x y + B(x, y) c on A + F c, with c annihilating everything."""
    n = A.dim
    B = as_form(B, n)
    out = np.array(zeros((n + 1, n + 1, n + 1)))
    out[:n, :n, :n] = A.c
    out[:n, :n, n] = B
    return Algebra(out, f"ext({A.name})" if A.name else "", "generic")


__all__ = [
    "check_derivation",
    "check_operator_cybe",
    "check_rota_baxter",
    "central_extension",
    "lsa_from_dot_vector",
    "lsa_from_rmatrix",
    "lsa_from_rota_baxter",
    "lsa_from_symplectic",
    "novikov_from_derivation",
]
