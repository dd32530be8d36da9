"""Left-symmetric bialgebras, parakähler Lie algebras, phase spaces, and the
Lie-bialgebra side (Manin triples) used for comparison.

A pair (A, A*) is stored as two algebras of the same dimension: ``A.c`` holds
the products e_i e_j and ``Adual.c`` holds e_i* o e_j*.  The comultiplications
are views of the same numbers: alpha(e_k) = sum f[i,j,k] e_i (x) e_j and
beta(e_k*) = sum c[i,j,k] e_i* (x) e_j*.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    Algebra,
    CheckReport,
    Violation,
    adjoint,
    as_form,
    check_jacobi,
    check_left_symmetric,
    check_lie_2cocycle,
    check_invariant_form,
    combine,
    commutator_constants,
    dual_rep,
    is_nondegenerate,
    is_skew,
    is_symmetric,
    left_mult,
    precondition_failed,
    report_from_residuals,
    require,
    right_mult,
)
from .arith import SingularMatrixError, eye, invert, qarray, rank, zeros
from .reps import (
    MatchedPairLSA,
    check_1cocycle,
    check_matched_pair_lie,
    check_matched_pair_lsa,
    lie_from_matched_pair,
    rep_L_tensor_ad,
    tensor_sum_rep,
)


def lie_of(A: Algebra) -> Algebra:
    """Commutator algebra as a Lie-kind table (no left-symmetry check)."""
    name = f"G({A.name})" if A.name else ""
    return Algebra(commutator_constants(A), name, "lie")


@dataclass(frozen=True, eq=False)
class BialgebraPair:
    A: Algebra
    Adual: Algebra

    def __post_init__(self):
        if self.A.dim != self.Adual.dim:
            raise ValueError(f"dimension mismatch: A has {self.A.dim}, A* has {self.Adual.dim}")

    @property
    def dim(self) -> int:
        return self.A.dim

    @property
    def alpha(self) -> np.ndarray:
        """alpha[k][i, j]: coefficient of e_i (x) e_j in alpha(e_k)."""
        return qarray(self.Adual.c.transpose(2, 0, 1))

    @property
    def beta(self) -> np.ndarray:
        return qarray(self.A.c.transpose(2, 0, 1))

    def swapped(self) -> "BialgebraPair":
        return BialgebraPair(self.Adual, self.A)


def _named(identity, rep):
    return CheckReport(identity, rep.violations, rep.parts)


def check_lsa_bialgebra(p: BialgebraPair) -> CheckReport:
    """Both products left-symmetric and alpha, beta 1-cocycles for L (x) 1 + 1 (x) ad."""
    A, Ad = p.A, p.Adual
    return combine(
        "lsa-bialgebra",
        _named("left-symmetric-A", check_left_symmetric(A)),
        _named("left-symmetric-A*", check_left_symmetric(Ad)),
        _named("alpha-cocycle", check_1cocycle(lie_of(A), rep_L_tensor_ad(A), p.alpha)),
        _named("beta-cocycle", check_1cocycle(lie_of(Ad), rep_L_tensor_ad(Ad), p.beta)),
    )


def bialgebra_matched_pair(p: BialgebraPair) -> MatchedPairLSA:
    """(A, A*, ad*, -R*, ad*_o, -R*_o)."""
    A, Ad = p.A, p.Adual
    return MatchedPairLSA(
        A,
        Ad,
        dual_rep(adjoint(A)),
        qarray(-dual_rep(right_mult(A))),
        dual_rep(adjoint(Ad)),
        qarray(-dual_rep(right_mult(Ad))),
    )


def check_lie_matched_pair_of(p: BialgebraPair) -> CheckReport:
    """(G(A), G(A*), L*, L*_o) as a matched pair of Lie algebras."""
    return check_matched_pair_lie(lie_of(p.A), lie_of(p.Adual), dual_rep(left_mult(p.A)), dual_rep(left_mult(p.Adual)))


def check_lsa_matched_pair_of(p: BialgebraPair) -> CheckReport:
    return check_matched_pair_lsa(bialgebra_matched_pair(p))


# ---------------------------------------------------------------------------
# parakähler Lie algebras
# ---------------------------------------------------------------------------


def omega_p(n: int) -> np.ndarray:
    """omega_p(x + a*, y + b*) = <a*, y> - <x, b*> on A + A*."""
    m = np.array(zeros((2 * n, 2 * n)))
    for i in range(n):
        m[i, n + i] = -1
        m[n + i, i] = 1
    return qarray(m)


def halves(n: int):
    """Basis matrices of A and A* inside A + A*."""
    I, Z = eye(n), zeros((n, n))
    return qarray(np.vstack([I, Z])), qarray(np.vstack([Z, I]))


@dataclass(frozen=True, eq=False)
class ParakahlerData:
    """A Lie algebra with two subspaces (columns of ``plus`` / ``minus``) and a form."""

    G: Algebra
    plus: np.ndarray
    minus: np.ndarray
    omega: np.ndarray

    def __post_init__(self):
        N = self.G.dim
        for nm in ("plus", "minus"):
            M = qarray(getattr(self, nm))
            if M.ndim != 2 or M.shape[0] != N:
                raise ValueError(f"{nm} basis must have {N} rows, got shape {M.shape}")
            object.__setattr__(self, nm, M)
        object.__setattr__(self, "omega", as_form(self.omega, N))


def double_lie_from_bialgebra(p: BialgebraPair, check: bool = True) -> ParakahlerData:
    """G(A) |><| G(A*) with actions L*, L*_o and the form omega_p.

    With ``check=False`` the bracket is written down whether or not the pair
    is a bialgebra, so the parakähler axioms can be tested on the result.
    """
    if check:
        require(check_lsa_bialgebra(p), "pair is not a left-symmetric bialgebra")
    n = p.dim
    G = lie_from_matched_pair(
        lie_of(p.A), lie_of(p.Adual), dual_rep(left_mult(p.A)), dual_rep(left_mult(p.Adual)), check=False
    )
    plus, minus = halves(n)
    return ParakahlerData(G, plus, minus, omega_p(n))


def _subalgebra_report(identity, G: Algebra, P) -> CheckReport:
    """Brackets of the basis columns must stay in their span."""
    k = P.shape[1]
    viols = []
    r = rank(P)
    for a in range(k):
        for b in range(a + 1, k):
            v = G.mul(P[:, a], P[:, b])
            if rank(np.concatenate([P, np.asarray(v, dtype=object).reshape(-1, 1)], axis=1)) != r:
                viols.append(Violation((a, b), tuple(v), "bracket leaves the span"))
    return CheckReport(identity, tuple(viols))


def _isotropic_report(identity, P, form) -> CheckReport:
    return report_from_residuals(identity, P.T.dot(form).dot(P), 2)


def _complement_report(identity, P, M, N) -> CheckReport:
    k, l = P.shape[1], M.shape[1]
    rk = rank(np.concatenate([P, M], axis=1))
    if k + l == N and rk == N:
        return CheckReport(identity)
    return CheckReport(identity, (Violation((), (), f"spans of sizes {k}, {l} have joint rank {rk} in dimension {N}"),))


def check_parakahler(d: ParakahlerData) -> CheckReport:
    G, P, M, w = d.G, d.plus, d.minus, d.omega
    parts = [_named("jacobi", check_jacobi(G))]
    if not is_skew(w):
        parts.append(precondition_failed("skew", "form is not skew-symmetric"))
    else:
        parts.append(check_lie_2cocycle(G, w))
    if not is_nondegenerate(w):
        parts.append(precondition_failed("nondegenerate", "form is degenerate"))
    parts += [
        _subalgebra_report("plus-subalgebra", G, P),
        _subalgebra_report("minus-subalgebra", G, M),
        _isotropic_report("plus-isotropic", P, w),
        _isotropic_report("minus-isotropic", M, w),
        _complement_report("complementary", P, M, G.dim),
    ]
    return combine("parakahler", *parts)


@dataclass(frozen=True, eq=False)
class PhaseSpace:
    """Result of moving a parakähler Lie algebra onto G+ + (G+)*."""

    G: Algebra  # transported bracket on the new basis
    phi: np.ndarray  # old coordinates -> new coordinates
    basis: np.ndarray  # columns: new basis vectors in old coordinates
    pair: BialgebraPair  # compatible products restricted to the two halves
    lsa: Algebra  # compatible product on the whole phase space


def phase_space_canonicalize(d: ParakahlerData, check: bool = True) -> PhaseSpace:
    """Identify G- with (G+)* through <phi(a), x> = omega(a, x).

    Postconditions checked here: the new basis pulls omega back to omega_p,
    the transported bracket is a Lie bracket with both halves subalgebras,
    and phi intertwines the brackets.
    """
    from .constructions import lsa_from_symplectic

    if check:
        require(check_parakahler(d), "not a parakähler Lie algebra")
    P, M, w = d.plus, d.minus, d.omega
    n = P.shape[1]
    W = M.T.dot(w).dot(P)  # W[j, i] = omega(M_j, P_i)
    try:
        Y = invert(W.T)
    except SingularMatrixError as exc:
        raise ValueError("omega pairs the two halves degenerately") from exc
    basis = qarray(np.concatenate([P, M.dot(Y)], axis=1))
    phi = invert(basis)
    N = d.G.dim
    c = np.empty((N, N, N), dtype=object)
    for a in range(N):
        for b in range(N):
            c[a, b, :] = phi.dot(d.G.mul(basis[:, a], basis[:, b]))
    Gp = Algebra(c, f"phase({d.G.name})" if d.G.name else "", "lie")
    if not np.array_equal(basis.T.dot(w).dot(basis), omega_p(n)):
        raise AssertionError("transported form differs from omega_p")
    lsa = lsa_from_symplectic(Gp, omega_p(n), check=False)
    A = Algebra(lsa.c[:n, :n, :n], "", "left-symmetric")
    Ad = Algebra(lsa.c[n:, n:, n:], "", "left-symmetric")
    if check:
        plus, minus = halves(n)
        require(check_parakahler(ParakahlerData(Gp, plus, minus, omega_p(n))), "transported structure")
        # the halves are subalgebras of the compatible product, so the cross terms
        # stay put: no product of two plus vectors may leave the plus block
        if any(x != 0 for x in lsa.c[:n, :n, n:].flat) or any(x != 0 for x in lsa.c[n:, n:, :n].flat):
            raise AssertionError("halves are not subalgebras of the compatible product")
    return PhaseSpace(Gp, phi, basis, BialgebraPair(A, Ad), lsa)


# ---------------------------------------------------------------------------
# homomorphisms of bialgebras
# ---------------------------------------------------------------------------


def check_bialgebra_hom(phi, p: BialgebraPair, q: BialgebraPair, isomorphism: bool = False) -> CheckReport:
    """phi: A -> B an algebra map with (phi (x) phi) alpha_A = alpha_B phi and
    (phi* (x) phi*) beta_B = beta_A phi*.

    ``phi`` is dim B x dim A (columns are images).
    """
    phi = qarray(phi)
    nA, nB = p.dim, q.dim
    if phi.shape != (nB, nA):
        raise ValueError(f"map must be {nB} x {nA}, got {phi.shape}")
    cA, cB = p.A.c, q.A.c
    # phi(e_i e_j) - phi(e_i) phi(e_j)
    lhs = np.einsum("ijm,km->ijk", cA, phi)
    rhs = np.einsum("ai,bj,abk->ijk", phi, phi, cB)
    parts = [report_from_residuals("algebra-hom", lhs - rhs, 2)]
    aA, aB = p.alpha, q.alpha
    # (phi (x) phi) alpha_A(e_k) = alpha_B(phi e_k)
    l2 = np.einsum("ai,kij,bj->kab", phi, aA, phi)
    r2 = np.einsum("mk,mab->kab", phi, aB)
    parts.append(report_from_residuals("coproduct-alpha", l2 - r2, 1))
    bA, bB = p.beta, q.beta
    # (phi* (x) phi*) beta_B(e_m*) = beta_A(phi* e_m*), phi* has matrix phi^T
    l3 = np.einsum("ai,mab,bj->mij", phi, bB, phi)
    r3 = np.einsum("mk,kij->mij", phi, bA)
    parts.append(report_from_residuals("coproduct-beta", l3 - r3, 1))
    if isomorphism and (nA != nB or not is_nondegenerate(phi)):
        parts.append(precondition_failed("invertible", "map is not invertible"))
    return combine("bialgebra-hom", *parts)


# ---------------------------------------------------------------------------
# Lie bialgebras and Manin triples
# ---------------------------------------------------------------------------


def check_lie_bialgebra(G: Algebra, Gdual: Algebra) -> CheckReport:
    """delta(e_k) = sum g'[i,j,k] e_i (x) e_j is a 1-cocycle for ad (x) 1 + 1 (x) ad."""
    if G.dim != Gdual.dim:
        raise ValueError("dimension mismatch")
    for X, nm in ((G, "G"), (Gdual, "G*")):
        if not np.array_equal(X.c, -X.c.transpose(1, 0, 2)):
            return precondition_failed("lie-bialgebra", f"{nm} bracket is not skew")
    adG = _ad(G)
    delta = qarray(Gdual.c.transpose(2, 0, 1))
    return combine(
        "lie-bialgebra",
        _named("jacobi-G", check_jacobi(G)),
        _named("jacobi-G*", check_jacobi(Gdual)),
        _named("delta-cocycle", check_1cocycle(G, tensor_sum_rep(adG, adG), delta)),
    )


def _ad(G: Algebra) -> np.ndarray:
    """ad_i[k, j] = c[i, j, k] for a bracket table."""
    return left_mult(G)


def standard_manin_double(G: Algebra, Gdual: Algebra, check: bool = False) -> Algebra:
    """G |><| G* with the coadjoint actions on each other."""
    return lie_from_matched_pair(G, Gdual, dual_rep(_ad(G)), dual_rep(_ad(Gdual)), check=check)


def hyperbolic_form(n: int) -> np.ndarray:
    """(x + a*, y + b*) = <a*, y> + <x, b*>."""
    m = np.array(zeros((2 * n, 2 * n)))
    for i in range(n):
        m[i, n + i] = 1
        m[n + i, i] = 1
    return qarray(m)


def check_manin_triple(P: Algebra, plus, minus, B) -> CheckReport:
    N = P.dim
    plus, minus = qarray(plus), qarray(minus)
    B = as_form(B, N)
    parts = [_named("jacobi", check_jacobi(P))]
    if not is_symmetric(B):
        parts.append(precondition_failed("symmetric", "form is not symmetric"))
    if not is_nondegenerate(B):
        parts.append(precondition_failed("nondegenerate", "form is degenerate"))
    parts += [
        check_invariant_form(P, B),
        _subalgebra_report("plus-subalgebra", P, plus),
        _subalgebra_report("minus-subalgebra", P, minus),
        _isotropic_report("plus-isotropic", plus, B),
        _isotropic_report("minus-isotropic", minus, B),
        _complement_report("complementary", plus, minus, N),
    ]
    return combine("manin-triple", *parts)


def _compat_pairings(p: BialgebraPair) -> np.ndarray:
    """T[x, y, a, b] = <R*(x) a*, R*_o(b*) y>."""
    Rs = dual_rep(right_mult(p.A))  # Rs[x][m, a]: e_m* coefficient of R*(e_x) e_a*
    Rd = dual_rep(right_mult(p.Adual))  # Rd[b][m, y]: e_m coefficient of R*_o(e_b*) e_y
    return np.einsum("xma,bmy->xyab", Rs, Rd)


def check_lie_bialgebra_compat(p: BialgebraPair) -> CheckReport:
    """Pairing identity deciding whether (G(A), G(A*)) is also a Lie bialgebra.

    With T(x, y, a, b) = <R*(x) a*, R*_o(b*) y> the identity is
    T(x,y,b,a) + T(y,x,a,b) = T(x,y,a,b) + T(y,x,b,a) for x, y in A and
    a*, b* in A*; it comes from pairing
    -L*(R*_o(b*) y) a* + L*(R*_o(a*) y) b* + (R*(y) b*) o a* - (R*(y) a*) o b* = 0
    with x.
    """
    pre = check_lsa_bialgebra(p)
    if not pre:
        return precondition_failed("lie-bialgebra-compat", "pair is not a left-symmetric bialgebra", pre)
    T = _compat_pairings(p)
    res = T.transpose(0, 1, 3, 2) + T.transpose(1, 0, 2, 3) - T - T.transpose(1, 0, 3, 2)
    return report_from_residuals("lie-bialgebra-compat", res, 4)


def lie_compat_symmetric_form(p: BialgebraPair) -> CheckReport:
    """The variant T(x,y,a,b) + T(x,y,b,a) = T(y,x,b,a) + T(y,x,a,b), symmetric in a*, b*.

    Kept for comparison: it is not equivalent to the Lie bialgebra property.
    """
    pre = check_lsa_bialgebra(p)
    if not pre:
        return precondition_failed("lie-compat-symmetric-form", "pair is not a left-symmetric bialgebra", pre)
    T = _compat_pairings(p)
    S = T + T.transpose(0, 1, 3, 2)
    return report_from_residuals("lie-compat-symmetric-form", S - S.transpose(1, 0, 2, 3), 4)


__all__ = [
    "BialgebraPair",
    "ParakahlerData",
    "PhaseSpace",
    "bialgebra_matched_pair",
    "check_bialgebra_hom",
    "check_lie_bialgebra",
    "check_lie_bialgebra_compat",
    "check_lie_matched_pair_of",
    "check_lsa_bialgebra",
    "check_lsa_matched_pair_of",
    "check_manin_triple",
    "check_parakahler",
    "double_lie_from_bialgebra",
    "halves",
    "hyperbolic_form",
    "lie_compat_symmetric_form",
    "lie_of",
    "omega_p",
    "phase_space_canonicalize",
    "standard_manin_double",
]
