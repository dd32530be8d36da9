"""Representations, bimodules, 1-cocycles, semidirect sums and matched pairs.

A representation of an n-dimensional algebra on an m-dimensional space is an
object array of shape (n, m, m); ``rho[i]`` is the matrix of ``rho(e_i)``.
Tensor squares use the flat index ``i * m + j`` for ``v_i (x) v_j``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    Algebra,
    CheckReport,
    check_jacobi,
    check_left_symmetric,
    combine,
    commutator_constants,
    dual_rep,
    precondition_failed,
    report_from_residuals,
    require,
)
from .arith import eye, qarray, zeros


def as_rep(rho, n: int, m: int | None = None, what: str = "representation") -> np.ndarray:
    rho = qarray(rho)
    if rho.ndim != 3 or rho.shape[0] != n or rho.shape[1] != rho.shape[2]:
        raise ValueError(f"{what} must have shape ({n}, m, m), got {rho.shape}")
    if m is not None and rho.shape[1] != m:
        raise ValueError(f"{what} acts on dimension {rho.shape[1]}, expected {m}")
    return rho


def zero_rep(n: int, m: int) -> np.ndarray:
    return zeros((n, m, m))


def _lincomb(c, rho):
    """M[i, j] = sum_k c[i, j, k] rho[k]."""
    return np.einsum("ijk,kab->ijab", c, rho)


def _prod(X, Y):
    """P[i, j] = X[i] @ Y[j]."""
    return np.einsum("iab,jbc->ijac", X, Y)


def _lt(idx):
    return idx[0] < idx[1]


# ---------------------------------------------------------------------------
# Lie representations and bimodules
# ---------------------------------------------------------------------------


def check_lie_rep(G: Algebra, rho) -> CheckReport:
    """[rho(e_i), rho(e_j)] = rho([e_i, e_j])."""
    rho = as_rep(rho, G.dim)
    P = _prod(rho, rho)
    res = P - P.transpose(1, 0, 2, 3) - _lincomb(G.c, rho)
    return report_from_residuals("lie-representation", res, 2, keep=_lt)


def check_bimodule(A: Algebra, S, T) -> CheckReport:
    n = A.dim
    S = as_rep(S, n, what="left action")
    T = as_rep(T, n, S.shape[1], what="right action")
    ls = check_left_symmetric(A)
    if not ls:
        return precondition_failed("bimodule", "algebra is not left-symmetric", ls)
    SS = _prod(S, S)
    Sc = _lincomb(A.c, S)
    first = SS - Sc - SS.transpose(1, 0, 2, 3) + Sc.transpose(1, 0, 2, 3)
    ST = _prod(S, T)
    TS = np.einsum("jab,ibc->ijac", T, S)
    TT = np.einsum("jab,ibc->ijac", T, T)
    second = ST - TS - _lincomb(A.c, T) + TT
    return combine(
        "bimodule",
        report_from_residuals("left-action", first, 2, keep=_lt),
        report_from_residuals("mixed-action", second, 2),
    )


def semidirect_lsa(A: Algebra, S, T, check: bool = True) -> Algebra:
    """(x1 + v1)(x2 + v2) = x1 x2 + S(x1) v2 + T(x2) v1 on A + V."""
    n = A.dim
    S = as_rep(S, n, what="left action")
    T = as_rep(T, n, S.shape[1], what="right action")
    if check:
        require(check_bimodule(A, S, T), "not a bimodule")
    m = S.shape[1]
    c = np.array(zeros((n + m,) * 3))
    c[:n, :n, :n] = A.c
    # e_i * v_q = S(e_i) v_q ; v_p * e_i = T(e_i) v_p
    c[:n, n:, n:] = S.transpose(0, 2, 1)
    c[n:, :n, n:] = T.transpose(2, 0, 1)
    name = f"{A.name}+V" if A.name else ""
    return Algebra(c, name, "left-symmetric")


def dual_bimodule(S, T):
    """(S* - T*, -T*) on the dual space."""
    Sd, Td = dual_rep(S), dual_rep(T)
    return qarray(Sd - Td), qarray(-Td)


def dual_bimodule_criteria(A: Algebra, S, T):
    """Conditions on a bimodule (S, T) tied to dualizing it.

    Returns reports for: (S - T, -T) is a bimodule; (S*, T*) is a bimodule;
    the T(e_i) pairwise commute; the T(e_i) pairwise anticommute.  The first
    two always agree with the anticommuting condition (expand the mixed
    bimodule identity for either pair), not with the commuting one: E1 with
    (L, R) has commuting T but fails both.
    """
    S = qarray(S)
    T = qarray(T)
    first = check_bimodule(A, qarray(S - T), qarray(-T))
    second = check_bimodule(A, dual_rep(S), dual_rep(T))
    TT = _prod(T, T)
    TTs = TT.transpose(1, 0, 2, 3)
    commute = report_from_residuals("right-actions-commute", TT - TTs, 2, keep=_lt)
    anti = report_from_residuals("right-actions-anticommute", TT + TTs, 2, keep=lambda t: t[0] <= t[1])
    return (
        CheckReport("difference-bimodule", first.violations, first.parts),
        CheckReport("dual-bimodule", second.violations, second.parts),
        commute,
        anti,
    )


# ---------------------------------------------------------------------------
# tensor-sum representations and 1-cocycles
# ---------------------------------------------------------------------------


def tensor_sum_rep(rho, mu) -> np.ndarray:
    """(rho (x) 1 + 1 (x) mu)(e_i) on V (x) W, flat index i * dim W + j."""
    rho = qarray(rho)
    mu = qarray(mu)
    if rho.shape[0] != mu.shape[0]:
        raise ValueError("representations are over algebras of different dimension")
    p, q = rho.shape[1], mu.shape[1]
    Ip, Iq = eye(p), eye(q)
    out = [np.kron(rho[i], Iq) + np.kron(Ip, mu[i]) for i in range(rho.shape[0])]
    return qarray(np.array(out, dtype=object).reshape(rho.shape[0], p * q, p * q))


def rep_L_tensor_ad(A: Algebra) -> np.ndarray:
    from .algebra import adjoint, left_mult

    return tensor_sum_rep(left_mult(A), adjoint(A))


def check_1cocycle(G: Algebra, rho, delta) -> CheckReport:
    """delta([x, y]) = rho(x) delta(y) - rho(y) delta(x).

    ``delta`` has shape (n, m) or (n, p, q); the latter is flattened to the
    tensor square with index i * q + j.
    """
    n = G.dim
    delta = qarray(delta)
    if delta.shape[0] != n:
        raise ValueError(f"cocycle must have {n} images, got {delta.shape[0]}")
    d = delta.reshape(n, -1)
    rho = as_rep(rho, n, d.shape[1])
    lhs = np.einsum("ijk,ka->ija", G.c, d)
    rd = np.einsum("iab,jb->ija", rho, d)
    res = lhs - rd + rd.transpose(1, 0, 2)
    return report_from_residuals("1-cocycle", res, 2, keep=_lt)


# ---------------------------------------------------------------------------
# matched pairs of Lie algebras
# ---------------------------------------------------------------------------


def _lie_compat(g, h, rho, mu):
    """Residual of rho(x)[a,b] - [rho(x)a,b] - [a,rho(x)b] + rho(mu(a)x)b - rho(mu(b)x)a.

    Indexed [x, a, b, k] with x in the first algebra and a, b in the second.
    """
    t1 = np.einsum("pqs,iks->ipqk", h, rho)
    t2 = np.einsum("itp,tqk->ipqk", rho, h)
    t3 = np.einsum("itq,ptk->ipqk", rho, h)
    t4 = np.einsum("psi,skq->ipqk", mu, rho)
    t5 = np.einsum("qsi,skp->ipqk", mu, rho)
    return t1 - t2 - t3 + t4 - t5


def check_matched_pair_lie(G: Algebra, H: Algebra, rho, mu) -> CheckReport:
    n, m = G.dim, H.dim
    rho = as_rep(rho, n, m, "action of G on H")
    mu = as_rep(mu, m, n, "action of H on G")
    pre = [check_jacobi(G), check_jacobi(H), check_lie_rep(G, rho), check_lie_rep(H, mu)]
    names = ["jacobi-G", "jacobi-H", "rep-G-on-H", "rep-H-on-G"]
    pre = [CheckReport(nm, p.violations, p.parts) for nm, p in zip(names, pre)]
    if not all(pre):
        return combine("matched-pair-lie", *pre)
    a = _lie_compat(G.c, H.c, rho, mu)
    b = _lie_compat(H.c, G.c, mu, rho)
    return combine(
        "matched-pair-lie",
        *pre,
        report_from_residuals("action-on-H-bracket", a, 3),
        report_from_residuals("action-on-G-bracket", b, 3),
    )


def lie_from_matched_pair(G: Algebra, H: Algebra, rho, mu, check: bool = True) -> Algebra:
    """[x+a, y+b] = [x,y] + mu(a)y - mu(b)x + [a,b] + rho(x)b - rho(y)a."""
    n, m = G.dim, H.dim
    rho = as_rep(rho, n, m, "action of G on H")
    mu = as_rep(mu, m, n, "action of H on G")
    if check:
        require(check_matched_pair_lie(G, H, rho, mu), "not a matched pair of Lie algebras")
    c = np.array(zeros((n + m,) * 3))
    c[:n, :n, :n] = G.c
    c[n:, n:, n:] = H.c
    # [e_i, f_p] = -mu(f_p) e_i + rho(e_i) f_p
    c[:n, n:, :n] = -mu.transpose(2, 0, 1)
    c[:n, n:, n:] = rho.transpose(0, 2, 1)
    c[n:, :n, :] = -c[:n, n:, :].transpose(1, 0, 2)
    name = f"{G.name}|><|{H.name}" if G.name and H.name else ""
    return Algebra(c, name, "lie")


# ---------------------------------------------------------------------------
# matched pairs of left-symmetric algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MatchedPairLSA:
    """Two algebras with mutual actions: lA, rA act A on B, lB, rB act B on A."""

    A: Algebra
    B: Algebra
    lA: np.ndarray
    rA: np.ndarray
    lB: np.ndarray
    rB: np.ndarray

    def __post_init__(self):
        n, m = self.A.dim, self.B.dim
        object.__setattr__(self, "lA", as_rep(self.lA, n, m, "lA"))
        object.__setattr__(self, "rA", as_rep(self.rA, n, m, "rA"))
        object.__setattr__(self, "lB", as_rep(self.lB, m, n, "lB"))
        object.__setattr__(self, "rB", as_rep(self.rB, m, n, "rB"))


def _eq_r_bracket(cA, cB, lA, rA, lB, rB):
    """r_A(x)[a,b] - r_A(l_B(b)x)a + r_A(l_B(a)x)b - a o (r_A(x)b) + b o (r_A(x)a)."""
    hB = cB - cB.transpose(1, 0, 2)
    lhs = np.einsum("pqs,iks->ipqk", hB, rA)
    t1 = np.einsum("qsi,skp->ipqk", lB, rA)
    t2 = np.einsum("psi,skq->ipqk", lB, rA)
    t3 = np.einsum("itq,ptk->ipqk", rA, cB)
    t4 = np.einsum("itp,qtk->ipqk", rA, cB)
    return lhs - t1 + t2 - t3 + t4


def _eq_l_product(cA, cB, lA, rA, lB, rB):
    """l_A(x)(a o b) + l_A(l_B(a)x - r_B(a)x)b - (l_A(x)a - r_A(x)a) o b - r_A(r_B(b)x)a - a o (l_A(x)b)."""
    lhs = np.einsum("pqs,iks->ipqk", cB, lA)
    t1 = np.einsum("psi,skq->ipqk", lB - rB, lA)
    t2 = np.einsum("itp,tqk->ipqk", lA - rA, cB)
    t3 = np.einsum("qsi,skp->ipqk", rB, rA)
    t4 = np.einsum("itq,ptk->ipqk", lA, cB)
    return lhs + t1 - t2 - t3 - t4


def check_matched_pair_lsa(mp: MatchedPairLSA) -> CheckReport:
    A, B = mp.A, mp.B
    pre = [
        CheckReport("left-symmetric-A", *_vp(check_left_symmetric(A))),
        CheckReport("left-symmetric-B", *_vp(check_left_symmetric(B))),
    ]
    if not all(pre):
        return combine("matched-pair-lsa", *pre)
    pre += [
        CheckReport("bimodule-A-on-B", *_vp(check_bimodule(A, mp.lA, mp.rA))),
        CheckReport("bimodule-B-on-A", *_vp(check_bimodule(B, mp.lB, mp.rB))),
    ]
    args = (A.c, B.c, mp.lA, mp.rA, mp.lB, mp.rB)
    swapped = (B.c, A.c, mp.lB, mp.rB, mp.lA, mp.rA)
    return combine(
        "matched-pair-lsa",
        *pre,
        report_from_residuals("rA-on-B-bracket", _eq_r_bracket(*args), 3),
        report_from_residuals("lA-on-B-product", _eq_l_product(*args), 3),
        report_from_residuals("rB-on-A-bracket", _eq_r_bracket(*swapped), 3),
        report_from_residuals("lB-on-A-product", _eq_l_product(*swapped), 3),
    )


def _vp(rep):
    return rep.violations, rep.parts


def lsa_from_matched_pair(mp: MatchedPairLSA, check: bool = True) -> Algebra:
    """(x+a)(y+b) = (xy + lB(a)y + rB(b)x) + (a o b + lA(x)b + rA(y)a)."""
    if check:
        require(check_matched_pair_lsa(mp), "not a matched pair of left-symmetric algebras")
    n, m = mp.A.dim, mp.B.dim
    c = np.array(zeros((n + m,) * 3))
    c[:n, :n, :n] = mp.A.c
    c[n:, n:, n:] = mp.B.c
    # e_i * f_q = rB(f_q) e_i + lA(e_i) f_q
    c[:n, n:, :n] = mp.rB.transpose(2, 0, 1)
    c[:n, n:, n:] = mp.lA.transpose(0, 2, 1)
    # f_p * e_j = lB(f_p) e_j + rA(e_j) f_p
    c[n:, :n, :n] = mp.lB.transpose(0, 2, 1)
    c[n:, :n, n:] = mp.rA.transpose(2, 0, 1)
    name = f"{mp.A.name}|><|{mp.B.name}" if mp.A.name and mp.B.name else ""
    return Algebra(c, name, "left-symmetric")


def check_linked_pair(A: Algebra, B: Algebra, rho, mu) -> CheckReport:
    """rho, mu representations of the commutator algebras plus the two linking identities."""
    n, m = A.dim, B.dim
    rho = as_rep(rho, n, m, "action of A on B")
    mu = as_rep(mu, m, n, "action of B on A")
    GA = Algebra(commutator_constants(A), kind="lie")
    GB = Algebra(commutator_constants(B), kind="lie")
    parts = [
        CheckReport("left-symmetric-A", *_vp(check_left_symmetric(A))),
        CheckReport("left-symmetric-B", *_vp(check_left_symmetric(B))),
        CheckReport("rep-A-on-B", *_vp(check_lie_rep(GA, rho))),
        CheckReport("rep-B-on-A", *_vp(check_lie_rep(GB, mu))),
    ]

    def link(cA, cB, rho, mu):
        # rho(x)(a o b) - (rho(x)a) o b - a o (rho(x)b) + rho(mu(a)x)b
        lhs = np.einsum("pqs,iks->ipqk", cB, rho)
        t1 = np.einsum("itp,tqk->ipqk", rho, cB)
        t2 = np.einsum("itq,ptk->ipqk", rho, cB)
        t3 = np.einsum("psi,skq->ipqk", mu, rho)
        return lhs - t1 - t2 + t3

    parts.append(report_from_residuals("link-A-on-B", link(A.c, B.c, rho, mu), 3))
    parts.append(report_from_residuals("link-B-on-A", link(B.c, A.c, mu, rho), 3))
    return combine("linked-pair", *parts)


def linked_pair_lsa(A: Algebra, B: Algebra, rho, mu, check: bool = True) -> Algebra:
    """(x+a)(y+b) = (xy + mu(a)y) + (a o b + rho(x)b)."""
    if check:
        require(check_linked_pair(A, B, rho, mu), "algebras are not linked by (rho, mu)")
    n, m = A.dim, B.dim
    mp = MatchedPairLSA(A, B, rho, zero_rep(n, m), mu, zero_rep(m, n))
    return lsa_from_matched_pair(mp, check=False)


__all__ = [
    "MatchedPairLSA",
    "as_rep",
    "check_1cocycle",
    "check_bimodule",
    "check_lie_rep",
    "check_linked_pair",
    "check_matched_pair_lie",
    "check_matched_pair_lsa",
    "dual_bimodule",
    "dual_bimodule_criteria",
    "lie_from_matched_pair",
    "linked_pair_lsa",
    "lsa_from_matched_pair",
    "rep_L_tensor_ad",
    "semidirect_lsa",
    "tensor_sum_rep",
    "zero_rep",
]
