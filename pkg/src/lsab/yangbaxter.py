"""Coboundary bialgebras, the S-equation, the classical Yang-Baxter equation
and O-operators.

A rank-2 tensor r is an n x n array with r = sum r[p, q] e_p (x) e_q.  Read as
a map A* -> A, r(e_q*) = sum_p r[p, q] e_p, so the matrix of the map is the
array itself.  Rank-3 tensors are n x n x n arrays indexed by legs.

Leg products follow the coordinate expansions: r_{pq} puts the first tensor
factor on leg p and the second on leg q; X . Y multiplies the factors that sit
on the one leg X and Y share, X's factor on the left.  For example
r13 . r12 = sum a_i a_j (x) b_j (x) b_i.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    Algebra,
    CheckReport,
    ConstructionError,
    Violation,
    adjoint,
    as_form,
    check_2step_nilpotent,
    check_left_symmetric,
    check_lsa_2cocycle,
    combine,
    commutator_constants,
    dual_rep,
    is_nondegenerate,
    is_symmetric,
    left_mult,
    precondition_failed,
    report_from_residuals,
    require,
    right_mult,
)
from .arith import SingularMatrixError, invert, nullspace, qarray, rank, solve_linear, zeros
from .bialgebra import (
    BialgebraPair,
    ParakahlerData,
    bialgebra_matched_pair,
    check_bialgebra_hom,
    check_lie_bialgebra,
    check_lie_bialgebra_compat,
    check_lsa_bialgebra,
    check_parakahler,
    halves,
    lie_of,
    omega_p,
)
from .reps import as_rep, lie_from_matched_pair, lsa_from_matched_pair, semidirect_lsa, zero_rep

LEGS = {"12": (0, 1), "21": (1, 0), "13": (0, 2), "31": (2, 0), "23": (1, 2), "32": (2, 1)}


def as_tensor2(r, n: int | None = None) -> np.ndarray:
    r = qarray(r)
    if r.ndim != 2 or r.shape[0] != r.shape[1] or (n is not None and r.shape[0] != n):
        raise ValueError(f"tensor must be {n} x {n}, got shape {r.shape}")
    return r


def r_as_map(r) -> np.ndarray:
    """Matrix of r: A* -> A, column j = r(e_j*)."""
    return qarray(r)


def leg_product(op, X, lx: str, Y, ly: str) -> np.ndarray:
    """X_{lx} . Y_{ly} multiplied through ``op`` on the shared leg."""
    px, py = LEGS[lx], LEGS[ly]
    shared = set(px) & set(py)
    if len(shared) != 1:
        raise ValueError(f"legs {lx} and {ly} must share exactly one position")
    (s,) = shared
    xs = "ab"[px.index(s)]
    ys = "de"[py.index(s)]
    out = []
    for leg in range(3):
        if leg == s:
            out.append("k")
        elif leg in px:
            out.append("ab"[px.index(leg)])
        else:
            out.append("de"[py.index(leg)])
    return np.einsum(f"ab,de,{xs}{ys}k->{''.join(out)}", X, Y, op, optimize=True)


def _ops(A: Algebra):
    return A.c, commutator_constants(A)


def s_bracket(A: Algebra, r) -> np.ndarray:
    """[[r,r]] = r13.r12 - r23.r21 + [r23,r12] - [r13,r21] - [r13,r23]."""
    r = as_tensor2(r, A.dim)
    c, g = _ops(A)
    return qarray(
        leg_product(c, r, "13", r, "12")
        - leg_product(c, r, "23", r, "21")
        + leg_product(g, r, "23", r, "12")
        - leg_product(g, r, "13", r, "21")
        - leg_product(g, r, "13", r, "23")
    )


def s_bracket_rearranged(A: Algebra, r) -> np.ndarray:
    """r21.r13 - r12.r23 - [r13,r23] + r13.(r12 - r21) + r23.(r12 - r21)."""
    r = as_tensor2(r, A.dim)
    c, g = _ops(A)
    return qarray(
        leg_product(c, r, "21", r, "13")
        - leg_product(c, r, "12", r, "23")
        - leg_product(g, r, "13", r, "23")
        + leg_product(c, r, "13", r, "12")
        - leg_product(c, r, "13", r, "21")
        + leg_product(c, r, "23", r, "12")
        - leg_product(c, r, "23", r, "21")
    )


def s_equation_tensor(A: Algebra, r) -> np.ndarray:
    """-r12.r13 + r12.r23 + [r13,r23]."""
    r = as_tensor2(r, A.dim)
    c, g = _ops(A)
    return qarray(-leg_product(c, r, "12", r, "13") + leg_product(c, r, "12", r, "23") + leg_product(g, r, "13", r, "23"))


def s_equation_permuted_tensors(A: Algebra, r):
    """[r12,r13] - r23.(r12 - r13) and [r12,r23] - r13.(r12 - r23)."""
    r = as_tensor2(r, A.dim)
    c, g = _ops(A)
    first = leg_product(g, r, "12", r, "13") - leg_product(c, r, "23", r, "12") + leg_product(c, r, "23", r, "13")
    second = leg_product(g, r, "12", r, "23") - leg_product(c, r, "13", r, "12") + leg_product(c, r, "13", r, "23")
    return qarray(first), qarray(second)


def _symmetric_ls_pre(identity, A, r):
    ls = check_left_symmetric(A)
    if not ls:
        return precondition_failed(identity, "algebra is not left-symmetric", ls)
    if not is_symmetric(r):
        return precondition_failed(identity, "tensor is not symmetric")
    return None


def check_s_equation(A: Algebra, r) -> CheckReport:
    r = as_tensor2(r, A.dim)
    pre = _symmetric_ls_pre("s-equation", A, r)
    if pre is not None:
        return pre
    return report_from_residuals("s-equation", s_equation_tensor(A, r), 3)


def check_s_equation_permuted(A: Algebra, r):
    r = as_tensor2(r, A.dim)
    pre = _symmetric_ls_pre("s-equation-permuted", A, r)
    if pre is not None:
        return pre, pre
    a, b = s_equation_permuted_tensors(A, r)
    return report_from_residuals("s-equation-sigma123", a, 3), report_from_residuals("s-equation-sigma132", b, 3)


# ---------------------------------------------------------------------------
# alpha from r and the conditions for a coboundary bialgebra
# ---------------------------------------------------------------------------


def alpha_from_r(A: Algebra, r) -> np.ndarray:
    """alpha(e_i) = (L_i (x) 1 + 1 (x) ad_i) r, as alpha[i][p, q]."""
    r = as_tensor2(r, A.dim)
    L, ad = left_mult(A), adjoint(A)
    return qarray(np.einsum("ipt,tq->ipq", L, r) + np.einsum("pt,iqt->ipq", r, ad))


def dual_product_from_r(A: Algebra, r) -> Algebra:
    """Product on A* whose transpose is alpha: e_k* o e_l* = sum_i alpha[i][k, l] e_i*."""
    alpha = alpha_from_r(A, r)
    return Algebra(alpha.transpose(1, 2, 0), f"{A.name}*" if A.name else "")


def dual_product_symmetric(A: Algebra, r) -> Algebra:
    """a* o b* = -R*(r(b*)) a* + ad*(r(a*)) b*."""
    r = as_tensor2(r, A.dim)
    Rs, ads = dual_rep(right_mult(A)), dual_rep(adjoint(A))
    Rr = np.einsum("tl,tab->lab", r, Rs)  # R*(r(e_l*))
    adr = np.einsum("tk,tab->kab", r, ads)  # ad*(r(e_k*))
    f = -np.einsum("lik->kli", Rr) + np.einsum("kil->kli", adr)
    return Algebra(f, f"{A.name}*" if A.name else "")


def coboundary_pair(A: Algebra, r) -> BialgebraPair:
    return BialgebraPair(A, dual_product_from_r(A, r))


def _P_on(L, t):
    """P(e_k) t = L_k t + t L_k^T for every k."""
    return np.einsum("kab,bc->kac", L, t) + np.einsum("ab,kcb->kac", t, L)


def check_condition_a(A: Algebra, r) -> CheckReport:
    """[P(x y) - P(x) P(y)](r - r^21) = 0 with P(x) = L_x (x) 1 + 1 (x) L_x."""
    r = as_tensor2(r, A.dim)
    L = left_mult(A)
    s = r - r.T
    Ps = _P_on(L, s)
    first = np.einsum("ijk,kab->ijab", A.c, Ps)
    second = np.einsum("iab,jbc->ijac", L, Ps) + np.einsum("jab,icb->ijac", Ps, L)
    return report_from_residuals("condition-a", first - second, 2)


def q_action(A: Algebra, t) -> np.ndarray:
    """Q(e_i) t = (L_i (x) 1 (x) 1 + 1 (x) L_i (x) 1 + 1 (x) 1 (x) ad_i) t, stacked over i."""
    L, ad = left_mult(A), adjoint(A)
    t = np.asarray(t, dtype=object)
    return qarray(
        np.einsum("ipa,aqs->ipqs", L, t) + np.einsum("iqa,pas->ipqs", L, t) + np.einsum("isa,pqa->ipqs", ad, t)
    )


def check_coboundary_bialgebra(A: Algebra, r) -> CheckReport:
    """Condition (a) on the skew part plus Q(x)[[r,r]] = 0 for all x."""
    r = as_tensor2(r, A.dim)
    ls = check_left_symmetric(A)
    if not ls:
        return precondition_failed("coboundary-bialgebra", "algebra is not left-symmetric", ls)
    qb = report_from_residuals("Q-kills-s-bracket", q_action(A, s_bracket(A, r)), 1)
    return combine("coboundary-bialgebra", check_condition_a(A, r), qb)


def j_alpha(alpha) -> np.ndarray:
    """J(e_k) = (a (x) 1) a - (1 (x) a) a - (s (x) 1)(a (x) 1) a + (s (x) 1)(1 (x) a) a."""
    alpha = qarray(alpha)
    X = np.einsum("kij,iab->kabj", alpha, alpha)
    Y = np.einsum("kij,jab->kiab", alpha, alpha)
    return qarray(X - Y - X.transpose(0, 2, 1, 3) + Y.transpose(0, 2, 1, 3))


def check_j_alpha_vs_dual(alpha):
    """(J_alpha = 0 report, left-symmetry report of the transposed product)."""
    alpha = qarray(alpha)
    dual = Algebra(alpha.transpose(1, 2, 0))
    return report_from_residuals("J-alpha", j_alpha(alpha), 1), check_left_symmetric(dual)


# ---------------------------------------------------------------------------
# symmetric solutions: doubles, forms, operator form
# ---------------------------------------------------------------------------


def canonical_r(n: int, sign: int = 1) -> np.ndarray:
    """sum e_i (x) e_i* + sign e_i* (x) e_i on A + A* (sign 0 gives the one-sided tensor)."""
    m = np.array(zeros((2 * n, 2 * n)))
    for i in range(n):
        m[i, n + i] = 1
        m[n + i, i] = sign
    return qarray(m)


def double_products_from_r(A: Algebra, r, check: bool = True):
    """Products and brackets on A + A* written through r and the products of A.

    Returns (left-symmetric algebra, Lie algebra) where the Lie algebra is
    assembled from its own bracket formulas rather than as a commutator.
    """
    n = A.dim
    r = as_tensor2(r, n)
    if check:
        require(check_s_equation(A, r), "tensor is not a symmetric solution of the S-equation")
    Ls, Rs, ads = dual_rep(left_mult(A)), dual_rep(right_mult(A)), dual_rep(adjoint(A))
    g = commutator_constants(A)
    f = dual_product_symmetric(A, r).c
    c = np.array(zeros((2 * n,) * 3))
    c[:n, :n, :n] = A.c
    c[n:, n:, n:] = f
    # x * a* = x r(a*) - r(ad*(x) a*) + ad*(x) a*
    xr = np.einsum("ita,tq->iqa", A.c, r)  # e_i . r(e_q*)
    c[:n, n:, :n] = xr - np.einsum("at,itq->iqa", r, ads)
    c[:n, n:, n:] = ads.transpose(0, 2, 1)
    # a* * x = r(a*) x + r(R*(x) a*) - R*(x) a*
    rx = np.einsum("tp,tja->pja", r, A.c)
    c[n:, :n, :n] = rx + np.einsum("at,jtp->pja", r, Rs)
    c[n:, :n, n:] = -Rs.transpose(2, 0, 1)
    lsa = Algebra(c, f"SD({A.name})" if A.name else "", "left-symmetric")
    # brackets: [a*, b*] = L*(r(a*)) b* - L*(r(b*)) a*;  [x, a*] = [x, r(a*)] - r(L*(x) a*) + L*(x) a*
    h = np.array(zeros((2 * n,) * 3))
    h[:n, :n, :n] = g
    Lr = np.einsum("tk,tab->kab", r, Ls)
    h[n:, n:, n:] = np.einsum("kil->kli", Lr) - np.einsum("lik->kli", Lr)
    h[:n, n:, :n] = np.einsum("ita,tq->iqa", g, r) - np.einsum("at,itq->iqa", r, Ls)
    h[:n, n:, n:] = Ls.transpose(0, 2, 1)
    h[n:, :n, :] = -h[:n, n:, :].transpose(1, 0, 2)
    lie = Algebra(h, lsa.name, "lie")
    return lsa, lie


@dataclass(frozen=True, eq=False)
class SymplecticDouble:
    algebra: Algebra
    r: np.ndarray
    pair: BialgebraPair
    reports: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.reports.values())


def symplectic_double(p: BialgebraPair, check: bool = True) -> SymplecticDouble:
    """A |><| A* with actions (ad*, -R*) both ways and r = sum e_i (x) e_i*.

    Reports the coboundary conditions for r, the two inclusions as bialgebra
    homomorphisms, and the parakähler axioms of the commutator with omega_p.
    """
    if check:
        require(check_lsa_bialgebra(p), "pair is not a left-symmetric bialgebra")
    n = p.dim
    SD = lsa_from_matched_pair(bialgebra_matched_pair(p), check=False)
    r = canonical_r(n, 0)
    pair = coboundary_pair(SD, r)
    i1, i2 = halves(n)
    reports = {
        "coboundary": check_coboundary_bialgebra(SD, r),
        "inclusion-A": check_bialgebra_hom(i1, p, pair),
        "inclusion-A*": check_bialgebra_hom(i2, p.swapped(), pair),
        "parakahler": check_parakahler(ParakahlerData(lie_of(SD), i1, i2, omega_p(n))),
    }
    return SymplecticDouble(SD, r, pair, reports)


def induced_form(r) -> np.ndarray:
    """B(x, y) = <r^{-1} x, y>, i.e. the matrix (r^{-1})^T."""
    return qarray(invert(as_tensor2(r)).T)


def bilinear_vs_r_duality(A: Algebra, r):
    """(B, S-equation report, 2-cocycle report) for symmetric nondegenerate r."""
    r = as_tensor2(r, A.dim)
    if not is_symmetric(r):
        raise ValueError("tensor is not symmetric")
    try:
        B = induced_form(r)
    except SingularMatrixError as exc:
        raise ValueError("tensor is degenerate") from exc
    return B, check_s_equation(A, r), check_lsa_2cocycle(A, B)


def check_r_isomorphism(A: Algebra, r) -> CheckReport:
    """r(a* o b*) = r(a*) r(b*) for the product on A* induced by r."""
    r = as_tensor2(r, A.dim)
    if not is_nondegenerate(r):
        return precondition_failed("r-isomorphism", "tensor is degenerate")
    f = dual_product_from_r(A, r).c
    lhs = np.einsum("kli,ai->kla", f, r)
    rhs = np.einsum("pk,ql,pqa->kla", r, r, A.c)
    return report_from_residuals("r-isomorphism", lhs - rhs, 2)


def check_s_operator_form(A: Algebra, r) -> CheckReport:
    """[r(a*), r(b*)] = r(L*(r(a*)) b* - L*(r(b*)) a*)."""
    r = as_tensor2(r, A.dim)
    if not is_symmetric(r):
        return precondition_failed("s-operator-form", "tensor is not symmetric")
    return _o_operator_residual("s-operator-form", commutator_constants(A), dual_rep(left_mult(A)), r)


# ---------------------------------------------------------------------------
# O-operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class OOperatorData:
    """T: V -> G with G acting on V through rho; T[:, j] = T(v_j)."""

    G: Algebra
    rho: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        n = self.G.dim
        rho = as_rep(self.rho, n)
        m = rho.shape[1]
        T = qarray(self.T)
        if T.shape != (n, m):
            raise ValueError(f"operator must be {n} x {m}, got {T.shape}")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "T", T)

    @property
    def m(self) -> int:
        return self.rho.shape[1]


def _o_operator_residual(identity, g, rho, T) -> CheckReport:
    rT = np.einsum("ka,kpq->apq", T, rho)  # rho(T v_a)
    lhs = np.einsum("ka,lb,klz->abz", T, T, g)
    # inner[a, b] = rho(T v_a) v_b - rho(T v_b) v_a
    inner = np.einsum("apb->abp", rT) - np.einsum("bpa->abp", rT)
    rhs = np.einsum("abp,zp->abz", inner, T)
    return report_from_residuals(identity, lhs - rhs, 2, keep=lambda t: t[0] < t[1])


def check_o_operator(d: OOperatorData) -> CheckReport:
    return _o_operator_residual("o-operator", d.G.c, d.rho, d.T)


def _rho_T(d: OOperatorData) -> np.ndarray:
    """rho(T v_a) stacked over a."""
    return qarray(np.einsum("ka,kpq->apq", d.T, d.rho))


def _independent(M, axis: int) -> list[int]:
    """Greedy indices of independent columns (axis=1) or rows (axis=0)."""
    M = M if axis == 1 else M.T
    keep: list[int] = []
    for j in range(M.shape[1]):
        if rank(M[:, keep + [j]]) > len(keep):
            keep.append(j)
    return keep


@dataclass(frozen=True, eq=False)
class OOperatorAlgebras:
    V: Algebra
    image: Algebra
    image_basis: np.ndarray
    well_defined: CheckReport


def lsa_from_o_operator(d: OOperatorData, check: bool = True) -> OOperatorAlgebras:
    """u o v = rho(T u) v on V, and T(u) T(v) = T(u o v) on the image of T.

    The image product is computed on the pivot columns of T.  It is well
    defined exactly when T(rho(T u) k) = 0 for every u and every k in ker T;
    otherwise the report lists the offending pairs and, with ``check``, a
    ConstructionError is raised.
    """
    if check:
        require(check_o_operator(d), "map is not an O-operator")
    rT = _rho_T(d)
    V = Algebra(np.einsum("apb->abp", rT), "", "left-symmetric")
    T = d.T
    K = nullspace(T)
    viols = []
    for a in range(d.m):
        for j in range(K.shape[1]):
            v = T.dot(rT[a].dot(K[:, j]))
            if not all(x == 0 for x in v):
                viols.append(Violation((a, j), tuple(v), "image product depends on the kernel"))
    wd = CheckReport("image-product-well-defined", tuple(viols))
    if check and not wd:
        raise ConstructionError("induced product on the image is not well defined", wd)
    piv = _independent(T, 1)
    k = len(piv)
    basis = qarray(T[:, piv]) if k else zeros((d.G.dim, 0))
    rows = _independent(basis, 0) if k else []
    ci = np.array(zeros((k, k, k)))
    for a, ja in enumerate(piv):
        for b, jb in enumerate(piv):
            w = T.dot(V.c[ja, jb])
            ci[a, b, :] = solve_linear(basis[rows], w[rows])
    return OOperatorAlgebras(V, Algebra(ci, "", "left-symmetric"), basis, wd)


@dataclass(frozen=True, eq=False)
class SolutionData:
    """An ambient algebra, a tensor r in it, and the reports that certify r."""

    algebra: Algebra
    r: np.ndarray
    reports: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.reports.values())


def _injective(T) -> bool:
    return rank(T) == T.shape[1]


def symmetric_solution_from_o_operator(d: OOperatorData, check: bool = True) -> SolutionData:
    """r = T + T^21 in T(V) |x_{rho*,0} V*.

    For an invertible square T the ambient is G + V* with G carrying the
    transported product x y = T rho(x) T^{-1} y.  For other injective T the
    image is identified with V through T, so the ambient is (V, o) + V*.
    Non-injective T is refused.
    """
    if not _injective(d.T):
        raise ConstructionError("operator is not injective; the image product is not determined")
    o_rep = check_o_operator(d)
    if check:
        require(o_rep, "map is not an O-operator")
    n, m = d.G.dim, d.m
    if n == m:
        Ti = invert(d.T)
        c = np.einsum("zp,ipq,qj->ijz", d.T, d.rho, Ti)
        base = Algebra(c, "T(V)", "left-symmetric")
        S = dual_rep(d.rho)
        r = np.array(zeros((n + m, n + m)))
        r[:n, n:] = d.T
        r[n:, :n] = d.T.T
        r = qarray(r)
    else:
        rT = _rho_T(d)
        base = Algebra(np.einsum("apb->abp", rT), "T(V)", "left-symmetric")
        S = dual_rep(rT)
        r = canonical_r(m, 1)
    amb = semidirect_lsa(base, S, zero_rep(base.dim, m), check=False)
    reports = {"o-operator": o_rep, "s-equation": check_s_equation(amb, r)}
    return SolutionData(amb, r, reports)


def skew_solution_from_o_operator(d: OOperatorData) -> SolutionData:
    """r = T - T^21 in G |x_{rho*} V* with V* abelian; reports CYBE and the O-operator identity."""
    n, m = d.G.dim, d.m
    amb = lie_from_matched_pair(d.G, Algebra(zeros((m, m, m)), "", "lie"), dual_rep(d.rho), zero_rep(m, n), check=False)
    r = np.array(zeros((n + m, n + m)))
    r[:n, n:] = d.T
    r[n:, :n] = -d.T.T
    r = qarray(r)
    return SolutionData(amb, r, {"o-operator": check_o_operator(d), "cybe": check_cybe(amb, r)})


@dataclass(frozen=True, eq=False)
class CanonicalSolution:
    algebra: Algebra
    r: np.ndarray
    form: np.ndarray


def canonical_symmetric_solution(A: Algebra) -> CanonicalSolution:
    """A |x_{L*,0} A* with r = sum e_i (x) e_i* + e_i* (x) e_i and B = <r^{-1} ., .>."""
    require(check_left_symmetric(A), "algebra is not left-symmetric")
    n = A.dim
    amb = semidirect_lsa(A, dual_rep(left_mult(A)), zero_rep(n, n), check=False)
    r = canonical_r(n, 1)
    return CanonicalSolution(amb, r, induced_form(r))


def canonical_skew_solution(A: Algebra) -> CanonicalSolution:
    """G(A) |x_{L*} G(A*) (A* abelian) with r = sum e_i (x) e_i* - e_i* (x) e_i."""
    require(check_left_symmetric(A), "algebra is not left-symmetric")
    n = A.dim
    amb = lie_from_matched_pair(lie_of(A), Algebra(zeros((n, n, n)), "", "lie"), dual_rep(left_mult(A)), zero_rep(n, n), check=False)
    r = canonical_r(n, -1)
    return CanonicalSolution(amb, r, induced_form(r))


# ---------------------------------------------------------------------------
# classical Yang-Baxter equation
# ---------------------------------------------------------------------------


def cybe_tensor(G: Algebra, r) -> np.ndarray:
    """[r12, r13] + [r12, r23] + [r13, r23]."""
    r = as_tensor2(r, G.dim)
    g = G.c
    return qarray(leg_product(g, r, "12", r, "13") + leg_product(g, r, "12", r, "23") + leg_product(g, r, "13", r, "23"))


def check_cybe(G: Algebra, r) -> CheckReport:
    return report_from_residuals("cybe", cybe_tensor(G, r), 3)


def check_lie_coboundary(G: Algebra, r) -> CheckReport:
    """ad-invariance of r + r^21 and of the CYBE tensor (three legs)."""
    r = as_tensor2(r, G.dim)
    ad = left_mult(G)
    s = r + r.T
    inv = np.einsum("iab,bc->iac", ad, s) + np.einsum("ab,icb->iac", s, ad)
    t = cybe_tensor(G, r)
    three = (
        np.einsum("ipa,aqs->ipqs", ad, t) + np.einsum("iqa,pas->ipqs", ad, t) + np.einsum("isa,pqa->ipqs", ad, t)
    )
    return combine(
        "lie-coboundary",
        report_from_residuals("symmetric-part-invariant", inv, 1),
        report_from_residuals("cybe-tensor-invariant", three, 1),
    )


def lie_coboundary_dual(G: Algebra, r) -> Algebra:
    """Bracket on G* transposed from delta(x) = [x (x) 1 + 1 (x) x, r]."""
    r = as_tensor2(r, G.dim)
    ad = left_mult(G)
    delta = np.einsum("kia,aj->kij", ad, r) + np.einsum("ia,kja->kij", r, ad)
    return Algebra(delta.transpose(1, 2, 0), "", "lie")


# ---------------------------------------------------------------------------
# the alternative product on A* induced by a symmetric solution
# ---------------------------------------------------------------------------


def l_star_dual_product(A: Algebra, r) -> Algebra:
    """a* o' b* = L*(r(a*)) b*."""
    r = as_tensor2(r, A.dim)
    return Algebra(-np.einsum("mk,mil->kli", r, A.c), "", "left-symmetric")


def check_l_star_dual(A: Algebra, r) -> CheckReport:
    """Checks around the product a* o' b* = L*(r(a*)) b* for a symmetric solution r.

    Parts: r is an O-operator for L*; o' is left-symmetric; o' has the same
    commutator as the coboundary dual product; the pair of conditions
    (w(x,a) = x r(a*) - r(L*(x) a*))
        L*(w(x,a)) b* = L*(w(x,b)) a*,   w(x,a) y = w(y,a) x
    agrees with the bialgebra verdict of (A, o'); and when r is
    nondegenerate, x .' y = r(L*(x) r^{-1} y) satisfies
    B(x .' y, z) = -B(y, x z) and is left-symmetric.
    """
    n = A.dim
    r = as_tensor2(r, n)
    pre = check_s_equation(A, r)
    if not pre:
        return precondition_failed("l-star-dual", "tensor is not a symmetric solution of the S-equation", pre)
    Ls = dual_rep(left_mult(A))
    prod = l_star_dual_product(A, r)
    parts = [
        CheckReport("o-operator-for-L*", check_s_operator_form(A, r).violations),
        CheckReport("left-symmetric-o'", check_left_symmetric(prod).violations),
    ]
    g1 = commutator_constants(prod)
    g2 = commutator_constants(dual_product_from_r(A, r))
    parts.append(report_from_residuals("same-commutator", g1 - g2, 2))
    # w[x, a] as a vector of A
    xr = np.einsum("xtk,ta->xak", A.c, r)  # e_x . r(e_a*)
    rL = np.einsum("kb,xba->xak", r, Ls)  # r(L*(e_x) e_a*)
    w = xr - rL
    Lw = np.einsum("xak,kpq->xapq", w, Ls)  # L*(w(x,a)) as matrix
    c625 = np.einsum("xapb->xabp", Lw) - np.einsum("xbpa->xabp", Lw)
    wy = np.einsum("xak,kyz->xayz", w, A.c)
    c626 = wy - np.einsum("yaxz->xayz", wy)
    cond = combine(
        "conditions",
        report_from_residuals("L*-w-symmetric", c625, 3),
        report_from_residuals("w-product-symmetric", c626, 3),
    )
    bi = check_lsa_bialgebra(BialgebraPair(A, prod))
    agree = CheckReport(
        "conditions-match-bialgebra",
        () if cond.passed == bi.passed else (Violation((), (cond.passed, bi.passed), "verdicts differ"),),
    )
    parts.append(agree)
    if is_nondegenerate(r):
        ri = invert(r)
        cp = np.einsum("pa,xab,by->xyp", r, Ls, ri)  # x .' y
        Alt = Algebra(cp, "", "left-symmetric")
        B = induced_form(r)
        lhs = np.einsum("xyp,pz->xyz", cp, B)
        rhs = -np.einsum("yp,xzp->xyz", B, A.c)
        parts.append(report_from_residuals("form-relation", lhs - rhs, 3))
        parts.append(CheckReport("left-symmetric-dot'", check_left_symmetric(Alt).violations))
    return combine("l-star-dual", *parts)


# ---------------------------------------------------------------------------
# symplectic Lie algebras and Lie bialgebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SymplecticBialgebra:
    lsa: Algebra
    dual_lsa: Algebra
    r: np.ndarray
    dual_lie: Algebra
    reports: dict = field(default_factory=dict)


def lie_bialgebra_from_symplectic(G: Algebra, omega, check: bool = True) -> SymplecticBialgebra:
    """Compatible products on G and G* from a symplectic form.

    r: G* -> G is fixed by omega(x, y) = <r^{-1} x, y>.  The product on G
    solves omega(x y, z) = -omega(y, [x, z]); the product on G* is
    a* o b* = r^{-1}(r(a*) r(b*)); the bracket on G* comes from
    delta(x) = [x (x) 1 + 1 (x) x, r].  The reports hold the four operator
    identities for the dual actions, the bialgebra verdict, 2-step
    nilpotency, the Lie bialgebra verdict and the compatibility identity.
    """
    from .constructions import lsa_from_symplectic

    omega = as_form(omega, G.dim)
    A = lsa_from_symplectic(G, omega, check=check)
    N = qarray(omega.T)  # r^{-1}
    R = invert(N)
    f = np.einsum("pk,ql,pqs,zs->klz", R, R, A.c, N)
    Ad = Algebra(f, f"{G.name}*" if G.name else "", "left-symmetric")
    ad, Lx, Rx = left_mult(G), left_mult(A), right_mult(A)
    Lo, Ro = left_mult(Ad), right_mult(Ad)
    ids = {
        "L*-dot": qarray(dual_rep(Lx) - np.einsum("ab,xbc,cd->xad", N, ad, R)),
        "R*-dot": qarray(dual_rep(Rx) + np.einsum("ab,xbc,cd->xad", N, Rx, R)),
        "L*-circ": qarray(dual_rep(Lo) - np.einsum("ta,tpq->apq", R, ad)),
        "R*-circ": qarray(dual_rep(Ro) + np.einsum("ta,tpq->apq", R, Rx)),
    }
    id_reports = [report_from_residuals(k, v, 1) for k, v in ids.items()]
    dual_lie = lie_coboundary_dual(G, R)
    p = BialgebraPair(A, Ad)
    reports = {
        "dual-action-identities": combine("dual-action-identities", *id_reports),
        "bialgebra": check_lsa_bialgebra(p),
        "2-step-nilpotent": check_2step_nilpotent(G),
        "lie-bialgebra": check_lie_bialgebra(G, dual_lie),
        "lie-bialgebra-of-commutators": check_lie_bialgebra(lie_of(A), lie_of(Ad)),
        "compat": check_lie_bialgebra_compat(p),
    }
    return SymplecticBialgebra(A, Ad, R, dual_lie, reports)


def lie_bialgebra_doubles(p: BialgebraPair):
    """The doubles G(A) |><|^{L*}_{L*} G(A*) and G(A) |><|^{ad*}_{ad*} G(A*).

    Returns (first, second, report) where the report holds the 2-cocycle
    property of omega_p on the first and invariance of the hyperbolic form on
    the second, plus both matched-pair checks.
    """
    from .bialgebra import hyperbolic_form
    from .reps import check_matched_pair_lie
    from .algebra import check_invariant_form, check_lie_2cocycle

    A, Ad = p.A, p.Adual
    GA, GD = lie_of(A), lie_of(Ad)
    Ls, Lo = dual_rep(left_mult(A)), dual_rep(left_mult(Ad))
    ads, ado = dual_rep(adjoint(A)), dual_rep(adjoint(Ad))
    first = lie_from_matched_pair(GA, GD, Ls, Lo, check=False)
    second = lie_from_matched_pair(GA, GD, ads, ado, check=False)
    n = p.dim
    mp1, mp2 = check_matched_pair_lie(GA, GD, Ls, Lo), check_matched_pair_lie(GA, GD, ads, ado)
    rep = combine(
        "lie-bialgebra-doubles",
        CheckReport("matched-pair-L*", mp1.violations, mp1.parts),
        CheckReport("matched-pair-ad*", mp2.violations, mp2.parts),
        CheckReport("omega-p-2-cocycle", check_lie_2cocycle(first, omega_p(n)).violations),
        CheckReport("hyperbolic-invariant", check_invariant_form(second, hyperbolic_form(n)).violations),
    )
    return first, second, rep


__all__ = [
    "CanonicalSolution",
    "LEGS",
    "OOperatorAlgebras",
    "OOperatorData",
    "SolutionData",
    "SymplecticBialgebra",
    "SymplecticDouble",
    "alpha_from_r",
    "as_tensor2",
    "bilinear_vs_r_duality",
    "canonical_r",
    "canonical_skew_solution",
    "canonical_symmetric_solution",
    "check_coboundary_bialgebra",
    "check_condition_a",
    "check_cybe",
    "check_j_alpha_vs_dual",
    "check_l_star_dual",
    "check_lie_coboundary",
    "check_o_operator",
    "check_r_isomorphism",
    "check_s_equation",
    "check_s_equation_permuted",
    "check_s_operator_form",
    "coboundary_pair",
    "cybe_tensor",
    "double_products_from_r",
    "dual_product_from_r",
    "dual_product_symmetric",
    "induced_form",
    "j_alpha",
    "l_star_dual_product",
    "leg_product",
    "lie_bialgebra_doubles",
    "lie_bialgebra_from_symplectic",
    "lie_coboundary_dual",
    "lsa_from_o_operator",
    "q_action",
    "r_as_map",
    "s_bracket",
    "s_bracket_rearranged",
    "s_equation_permuted_tensors",
    "s_equation_tensor",
    "skew_solution_from_o_operator",
    "symmetric_solution_from_o_operator",
    "symplectic_double",
]
