"""Structure-constant algebras, bilinear forms and pointwise identity checks.

Convention: ``c[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.  The
left multiplication matrix ``L_i`` therefore has ``L_i[k, j] = c[i, j, k]`` so
that ``L_i @ y`` is the coordinate column of ``e_i y``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .arith import (
    Fraction,
    SingularMatrixError,
    eye,
    invert,
    leading_minors,
    qarray,
    zeros,
)

KINDS = ("left-symmetric", "lie", "associative", "novikov", "generic")


class ConstructionError(ValueError):
    """A construction was asked to run on inputs that fail its precondition."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def require(report, what: str):
    """Raise ConstructionError carrying ``report`` unless it passed."""
    if not report:
        raise ConstructionError(f"{what}:\n{report.summary()}", report)


@dataclass(frozen=True, eq=False)
class Algebra:
    """An n-dimensional algebra given by its structure constants.

    ``kind`` is a claim about the table, not a guarantee; the ``check_*``
    functions decide it.  Lie-kind tables must be skew at construction.
    """

    c: np.ndarray
    name: str = ""
    kind: str = "generic"

    def __post_init__(self):
        c = qarray(self.c)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise ValueError(f"structure constants must have shape n x n x n, got {c.shape}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.kind == "lie" and not np.array_equal(c, -c.transpose(1, 0, 2)):
            raise ValueError("lie-kind structure constants must be skew in the first two indices")
        object.__setattr__(self, "c", c)

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.c.shape == other.c.shape and np.array_equal(self.c, other.c)

    __hash__ = None

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim}, kind={self.kind})"

    def mul(self, x, y) -> np.ndarray:
        return qarray(np.einsum("i,j,ijk->k", np.asarray(x, dtype=object), np.asarray(y, dtype=object), self.c))

    def renamed(self, name: str, kind: str | None = None) -> "Algebra":
        return Algebra(self.c, name, kind or self.kind)


def zero_algebra(n: int, name: str = "") -> Algebra:
    return Algebra(zeros((n, n, n)), name or f"Z{n}", "left-symmetric")


def basis_vector(n: int, i: int) -> np.ndarray:
    return qarray(eye(n)[i])


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    indices: tuple
    residual: tuple = ()
    note: str = ""

    def sort_key(self):
        return (tuple(self.indices), self.note)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exact identity check: pass iff there are no violations."""

    identity: str
    violations: tuple = ()
    parts: tuple = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def part(self, identity: str) -> "CheckReport":
        for p in self.parts:
            if p.identity == identity:
                return p
        raise KeyError(identity)

    def to_dict(self) -> dict:
        from .arith import format_rational

        viols = sorted(self.violations, key=Violation.sort_key)
        out = {
            "verdict": self.verdict,
            "identity": self.identity,
            "violations": [
                {
                    "indices": list(v.indices),
                    "residual": [format_rational(x) for x in v.residual],
                    **({"note": v.note} if v.note else {}),
                }
                for v in viols
            ],
        }
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out

    def summary(self, limit: int = 10) -> str:
        from .arith import format_rational

        lines = [f"{self.identity}: {self.verdict.upper()}"]
        viols = sorted(self.violations, key=Violation.sort_key)
        for v in viols[:limit]:
            res = ", ".join(format_rational(x) for x in v.residual)
            note = f" [{v.note}]" if v.note else ""
            lines.append(f"  at {tuple(v.indices)}: residual ({res}){note}")
        if len(viols) > limit:
            lines.append(f"  ... {len(viols) - limit} more")
        return "\n".join(lines)


def combine(identity: str, *parts: CheckReport) -> CheckReport:
    viols = []
    for p in parts:
        for v in p.violations:
            note = p.identity if not v.note else f"{p.identity}: {v.note}"
            viols.append(Violation(v.indices, v.residual, note))
    return CheckReport(identity, tuple(viols), tuple(parts))


def precondition_failed(identity: str, message: str, *parts: CheckReport) -> CheckReport:
    return CheckReport(identity, (Violation((), (), f"precondition: {message}"),), tuple(parts))


def report_from_residuals(identity: str, residual, nidx: int, keep=None) -> CheckReport:
    """Turn a residual array into a report.

    The first ``nidx`` axes index basis tuples; anything after is the residual
    vector.  ``keep`` optionally filters which index tuples are examined.
    """
    residual = np.asarray(residual, dtype=object)
    shape = residual.shape[:nidx]
    viols = []
    for idx in itertools.product(*(range(s) for s in shape)):
        if keep is not None and not keep(idx):
            continue
        r = residual[idx]
        flat = tuple(Fraction(x) for x in np.asarray(r, dtype=object).flat)
        if any(x != 0 for x in flat):
            viols.append(Violation(idx, flat))
    return CheckReport(identity, tuple(viols))


def _lt(idx):
    return idx[0] < idx[1]


def _strict_inc(idx):
    return all(a < b for a, b in zip(idx, idx[1:]))


# ---------------------------------------------------------------------------
# multiplication operators and representations
# ---------------------------------------------------------------------------


def left_mult(A: Algebra) -> np.ndarray:
    """Stack of L_i matrices, shape (n, n, n)."""
    return qarray(A.c.transpose(0, 2, 1))


def right_mult(A: Algebra) -> np.ndarray:
    """Stack of R_i matrices: R_i[k, j] = c[j, i, k]."""
    return qarray(A.c.transpose(1, 2, 0))


def adjoint(A: Algebra) -> np.ndarray:
    """ad_i = L_i - R_i, the adjoint action of the commutator algebra."""
    return qarray(left_mult(A) - right_mult(A))


def mult_operators(A: Algebra):
    return left_mult(A), right_mult(A), adjoint(A)


def rep_at(rho, x) -> np.ndarray:
    """Matrix of a linear map ``x -> rho(x)`` evaluated at a coordinate vector."""
    return qarray(np.einsum("i,ijk->jk", np.asarray(x, dtype=object), np.asarray(rho, dtype=object)))


def dual_rep(rho) -> np.ndarray:
    """rho*(x) = -rho(x)^T in dual bases."""
    return qarray(-np.asarray(rho, dtype=object).transpose(0, 2, 1))


# ---------------------------------------------------------------------------
# algebra identities
# ---------------------------------------------------------------------------


def associator(A: Algebra, x, y, z) -> np.ndarray:
    return qarray(A.mul(A.mul(x, y), z) - A.mul(x, A.mul(y, z)))


def associator_tensor(A: Algebra) -> np.ndarray:
    """as[i, j, l, k] = k-th coordinate of (e_i, e_j, e_l)."""
    c = A.c
    left = np.einsum("ijm,mlk->ijlk", c, c)
    right = np.einsum("jlm,imk->ijlk", c, c)
    return left - right


def check_left_symmetric(A: Algebra) -> CheckReport:
    a = associator_tensor(A)
    res = a - a.transpose(1, 0, 2, 3)
    return report_from_residuals("left-symmetric", res, 3, keep=_lt)


def check_associative(A: Algebra) -> CheckReport:
    return report_from_residuals("associative", associator_tensor(A), 3)


def check_commutative(A: Algebra) -> CheckReport:
    return report_from_residuals("commutative", A.c - A.c.transpose(1, 0, 2), 2, keep=_lt)


def is_structurally_skew(A: Algebra) -> bool:
    return np.array_equal(A.c, -A.c.transpose(1, 0, 2))


def commutator_constants(A: Algebra) -> np.ndarray:
    return qarray(A.c - A.c.transpose(1, 0, 2))


def sub_adjacent_lie(A: Algebra, check: bool = True) -> Algebra:
    """The commutator Lie algebra of a left-symmetric algebra."""
    if check:
        require(check_left_symmetric(A), f"{A.name or 'algebra'} is not left-symmetric")
    name = f"G({A.name})" if A.name else ""
    return Algebra(commutator_constants(A), name, "lie")


def check_jacobi(G: Algebra) -> CheckReport:
    if not is_structurally_skew(G):
        return precondition_failed("jacobi", "bracket table is not skew-symmetric")
    t = np.einsum("ijm,mlk->ijlk", G.c, G.c)
    res = t + np.einsum("jlik->ijlk", t) + np.einsum("lijk->ijlk", t)
    return report_from_residuals("jacobi", res, 3, keep=_strict_inc)


def check_regular_rep(A: Algebra) -> CheckReport:
    """[L_x, L_y] = L_[x,y] and [L_x, R_y] = R_xy - R_y R_x on basis pairs."""
    L, R, _ = mult_operators(A)
    br = commutator_constants(A)
    LL = np.einsum("iab,jbc->ijac", L, L)
    lhs1 = LL - LL.transpose(1, 0, 2, 3)
    rhs1 = np.einsum("ijk,kab->ijab", br, L)
    LR = np.einsum("iab,jbc->ijac", L, R)
    RL = np.einsum("jab,ibc->ijac", R, L)
    RR = np.einsum("jab,ibc->ijac", R, R)
    rhs2 = np.einsum("ijk,kab->ijab", A.c, R) - RR
    return combine(
        "regular-representation",
        report_from_residuals("L-bracket", lhs1 - rhs1, 2, keep=_lt),
        report_from_residuals("L-R-mixed", LR - RL - rhs2, 2),
    )


def check_novikov(A: Algebra) -> CheckReport:
    R = right_mult(A)
    RR = np.einsum("iab,jbc->ijac", R, R)
    return combine(
        "novikov",
        check_left_symmetric(A),
        report_from_residuals("right-multiplications-commute", RR - RR.transpose(1, 0, 2, 3), 2, keep=_lt),
    )


def check_2step_nilpotent(G: Algebra) -> CheckReport:
    t = np.einsum("ijm,mlk->ijlk", G.c, G.c)
    return report_from_residuals("2-step-nilpotent", t, 3)


# ---------------------------------------------------------------------------
# bilinear forms
# ---------------------------------------------------------------------------


def as_form(B, n: int | None = None) -> np.ndarray:
    B = qarray(B)
    if B.ndim != 2 or B.shape[0] != B.shape[1] or (n is not None and B.shape[0] != n):
        raise ValueError(f"bilinear form must be {n} x {n}, got shape {B.shape}")
    return B


def is_symmetric(B) -> bool:
    B = np.asarray(B, dtype=object)
    return np.array_equal(B, B.T)


def is_skew(B) -> bool:
    B = np.asarray(B, dtype=object)
    return np.array_equal(B, -B.T)


def is_nondegenerate(B) -> bool:
    try:
        invert(B)
    except SingularMatrixError:
        return False
    return True


def _form_on_products(c, B):
    """F[i, j, l] = B(e_i e_j, e_l)."""
    return np.einsum("ijk,kl->ijl", c, B)


def _form_on_second_products(c, B):
    """F[i, j, l] = B(e_i, e_j e_l)."""
    return np.einsum("jlk,ik->ijl", c, B)


def check_lie_2cocycle(G: Algebra, omega) -> CheckReport:
    omega = as_form(omega, G.dim)
    if not is_skew(omega):
        return precondition_failed("lie-2-cocycle", "form is not skew-symmetric")
    f = _form_on_products(G.c, omega)
    res = f + np.einsum("jli->ijl", f) + np.einsum("lij->ijl", f)
    return report_from_residuals("lie-2-cocycle", res, 3, keep=_strict_inc)


def check_symplectic(G: Algebra, omega) -> CheckReport:
    omega = as_form(omega, G.dim)
    parts = [check_lie_2cocycle(G, omega)]
    if not is_nondegenerate(omega):
        parts.append(precondition_failed("nondegenerate", "form is degenerate"))
    return combine("symplectic", *parts)


def check_lsa_2cocycle(A: Algebra, B) -> CheckReport:
    """B(xy,z) - B(x,yz) = B(yx,z) - B(y,xz)."""
    B = as_form(B, A.dim)
    f = _form_on_products(A.c, B) - _form_on_second_products(A.c, B)
    res = f - f.transpose(1, 0, 2)
    return report_from_residuals("lsa-2-cocycle", res, 3, keep=_lt)


def check_invariant_form(G: Algebra, B) -> CheckReport:
    """B([x,y],z) = B(x,[y,z])."""
    B = as_form(B, G.dim)
    res = _form_on_products(G.c, B) - _form_on_second_products(G.c, B)
    return report_from_residuals("invariant-form", res, 3)


def check_trace_form(A: Algebra, B) -> CheckReport:
    """B(xy,z) = B(x,yz)."""
    B = as_form(B, A.dim)
    res = _form_on_products(A.c, B) - _form_on_second_products(A.c, B)
    return report_from_residuals("trace-form", res, 3)


def check_left_invariant_form(A: Algebra, B) -> CheckReport:
    """B(xy,z) = -B(y,xz)."""
    B = as_form(B, A.dim)
    lhs = _form_on_products(A.c, B)
    # B(e_j, e_i e_l)
    rhs = np.einsum("ilk,jk->ijl", A.c, B)
    return report_from_residuals("left-invariant-form", lhs + rhs, 3)


def check_orthonormal_constants(A: Algebra) -> CheckReport:
    """c_ij^k - c_ji^k + c_ik^j - c_jk^i = 0: the 2-cocycle condition for B = identity."""
    c = A.c
    res = c - np.einsum("jik->ijk", c) + np.einsum("ikj->ijk", c) - np.einsum("jki->ijk", c)
    return report_from_residuals("orthonormal-cocycle-constants", res, 3)


def check_hessian(A: Algebra, B) -> CheckReport:
    B = as_form(B, A.dim)
    parts = []
    if not is_symmetric(B):
        parts.append(precondition_failed("symmetric", "form is not symmetric"))
    minors = leading_minors(B)
    bad = [k for k, m in enumerate(minors) if m <= 0]
    if bad:
        parts.append(
            CheckReport(
                "positive-definite",
                tuple(Violation((k,), (minors[k],), "leading principal minor not positive") for k in bad),
            )
        )
    parts.append(check_lsa_2cocycle(A, B))
    if np.array_equal(B, eye(A.dim)):
        parts.append(check_orthonormal_constants(A))
    return combine("hessian", *parts)


__all__ = [
    "Algebra",
    "CheckReport",
    "ConstructionError",
    "Violation",
    "KINDS",
    "adjoint",
    "as_form",
    "associator",
    "associator_tensor",
    "basis_vector",
    "check_2step_nilpotent",
    "check_associative",
    "check_commutative",
    "check_hessian",
    "check_invariant_form",
    "check_jacobi",
    "check_left_invariant_form",
    "check_left_symmetric",
    "check_lie_2cocycle",
    "check_lsa_2cocycle",
    "check_novikov",
    "check_orthonormal_constants",
    "check_regular_rep",
    "check_symplectic",
    "check_trace_form",
    "combine",
    "commutator_constants",
    "dual_rep",
    "is_nondegenerate",
    "is_skew",
    "is_structurally_skew",
    "is_symmetric",
    "left_mult",
    "mult_operators",
    "precondition_failed",
    "require",
    "rep_at",
    "report_from_residuals",
    "right_mult",
    "sub_adjacent_lie",
    "zero_algebra",
]
