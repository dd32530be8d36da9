"""Randomized cross-checks between equivalent formulations.

Each function draws ``cases`` instances from per-case seeds derived from one
root seed and returns an agreement report: a violation is a case where the
verdicts that should coincide do not.  The verdict tallies are kept in
``counts`` on the returned object.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .algebra import CheckReport, Violation, check_left_symmetric, check_lsa_2cocycle, left_mult
from .arith import eye
from .bialgebra import (
    BialgebraPair,
    check_lie_bialgebra,
    check_lie_bialgebra_compat,
    check_lie_matched_pair_of,
    check_lsa_bialgebra,
    check_lsa_matched_pair_of,
    check_parakahler,
    double_lie_from_bialgebra,
    lie_of,
)
from .fixtures import LSA_FIXTURES
from .randgen import case_seeds, invertible, make_rng, nondegenerate_symmetric, random_lsa, random_lsa_pair, symmetric_tensor, tensor2
from .yangbaxter import (
    OOperatorData,
    canonical_skew_solution,
    canonical_symmetric_solution,
    check_coboundary_bialgebra,
    check_cybe,
    check_o_operator,
    check_s_equation,
    check_s_operator_form,
    coboundary_pair,
    induced_form,
    skew_solution_from_o_operator,
    symmetric_solution_from_o_operator,
)
from .fixtures import hyperbolic


@dataclass(frozen=True)
class Agreement:
    report: CheckReport
    counts: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return self.report.passed


def _agreement(identity, rows) -> Agreement:
    """rows: iterable of (case label, tuple of verdicts that must coincide)."""
    viols, counts = [], Counter()
    for label, verdicts in rows:
        counts[verdicts] += 1
        if len(set(verdicts)) > 1:
            viols.append(Violation(label, (), f"verdicts {verdicts}"))
    return Agreement(CheckReport(identity, tuple(viols)), counts)


def random_lsa_instances(seed: int, cases: int, max_dim: int = 4):
    for k, s in enumerate(case_seeds(seed, cases)):
        rng = make_rng(s)
        yield (k,), random_lsa(rng, int(rng.integers(1, max_dim + 1)))


def canonical_solutions(seed: int, cases: int, max_dim: int = 4) -> Agreement:
    """Canonical symmetric and skew solutions on fixtures plus random tables.

    Per case the tuple is (S-equation, form equals hyperbolic, 2-cocycle, CYBE);
    all must be True, so any False is reported.
    """
    inst = [((A.name,), A) for A in LSA_FIXTURES] + list(random_lsa_instances(seed, cases, max_dim))
    viols = []
    counts = Counter()
    for label, A in inst:
        sym = canonical_symmetric_solution(A)
        skew = canonical_skew_solution(A)
        v = (
            check_s_equation(sym.algebra, sym.r).passed,
            bool(np.array_equal(sym.form, hyperbolic(A.dim))),
            check_lsa_2cocycle(sym.algebra, sym.form).passed,
            check_cybe(skew.algebra, skew.r).passed,
        )
        counts[v] += 1
        if not all(v):
            viols.append(Violation(label, (), f"verdicts {v}"))
    return Agreement(CheckReport("canonical-solutions", tuple(viols)), counts)


def coboundary_vs_bialgebra(seed: int, per_algebra: int, algebras=LSA_FIXTURES) -> Agreement:
    """Coboundary conditions for r versus the bialgebra axioms of the induced pair."""
    rows = []
    for A in algebras:
        for k, s in enumerate(case_seeds(seed + A.dim, per_algebra)):
            rng = make_rng(s)
            n = A.dim
            r = symmetric_tensor(rng, n) if rng.random() < 0.3 else tensor2(rng, n)
            rows.append(((A.name, k), (check_coboundary_bialgebra(A, r).passed, check_lsa_bialgebra(coboundary_pair(A, r)).passed)))
    return _agreement("coboundary-vs-bialgebra", rows)


def random_pair(rng, max_dim: int = 3) -> BialgebraPair:
    """Half coboundary pairs (often bialgebras), half independent random tables."""
    n = int(rng.integers(1, max_dim + 1))
    if rng.random() < 0.5:
        A = random_lsa(rng, n)
        p = coboundary_pair(A, tensor2(rng, n))
        if check_left_symmetric(p.Adual):
            return p
    return random_lsa_pair(rng, n)


def four_way(seed: int, cases: int, max_dim: int = 3) -> Agreement:
    """Parakähler double, Lie matched pair, LSA matched pair, bialgebra."""
    rows = []
    for k, s in enumerate(case_seeds(seed, cases)):
        p = random_pair(make_rng(s), max_dim)
        rows.append(
            (
                (k,),
                (
                    check_parakahler(double_lie_from_bialgebra(p, check=False)).passed,
                    check_lie_matched_pair_of(p).passed,
                    check_lsa_matched_pair_of(p).passed,
                    check_lsa_bialgebra(p).passed,
                ),
            )
        )
    return _agreement("four-way", rows)


def symmetric_r_equivalences(seed: int, cases: int, max_dim: int = 3) -> Agreement:
    """S-equation versus the 2-cocycle <r^{-1} ., .> versus the operator form."""
    rows = []
    for k, s in enumerate(case_seeds(seed, cases)):
        rng = make_rng(s)
        A = random_lsa(rng, int(rng.integers(1, max_dim + 1)))
        r = nondegenerate_symmetric(rng, A.dim)
        rows.append(
            ((k,), (check_s_equation(A, r).passed, check_lsa_2cocycle(A, induced_form(r)).passed, check_s_operator_form(A, r).passed))
        )
    return _agreement("symmetric-r-equivalences", rows)


def o_operator_instances(A):
    """(T = id, rho = L) on the commutator algebra of A."""
    return OOperatorData(lie_of(A), left_mult(A), eye(A.dim))


def faithful(A) -> bool:
    """Whether x -> L_x is injective."""
    from .arith import rank

    L = left_mult(A)
    return rank(np.array([L[i].flatten() for i in range(A.dim)], dtype=object)) == A.dim if A.dim else True


def o_operator_solutions(seed: int, cases: int, max_dim: int = 3, only_failing: bool = False) -> Agreement:
    """Random invertible T with rho = L on faithful random algebras.

    Tuple per case: (O-operator, S-equation of T + T^21, CYBE of T - T^21).
    With ``only_failing`` only maps that are not O-operators are kept.
    """
    rows = []
    k = 0
    for s in case_seeds(seed, cases * 50):
        if k >= cases:
            break
        rng = make_rng(s)
        A = random_lsa(rng, int(rng.integers(2 if only_failing else 1, max_dim + 1)))
        if not faithful(A):
            continue
        d = OOperatorData(lie_of(A), left_mult(A), invertible(rng, A.dim))
        if only_failing and check_o_operator(d):
            continue
        sym = symmetric_solution_from_o_operator(d, check=False)
        skew = skew_solution_from_o_operator(d)
        rows.append(((k,), (check_o_operator(d).passed, sym.reports["s-equation"].passed, skew.reports["cybe"].passed)))
        k += 1
    return _agreement("o-operator-solutions", rows)


def lie_compat_vs_lie_bialgebra(seed: int, cases: int, max_dim: int = 3) -> Agreement:
    """On verified left-symmetric bialgebras: compatibility identity versus the Lie bialgebra check."""
    rows = []
    for k, s in enumerate(case_seeds(seed, cases * 5)):
        if len(rows) >= cases:
            break
        p = random_pair(make_rng(s), max_dim)
        if not check_lsa_bialgebra(p):
            continue
        rows.append(((k,), (check_lie_bialgebra_compat(p).passed, check_lie_bialgebra(lie_of(p.A), lie_of(p.Adual)).passed)))
    return _agreement("lie-compat-vs-lie-bialgebra", rows)


def run_suite(seed: int, cases: int = 20) -> list[CheckReport]:
    runs = [
        canonical_solutions(seed, cases),
        coboundary_vs_bialgebra(seed, cases),
        four_way(seed, cases),
        symmetric_r_equivalences(seed, cases),
        o_operator_solutions(seed, cases),
        lie_compat_vs_lie_bialgebra(seed, cases),
    ]
    return [r.report for r in runs]


__all__ = [
    "Agreement",
    "canonical_solutions",
    "coboundary_vs_bialgebra",
    "faithful",
    "four_way",
    "lie_compat_vs_lie_bialgebra",
    "o_operator_instances",
    "o_operator_solutions",
    "random_pair",
    "run_suite",
    "symmetric_r_equivalences",
]
