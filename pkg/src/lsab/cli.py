"""Command-line interface: ``lsab <command> [options] FILE``.

Exit codes: 0 when every check passes or a construction succeeds, 1 when a
check fails (the report lists the violations), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import algebra as alg
from . import constructions as cons
from .algebra import Algebra, CheckReport, ConstructionError, combine
from .arith import parse_rational, qarray
from .bialgebra import (
    check_lie_bialgebra,
    check_lie_bialgebra_compat,
    check_lie_matched_pair_of,
    check_lsa_bialgebra,
    check_lsa_matched_pair_of,
    check_manin_triple,
    bialgebra_matched_pair,
    halves,
    hyperbolic_form,
    lie_of,
    standard_manin_double,
)
from .io import DocObject, ParseError, algebra_object, document_of, emit_document, read_document, tensor_object, form_object
from .reps import lsa_from_matched_pair, semidirect_lsa
from .yangbaxter import (
    canonical_skew_solution,
    canonical_symmetric_solution,
    check_cybe,
    check_o_operator,
    check_s_equation,
    skew_solution_from_o_operator,
    symmetric_solution_from_o_operator,
    symplectic_double,
)

DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


# identity name -> (checker, needs a form)
IDENTITIES = {
    "left-symmetric": (alg.check_left_symmetric, False),
    "associative": (alg.check_associative, False),
    "commutative": (alg.check_commutative, False),
    "jacobi": (alg.check_jacobi, False),
    "novikov": (alg.check_novikov, False),
    "regular-rep": (alg.check_regular_rep, False),
    "2-step-nilpotent": (alg.check_2step_nilpotent, False),
    "orthonormal-constants": (alg.check_orthonormal_constants, False),
    "lie-2cocycle": (alg.check_lie_2cocycle, True),
    "symplectic": (alg.check_symplectic, True),
    "lsa-2cocycle": (alg.check_lsa_2cocycle, True),
    "invariant-form": (alg.check_invariant_form, True),
    "trace-form": (alg.check_trace_form, True),
    "left-invariant-form": (alg.check_left_invariant_form, True),
    "hessian": (alg.check_hessian, True),
}


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _pick(doc, name, type_):
    if name is None:
        names = doc.names(type_)
        if len(names) != 1:
            raise UsageError(f"document has {len(names)} objects of type {type_}; name one explicitly")
        name = names[0]
    try:
        return doc.get(name, type_)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _vector(text: str, lenient: bool) -> np.ndarray:
    try:
        return qarray([parse_rational(t.strip(), lenient) for t in text.split(",")])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _as_lie(G: Algebra) -> Algebra:
    return G if alg.is_structurally_skew(G) else lie_of(G)


class Output:
    def __init__(self, as_json: bool, stream=None, log=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self.log = log or sys.stderr

    def report(self, rep: CheckReport) -> int:
        if self.as_json:
            self.stream.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
        else:
            self.stream.write(_render(rep) + "\n")
        return 0 if rep.passed else 1

    def reports(self, reps: list[CheckReport]) -> int:
        if self.as_json:
            self.stream.write(json.dumps([r.to_dict() for r in reps], sort_keys=True) + "\n")
        else:
            for r in reps:
                self.stream.write(_render(r) + "\n")
        return 0 if all(r.passed for r in reps) else 1

    def document(self, doc, rep: CheckReport | None = None) -> int:
        text = emit_document(doc)
        if self.as_json:
            body = {"verdict": "pass" if rep is None else rep.verdict, "document": json.loads(text)}
            if rep is not None:
                body["report"] = rep.to_dict()
            self.stream.write(json.dumps(body, sort_keys=True) + "\n")
        else:
            # the report goes to stderr so that stdout stays a parseable document
            if rep is not None:
                self.log.write(_render(rep) + "\n")
            self.stream.write(text)
        return 0 if rep is None or rep.passed else 1


def _render(rep: CheckReport, depth: int = 0) -> str:
    pad = "  " * depth
    lines = [pad + rep.summary().replace("\n", "\n" + pad)]
    for p in rep.parts:
        if not p.passed:
            lines.append(_render(p, depth + 1))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_check(args, doc, out: Output) -> int:
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; choose from {', '.join(IDENTITIES)}")
    fn, needs_form = IDENTITIES[args.identity]
    names = sorted(doc.names("algebra")) if args.all else [args.algebra]
    reps = []
    for name in names:
        A = _pick(doc, name, "algebra")
        if needs_form:
            rep = fn(A, _pick(doc, args.form, "form"))
        else:
            rep = fn(A)
        if args.all:
            rep = CheckReport(f"{name}: {rep.identity}", rep.violations, rep.parts)
        reps.append(rep)
    return out.report(reps[0]) if len(reps) == 1 else out.reports(reps)


def cmd_sub_adjacent(args, doc, out):
    A = _pick(doc, args.algebra, "algebra")
    rep = alg.check_left_symmetric(A)
    if not rep:
        return out.report(rep)
    G = alg.sub_adjacent_lie(A)
    return out.document(document_of(algebra_object(G, f"G({A.name})")))


def cmd_construct(args, doc, out):
    how = args.how
    if how == "dotvec":
        if args.dim is None or args.vector is None:
            raise UsageError("dotvec needs --dim and --vector")
        A = cons.lsa_from_dot_vector(args.dim, _vector(args.vector, args.lenient))
        return out.document(document_of(algebra_object(A, "dotvec")))
    A = _pick(doc, args.algebra, "algebra")
    if how == "novikov":
        D = _pick(doc, args.map, "tensor2")
        a = _vector(args.vector, args.lenient) if args.vector else 0
        B = cons.novikov_from_derivation(A, D, a=a, variant=args.variant)
    elif how == "rmatrix":
        B = cons.lsa_from_rmatrix(A, _pick(doc, args.map, "tensor2"))
    elif how == "rota-baxter":
        B = cons.lsa_from_rota_baxter(A, _pick(doc, args.map, "tensor2"))
    elif how == "symplectic":
        B = cons.lsa_from_symplectic(A, _pick(doc, args.form, "form"))
    elif how == "central-ext":
        B = cons.central_extension(A, _pick(doc, args.form, "form"))
    else:
        raise UsageError(f"unknown construction {how!r}")
    return out.document(document_of(algebra_object(B, f"{how}({A.name})")))


def cmd_semidirect(args, doc, out):
    A = _pick(doc, args.algebra, "algebra")
    S, T = _pick(doc, args.bimodule, "bimodule")
    B = semidirect_lsa(A, S, T)
    return out.document(document_of(algebra_object(B, f"{A.name}+V")))


def cmd_matched_pair(args, doc, out):
    p = _pick(doc, args.pair, "pair")
    rep = combine("matched-pairs", check_lie_matched_pair_of(p), check_lsa_matched_pair_of(p))
    if not rep:
        return out.report(rep)
    B = lsa_from_matched_pair(bialgebra_matched_pair(p), check=False)
    return out.document(document_of(algebra_object(B, "double")), rep)


def cmd_bialgebra(args, doc, out):
    return out.report(check_lsa_bialgebra(_pick(doc, args.pair, "pair")))


def cmd_double(args, doc, out):
    p = _pick(doc, args.pair, "pair")
    pre = check_lsa_bialgebra(p)
    if not pre:
        return out.report(pre)
    sd = symplectic_double(p, check=False)
    rep = combine("symplectic-double", *(CheckReport(k, v.violations, v.parts) for k, v in sd.reports.items()))
    d = document_of(
        algebra_object(sd.algebra, "SD"),
        algebra_object(sd.pair.Adual, "SD*"),
        tensor_object("r", sd.r),
        DocObject("P", "pair", sd.pair, {"algebra": "SD", "dual": "SD*"}),
    )
    return out.document(d, rep)


def cmd_s_equation(args, doc, out):
    A = _pick(doc, args.algebra, "algebra")
    return out.report(check_s_equation(A, _pick(doc, args.r, "tensor2")))


def cmd_cybe(args, doc, out):
    G = _as_lie(_pick(doc, args.algebra, "algebra"))
    return out.report(check_cybe(G, _pick(doc, args.r, "tensor2")))


def cmd_o_operator(args, doc, out):
    return out.report(check_o_operator(_pick(doc, args.op, "ooperator")))


def cmd_from_o_operator(args, doc, out):
    d = _pick(doc, args.op, "ooperator")
    sol = skew_solution_from_o_operator(d) if args.skew else symmetric_solution_from_o_operator(d)
    rep = combine("from-o-operator", *(CheckReport(k, v.violations, v.parts) for k, v in sol.reports.items()))
    return out.document(document_of(algebra_object(sol.algebra, "ambient"), tensor_object("r", sol.r)), rep)


def cmd_canonical_r(args, doc, out):
    A = _pick(doc, args.algebra, "algebra")
    if args.skew:
        sol = canonical_skew_solution(A)
        rep = check_cybe(sol.algebra, sol.r)
    else:
        sol = canonical_symmetric_solution(A)
        rep = check_s_equation(sol.algebra, sol.r)
    d = document_of(algebra_object(sol.algebra, "ambient"), tensor_object("r", sol.r), form_object("B", sol.form))
    return out.document(d, rep)


def cmd_manin(args, doc, out):
    p = _pick(doc, args.pair, "pair")
    G, Gd = lie_of(p.A), lie_of(p.Adual)
    lb = check_lie_bialgebra(G, Gd)
    if not lb:
        return out.report(lb)
    P = standard_manin_double(G, Gd)
    plus, minus = halves(p.dim)
    return out.report(combine("manin", lb, check_manin_triple(P, plus, minus, hyperbolic_form(p.dim))))


def cmd_lie_compat(args, doc, out):
    return out.report(check_lie_bialgebra_compat(_pick(doc, args.pair, "pair")))


def cmd_suite(args, doc, out):
    from .suite import run_suite

    return out.reports(run_suite(args.seed, args.cases))


COMMANDS = {
    "check": cmd_check,
    "sub-adjacent": cmd_sub_adjacent,
    "construct": cmd_construct,
    "semidirect": cmd_semidirect,
    "matched-pair": cmd_matched_pair,
    "bialgebra": cmd_bialgebra,
    "double": cmd_double,
    "s-equation": cmd_s_equation,
    "cybe": cmd_cybe,
    "o-operator": cmd_o_operator,
    "from-o-operator": cmd_from_o_operator,
    "canonical-r": cmd_canonical_r,
    "manin": cmd_manin,
    "lie-compat": cmd_lie_compat,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable report")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="root seed for randomized suites")
    common.add_argument("--lenient", action="store_true", default=argparse.SUPPRESS, help="normalize unreduced rationals")

    p = argparse.ArgumentParser(prog="lsab", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, file_=True):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if file_:
            sp.add_argument("file", help=".lsab document")
        return sp

    sp = add("check", "check an identity on an algebra")
    sp.add_argument("--identity", required=True, help=", ".join(IDENTITIES))
    sp.add_argument("--algebra")
    sp.add_argument("--form")
    sp.add_argument("--all", action="store_true", help="check every algebra in the document")

    add("sub-adjacent", "commutator Lie algebra of a left-symmetric algebra").add_argument("--algebra")

    sp = add("construct", "build a left-symmetric algebra", file_=False)
    sp.add_argument("how", choices=["novikov", "rmatrix", "rota-baxter", "dotvec", "symplectic", "central-ext"])
    sp.add_argument("file", nargs="?")
    sp.add_argument("--algebra")
    sp.add_argument("--map", help="tensor2 object holding a linear map")
    sp.add_argument("--form")
    sp.add_argument("--variant", default="gelfand", choices=["gelfand", "filipov", "xu"])
    sp.add_argument("--vector", help="comma-separated rationals")
    sp.add_argument("--dim", type=int)

    sp = add("semidirect", "semidirect product with a bimodule")
    sp.add_argument("--algebra")
    sp.add_argument("--bimodule")

    for name, help_ in [
        ("matched-pair", "matched-pair checks and the double of a pair"),
        ("bialgebra", "left-symmetric bialgebra check"),
        ("double", "symplectic double of a bialgebra"),
        ("manin", "Lie bialgebra and Manin triple of the commutator pair"),
        ("lie-compat", "compatibility identity for a Lie bialgebra"),
    ]:
        add(name, help_).add_argument("--pair")

    for name, help_ in [("s-equation", "S-equation for a symmetric tensor"), ("cybe", "classical Yang-Baxter equation")]:
        sp = add(name, help_)
        sp.add_argument("--algebra")
        sp.add_argument("--r", required=True)

    add("o-operator", "O-operator identity").add_argument("--op")
    sp = add("from-o-operator", "solution r = T + T^21 (or T - T^21 with --skew)")
    sp.add_argument("--op")
    sp.add_argument("--skew", action="store_true")
    sp = add("canonical-r", "canonical symmetric (or --skew) solution on A + A*")
    sp.add_argument("--algebra")
    sp.add_argument("--skew", action="store_true")

    sp = add("suite", "randomized equivalence suite", file_=False)
    sp.add_argument("--cases", type=int, default=20)
    return p


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.json = getattr(args, "json", False)
    args.lenient = getattr(args, "lenient", False)
    seed = getattr(args, "seed", DEFAULT_SEED)
    if os.environ.get("LSAB_SEED"):
        try:
            seed = int(os.environ["LSAB_SEED"])
        except ValueError:
            stderr.write("lsab: LSAB_SEED must be an integer\n")
            return 2
    args.seed = seed
    out = Output(args.json, stdout, stderr)
    try:
        doc = read_document(args.file, args.lenient) if getattr(args, "file", None) else None
        if doc is None and args.command not in ("suite", "construct"):
            raise UsageError("missing input file")
        if doc is None and args.command == "construct" and args.how != "dotvec":
            raise UsageError("missing input file")
        return COMMANDS[args.command](args, doc, out)
    except ParseError as exc:
        stderr.write(f"lsab: {args.file}: {exc}\n")
        return 2
    except ConstructionError as exc:
        if exc.report is not None:
            out.report(exc.report)
        stderr.write(f"lsab: {str(exc).splitlines()[0]}\n")
        return 1
    except (UsageError, OSError, ValueError) as exc:
        stderr.write(f"lsab: {exc}\n")
        return 2


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
