"""Command line front end.

Every command prints one JSON document on stdout.  Exit status is 0 on
success, 2 when the input is mathematically inadmissible (for example an
empty Hilbert scheme) and 1 on internal errors or exhausted budgets.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .betti import (
    FieldSpec,
    LatticeTooLarge,
    Over,
    WindowError,
    betti_ambient,
    betti_eliahou_kervaire,
    betti_quadratic_recursion,
    betti_resolution_oracle,
    bounds_report,
)
from .cl_ring import INF, CLRing
from .enumeration import BudgetExceeded, EnumerationBudget, enumerate_points
from .hilbert import (
    InvalidPolynomial,
    gotzmann_number,
    hf,
    hf_hp_threshold,
    hilbert_polynomial,
    parse_poly,
)
from .ideal import MonomialIdeal, classify, from_generators
from .monomial import parse_monomial
from .points import (
    AXIOMS,
    EmptyHilbertScheme,
    check_axiom,
    exp_chain,
    exp_point,
    hilb_nonempty,
    hyperplane_check,
    lex_chain,
    lex_eq_exp_case,
    lex_point,
    linear_forms_check,
)


class DomainError(Exception):
    def __init__(self, kind: str, detail: str):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail


class _Parser(argparse.ArgumentParser):
    """Usage errors become JSON errors like every other failure."""

    def error(self, message):
        raise DomainError("invalid-argument", message)


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ------------------------------------------------------------ parsing

def parse_ring(text: str) -> CLRing:
    try:
        return CLRing.parse(text)
    except ValueError as e:
        raise DomainError("invalid-ring", str(e))


def parse_polynomial(text: str):
    try:
        return parse_poly(text)
    except ValueError as e:
        raise DomainError("invalid-polynomial", str(e))


def parse_ideal(text: str, r: CLRing | None) -> MonomialIdeal:
    """JSON ``{"ring": .., "gens": [[..]]}``, a JSON list of exponent vectors,
    or an inline list such as ``x1*x2, x1*x3^5``."""
    text = text.strip()
    try:
        if text.startswith("{"):
            I = MonomialIdeal.from_json(json.loads(text))
            if r is not None and I.ring != r:
                raise DomainError("invalid-ideal", f"ideal ring {I.ring} differs from --ring {r}")
            return I
        if r is None:
            raise DomainError("invalid-ideal", "--ring is required unless the ideal is a JSON object")
        if text.startswith("["):
            return from_generators(r, json.loads(text))
        body = text.strip("()")
        gens = [parse_monomial(r, t) for t in body.split(",") if t.strip()]
        return from_generators(r, gens)
    except DomainError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise DomainError("invalid-ideal", str(e))


def _ring_arg(args):
    return parse_ring(args.ring) if getattr(args, "ring", None) else None


def _poly_case(args):
    r = parse_ring(args.ring)
    p = parse_polynomial(args.poly)
    if not hilb_nonempty(p, r):
        raise DomainError("empty-hilbert-scheme", f"Hilb^({p}) of Proj {r} is empty")
    return r, p


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.char)
    except ValueError as e:
        raise DomainError("invalid-field", str(e))


# ------------------------------------------------------------ commands

def cmd_check(args):
    r, p = _poly_case(args)
    return {"ring": str(r), "poly": str(p), "nonempty": True, "gotzmann_number": gotzmann_number(p)}


def cmd_hf(args):
    I = parse_ideal(args.ideal, _ring_arg(args))
    top = args.upto if args.upto is not None else args.degree
    lo = 0 if args.upto is not None else args.degree
    return {"ideal": I.to_json(), "hf": {str(j): hf(I, j) for j in range(lo, top + 1)}}


def cmd_hp(args):
    I = parse_ideal(args.ideal, _ring_arg(args))
    p = hilbert_polynomial(I)
    return {"ideal": I.to_json(), "hp": str(p), "coeffs": p.to_json()["coeffs"],
            "hf_hp_threshold": hf_hp_threshold(I)}


def cmd_lex(args):
    r, p = _poly_case(args)
    I = lex_point(p, r)
    return {"ring": str(r), "poly": str(p), "ideal": I.to_json(), "display": str(I)}


def cmd_exp(args):
    r, p = _poly_case(args)
    I = exp_point(p, r)
    return {"ring": str(r), "poly": str(p), "ideal": I.to_json(), "display": str(I)}


def cmd_chain(args):
    r, p = _poly_case(args)
    return (lex_chain if args.kind == "lex" else exp_chain)(p, r).to_json()


def cmd_enumerate(args):
    r, p = _poly_case(args)
    budget = EnumerationBudget(max_gen_degree=args.max_degree, max_candidates=args.max_candidates)
    res = enumerate_points(p, r, budget)
    ideals = [I for I in res.ideals if not args.almost_lex or classify(I).almost_lex]
    return {
        "ring": str(r),
        "poly": str(p),
        "complete": res.complete,
        "max_gen_degree": res.max_gen_degree,
        "count": len(ideals),
        "ideals": [I.to_json() for I in ideals],
    }


def cmd_classify(args):
    I = parse_ideal(args.ideal, _ring_arg(args))
    return {"ideal": I.to_json(), "classification": classify(I).as_dict()}


def cmd_betti(args):
    I = parse_ideal(args.ideal, _ring_arg(args))
    f = _field(args)
    if args.method == "lattice":
        if args.over != "ambient":
            raise DomainError("invalid-argument", "the lattice method resolves over the ambient ring")
        table = betti_ambient(I, f)
    elif args.method == "eliahou-kervaire":
        try:
            table = betti_eliahou_kervaire(I)
        except ValueError as e:
            raise DomainError("invalid-ideal", str(e))
    elif args.method == "recursion":
        try:
            totals = betti_quadratic_recursion(I, args.imax)
        except ValueError as e:
            raise DomainError("invalid-ideal", str(e))
        return {"ideal": I.to_json(), "method": "recursion", "totals": totals}
    else:
        table = betti_resolution_oracle(I, Over(args.over), f, args.imax, args.jmax)
    if args.format == "csv":
        return table.to_csv()
    return {"ideal": I.to_json(), "method": args.method, "betti": table.to_json()}


def cmd_bounds(args):
    r, p = _poly_case(args)
    return bounds_report(p, r, _field(args)).to_json()


def cmd_check_axioms(args):
    r, p = _poly_case(args)
    which = args.axiom or list(AXIOMS)
    witnesses = None
    if any(a.upper() in ("A6", "A7") for a in which):
        witnesses = list(enumerate_points(p, r).ideals)
    reports = []
    for a in which:
        w = witnesses if a.upper() in ("A6", "A7") else None
        reports.append(check_axiom(a, p, r, w).to_json())
    return {"ring": str(r), "poly": str(p), "pass": all(x["pass"] for x in reports), "axioms": reports}


def cmd_classify_case(args):
    r, p = _poly_case(args)
    case = lex_eq_exp_case(p, r)
    return {"ring": str(r), "poly": str(p), "case": case.value,
            "lex_equals_exp": lex_point(p, r) == exp_point(p, r)}


def cmd_verify(args):
    cases = read_matrix(Path(args.matrix))
    suites = ["axioms", "bounds", "infinite"] if args.suite == "all" else [args.suite]
    results = []
    for case in cases:
        for suite in suites:
            results.append(run_case(suite, case))
    return {"suite": args.suite, "matrix": str(args.matrix),
            "pass": all(r["pass"] for r in results), "cases": results}


# ------------------------------------------------------------ verify suites

@dataclass
class Case:
    ring: CLRing
    poly: object
    line: int
    options: dict = field(default_factory=dict)

    def budget(self) -> EnumerationBudget:
        return EnumerationBudget(
            max_gen_degree=int(self.options["max_degree"]) if "max_degree" in self.options else None,
            max_candidates=int(self.options.get("max_candidates", 10**6)),
        )


def read_matrix(path: Path) -> list:
    """One case per line: ``ring=... poly=... [key=value ...]``; ``#`` starts a comment."""
    try:
        text = path.read_text()
    except OSError as e:
        raise DomainError("invalid-config", str(e))
    cases = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        opts = {}
        for tok in shlex.split(line):
            if "=" not in tok:
                raise DomainError("invalid-config", f"line {n}: expected key=value, got {tok!r}")
            k, v = tok.split("=", 1)
            opts[k.strip()] = v.strip()
        if "ring" not in opts or "poly" not in opts:
            raise DomainError("invalid-config", f"line {n}: ring= and poly= are required")
        r = parse_ring(opts.pop("ring"))
        p = parse_polynomial(opts.pop("poly"))
        cases.append(Case(r, p, n, opts))
    return cases


def _check(name, ok, **detail):
    return {"name": name, "pass": bool(ok), **detail}


def _suite_axioms(case: Case, out: list):
    r, p = case.ring, case.poly
    pts = list(enumerate_points(p, r, case.budget()).ideals)
    which = case.options.get("axioms", ",".join(AXIOMS)).split(",")
    for a in which:
        w = pts if a in ("A6", "A7") else None
        if a == "A3" and "offsets" in case.options:
            w = [int(b) for b in case.options["offsets"].split(",")]
        rep = check_axiom(a, p, r, w)
        failures = [i for i in rep.instances if not i["pass"]]
        out.append(_check(a, rep.passed, instances=len(rep.instances), failures=failures[:5]))
    E = exp_point(p, r)
    bad = []
    top = max(g[-2] for J in pts for g in J.gens) + 1 if r.varcount >= 2 and pts and any(J.gens for J in pts) else 1
    for J in pts:
        for h in range(top + 1):
            if not hyperplane_check(p, r, J, h):
                bad.append({"witness": str(J), "h": h})
    out.append(_check("hyperplane", not bad, failures=bad[:5]))
    bad = [str(J) for J in pts if not linear_forms_check(p, r, J)]
    out.append(_check("linear-forms", not bad, failures=bad[:5]))
    out.append(_check("exp-is-witness", E in pts))


def _suite_bounds(case: Case, out: list):
    r, p = case.ring, case.poly
    rep = bounds_report(p, r, FieldSpec(int(case.options.get("char", 0))))
    totals = rep.table.totals()
    entry = _check("report", True, exp=str(rep.ideal), totals=totals,
                   provenance=rep.provenance.value)
    out.append(entry)
    if "expect" in case.options:
        want = [int(x) for x in case.options["expect"].split(",")]
        side = case.options.get("side", "quotient")
        got = rep.table.ideal_totals() if side == "ideal" else totals[1:]
        got = got[: len(want)] + [0] * (len(want) - len(got))
        out.append(_check("expected-totals", got == want, side=side, expected=want, computed=got))
    if case.options.get("enumerate", "yes") != "no":
        pts = enumerate_points(p, r, case.budget()).ideals
        bad = []
        for J in pts:
            t = betti_ambient(J).totals()
            if any(a > b for a, b in zip(t, totals + [0] * len(t))):
                bad.append({"witness": str(J), "totals": t})
        out.append(_check("extremal", not bad, witnesses=len(pts), failures=bad[:5]))


def _suite_infinite(case: Case, out: list):
    r, p = case.ring, case.poly
    if any(d not in (2, INF) for d in r.degrees):
        out.append(_check("applicable", True, note="degree sequence outside {2, inf}; skipped"))
        return
    imax = int(case.options.get("imax", 6))
    E = exp_point(p, r)
    bE = betti_resolution_oracle(E, imax=imax).totals()
    pts = enumerate_points(p, r, case.budget()).ideals
    ext, rec = [], []
    for J in pts:
        o = betti_resolution_oracle(J, imax=imax).totals()
        if any(a > b for a, b in zip(o, bE)):
            ext.append({"witness": str(J), "totals": o})
        q = betti_quadratic_recursion(J, imax)
        if q != o:
            rec.append({"witness": str(J), "oracle": o, "recursion": q})
    out.append(_check("extremal", not ext, exp_totals=bE, witnesses=len(pts), failures=ext[:5]))
    out.append(_check("recursion", not rec, failures=rec[:5]))


_SUITES = {"axioms": _suite_axioms, "bounds": _suite_bounds, "infinite": _suite_infinite}


def run_case(suite: str, case: Case) -> dict:
    checks = []
    result = {"suite": suite, "line": case.line, "ring": str(case.ring), "poly": str(case.poly)}
    if not hilb_nonempty(case.poly, case.ring):
        checks.append(_check("nonempty", False))
    else:
        try:
            _SUITES[suite](case, checks)
        except BudgetExceeded as e:
            checks.append(_check("budget", False, detail=str(e)))
    result["checks"] = checks
    result["pass"] = all(c["pass"] for c in checks)
    return result


# ------------------------------------------------------------ argument parser

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="expansive", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ring_poly(p):
        p.add_argument("--ring", required=True, help="degree sequence, e.g. 2,3,inf,inf")
        p.add_argument("--poly", required=True, help="Hilbert polynomial in z, e.g. '3*z+5'")

    def ideal(p):
        p.add_argument("--ring", help="degree sequence (optional with a JSON ideal)")
        p.add_argument("--ideal", required=True, help="JSON object, JSON list or 'x1*x2, x3^2'")

    p = sub.add_parser("check", help="is Hilb^p(Proj R) nonempty")
    ring_poly(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hf", help="Hilbert function of R/I")
    ideal(p)
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--upto", type=int)
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("hp", help="Hilbert polynomial of R/I")
    ideal(p)
    p.set_defaults(func=cmd_hp)

    for name, func, text in (("lex", cmd_lex, "lex point"), ("exp", cmd_exp, "expansive point")):
        p = sub.add_parser(name, help=text)
        ring_poly(p)
        p.set_defaults(func=func)

    p = sub.add_parser("chain", help="lex or expansive chain")
    ring_poly(p)
    p.add_argument("--kind", choices=["lex", "exp"], default="exp")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("enumerate", help="saturated strongly stable points")
    ring_poly(p)
    p.add_argument("--almost-lex", action="store_true")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--max-candidates", type=int, default=10**6)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="saturated / strongly stable / lex / almost lex")
    ideal(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("betti", help="graded Betti numbers of R/I")
    ideal(p)
    p.add_argument("--over", choices=["ambient", "quotient"], default="ambient")
    p.add_argument("--method", choices=["lattice", "eliahou-kervaire", "oracle", "recursion"])
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--imax", type=int, default=6)
    p.add_argument("--jmax", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("bounds", help="Betti bounds from the expansive point")
    ring_poly(p)
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("check-axioms", help="check the axioms of Exp(p)")
    ring_poly(p)
    p.add_argument("--axiom", action="append", choices=list(AXIOMS))
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("classify-case", help="which case makes Lex = Exp")
    ring_poly(p)
    p.set_defaults(func=cmd_classify_case)

    p = sub.add_parser("verify", help="run a verification suite over a case matrix")
    p.add_argument("--suite", choices=["axioms", "bounds", "infinite", "all"], default="all")
    p.add_argument("--matrix", required=True, help="case file, one 'ring=.. poly=..' per line")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "method", "unset") is None:
            args.method = "lattice" if args.over == "ambient" else "oracle"
        result = args.func(args)
    except DomainError as e:
        stdout.write(dump({"error": {"kind": e.kind, "detail": e.detail}}) + "\n")
        return 2
    except EmptyHilbertScheme as e:
        stdout.write(dump({"error": {"kind": "empty-hilbert-scheme", "detail": str(e)}}) + "\n")
        return 2
    except InvalidPolynomial as e:
        stdout.write(dump({"error": {"kind": "invalid-polynomial", "detail": str(e)}}) + "\n")
        return 2
    except WindowError as e:
        stdout.write(dump({"error": {"kind": "window", "detail": str(e)}}) + "\n")
        return 2
    except (BudgetExceeded, LatticeTooLarge) as e:
        kind = "budget-exceeded" if isinstance(e, BudgetExceeded) else "lattice-too-large"
        stdout.write(dump({"error": {"kind": kind, "detail": str(e)}}) + "\n")
        return 1
    except Exception as e:  # noqa: BLE001 - every failure becomes a JSON error
        print(f"internal error: {e!r}", file=sys.stderr)
        stdout.write(dump({"error": {"kind": "internal", "detail": repr(e)}}) + "\n")
        return 1
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(dump(result) + "\n")
    if args.command == "verify":
        return 0 if result["pass"] else 1
    if args.command == "check-axioms":
        return 0 if result["pass"] else 1
    return 0


def main() -> None:
    sys.exit(run())
