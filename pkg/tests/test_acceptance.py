"""Acceptance criteria.

Each criterion is a function returning a list of ``Check`` records.  A
criterion passes when every check passes.  Checks marked ``deviation`` are
literal requirements that the implementation cannot meet because the
reference value is inconsistent with the mathematics; those are reported
as FAIL, kept as strict xfail tests, and documented in the decision ledger.
All other checks run as ordinary tests.

Run ``python tests/test_acceptance.py`` for the summary lines alone; under
pytest the same lines are printed in the terminal summary.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import DESK, points_of  # noqa: E402

from expansive import points as points_mod  # noqa: E402
from expansive.betti import (  # noqa: E402
    FieldSpec,
    Over,
    betti_ambient,
    betti_eliahou_kervaire,
    betti_quadratic_recursion,
    betti_resolution_oracle,
    bounds_report,
)
from expansive.cl_ring import INF, CLRing  # noqa: E402
from expansive.enumeration import almost_lex_points, enumerate_points  # noqa: E402
from expansive.hilbert import (  # noqa: E402
    HilbertPoly,
    InvalidPolynomial,
    gotzmann_number,
    gotzmann_polys,
    hf,
    hf_hp_threshold,
    hilbert_polynomial,
    parse_poly,
)
from expansive.ideal import Side, classify, from_generators, hf_value  # noqa: E402
from expansive.monomial import parse_monomial  # noqa: E402
from expansive.points import (  # noqa: E402
    AXIOMS,
    LexExpCase,
    check_axiom,
    exp_point,
    exp_zero_dimensional,
    hilb_nonempty,
    hyperplane_check,
    lex_eq_exp_case,
    lex_point,
    linear_forms_check,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    deviation: bool = False


def xyzw(r, text):
    text = text.replace("x", "x1").replace("y", "x2").replace("z", "x3").replace("w", "x4")
    return from_generators(r, [parse_monomial(r, t) for t in text.split(",")])


def xs(r, text):
    return from_generators(r, [parse_monomial(r, t) for t in text.split(",")])


def fresh():
    points_mod._chain.cache_clear()
    points_of.cache_clear()


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def timing(name, elapsed, limit):
    return Check(f"time {name}", elapsed < limit, f"{elapsed:.2f}s < {limit}s")


A = CLRing.parse("2,3,inf,inf")
P2 = CLRing.polynomial(3)
P3 = CLRing.polynomial(4)
P4 = CLRing.polynomial(5)


# ------------------------------------------------------------------ 1

def criterion_1():
    fresh()
    out = []
    for name, p, r, want in (
        ("Lex(3z+5, A)", "3*z+5", A, xyzw(A, "x*y, x*z^5")),
        ("Lex(3z+1, P3)", "3*z+1", P3, xyzw(P3, "x, y^4, y^3*z")),
    ):
        with Timer() as t:
            got = lex_point(parse_poly(p), r)
        out.append(Check(name, got == want, str(got)))
        out.append(timing(name, t.elapsed, 1.0))
    return out


# ------------------------------------------------------------------ 2

REFERENCE_EXP8 = "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4"
CLOSED_FORM_EXP8 = "x1^2, x1*x2, x1*x3, x1*x4, x2^2, x2*x3, x2*x4"


def _exp8(extra):
    cube = [f"x{i}*x{j}*x{k}" for i in range(1, 5) for j in range(i, 5) for k in range(j, 5)]
    return xs(P4, ", ".join(cube) + ", " + extra)


def criterion_2():
    fresh()
    out = []
    with Timer() as t:
        E = exp_point(parse_poly("3*z+1"), P3)
        out.append(Check("Exp(3z+1)", E == xyzw(P3, "x^2, x*y, x*z, y^3"), str(E)))
        E8 = exp_point(HilbertPoly.constant(8), P4)
        out.append(Check(
            "Exp(8, P4) = reference listing", E8 == _exp8(REFERENCE_EXP8),
            f"computed {E8}; the reference degree-2 part is not a lex segment of "
            "k[x1..x4] (x3^2 without x2*x4), so it is not almost lex",
            deviation=True,
        ))
        out.append(Check(
            "Exp(8, P4) = (x1..x4)^3 + first 7 lex quadrics", E8 == _exp8(CLOSED_FORM_EXP8), str(E8)))
        bad = []
        for r in (P2, P3, P4, CLRing.parse("2,2,inf,inf")):
            for c in range(0, 13):
                if exp_zero_dimensional(c, r) != exp_point(HilbertPoly.constant(c), r):
                    bad.append(f"{r}:{c}")
        out.append(Check("exp_zero_dimensional = exp_point, c <= 12", not bad, ", ".join(bad)))
    out.append(timing("criterion 2", t.elapsed, 10.0))
    return out


# ------------------------------------------------------------------ 3

SIX = [
    "x*y, x*z^5",
    "x*y^2, x*y*z^2, x*z^3",
    "x*y^2, x*y*z, x*z^4",
    "x*y^2, x*y*z, y^2*z^3",
    "x*y^2, x*y*z^2, y^2*z^2",
    "x*y, y^2*z^4",
]


def criterion_3():
    fresh()
    out = []
    with Timer() as t:
        p = parse_poly("3*z+5")
        got = set(enumerate_points(p, A).ideals)
        out.append(Check("six points of Hilb^(3z+5)(Proj A)", got == {xyzw(A, s) for s in SIX},
                         f"{len(got)} points"))
        al = set(almost_lex_points(p, A))
        out.append(Check(
            "exactly two almost lex points", al == {xyzw(A, s) for s in SIX[:2]},
            f"found {len(al)}: {sorted(map(str, al))}; the reference example calls the whole "
            "first row of three almost lex, and all three are",
            deviation=True,
        ))
        out.append(Check("almost lex points = first row of three", al == {xyzw(A, s) for s in SIX[:3]}))
        tc = set(enumerate_points(parse_poly("3*z+1"), P3).ideals)
        want = {xyzw(P3, s) for s in ("x^2, x*y, y^2", "x, y^4, y^3*z", "x^2, x*y, x*z, y^3")}
        out.append(Check("three points of Hilb^(3z+1)(P3)", tc == want, f"{len(tc)} points"))
    out.append(timing("criterion 3", t.elapsed, 30.0))
    return out


# ------------------------------------------------------------------ 4

QUARTIC = CLRing.parse("2,2,inf,inf")
QUARTIC_SCAN = 40


def elliptic_quartic_scan(top=QUARTIC_SCAN):
    """Ideal-side totals of Exp(c) on the elliptic quartic for 1 <= c <= top,
    and whether Exp(c + 4) = x3 * Exp(c) holds for 8 <= c <= top - 4."""
    exps = {c: exp_point(HilbertPoly.constant(c), QUARTIC) for c in range(1, top + 1)}
    totals = {c: tuple(betti_ambient(E).ideal_totals()) for c, E in exps.items()}
    shift = all(
        set(exps[c + 4].gens) == {(a, b, e + 1, f) for a, b, e, f in exps[c].gens}
        for c in range(8, top - 3)
    )
    return totals, shift


def criterion_4():
    fresh()
    out = []
    with Timer() as t:
        rep = bounds_report(parse_poly("7*z"), CLRing.parse("2,3,3,inf,inf"))
        got = rep.table.totals()[1:5]
        out.append(Check(
            "7z over (2,3,3,inf,inf) -> (7,13,9,2)", got == [7, 13, 9, 2],
            f"computed {got} from Exp = {rep.ideal}; genuine points with beta_1 = 10 exist, "
            "e.g. (x1*x2^2, x1*x2*x3, x1*x2*x4, x1*x3^2, x1*x3*x4, x1*x4^2, x2^2*x3)",
            deviation=True,
        ))
        J = xs(CLRing.parse("2,3,3,inf,inf"),
               "x1*x2^2, x1*x2*x3, x1*x2*x4, x1*x3^2, x1*x3*x4, x1*x4^2, x2^2*x3")
        ok = hilbert_polynomial(J) == parse_poly("7*z") and classify(J).saturated \
            and classify(J).strongly_stable and betti_ambient(J).totals()[1] == 10
        out.append(Check("witness with beta_1 = 10 is a point of Hilb^(7z)", ok))
        rep = bounds_report(parse_poly("7*z"), P4)
        got = rep.table.totals()[1:5]
        out.append(Check("7z over P4 -> (19,42,33,9)", got == [19, 42, 33, 9], str(got)))
        rep = bounds_report(parse_poly("5*z+10"), CLRing.parse("2,3,inf,inf,inf"))
        got = rep.table.ideal_totals()[:4]
        out.append(Check("5z+10 over (2,3,inf,inf,inf) -> ideal side (17,39,32,9)",
                         got == [17, 39, 32, 9], f"{got}, {rep.provenance.value}"))
        totals, shift = elliptic_quartic_scan()
        best = max(totals.values())
        dominated = all(all(a <= b for a, b in zip(v, best)) for v in totals.values())
        out.append(Check(
            f"elliptic quartic max over c <= {QUARTIC_SCAN} = (6,9,4), attained",
            best == (6, 9, 4) and dominated and (6, 9, 4) in totals.values(),
            f"max {best}, first attained at c = {min(c for c, v in totals.items() if v == best)}",
        ))
        out.append(Check("elliptic quartic: Exp(c+4) = x3 Exp(c) for c >= 8", shift))
    out.append(timing("criterion 4", t.elapsed, 300.0))
    return out


# ------------------------------------------------------------------ 5

def criterion_5():
    fresh()
    out = []
    shape = len(DESK) >= 10 and all(
        c.ring.varcount <= 5 and gotzmann_number(c.poly) <= 8 for c in DESK)
    out.append(Check("matrix: >= 10 cases, <= 5 variables, Gotzmann <= 8", shape, f"{len(DESK)} cases"))
    with Timer() as t:
        bad, n = [], 0
        for case in DESK:
            E = exp_point(case.poly, case.ring)
            bE = betti_ambient(E).totals()
            pts = points_of(case.poly, case.ring)
            if E not in pts:
                bad.append(f"{case.ring}|{case.poly}: Exp not enumerated")
            for J in pts:
                n += 1
                bJ = betti_ambient(J).totals()
                bJ += [0] * (len(bE) - len(bJ))
                if len(bJ) > len(bE) or any(a > b for a, b in zip(bJ, bE)):
                    bad.append(f"{case.ring}|{case.poly}: {J} {bJ} > {bE}")
                if J == E and bJ != bE:
                    bad.append(f"{case.ring}|{case.poly}: equality at Exp")
        out.append(Check("beta_i(R/J) <= beta_i(R/Exp) on the matrix", not bad,
                         f"{n} witnesses; " + "; ".join(bad[:3])))
    out.append(timing("criterion 5", t.elapsed, 600.0))
    return out


# ------------------------------------------------------------------ 6

def _hyperplane_range(r, ideals):
    d_n = r.degrees[-2]
    top = max((g[-2] for I in ideals for g in I.gens), default=0) + 1
    return range(0, min(top, d_n) + 1 if d_n != INF else top + 1)


def criterion_6():
    fresh()
    out = []
    with Timer() as t:
        literal = {a: [] for a in AXIOMS}
        for case in DESK:
            p, r = case.poly, case.ring
            pts = list(points_of(p, r))
            for a in AXIOMS:
                w = pts if a in ("A6", "A7") else ([1, 2, 3] if a == "A3" else None)
                if not check_axiom(a, p, r, w).passed:
                    literal[a].append(f"{r}|{p}")
        for a in AXIOMS:
            dev = a in ("A2", "A5")
            detail = "; ".join(literal[a])
            if dev and literal[a]:
                detail = ("fails where d_n = inf: the stable tail I_inf is compared with "
                          "the expansive point of its own polynomial. " + detail)
            out.append(Check(f"{a} on the matrix", not literal[a], detail, deviation=dev))
        finite = [c for c in DESK if c.ring.degrees[-2] != INF]
        bad = [f"{c.ring}|{c.poly}" for c in finite for a in ("A2", "A5")
               if not check_axiom(a, c.poly, c.ring).passed]
        out.append(Check("A2, A5 where d_n is finite", not bad and bool(finite),
                         f"{len(finite)} cases; " + "; ".join(bad)))
        hyp, lin = [], []
        for case in DESK:
            p, r = case.poly, case.ring
            pts = list(points_of(p, r))
            E = exp_point(p, r)
            for J in pts:
                for h in _hyperplane_range(r, pts + [E]):
                    if not hyperplane_check(p, r, J, h):
                        hyp.append(f"{r}|{p}|{J}|h={h}")
                if not linear_forms_check(p, r, J):
                    lin.append(f"{r}|{p}|{J}")
        out.append(Check("hyperplane sections (Exp + x_n^h) on the matrix", not hyp, "; ".join(hyp[:3])))
        out.append(Check("linear forms of Exp lie in every point", not lin, "; ".join(lin[:3])))
    out.append(timing("criterion 6", t.elapsed, 600.0))
    return out


# ------------------------------------------------------------------ 7

def criterion_7():
    fresh()
    out = []
    with Timer() as t:
        bad, n = [], 0
        for case in DESK:
            if not case.ring.is_polynomial:
                continue
            for J in points_of(case.poly, case.ring):
                n += 1
                lat = [betti_ambient(J, FieldSpec(q)) for q in (0, 2, 3)]
                ek = betti_eliahou_kervaire(J)
                orc = betti_resolution_oracle(J, Over.AMBIENT, FieldSpec(0), imax=case.ring.varcount)
                if not lat[0].same_entries(ek):
                    bad.append(f"{J}: lattice != EK")
                if not all(x.same_entries(lat[0]) for x in lat[1:]):
                    bad.append(f"{J}: characteristic dependence")
                if not orc.same_entries(lat[0].restricted(*orc.window)):
                    bad.append(f"{J}: oracle disagrees")
        out.append(Check("lattice = EK = oracle, char 0 = 2 = 3", not bad and n > 0,
                         f"{n} ideals; " + "; ".join(bad[:3])))
    out.append(timing("criterion 7", t.elapsed, 300.0))
    return out


# ------------------------------------------------------------------ 8

INFINITE_RINGS = ["2,inf", "inf,inf", "2,2,inf", "2,inf,inf", "inf,inf,inf",
                  "2,2,2,inf", "2,2,inf,inf", "2,inf,inf,inf", "inf,inf,inf,inf"]


def criterion_8():
    fresh()
    out = []
    Q = CLRing.parse("2,2,inf")
    got = betti_resolution_oracle(xs(Q, "x1, x2"), Over.QUOTIENT, imax=6).totals()
    out.append(Check("beta_i(R/(x,y)) = i+1 over k[x,y,z]/(x^2,y^2)",
                     got == [i + 1 for i in range(7)], str(got)))
    with Timer() as t:
        ext, rec, cases, n = [], [], 0, 0
        for rs in INFINITE_RINGS:
            r = CLRing.parse(rs)
            for p, _ in gotzmann_polys(5, r.varcount - 2):
                if not hilb_nonempty(p, r):
                    continue
                cases += 1
                bE = betti_resolution_oracle(exp_point(p, r), imax=6).totals()
                for J in enumerate_points(p, r).ideals:
                    n += 1
                    o = betti_resolution_oracle(J, imax=6).totals()
                    if any(a > b for a, b in zip(o, bE)):
                        ext.append(f"{rs}|{p}|{J}")
                    if betti_quadratic_recursion(J, 6) != o:
                        rec.append(f"{rs}|{p}|{J}")
        out.append(Check("oracle beta_i(R/J) <= beta_i(R/Exp), i <= 6", not ext,
                         f"{cases} cases, {n} witnesses; " + "; ".join(ext[:3])))
        out.append(Check("quadratic recursion = oracle", not rec, "; ".join(rec[:3])))
    out.append(timing("criterion 8", t.elapsed, 900.0))
    return out


# ------------------------------------------------------------------ 9

SWEEP_RINGS = ["inf,inf", "2,inf", "2,2,inf", "2,inf,inf", "inf,inf,inf", "2,2,2,inf",
               "2,2,inf,inf", "2,3,inf,inf", "3,3,inf,inf", "2,inf,inf,inf", "inf,inf,inf,inf"]


def sweep_cases():
    seen = set()
    for case in DESK:
        seen.add((case.ring, case.poly))
        yield case.ring, case.poly
    for rs in SWEEP_RINGS:
        r = CLRing.parse(rs)
        for p, _ in gotzmann_polys(8, r.varcount - 2):
            if (r, p) not in seen and hilb_nonempty(p, r):
                yield r, p


def criterion_9():
    fresh()
    out = []
    with Timer() as t:
        not_al, missed, extra, n = [], [], [], 0
        for r, p in sweep_cases():
            n += 1
            E, L = exp_point(p, r), lex_point(p, r)
            if not classify(E).almost_lex:
                not_al.append(f"{r}|{p}")
            case = lex_eq_exp_case(p, r)
            if (case != LexExpCase.NONE) != (E == L):
                missed.append(f"{r}|{p}")
            if case != LexExpCase.NONE:
                k = len(enumerate_points(p, r).ideals)
                if k != 1:
                    extra.append(f"{r}|{p} {case.value}: {k} points")
        out.append(Check("every Exp is almost lex", not not_al, f"{n} cases; " + "; ".join(not_al[:3])))
        out.append(Check(
            "case != NONE exactly when Lex = Exp", not missed,
            "Lex = Exp outside the four cases: " + "; ".join(missed), deviation=True))
        out.append(Check(
            "single strongly stable point when case != NONE", not extra,
            "; ".join(extra), deviation=True))
    out.append(timing("criterion 9", t.elapsed, 120.0))
    return out


# ------------------------------------------------------------------ 10

def criterion_10():
    fresh()
    out = []
    with Timer() as t:
        bad_series, bad_hp, n = [], [], 0
        for case in DESK:
            for J in points_of(case.poly, case.ring):
                n += 1
                if any(hf(J, j) != hf_value(J, j, Side.QUOTIENT) for j in range(21)):
                    bad_series.append(str(J))
                p = hilbert_polynomial(J)
                t0 = hf_hp_threshold(J)
                if any(hf(J, j) != p(j) for j in range(t0, t0 + 10)):
                    bad_hp.append(str(J))
        out.append(Check("series = count for j <= 20", not bad_series, f"{n} ideals"))
        out.append(Check("HF = HP from hf_hp_threshold on", not bad_hp, "; ".join(bad_hp[:3])))
        out.append(Check("gotzmann_number(3z+1) = 4", gotzmann_number(parse_poly("3*z+1")) == 4))
        try:
            gotzmann_number(parse_poly("z^2"))
            rejected = False
        except InvalidPolynomial:
            rejected = True
        out.append(Check("gotzmann_number rejects z^2", rejected))
    out.append(timing("criterion 10", t.elapsed, 60.0))
    return out


CRITERIA = {
    1: ("Lex algorithm reproduces reference examples", criterion_1),
    2: ("Expansive algorithm reproduces reference examples", criterion_2),
    3: ("Enumeration reproduces reference point sets", criterion_3),
    4: ("Betti bounds reproduce reference numbers", criterion_4),
    5: ("Extremality on the test matrix", criterion_5),
    6: ("Axiom suite on the test matrix", criterion_6),
    7: ("Betti method agreement", criterion_7),
    8: ("Infinite resolutions, desk scale", criterion_8),
    9: ("Almost lex Exp and the Lex = Exp cases", criterion_9),
    10: ("Hilbert infrastructure", criterion_10),
}

RESULTS = {}


def evaluate(k):
    if k not in RESULTS:
        RESULTS[k] = CRITERIA[k][1]()
    return RESULTS[k]


def summary_line(k):
    checks = evaluate(k)
    failed = [c for c in checks if not c.ok]
    verdict = "PASS" if not failed else "FAIL"
    line = f"criterion {k:2d}: {verdict}  {CRITERIA[k][0]}"
    if failed:
        line += "  [failed: " + "; ".join(c.name for c in failed) + "]"
    return line


def _known_deviation(k):
    return any(c.deviation and not c.ok for c in evaluate(k))


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_core(k):
    """Every check except the ledgered literal deviations must pass."""
    bad = [c for c in evaluate(k) if not c.ok and not c.deviation]
    assert not bad, "\n".join(f"{c.name}: {c.detail}" for c in bad)


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, request):
    if _known_deviation(k):
        request.applymarker(pytest.mark.xfail(
            strict=True, reason="reference value inconsistent; see decision ledger"))
    checks = evaluate(k)
    failed = [c for c in checks if not c.ok]
    assert not failed, "\n".join(f"{c.name}: {c.detail}" for c in failed)


def main():
    for k in sorted(CRITERIA):
        print(summary_line(k), flush=True)
        for c in evaluate(k):
            if not c.ok:
                print(f"      - {c.name}: {c.detail}")


if __name__ == "__main__":
    main()
