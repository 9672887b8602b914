"""Points of Hilb^(3z+5) over A = k[x,y,z,w]/(x^2, y^3).

The six strongly stable points, which of them are almost lex, and how the
axioms look on the expansive point.  The x_n-decomposition of each point is
printed too, since the axioms are phrased through it.
"""

from expansive import CLRing, check_axiom, classify, decompose, enumerate_points, exp_point, parse_poly
from expansive.points import AXIOMS


def main():
    A = CLRing.parse("2,3,inf,inf")
    p = parse_poly("3*z+5")
    pts = enumerate_points(p, A).ideals
    E = exp_point(p, A)

    print(f"Hilb^({p}) of Proj A, A = k[x1..x4]/(x1^2, x2^3)\n")
    for J in pts:
        c = classify(J)
        mark = "Exp" if J == E else "   "
        dec = decompose(J)
        comps = [str(dec.component(k)) for k in range(dec.finite_span())]
        print(f"{mark} {str(J):36s} almost lex: {c.almost_lex!s:5s}  components {comps}")
    print()

    print("axioms on Exp, witnesses = all six points")
    for a in AXIOMS:
        w = list(pts) if a in ("A6", "A7") else None
        rep = check_axiom(a, p, A, w)
        bad = [i for i in rep.instances if not i["pass"]]
        print(f"  {a}: {'pass' if rep.passed else 'fail'} ({len(rep.instances)} instances)")
        for i in bad[:3]:
            print(f"      {i}")


if __name__ == "__main__":
    main()
