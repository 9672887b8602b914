"""Betti bounds read off expansive points.

Curves of degree 7 in P^4, the same curves constrained to lie on a complete
intersection, and zero-dimensional schemes on an elliptic quartic curve
(where resolutions over the coordinate ring are infinite).
"""

from expansive import CLRing, FieldSpec, HilbertPoly, betti_ambient, bounds_report, parse_poly
from expansive.betti import Over, betti_quadratic_recursion, betti_resolution_oracle
from expansive.points import exp_point


def report(ring_text, poly_text, char=0):
    r = CLRing.parse(ring_text)
    rep = bounds_report(parse_poly(poly_text), r, FieldSpec(char))
    print(f"{poly_text}, degree sequence ({ring_text})")
    print(f"  Exp = {rep.ideal}")
    print(f"  beta(S/Exp) totals {rep.table.totals()}  [{rep.provenance.value}]")


def main():
    report("inf,inf,inf,inf,inf", "7*z")
    report("2,3,3,inf,inf", "7*z")
    report("2,3,inf,inf,inf", "5*z+10")
    print()

    Q = CLRing.parse("2,2,inf,inf")
    print("points on the elliptic quartic k[x1..x4]/(x1^2, x2^2)")
    for c in range(1, 13):
        E = exp_point(HilbertPoly.constant(c), Q)
        amb = betti_ambient(E).ideal_totals()
        over_r = betti_resolution_oracle(E, Over.QUOTIENT, imax=5).totals()
        rec = betti_quadratic_recursion(E, 5)
        same = "=" if rec == over_r else "!="
        print(f"  c={c:2d}  ideal side {amb!s:12s} over R {over_r} {same} recursion")


if __name__ == "__main__":
    main()
