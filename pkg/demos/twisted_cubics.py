"""Walk through Hilb^(3z+1)(P^3), the Hilbert scheme of twisted cubics.

Prints the three strongly stable points, the lex and expansive chains that
reach two of them, and the Betti tables that single out the expansive one.
"""

from expansive import (
    CLRing,
    betti_ambient,
    classify,
    enumerate_points,
    exp_chain,
    lex_chain,
    parse_poly,
)
from expansive.monomial import format_monomial


def show_chain(title, chain):
    print(f"{title} ({chain.length} replacement steps)")
    for I, u in chain.steps:
        note = "" if u is None else f"   <- replaced {format_monomial(u)}"
        print(f"  {I}{note}")


def main():
    r = CLRing.polynomial(4)
    p = parse_poly("3*z+1")
    print(f"Hilb^({p}) of P^3\n")

    pts = enumerate_points(p, r)
    print(f"{len(pts.ideals)} strongly stable points (search complete: {pts.complete})")
    for J in pts.ideals:
        c = classify(J)
        tags = [k for k in ("lex", "almost_lex") if getattr(c, k)]
        print(f"  {str(J):32s} totals {betti_ambient(J).totals()}  {' '.join(tags)}")
    print()

    show_chain("lex chain", lex_chain(p, r))
    print()
    show_chain("expansive chain", exp_chain(p, r))
    print()

    E = exp_chain(p, r).result
    print("Betti table of S/Exp(3z+1):")
    print(betti_ambient(E).to_csv())


if __name__ == "__main__":
    main()
