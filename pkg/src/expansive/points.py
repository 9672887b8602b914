"""The lex point and the expansive point of ``Hilb^p(Proj R)``.

Both points are built by the same descending chain: start from the extension
of the lex point of ``p(z) - p(z - 1)`` over the ring without the last
variable, then ``c`` times replace one minimal generator ``u`` by
``x_1 u, ..., x_n u``.  The two constructions differ only in which generator
is replaced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .cl_ring import INF, CLRing
from .hilbert import (
    HilbertPoly,
    InvalidPolynomial,
    hilbert_polynomial,
    hp_difference_constant,
    hp_preceq,
    ideal_hilbert_polynomial,
)
from .ideal import (
    MonomialIdeal,
    classify,
    decompose,
    extend_from_tilde,
    from_generators,
    ideal_sum,
    irrelevant_ideal,
    is_saturated,
    is_subset,
    multiply_ideal,
    unit_ideal,
)
from .monomial import lex_key, monomials_of_degree, one, opp_key, times_var


class EmptyHilbertScheme(InvalidPolynomial):
    """Raised when ``Hilb^p(Proj R)`` has no points."""


class Kind(Enum):
    LEX = "lex"
    EXP = "exp"


@dataclass(frozen=True)
class Chain:
    """``steps[0]`` is the starting ideal; each later step records the
    generator that was replaced to reach it."""

    kind: Kind
    poly: HilbertPoly
    ring: CLRing
    steps: tuple

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def ideals(self) -> list:
        return [ideal for ideal, _ in self.steps]

    @property
    def start(self) -> MonomialIdeal:
        return self.steps[0][0]

    @property
    def result(self) -> MonomialIdeal:
        return self.steps[-1][0]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "ring": str(self.ring),
            "poly": self.poly.to_json(),
            "length": self.length,
            "steps": [
                {"ideal": ideal.to_json(), "replaced": None if u is None else list(u)}
                for ideal, u in self.steps
            ],
        }


def _select_lex(I: MonomialIdeal):
    top = max(sum(g) for g in I.gens)
    return min(I.gens_of_degree(top), key=lex_key)


def _select_exp(I: MonomialIdeal):
    degrees = sorted({sum(g) for g in I.gens})
    candidates = [min(I.gens_of_degree(d), key=lex_key) for d in degrees]
    return min(candidates, key=opp_key)


def replace_generator(I: MonomialIdeal, u) -> MonomialIdeal:
    """Swap the minimal generator ``u`` for ``x_1 u, ..., x_n u``."""
    r = I.ring
    gens = [g for g in I.gens if g != u]
    gens.extend(times_var(r, u, i) for i in range(r.varcount - 1))
    return from_generators(r, gens)


@lru_cache(maxsize=4096)
def _chain(p: HilbertPoly, r: CLRing, kind: Kind) -> Chain:
    if p.is_zero:
        return Chain(kind, p, r, ((unit_ideal(r), None),))
    if not r.projective:
        raise EmptyHilbertScheme(f"only the unit ideal is saturated in the Artinian ring {r}")
    start = extend_from_tilde(lex_point(p.difference(), r.tilde_ring()), r)
    c = hp_difference_constant(hilbert_polynomial(start), p)
    if c is None or c < 0:
        raise EmptyHilbertScheme(f"Hilb^({p}) of Proj {r} is empty")
    select = _select_lex if kind is Kind.LEX else _select_exp
    steps = [(start, None)]
    current = start
    for _ in range(c):
        if current.is_zero:
            raise EmptyHilbertScheme(f"chain for {p} over {r} ran out of generators")
        u = select(current)
        current = replace_generator(current, u)
        steps.append((current, u))
    if hilbert_polynomial(current) != p:
        raise EmptyHilbertScheme(f"chain for {p} over {r} does not reach the polynomial")
    return Chain(kind, p, r, tuple(steps))


def lex_chain(p: HilbertPoly, r: CLRing) -> Chain:
    return _chain(p, r, Kind.LEX)


def exp_chain(p: HilbertPoly, r: CLRing) -> Chain:
    return _chain(p, r, Kind.EXP)


def lex_point(p: HilbertPoly, r: CLRing) -> MonomialIdeal:
    """The unique saturated lex ideal with ``HP(R/L) = p``."""
    return lex_chain(p, r).result


def exp_point(p: HilbertPoly, r: CLRing) -> MonomialIdeal:
    """The expansive ideal ``Exp(p, R)``."""
    return exp_chain(p, r).result


def hilb_nonempty(p: HilbertPoly, r: CLRing) -> bool:
    if not r.projective:
        return p.is_zero
    try:
        lex_point(p, r)
    except InvalidPolynomial:
        return False
    return True


def is_expansive(I: MonomialIdeal) -> bool:
    if not is_saturated(I):
        raise ValueError(f"{I} is not saturated")
    if not I.ring.projective:
        return I.is_unit
    return exp_point(hilbert_polynomial(I), I.ring) == I


# ------------------------------------------------------------- axioms

@dataclass
class AxiomReport:
    axiom: str
    poly: HilbertPoly
    ring: CLRing
    instances: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(inst["pass"] for inst in self.instances)

    def add(self, ok: bool, **detail) -> None:
        self.instances.append({"pass": bool(ok), **detail})

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "ring": str(self.ring),
            "poly": str(self.poly),
            "pass": self.passed,
            "instances": self.instances,
        }


def _components(I: MonomialIdeal, upto: int) -> list:
    dec = decompose(I)
    return [dec.component(ell) for ell in range(upto)]


def _component_span(r: CLRing, ideals) -> int:
    """How many leading components carry all the information."""
    d_n = r.degrees[-2]
    if d_n != INF:
        return d_n
    return max(decompose(I).finite_span() for I in ideals) + 1


def _axiom_a1(p, r, rep, witnesses):
    E = exp_point(p, r)
    rep.add(classify(E).strongly_stable, ideal=str(E))


def _axiom_a2(p, r, rep, witnesses):
    E = exp_point(p, r)
    if r.varcount < 2:
        rep.add(True, note="no x_n: nothing to decompose")
        return
    dec = decompose(E)
    for ell in range(dec.finite_span()):
        comp = dec.component(ell)
        rep.add(is_expansive(comp), component=ell, ideal=str(comp))


def _axiom_a3(p, r, rep, witnesses):
    E = exp_point(p, r)
    for b in witnesses if witnesses is not None else (1, 2, 3):
        q = p + b
        if not hilb_nonempty(q, r):
            rep.add(True, offset=b, note="empty Hilbert scheme")
            continue
        F = exp_point(q, r)
        rep.add(is_subset(F, E), offset=b, larger=str(F))


def _axiom_a4(p, r, rep, witnesses):
    F = multiply_ideal(irrelevant_ideal(r), exp_point(p, r))
    rep.add(is_expansive(F), ideal=str(F))


def a5_range(E: MonomialIdeal) -> int:
    """Component indices ``k`` checked by (A5): all ``k < d_n``, or with
    ``d_n = INF`` every index up to one past the stable index (later ones
    repeat the same ``q`` with a larger power of the maximal ideal)."""
    d_n = E.ring.degrees[-2]
    if d_n != INF:
        return d_n
    return decompose(E).finite_span() + 1


def _axiom_a5(p, r, rep, witnesses):
    E = exp_point(p, r)
    if r.varcount < 2:
        rep.add(True, note="no x_n")
        return
    rbar = r.bar_ring()
    comps = _components(E, a5_range(E))
    m = irrelevant_ideal(rbar)
    for k, Ek in enumerate(comps):
        q = hilbert_polynomial(Ek) - 1
        if not hilb_nonempty(q, rbar):
            continue
        F = exp_point(q, rbar)
        power = F
        for h in range(k - 1, -1, -1):
            power = multiply_ideal(m, power)
            rep.add(is_subset(comps[h], power), h=h, k=k)


def _prefix_sums(I: MonomialIdeal, upto: int) -> list:
    out, acc = [], HilbertPoly()
    for comp in _components(I, upto):
        acc = acc + ideal_hilbert_polynomial(comp)
        out.append(acc)
    return out


def _axiom_a6(p, r, rep, witnesses):
    E = exp_point(p, r)
    if r.varcount < 2:
        rep.add(True, note="no x_n")
        return
    for J in witnesses or ():
        _check_witness(J, p)
        span = _component_span(r, (E, J))
        for rho, (a, b) in enumerate(zip(_prefix_sums(E, span), _prefix_sums(J, span))):
            rep.add(hp_preceq(a, b), witness=str(J), rho=rho)


def _axiom_a7(p, r, rep, witnesses):
    m = irrelevant_ideal(r)
    lhs = ideal_hilbert_polynomial(multiply_ideal(m, exp_point(p, r)))
    for J in witnesses or ():
        _check_witness(J, p)
        rhs = ideal_hilbert_polynomial(multiply_ideal(m, J))
        rep.add(hp_preceq(lhs, rhs), witness=str(J))


def _check_witness(J: MonomialIdeal, p: HilbertPoly) -> None:
    if hilbert_polynomial(J) != p:
        raise ValueError(f"witness {J} does not have Hilbert polynomial {p}")


_AXIOMS = {
    "A1": _axiom_a1,
    "A2": _axiom_a2,
    "A3": _axiom_a3,
    "A4": _axiom_a4,
    "A5": _axiom_a5,
    "A6": _axiom_a6,
    "A7": _axiom_a7,
}

AXIOMS = tuple(_AXIOMS)


def check_axiom(which: str, p: HilbertPoly, r: CLRing, witnesses=None) -> AxiomReport:
    """Check one axiom of the expansive ideal.

    ``witnesses`` are offsets ``b`` for A3 (default 1, 2, 3) and strongly
    stable points of ``Hilb^p`` for A6/A7; other axioms ignore them.
    """
    which = which.upper()
    if which not in _AXIOMS:
        raise ValueError(f"unknown axiom {which!r}")
    if not hilb_nonempty(p, r):
        raise EmptyHilbertScheme(f"Hilb^({p}) of Proj {r} is empty")
    rep = AxiomReport(which, p, r)
    _AXIOMS[which](p, r, rep, witnesses)
    return rep


def hyperplane_check(p: HilbertPoly, r: CLRing, J: MonomialIdeal, h: int) -> bool:
    """``HP(Exp(p) + (x_n^h)) <= HP(J + (x_n^h))`` on the ideal side."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    _check_witness(J, p)
    if r.varcount < 2:
        power = unit_ideal(r) if h == 0 else from_generators(r, [])
    else:
        k = r.varcount - 2
        power = from_generators(r, [one(r)[:k] + (h,) + one(r)[k + 1:]])
    lhs = ideal_hilbert_polynomial(ideal_sum(exp_point(p, r), power))
    rhs = ideal_hilbert_polynomial(ideal_sum(J, power))
    return hp_preceq(lhs, rhs)


def linear_forms_check(p: HilbertPoly, r: CLRing, J: MonomialIdeal) -> bool:
    """Every linear generator of ``Exp(p)`` lies in ``J``."""
    _check_witness(J, p)
    return all(g in J for g in exp_point(p, r).gens_of_degree(1))


class LexExpCase(Enum):
    CASE1 = "CASE1"
    CASE2 = "CASE2"
    CASE3 = "CASE3"
    CASE4 = "CASE4"
    NONE = "NONE"


def lex_eq_exp_case(p: HilbertPoly, r: CLRing) -> LexExpCase:
    """Which of the four situations making ``Lex(p) = Exp(p)`` occurs."""
    chain = lex_chain(p, r)
    L0, lex = chain.start, chain.result
    if chain.length == 0:
        return LexExpCase.CASE1
    if chain.length == 1 and len({sum(g) for g in L0.gens}) == 1:
        return LexExpCase.CASE2
    if chain.length == 2 and len(L0.gens) == 1:
        return LexExpCase.CASE3
    n = r.varcount - 1
    # with n = 1 the prefix x_1^(d_1-1)...x_(n-1)^(d_(n-1)-1) is empty
    if n >= 1 and (n == 1 or r.degrees[n - 2] != INF) and len(lex.gens) == 1:
        g = lex.gens[0]
        head = tuple(d - 1 for d in r.degrees[: n - 1])
        if g[: n - 1] == head and g[n] == 0:
            return LexExpCase.CASE4
    return LexExpCase.NONE


def exp_zero_dimensional(c: int, r: CLRing) -> MonomialIdeal:
    """Closed form of ``Exp(c)``: a power of ``(x_1..x_n)`` plus the first
    lex monomials one degree lower."""
    if c < 0:
        raise EmptyHilbertScheme("c must be nonnegative")
    if not r.projective:
        if c == 0:
            return unit_ideal(r)
        raise EmptyHilbertScheme(f"no points in the Artinian ring {r}")
    t = r.tilde_ring()
    delta, length = 0, 0  # length = HP(R/(x_1..x_n)^delta)
    while length < c:
        layer = len(monomials_of_degree(t, delta))
        if layer == 0:
            raise EmptyHilbertScheme(f"Proj {r} holds fewer than {c} points")
        length += layer
        delta += 1
    power = [m + (0,) for m in monomials_of_degree(t, delta)]
    if delta == 0:
        return unit_ideal(r)
    extra = [m + (0,) for m in monomials_of_degree(t, delta - 1)[: length - c]]
    return from_generators(r, power + extra)
