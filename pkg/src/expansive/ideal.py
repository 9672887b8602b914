"""Monomial ideals of Clements-Lindström rings.

Ideals are immutable and always stored by their minimal generators in
canonical order (degree ascending, LEX descending within a degree), so two
ideals are equal exactly when their generator tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cl_ring import INF, CLRing
from .monomial import (
    canonical_key,
    check_monomial,
    divides,
    format_monomial,
    is_nonzero,
    lcm,
    monomials_of_degree,
    multiply,
    one,
    times_var,
)


class Side(Enum):
    IDEAL = "ideal"
    QUOTIENT = "quotient"


def minimalize(gens) -> tuple:
    """Minimal generators among ``gens``, canonically sorted."""
    kept = []
    for g in sorted(set(gens), key=sum):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    kept.sort(key=canonical_key)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: CLRing
    gens: tuple

    def __post_init__(self):
        gens = [tuple(g) for g in self.gens]
        for g in gens:
            if not is_nonzero(self.ring, g):
                raise ValueError(f"generator {list(g)} is zero or malformed in {self.ring}")
        object.__setattr__(self, "gens", minimalize(gens))

    def __str__(self):
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __contains__(self, m) -> bool:
        return contains(self, m)

    @property
    def is_unit(self) -> bool:
        return self.gens == (one(self.ring),)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def gens_of_degree(self, d: int) -> list:
        return [g for g in self.gens if sum(g) == d]

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialIdeal":
        r = CLRing.parse(obj["ring"])
        return cls(r, tuple(check_monomial(r, g) for g in obj["gens"]))


def from_generators(r: CLRing, ms) -> MonomialIdeal:
    """Ideal generated by ``ms``; zero monomials (``None`` or out of bounds) are dropped."""
    gens = []
    for m in ms:
        if m is None:
            continue
        m = tuple(m)
        if len(m) != r.varcount or any(e < 0 for e in m):
            raise ValueError(f"{list(m)} is not an exponent vector of ring {r}")
        if is_nonzero(r, m):
            gens.append(m)
    return MonomialIdeal(r, tuple(gens))


def unit_ideal(r: CLRing) -> MonomialIdeal:
    return MonomialIdeal(r, (one(r),))


def zero_ideal(r: CLRing) -> MonomialIdeal:
    return MonomialIdeal(r, ())


def irrelevant_ideal(r: CLRing) -> MonomialIdeal:
    """``(x_1, ..., x_n)``: every variable but the last."""
    gens = []
    for i in range(r.varcount - 1):
        v = times_var(r, one(r), i)
        if v is not None:
            gens.append(v)
    return MonomialIdeal(r, tuple(gens))


def contains(I: MonomialIdeal, m) -> bool:
    if m is None:
        return True
    return any(divides(g, m) for g in I.gens)


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return all(contains(J, g) for g in I.gens)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring != J.ring:
        raise ValueError(f"ideals live in different rings: {I.ring} vs {J.ring}")


def hf_value(I: MonomialIdeal, j: int, side: Side = Side.QUOTIENT) -> int:
    """Number of degree-``j`` monomials inside (IDEAL) or outside (QUOTIENT) ``I``."""
    mons = monomials_of_degree(I.ring, j)
    inside = sum(1 for m in mons if contains(I, m))
    return inside if side is Side.IDEAL else len(mons) - inside


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def multiply_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    r = I.ring
    return from_generators(r, (multiply(r, a, b) for a in I.gens for b in J.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return from_generators(I.ring, (lcm(a, b) for a in I.gens for b in J.gens))


def colon_by_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """``I : x_i`` for the 1-based variable index ``i``."""
    r = I.ring
    if not 1 <= i <= r.varcount:
        raise ValueError(f"variable index {i} out of range for {r}")
    k = i - 1
    gens = [g[:k] + (g[k] - 1,) + g[k + 1:] if g[k] > 0 else g for g in I.gens]
    d = r.degrees[k]
    if d != INF:
        # x_i^{d_i - 1} is killed by x_i
        gens.append(one(r)[:k] + (d - 1,) + one(r)[k + 1:])
    return from_generators(r, gens)


def colon_maximal(I: MonomialIdeal) -> MonomialIdeal:
    """``I : m`` with ``m`` the ideal of all variables."""
    r = I.ring
    out = None
    for i in range(1, r.varcount + 1):
        c = colon_by_variable(I, i)
        out = c if out is None else intersect(out, c)
    return out if out is not None else I


def saturate(I: MonomialIdeal) -> MonomialIdeal:
    J = I
    while True:
        K = colon_maximal(J)
        if K == J:
            return J
        J = K


def is_strongly_stable(I: MonomialIdeal) -> bool:
    r = I.ring
    for u in I.gens:
        for h in range(r.varcount):
            if u[h] == 0:
                continue
            for k in range(h):
                v = times_var(r, u, k)
                if v is None:
                    continue  # annihilated swap lies in every ideal
                v = v[:h] + (v[h] - 1,) + v[h + 1:]
                if not contains(I, v):
                    return False
    return True


def is_lex(I: MonomialIdeal) -> bool:
    if I.is_zero:
        return True
    top = I.max_degree + 1
    for j in range(min(sum(g) for g in I.gens), top + 1):
        seen_out = False
        for m in monomials_of_degree(I.ring, j):
            if contains(I, m):
                if seen_out:
                    return False
            else:
                seen_out = True
    return True


def is_saturated(I: MonomialIdeal) -> bool:
    return saturate(I) == I


def is_almost_lex(I: MonomialIdeal) -> bool:
    """``x_m`` is a non-zerodivisor mod ``I`` and the image mod ``x_m`` is lex."""
    r = I.ring
    if r.varcount == 0:
        return True
    if colon_by_variable(I, r.varcount) != I:
        return False
    if not r.projective:
        # x_m is nilpotent: only the unit ideal survives the test above
        return I.is_unit
    return is_lex(_drop_last(I))


def _drop_last(I: MonomialIdeal) -> MonomialIdeal:
    """Image of ``I`` in ``R/(x_m)``."""
    t = I.ring.tilde_ring()
    return MonomialIdeal(t, tuple(g[:-1] for g in I.gens if g[-1] == 0))


@dataclass(frozen=True)
class Classification:
    saturated: bool
    strongly_stable: bool
    lex: bool
    almost_lex: bool

    def as_dict(self) -> dict:
        return {
            "saturated": self.saturated,
            "strongly_stable": self.strongly_stable,
            "lex": self.lex,
            "almost_lex": self.almost_lex,
        }


def classify(I: MonomialIdeal) -> Classification:
    return Classification(
        saturated=is_saturated(I),
        strongly_stable=is_strongly_stable(I),
        lex=is_lex(I),
        almost_lex=is_almost_lex(I),
    )


@dataclass(frozen=True)
class Decomposition:
    """Components ``I_l`` of ``I = sum_l I_l x_n^l`` over the bar ring.

    With ``d_n`` finite, ``components`` holds all of ``I_0..I_{d_n-1}`` and
    ``tail`` is None.  With ``d_n = INF`` it holds the prefix before the chain
    stabilizes and ``tail`` is the limit ``I_INF``.
    """

    base: CLRing
    components: tuple
    tail: MonomialIdeal | None

    @property
    def stable_index(self) -> int | None:
        return None if self.tail is None else len(self.components)

    def component(self, ell: int) -> MonomialIdeal:
        if ell < 0:
            raise IndexError(ell)
        if ell < len(self.components):
            return self.components[ell]
        if self.tail is None:
            raise IndexError(f"component {ell} beyond x_n^{len(self.components)} = 0")
        return self.tail

    def finite_span(self) -> int:
        """Number of indices after which nothing changes: d_n or l0 + 1."""
        return len(self.components) + (0 if self.tail is None else 1)


def decompose(I: MonomialIdeal) -> Decomposition:
    r = I.ring
    if not r.projective or r.varcount < 2:
        raise ValueError(f"decomposition needs a projective ring with >= 2 variables, got {r}")
    base = r.bar_ring()
    k = r.varcount - 2
    d = r.degrees[k]

    def comp(ell):
        return MonomialIdeal(base, tuple(g[:k] + g[k + 1:] for g in I.gens if g[k] <= ell))

    if d == INF:
        l0 = max((g[k] for g in I.gens), default=0)
        return Decomposition(base, tuple(comp(ell) for ell in range(l0)), comp(l0))
    return Decomposition(base, tuple(comp(ell) for ell in range(d)), None)


def assemble(dec: Decomposition, target: CLRing) -> MonomialIdeal:
    if not target.projective or target.varcount < 2 or target.bar_ring() != dec.base:
        raise ValueError(f"ring {target} does not match decomposition base {dec.base}")
    k = target.varcount - 2
    d = target.degrees[k]
    comps = list(dec.components) + ([dec.tail] if dec.tail is not None else [])
    if d != INF and (dec.tail is not None or len(comps) > d):
        raise ValueError("decomposition has more components than x_n allows")
    if d == INF and dec.tail is None:
        raise ValueError("decomposition over a free x_n needs a stable tail")
    for a, b in zip(comps, comps[1:]):
        if not is_subset(a, b):
            raise ValueError("components do not form a non-decreasing chain")
    gens = []
    for ell, c in enumerate(comps):
        gens.extend(g[:k] + (ell,) + g[k:] for g in c.gens)
    return MonomialIdeal(target, tuple(gens))


def tilde_image(I: MonomialIdeal) -> MonomialIdeal:
    r = I.ring
    if not r.projective:
        raise ValueError(f"tilde image needs a projective ring, got {r}")
    if any(g[-1] > 0 for g in I.gens):
        raise ValueError("the last variable divides a minimal generator (I : x_m != I)")
    return MonomialIdeal(r.tilde_ring(), tuple(g[:-1] for g in I.gens))


def extend_from_tilde(J: MonomialIdeal, target: CLRing) -> MonomialIdeal:
    if target != J.ring.with_free_variable():
        raise ValueError(f"{target} is not {J.ring} with a free variable adjoined")
    return MonomialIdeal(target, tuple(g + (0,) for g in J.gens))


def preimage_in_ambient(I: MonomialIdeal) -> MonomialIdeal:
    """Preimage in the polynomial ring: add the pure powers ``x_i^{d_i}``."""
    r = I.ring
    S = r.ambient()
    gens = list(I.gens)
    for i, d in enumerate(r.degrees):
        if d != INF:
            gens.append(one(r)[:i] + (d,) + one(r)[i + 1:])
    return MonomialIdeal(S, tuple(gens))
