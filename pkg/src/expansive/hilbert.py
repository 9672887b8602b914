"""Hilbert series, Hilbert functions and Hilbert polynomials of ``R/I``.

Everything is exact: series numerators are integer lists, polynomials carry
``Fraction`` coefficients.  Quotient-side values (``R/I``) are the default;
ideal-side values are ``HP(R) - HP(R/I)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .cl_ring import CLRing
from .ideal import MonomialIdeal, preimage_in_ambient, zero_ideal


class InvalidPolynomial(ValueError):
    """The polynomial is not the Hilbert polynomial of any subscheme in play."""


@dataclass(frozen=True)
class HilbertPoly:
    """Univariate rational polynomial in ``z``, coefficients low-to-high."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "HilbertPoly":
        return cls((c,))

    @classmethod
    def binomial(cls, shift: int, k: int) -> "HilbertPoly":
        """``C(z + shift, k)`` as a polynomial in ``z``."""
        p = cls((1,))
        for j in range(k):
            p = p * cls((shift - j, 1))
        return p.scale(Fraction(1, factorial(k)))

    @classmethod
    def parse(cls, text: str) -> "HilbertPoly":
        return parse_poly(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, z):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return HilbertPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return HilbertPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return HilbertPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HilbertPoly(tuple(out))

    __rmul__ = __mul__

    def scale(self, c) -> "HilbertPoly":
        return HilbertPoly(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "HilbertPoly":
        """``p(z - k)``."""
        out = HilbertPoly()
        lin = HilbertPoly((-k, 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def difference(self) -> "HilbertPoly":
        """``p(z) - p(z - 1)``."""
        return self - self.shift(1)

    def is_integer_valued(self) -> bool:
        return all(self(z).denominator == 1 for z in range(len(self.coeffs) + 1))

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}


def _as_poly(x) -> HilbertPoly:
    return x if isinstance(x, HilbertPoly) else HilbertPoly.constant(x)


def format_poly(p: HilbertPoly) -> str:
    if p.is_zero:
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            var = "z" if k == 1 else f"z^{k}"
            if a == 1:
                body = var
            elif a.denominator == 1:
                body = f"{a}*{var}"
            else:
                num = "" if a.numerator == 1 else f"{a.numerator}*"
                body = f"{num}{var}/{a.denominator}"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_POLY_TERM = re.compile(
    r"""^(?P<num>\d+(?:/\d+)?)?          # coefficient
        (?:\*?(?P<var>[zZ])(?:\^(?P<exp>\d+))?)?
        (?:/(?P<den>\d+))?$""",
    re.VERBOSE,
)


def parse_poly(text: str) -> HilbertPoly:
    """Parse sums of ``c``, ``c*z``, ``c*z^k`` and ``z^k/q`` terms."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in pieces) != s:
        raise ValueError(f"malformed polynomial {text!r}")
    acc = HilbertPoly()
    for sign, body in pieces:
        mt = _POLY_TERM.match(body)
        if not mt or (mt.group("num") is None and mt.group("var") is None):
            raise ValueError(f"malformed term {body!r} in {text!r}")
        try:
            c = Fraction(mt.group("num") or 1)
            if mt.group("den"):
                c /= int(mt.group("den"))
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
        k = 0
        if mt.group("var"):
            k = int(mt.group("exp") or 1)
        term = HilbertPoly(tuple([0] * k + [c]))
        acc = acc + term if sign == "+" else acc - term
    return acc


# ---------------------------------------------------------------- series

@dataclass(frozen=True)
class SeriesNumerator:
    """``HS(R/I)(t) = K(t) / (1 - t)^m``."""

    k_coeffs: tuple
    m: int

    def coefficient(self, j: int) -> int:
        """Coefficient of ``t^j`` in the expanded series."""
        if self.m == 0:
            return self.k_coeffs[j] if j < len(self.k_coeffs) else 0
        return sum(
            k * comb(j - i + self.m - 1, self.m - 1)
            for i, k in enumerate(self.k_coeffs)
            if i <= j
        )


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _one_minus_t_pow(d):
    out = [0] * (d + 1)
    out[0] += 1
    out[d] -= 1
    return _poly_trim(out)


@lru_cache(maxsize=100_000)
def _k_poly(gens: tuple) -> tuple:
    """Numerator of ``HS(S/M)`` for a minimal monomial generating set ``gens``."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    # base case: pairwise coprime generators form a regular sequence
    support = Counter()
    for g in gens:
        for i, e in enumerate(g):
            if e:
                support[i] += 1
    if all(c == 1 for c in support.values()):
        out = (1,)
        for g in gens:
            out = _poly_mul(out, _one_minus_t_pow(sum(g)))
        return out
    # pivot: most frequent variable, ties to the lowest index
    best = max(support.items(), key=lambda kv: (kv[1], -kv[0]))[0]
    nvar = len(gens[0])
    x = tuple(1 if i == best else 0 for i in range(nvar))
    plus = _minimal(gens + (x,))
    colon = _minimal(tuple(g[:best] + (max(g[best] - 1, 0),) + g[best + 1:] for g in gens))
    return _poly_add(_k_poly(plus), _poly_mul((0, 1), _k_poly(colon)))


def _minimal(gens):
    kept = []
    for g in sorted(set(gens), key=lambda g: (sum(g), g)):
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


def series_numerator(I: MonomialIdeal) -> SeriesNumerator:
    P = preimage_in_ambient(I)
    return SeriesNumerator(_k_poly(_minimal(P.gens)), I.ring.varcount)


def hf(I: MonomialIdeal, j: int) -> int:
    """``HF(R/I, j)`` from the series."""
    return series_numerator(I).coefficient(j)


def _divide_one_minus_t(k):
    """Exact quotient of ``k(t)`` by ``(1 - t)``; requires ``k(1) == 0``."""
    # k(t) = (1 - t) q(t)  =>  q_i = sum_{j<=i} k_j
    q, acc = [], 0
    for c in k[:-1]:
        acc += c
        q.append(acc)
    return _poly_trim(q)


def hilbert_polynomial(I: MonomialIdeal) -> HilbertPoly:
    """``HP(R/I)``."""
    s = series_numerator(I)
    k, m = s.k_coeffs, s.m
    while k and m > 0 and sum(k) == 0:
        k = _divide_one_minus_t(k)
        m -= 1
    if not k or m == 0:
        return HilbertPoly()
    out = HilbertPoly()
    for i, q in enumerate(k):
        if q:
            out = out + HilbertPoly.binomial(m - 1 - i, m - 1).scale(q)
    return out


def ring_hilbert_polynomial(r: CLRing) -> HilbertPoly:
    return hilbert_polynomial(zero_ideal(r))


def ideal_hilbert_polynomial(I: MonomialIdeal) -> HilbertPoly:
    """``HP(I)`` of the ideal itself."""
    return ring_hilbert_polynomial(I.ring) - hilbert_polynomial(I)


def hf_hp_threshold(I: MonomialIdeal) -> int:
    s = series_numerator(I)
    if not s.k_coeffs:
        return 0
    return max(0, len(s.k_coeffs) - 1 - (s.m - 1))


def hp_preceq(p: HilbertPoly, q: HilbertPoly) -> bool:
    """``p <= q`` when ``q - p`` is a nonnegative constant."""
    d = q - p
    return d.is_constant and d.constant_term >= 0


def hp_difference_constant(p: HilbertPoly, q: HilbertPoly) -> int | None:
    """``q - p`` when it is an integer constant, else None."""
    d = q - p
    if not d.is_constant or d.constant_term.denominator != 1:
        return None
    return int(d.constant_term)


def gotzmann_decomposition(p: HilbertPoly) -> list:
    """Exponents ``a_1 >= ... >= a_r`` with ``p = sum_i C(z + a_i - i + 1, a_i)``."""
    rest = p
    out = []
    while not rest.is_zero:
        a = rest.degree
        if rest.leading < 0:
            raise InvalidPolynomial(f"{p} has no Gotzmann representation")
        if out and a > out[-1]:
            raise InvalidPolynomial(f"{p} has no Gotzmann representation")
        i = len(out) + 1
        rest = rest - HilbertPoly.binomial(a - i + 1, a)
        out.append(a)
    return out


def gotzmann_number(p: HilbertPoly) -> int:
    return len(gotzmann_decomposition(p))


def gotzmann_polys(max_number: int, max_degree: int):
    """Every nonzero admissible ``p`` of degree <= ``max_degree`` whose Gotzmann
    number is at most ``max_number``, as ``(p, exponents)`` pairs."""

    def rec(prefix, top):
        if prefix:
            yield prefix
        if len(prefix) == max_number:
            return
        for a in range(top, -1, -1):
            yield from rec(prefix + [a], a)

    for a_seq in rec([], max_degree):
        p = HilbertPoly()
        for i, a in enumerate(a_seq, 1):
            p = p + HilbertPoly.binomial(a - i + 1, a)
        yield p, tuple(a_seq)
