"""Monomials of a Clements-Lindström ring.

A monomial is a plain tuple of exponents.  It is a valid (nonzero) monomial of
a ring when every exponent stays below its degree bound; operations that can
annihilate return ``None`` for zero.
"""

from __future__ import annotations

import re
from enum import Enum
from itertools import combinations_with_replacement

from .cl_ring import INF, CLRing

Monomial = tuple


class Order(Enum):
    LEX = "lex"
    OPP = "opp"


LEX = Order.LEX
OPP = Order.OPP


def is_nonzero(r: CLRing, m: Monomial) -> bool:
    return len(m) == r.varcount and all(0 <= e < d for e, d in zip(m, r.degrees))


def check_monomial(r: CLRing, m: Monomial) -> Monomial:
    m = tuple(int(e) for e in m)
    if len(m) != r.varcount or any(e < 0 for e in m):
        raise ValueError(f"{list(m)} is not an exponent vector of ring {r}")
    if not is_nonzero(r, m):
        raise ValueError(f"{list(m)} is zero in ring {r}")
    return m


def degree(m: Monomial) -> int:
    return sum(m)


def one(r: CLRing) -> Monomial:
    return (0,) * r.varcount


def variable(r: CLRing, i: int) -> Monomial | None:
    """The 0-based variable ``x_{i+1}``."""
    m = [0] * r.varcount
    m[i] = 1
    return tuple(m) if is_nonzero(r, tuple(m)) else None


def multiply(r: CLRing, a: Monomial, b: Monomial) -> Monomial | None:
    if len(a) != r.varcount or len(b) != r.varcount:
        raise ValueError("monomials do not belong to the same ring")
    c = tuple(x + y for x, y in zip(a, b))
    return c if all(e < d for e, d in zip(c, r.degrees)) else None


def times_var(r: CLRing, m: Monomial, i: int) -> Monomial | None:
    e = m[i] + 1
    if e >= r.degrees[i]:
        return None
    return m[:i] + (e,) + m[i + 1:]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def compare(a: Monomial, b: Monomial, order: Order = LEX) -> int:
    """Pure lexicographic comparison, no degree refinement.

    LEX reads exponents with priority ``x_1 > x_2 > ...``; OPP with
    ``x_m > ... > x_1``.  Returns -1, 0 or 1.
    """
    if len(a) != len(b):
        raise ValueError("monomials do not belong to the same ring")
    if order is OPP:
        a, b = a[::-1], b[::-1]
    return (a > b) - (a < b)


def lex_key(m: Monomial):
    return m


def opp_key(m: Monomial):
    return m[::-1]


def canonical_key(m: Monomial):
    """Degree ascending, then LEX descending."""
    return (sum(m), tuple(-e for e in m))


def monomials_of_degree(r: CLRing, j: int) -> list:
    """Nonzero monomials of degree ``j``, LEX descending."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    return list(_monomials(r.degrees, j))


def _monomials(degrees, j):
    if not degrees:
        if j == 0:
            yield ()
        return
    if len(degrees) == 1:
        if j < degrees[0]:
            yield (j,)
        return
    top = j if degrees[0] == INF else min(j, degrees[0] - 1)
    for e in range(top, -1, -1):
        for rest in _monomials(degrees[1:], j - e):
            yield (e,) + rest


def all_monomials_up_to(r: CLRing, j: int) -> list:
    out = []
    for t in range(j + 1):
        out.extend(monomials_of_degree(r, t))
    return out


_TERM = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(r: CLRing, text: str) -> Monomial:
    """Accept ``x1^2*x3``, ``1`` or the tuple form ``[2,0,1,0]``."""
    text = text.strip().replace(" ", "")
    if text.startswith("["):
        body = text.strip("[]")
        exps = [int(t) for t in body.split(",")] if body else []
        return check_monomial(r, exps)
    exps = [0] * r.varcount
    if text != "1":
        for factor in text.split("*"):
            mt = _TERM.match(factor)
            if not mt:
                raise ValueError(f"malformed monomial factor {factor!r}")
            i = int(mt.group(1)) - 1
            if not 0 <= i < r.varcount:
                raise ValueError(f"variable x{i + 1} not in ring {r}")
            exps[i] += int(mt.group(2) or 1)
    return check_monomial(r, exps)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) or "1"
