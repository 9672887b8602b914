"""Saturated strongly stable points of ``Hilb^p(Proj R)``.

A saturated strongly stable ideal of ``R`` is the extension ``KR`` of a
strongly stable ideal ``K`` of the ring without the last variable, and
``HP(R/KR)(z) = sum_{t <= z} HF(R~/K, t)``.  We search over ``K`` degree by
degree through its sets of standard monomials ``N_j``.  The preimage of
``KR`` in the polynomial ring is saturated, so its regularity is at most the
Gotzmann number ``r`` of ``p``; this fixes ``sum_{t < r} |N_t| = p(r-1)`` and
``|N_j| = p'(j)`` for ``j >= r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cl_ring import INF, CLRing
from .hilbert import HilbertPoly, gotzmann_number, hilbert_polynomial
from .ideal import MonomialIdeal, classify, from_generators, unit_ideal
from .monomial import canonical_key, monomials_of_degree
from .points import EmptyHilbertScheme, hilb_nonempty


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than ``max_candidates`` allows."""


DEFAULT_MAX_CANDIDATES = 10**6


@dataclass(frozen=True)
class EnumerationBudget:
    max_gen_degree: int | None = None
    max_candidates: int = DEFAULT_MAX_CANDIDATES

    def __post_init__(self):
        if self.max_gen_degree is not None and self.max_gen_degree < 1:
            raise ValueError("max_gen_degree must be positive")
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")


@dataclass(frozen=True)
class Enumeration:
    ideals: tuple
    complete: bool
    max_gen_degree: int
    visited: int

    def to_json(self) -> dict:
        return {
            "complete": self.complete,
            "max_gen_degree": self.max_gen_degree,
            "count": len(self.ideals),
            "ideals": [I.to_json() for I in self.ideals],
        }


def certified_degree(p: HilbertPoly, r: CLRing) -> int:
    finite = [d for d in r.degrees if d != INF]
    return max([gotzmann_number(p)] + finite)


class _Tilde:
    """Per-degree data of the ring without the last variable."""

    def __init__(self, t: CLRing):
        self.ring = t
        self.n = t.varcount

    @lru_cache(maxsize=None)
    def monos(self, j: int) -> tuple:
        return tuple(monomials_of_degree(self.ring, j))

    @lru_cache(maxsize=None)
    def ascending(self, j: int) -> tuple:
        return tuple(reversed(self.monos(j)))

    def moves(self, u: tuple) -> list:
        """Nonzero ``u x_h / x_k`` with ``k < h``: the monomials forced into
        ``N`` together with ``u``."""
        out = []
        d = self.ring.degrees
        for k in range(self.n):
            if u[k] == 0:
                continue
            for h in range(k + 1, self.n):
                if u[h] + 1 < d[h]:
                    v = list(u)
                    v[k] -= 1
                    v[h] += 1
                    out.append(tuple(v))
        return out

    def candidates(self, prev: frozenset, j: int) -> list:
        """Degree ``j`` monomials all of whose divisors ``u / x_i`` lie in ``prev``."""
        out = []
        for u in self.ascending(j):
            ok = True
            for i in range(self.n):
                if u[i]:
                    w = u[:i] + (u[i] - 1,) + u[i + 1:]
                    if w not in prev:
                        ok = False
                        break
            if ok:
                out.append(u)
        return out

    @lru_cache(maxsize=None)
    def shadow_sizes(self, j: int) -> tuple:
        """``sizes[a]`` = number of degree ``j+1`` monomials in ``m * L``
        where ``L`` is the lex segment of the first ``a`` monomials."""
        seen, sizes = set(), [0]
        d = self.ring.degrees
        for u in self.monos(j):
            for i in range(self.n):
                if u[i] + 1 < d[i]:
                    seen.add(u[:i] + (u[i] + 1,) + u[i + 1:])
            sizes.append(len(seen))
        return tuple(sizes)

    def max_growth(self, j: int, h: int) -> int:
        """Largest possible ``|N_{j+1}|`` when ``|N_j| = h`` (lex ideals grow least)."""
        total = len(self.monos(j))
        return len(self.monos(j + 1)) - self.shadow_sizes(j)[total - h]


def _search(p: HilbertPoly, r: CLRing, budget: EnumerationBudget):
    t = _Tilde(r.tilde_ring())
    g = gotzmann_number(p)
    D = budget.max_gen_degree or certified_degree(p, r)
    dp = p.difference()
    target = int(p(g - 1))
    found, visited = [], 0

    def tick():
        nonlocal visited
        visited += 1
        if visited > budget.max_candidates:
            raise BudgetExceeded(
                f"enumeration of Hilb^({p}) over {r} exceeded {budget.max_candidates} nodes"
            )

    def reachable(j, h, total):
        for s in range(j, g - 1):
            h = t.max_growth(s, h)
            total += h
        return total >= target

    def bounds(j, total):
        if j < g - 1:
            return 0, target - total
        if j == g - 1:
            return target - total, target - total
        v = dp(j)
        return int(v), int(v)

    def finish(layers):
        gens = []
        for j in range(1, len(layers)):
            chosen = layers[j]
            gens.extend(u for u in t.candidates(layers[j - 1], j) if u not in chosen)
        I = from_generators(r, [u + (0,) for u in gens])
        if hilbert_polynomial(I) == p:
            found.append(I)

    def subsets(cands, lo, hi):
        """Move-closed subsets of ``cands`` with size in ``[lo, hi]``."""
        out = []

        def rec(start, chosen):
            tick()
            if len(chosen) >= lo:
                out.append(frozenset(chosen))
            if len(chosen) == hi:
                return
            for i in range(start, len(cands)):
                u = cands[i]
                if all(v in chosen for v in t.moves(u)):
                    chosen.add(u)
                    rec(i + 1, chosen)
                    chosen.discard(u)

        rec(0, set())
        return out

    def layer(j, layers, total):
        if j > D:
            finish(layers)
            return
        lo, hi = bounds(j, total)
        if lo < 0 or hi < 0:
            return
        cands = t.candidates(layers[-1], j)
        if len(cands) < lo:
            return
        for N in subsets(cands, lo, hi):
            s = len(N)
            if j < g - 1 and not reachable(j, s, total + s):
                continue
            layers.append(N)
            layer(j + 1, layers, total + s)
            layers.pop()

    layer(1, [frozenset([t.monos(0)[0]])], 1)
    return found, D, visited


def enumerate_points(p: HilbertPoly, r: CLRing, budget: EnumerationBudget | None = None) -> Enumeration:
    budget = budget or EnumerationBudget()
    if not hilb_nonempty(p, r):
        raise EmptyHilbertScheme(f"Hilb^({p}) of Proj {r} is empty")
    if p.is_zero:
        return Enumeration((unit_ideal(r),), True, 0, 1)
    found, D, visited = _search(p, r, budget)
    ideals = tuple(sorted(set(found), key=lambda I: [canonical_key(g) for g in I.gens]))
    return Enumeration(ideals, D >= certified_degree(p, r), D, visited)


def strongly_stable_points(p: HilbertPoly, r: CLRing, budget: EnumerationBudget | None = None) -> list:
    return list(enumerate_points(p, r, budget).ideals)


def almost_lex_points(p: HilbertPoly, r: CLRing, budget: EnumerationBudget | None = None) -> list:
    return [I for I in strongly_stable_points(p, r, budget) if classify(I).almost_lex]
