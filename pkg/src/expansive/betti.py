"""Graded Betti numbers of quotients by monomial ideals.

Tables always describe the quotient ``R/I`` (so ``b[0, 0] = 1`` unless ``I``
is the unit ideal); :meth:`BettiTable.ideal_totals` shifts to the ideal.

* :func:`betti_ambient` resolves the preimage over the polynomial ring through
  the homology of upper Koszul complexes on the lcm lattice.
* :func:`betti_eliahou_kervaire` is the closed formula for strongly stable
  ideals of a polynomial ring.
* :func:`betti_resolution_oracle` builds a truncated minimal multigraded
  resolution over ``R`` (or the ambient ring) by linear algebra.
* :func:`betti_quadratic_recursion` computes total Betti numbers over ``R``
  when every ``d_i`` is 2 or INF from the component decomposition.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb

from .cl_ring import INF, CLRing
from .hilbert import HilbertPoly, hilbert_polynomial
from .ideal import (
    MonomialIdeal,
    decompose,
    is_saturated,
    is_strongly_stable,
    preimage_in_ambient,
)
from .linalg import Field, Reducer, kernel, rank
from .monomial import all_monomials_up_to, lcm


class Over(Enum):
    AMBIENT = "ambient"
    QUOTIENT = "quotient"


class WindowError(ValueError):
    """The requested truncation window holds no entries."""


class LatticeTooLarge(ValueError):
    """Too many generators for the lcm-lattice method."""


LATTICE_GENERATOR_LIMIT = 22


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        Field(self.characteristic)  # validates

    @property
    def field(self) -> Field:
        return Field(self.characteristic)


@dataclass
class BettiTable:
    """``entries[(i, j)] = beta_{i,j}`` of the quotient.

    ``window`` is ``None`` for a complete table, otherwise ``(imax, jmax)``:
    entries with ``i <= imax`` and ``j <= jmax`` are exact, the rest unknown.
    """

    over: Over
    entries: dict = field(default_factory=dict)
    window: tuple | None = None

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def add(self, i: int, j: int, b: int = 1) -> None:
        if b:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + b

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def totals(self, imax: int | None = None) -> list:
        top = self.length if imax is None else imax
        if self.window is not None and imax is None:
            top = self.window[0]
        return [self.total(i) for i in range(top + 1)]

    def ideal_totals(self, imax: int | None = None) -> list:
        """``beta_i(I) = beta_{i+1}(R/I)``."""
        t = self.totals(None if imax is None else imax + 1)
        return t[1:]

    def graded(self) -> dict:
        return dict(sorted(self.entries.items()))

    def same_entries(self, other: "BettiTable") -> bool:
        return self.graded() == other.graded()

    def restricted(self, imax: int, jmax: int) -> "BettiTable":
        ent = {k: v for k, v in self.entries.items() if k[0] <= imax and k[1] <= jmax}
        return BettiTable(self.over, ent, (imax, jmax))

    def to_json(self) -> dict:
        return {
            "over": self.over.value,
            "window": None if self.window is None else {"imax": self.window[0], "jmax": self.window[1]},
            "entries": [{"i": i, "j": j, "b": b} for (i, j), b in sorted(self.entries.items())],
            "totals": self.totals(),
        }

    def to_csv(self) -> str:
        """Betti diagram: rows ``j - i``, columns ``i``."""
        cols = range(self.length + 1)
        rows = sorted({j - i for i, j in self.entries})
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j-i"] + list(cols))
        for s in rows:
            w.writerow([s] + [self[(i, i + s)] for i in cols])
        w.writerow(["total"] + [self.total(i) for i in cols])
        return buf.getvalue()


# ------------------------------------------------------- lcm lattice method

def lcm_lattice(gens) -> list:
    """All lcms of nonempty subsets of ``gens``, sorted by degree."""
    gens = list(gens)
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = lcm(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen, key=lambda m: (sum(m), m))


def _in_ideal(gens, m) -> bool:
    return any(all(x <= y for x, y in zip(g, m)) for g in gens)


def _reduced_homology(faces_by_dim: dict, F: Field) -> dict:
    """Reduced homology dimensions of a simplicial complex given by its faces
    (tuples of vertices) grouped by dimension, empty face at dimension -1."""
    top = max(faces_by_dim)
    ranks = {}
    for k in range(0, top + 1):
        lower = {f: idx for idx, f in enumerate(faces_by_dim.get(k - 1, []))}
        vecs = []
        for f in faces_by_dim.get(k, []):
            v = {}
            for pos in range(len(f)):
                g = f[:pos] + f[pos + 1:]
                v[lower[g]] = -1 if pos % 2 else 1
            vecs.append(v)
        ranks[k] = rank(vecs, F)
    out = {}
    for k in range(-1, top + 1):
        dim = len(faces_by_dim.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            out[k] = dim
    return out


def betti_ambient(I: MonomialIdeal, f: FieldSpec = FieldSpec()) -> BettiTable:
    """Complete graded Betti table of ``R/I`` over the ambient polynomial ring."""
    M = preimage_in_ambient(I)
    table = BettiTable(Over.AMBIENT)
    if M.is_unit:
        return table
    table.add(0, 0)
    if M.is_zero:
        return table
    if len(M.gens) > LATTICE_GENERATOR_LIMIT:
        raise LatticeTooLarge(
            f"{len(M.gens)} generators exceed the lcm-lattice limit of {LATTICE_GENERATOR_LIMIT}"
        )
    F = f.field
    gens = M.gens
    for b in lcm_lattice(gens):
        support = [i for i, e in enumerate(b) if e > 0]
        faces = {-1: [()]}
        for k in range(1, len(support) + 1):
            layer = []
            for sigma in combinations(support, k):
                m = list(b)
                for i in sigma:
                    m[i] -= 1
                if _in_ideal(gens, m):
                    layer.append(sigma)
            if not layer:
                break
            faces[k - 1] = layer
        for k, dim in _reduced_homology(faces, F).items():
            # beta_{i,b}(M) = dim H~_{i-1}, quotient index shifts by one
            table.add(k + 2, sum(b), dim)
    return table


# ------------------------------------------------------ Eliahou-Kervaire

def betti_eliahou_kervaire(J: MonomialIdeal) -> BettiTable:
    if not J.ring.is_polynomial:
        raise ValueError(f"Eliahou-Kervaire needs a polynomial ring, got {J.ring}")
    if not is_strongly_stable(J):
        raise ValueError(f"{J} is not strongly stable")
    table = BettiTable(Over.AMBIENT)
    if J.is_unit:
        return table
    table.add(0, 0)
    for u in J.gens:
        d = sum(u)
        mu = max(i for i, e in enumerate(u) if e > 0) + 1
        for i in range(mu):
            table.add(i + 1, i + d, comb(mu - 1, i))
    return table


# ------------------------------------------------------ resolution oracle

def default_jmax(I: MonomialIdeal, imax: int) -> int:
    return I.max_degree + imax + 2


def _nonzero(degrees, e) -> bool:
    return all(x < d for d, x in zip(degrees, e))


def _resolve(ring: CLRing, gens, F: Field, imax: int, jmax: int) -> BettiTable:
    m = ring.varcount
    deg = ring.degrees
    table = BettiTable(Over.QUOTIENT, window=(imax, jmax))
    zero = (0,) * m
    if any(g == zero for g in gens):
        return table  # unit ideal: R/I = 0
    table.add(0, 0)
    # each level: list of (multidegree, image dict over the previous level)
    prev = [(zero, {})]
    cur = [(g, {0: F.elem(1)}) for g in gens if sum(g) <= jmax]
    for g, _ in cur:
        table.add(1, sum(g))
    monos = all_monomials_up_to(ring, jmax)
    for i in range(1, imax):
        if not cur:
            break
        # candidate multidegrees: a_k + c with c a nonzero monomial
        cands = set()
        for a, _ in cur:
            room = jmax - sum(a)
            for c in monos:
                if sum(c) > room:
                    continue
                cands.add(tuple(x + y for x, y in zip(a, c)))
        order = sorted(cands, key=lambda b: (sum(b), b))
        Z = {}
        new = []
        for b in order:
            basis = [k for k, (a, _) in enumerate(cur)
                     if all(x <= y for x, y in zip(a, b)) and _nonzero(deg, [y - x for x, y in zip(a, b)])]
            basis_set = set(basis)
            cols = []
            for k in basis:
                img = cur[k][1]
                cols.append({l: c for l, c in img.items()
                             if _nonzero(deg, [y - x for x, y in zip(prev[l][0], b)])})
            ker = [{basis[j]: c for j, c in v.items()} for v in kernel(cols, F)]
            Z[b] = ker
            if not ker:
                continue
            lower = Reducer(F)
            for v in range(m):
                if b[v] == 0:
                    continue
                bb = b[:v] + (b[v] - 1,) + b[v + 1:]
                for z in Z.get(bb, ()):
                    shifted = {k: c for k, c in z.items() if k in basis_set}
                    if shifted:
                        lower.add(shifted)
            for z in ker:
                if lower.independent(z):
                    new.append((b, z))
                    table.add(i + 1, sum(b))
        prev, cur = cur, new
    return table


def betti_resolution_oracle(
    I: MonomialIdeal,
    over: Over = Over.QUOTIENT,
    f: FieldSpec = FieldSpec(),
    imax: int = 6,
    jmax: int | None = None,
) -> BettiTable:
    """Truncated minimal multigraded resolution of ``R/I`` (or ``S/preimage``)."""
    if imax < 0:
        raise ValueError("imax must be nonnegative")
    if over is Over.AMBIENT:
        J = preimage_in_ambient(I)
        ring, gens = J.ring, J.gens
    else:
        J, ring, gens = I, I.ring, I.gens
    if jmax is None:
        jmax = default_jmax(J, imax)
    if jmax < 0 or (not J.is_unit and jmax < min((sum(g) for g in gens), default=0) and imax >= 1 and not gens):
        raise WindowError(f"window (imax={imax}, jmax={jmax}) holds no entries")
    table = _resolve(ring, gens, f.field, imax, jmax)
    table.over = over
    if not table.entries and not J.is_unit:
        raise WindowError(f"window (imax={imax}, jmax={jmax}) holds no entries")
    return table


# ------------------------------------------------------ quadratic recursion

def _poincare_free_line(rbar: CLRing, imax: int) -> list:
    """Total Betti numbers of ``k[x_{n+1}]`` over the bar ring: a tensor product
    of periodic resolutions (degree 2 variables) and Koszul complexes (free
    variables)."""
    series = [1] + [0] * imax
    for d in rbar.degrees[:-1]:
        factor = [1] * (imax + 1) if d != INF else [1, 1] + [0] * (imax - 1)
        series = [sum(series[a] * factor[k - a] for a in range(k + 1)) for k in range(imax + 1)]
    return series[: imax + 1]


def _ideal_betti(I: MonomialIdeal, imax: int) -> list:
    """``beta_i^R(I)`` for ``i = 0..imax``."""
    r = I.ring
    if I.is_zero:
        return [0] * (imax + 1)
    if I.is_unit:
        return [1] + [0] * imax
    if r.varcount < 2:
        raise ValueError(f"{I} is neither zero nor unit in a one-variable ring")
    dec = decompose(I)
    rbar = dec.base
    first = dec.component(0)
    last = dec.tail if dec.tail is not None else dec.components[-1]
    c1 = hilbert_polynomial(first) - hilbert_polynomial(last)
    if not c1.is_constant or c1.constant_term < 0:
        raise ValueError("component Hilbert polynomials do not differ by a constant")
    c1 = int(c1.constant_term)
    base = _ideal_betti(first, imax)
    P = _poincare_free_line(rbar, imax)
    d_n = r.degrees[-2]
    if d_n == INF:
        return [base[i] + c1 * P[i] for i in range(imax + 1)]
    acc, out = 0, []
    for i in range(imax + 1):
        acc += P[i]
        out.append(base[i] + c1 * acc)
    return out


def betti_quadratic_recursion(I: MonomialIdeal, imax: int = 6) -> list:
    """Total Betti numbers ``beta_0..beta_imax`` of ``R/I`` over ``R``."""
    r = I.ring
    if any(d not in (2, INF) for d in r.degrees):
        raise ValueError(f"degree sequence {r} has entries outside {{2, inf}}")
    if not (is_saturated(I) and is_strongly_stable(I)):
        raise ValueError(f"{I} must be saturated and strongly stable")
    if I.is_unit:
        return [0] * (imax + 1)
    return [1] + _ideal_betti(I, imax - 1)


# ------------------------------------------------------ bounds

class Provenance(Enum):
    UNCONDITIONAL = "UNCONDITIONAL"
    PROVED_CI = "PROVED-CI"
    CONDITIONAL_LPP = "CONDITIONAL-LPP"


def provenance(r: CLRing, f: FieldSpec) -> Provenance:
    """How the Betti bound from ``Exp`` is justified for non-monomial ideals."""
    finite = list(r.finite_degrees)
    if not finite:
        return Provenance.UNCONDITIONAL
    grows = all(finite[j] > sum(d - 1 for d in finite[:j]) for j in range(2, len(finite)))
    if f.characteristic == 0 and grows:
        return Provenance.PROVED_CI
    return Provenance.CONDITIONAL_LPP


@dataclass
class BoundsReport:
    poly: HilbertPoly
    ring: CLRing
    ideal: MonomialIdeal
    table: BettiTable
    provenance: Provenance

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "poly": str(self.poly),
            "exp": self.ideal.to_json(),
            "betti": self.table.to_json(),
            "ideal_totals": self.table.ideal_totals(),
            "provenance": self.provenance.value,
        }


def bounds_report(p: HilbertPoly, r: CLRing, f: FieldSpec = FieldSpec()) -> BoundsReport:
    from .points import exp_point

    E = exp_point(p, r)
    return BoundsReport(p, r, E, betti_ambient(E, f), provenance(r, f))
