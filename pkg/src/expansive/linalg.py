"""Exact sparse row reduction over Q or a prime field.

Vectors are dicts ``column -> coefficient`` with no zero entries.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


class Field:
    """The rationals (``characteristic == 0``) or ``F_q``."""

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    def __repr__(self):
        return f"Field({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(self.characteristic)

    def elem(self, a):
        q = self.characteristic
        return Fraction(a) if q == 0 else int(a) % q

    def inv(self, a):
        q = self.characteristic
        return 1 / Fraction(a) if q == 0 else pow(int(a), q - 2, q)

    def norm(self, a):
        q = self.characteristic
        return a if q == 0 else a % q


class Reducer:
    """Incremental echelon form.  With ``track=True`` each stored row also
    remembers which input vectors it combines, so dependent inputs yield
    kernel vectors."""

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.rows = {}  # pivot -> (row, combo)
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict | None):
        F = self.field
        vec = dict(vec)
        while vec:
            piv = min(vec)
            if piv not in self.rows:
                break
            row, rc = self.rows[piv]
            c = vec[piv]
            for k, a in row.items():
                v = F.norm(vec.get(k, 0) - c * a)
                if v:
                    vec[k] = v
                else:
                    vec.pop(k, None)
            if combo is not None:
                for k, a in rc.items():
                    v = F.norm(combo.get(k, 0) - c * a)
                    if v:
                        combo[k] = v
                    else:
                        combo.pop(k, None)
        return vec, combo

    def add(self, vec: dict):
        """Insert ``vec``.  Returns None if it was independent, otherwise
        (when tracking) the dependency expressed over the inputs."""
        F = self.field
        idx = self.count
        self.count += 1
        combo = {idx: F.elem(1)} if self.track else None
        vec = {k: F.elem(v) for k, v in vec.items() if F.norm(F.elem(v))}
        red, combo = self._reduce(vec, combo)
        if not red:
            return combo if self.track else {}
        piv = min(red)
        s = F.inv(red[piv])
        red = {k: F.norm(v * s) for k, v in red.items()}
        if combo is not None:
            combo = {k: F.norm(v * s) for k, v in combo.items()}
        self.rows[piv] = (red, combo)
        return None

    def independent(self, vec: dict) -> bool:
        return self.add(vec) is None


def rank(vectors, field: Field) -> int:
    red = Reducer(field)
    for v in vectors:
        red.add(v)
    return red.rank


def kernel(columns, field: Field) -> list:
    """Basis of ``{lam : sum_k lam_k columns[k] = 0}`` as dicts over column indices."""
    red = Reducer(field, track=True)
    out = []
    for col in columns:
        dep = red.add(col)
        if dep is not None:
            out.append(dep)
    return out
