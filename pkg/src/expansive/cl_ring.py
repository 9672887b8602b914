"""Clements-Lindström ring descriptors.

A ring ``k[x_1..x_m]/(x_1^{d_1}, ..., x_m^{d_m})`` is described by its degree
sequence alone.  ``INF`` marks an unconstrained variable (``x^INF = 0`` never
kicks in).  Variables are numbered from 1 in text and docs; the degree tuple
itself is indexed from 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INF = math.inf


def _check_degree(d) -> None:
    if d == INF:
        return
    if isinstance(d, bool) or not isinstance(d, int):
        raise ValueError(f"degree must be an integer >= 2 or INF, got {d!r}")
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")


@dataclass(frozen=True)
class CLRing:
    """Degree sequence ``d_1 <= ... <= d_m`` of a Clements-Lindström ring.

    The empty sequence stands for the base field; it only shows up as the
    bottom of recursions (``tilde_ring`` of a one-variable ring).
    """

    degrees: tuple

    def __post_init__(self):
        degs = tuple(INF if d == INF else d for d in self.degrees)
        object.__setattr__(self, "degrees", degs)
        for d in degs:
            _check_degree(d)
        for a, b in zip(degs, degs[1:]):
            if a > b:
                raise ValueError(f"degrees must be non-decreasing: {self}")

    @classmethod
    def polynomial(cls, nvars: int) -> "CLRing":
        return cls((INF,) * nvars)

    @classmethod
    def parse(cls, text: str) -> "CLRing":
        """Parse ``"2,3,inf,inf"``."""
        items = [t.strip().lower() for t in text.split(",")]
        if not text.strip() or any(not t for t in items):
            raise ValueError(f"malformed ring text {text!r}")
        degs = []
        for t in items:
            if t in ("inf", "infinity", "oo"):
                degs.append(INF)
            else:
                try:
                    degs.append(int(t))
                except ValueError:
                    raise ValueError(f"malformed degree {t!r} in {text!r}") from None
        return cls(tuple(degs))

    def __str__(self) -> str:
        return ",".join("inf" if d == INF else str(d) for d in self.degrees)

    @property
    def varcount(self) -> int:
        return len(self.degrees)

    @property
    def projective(self) -> bool:
        return bool(self.degrees) and self.degrees[-1] == INF

    @property
    def is_polynomial(self) -> bool:
        return all(d == INF for d in self.degrees)

    @property
    def finite_degrees(self) -> tuple:
        return tuple(d for d in self.degrees if d != INF)

    def bar_ring(self) -> "CLRing":
        """Drop ``x_n`` (the second to last variable) of a projective ring."""
        if not self.projective:
            raise ValueError(f"bar ring needs a projective ring, got {self}")
        if self.varcount < 2:
            raise ValueError("bar ring is defined only with at least two variables")
        return CLRing(self.degrees[:-2] + (INF,))

    def tilde_ring(self) -> "CLRing":
        """Drop the last (free) variable; the result may be Artinian."""
        if not self.projective:
            raise ValueError(f"tilde ring needs a projective ring, got {self}")
        return CLRing(self.degrees[:-1])

    def ambient(self) -> "CLRing":
        """The polynomial ring with the same variables."""
        return CLRing.polynomial(self.varcount)

    def with_free_variable(self) -> "CLRing":
        """Inverse of :meth:`tilde_ring`."""
        return CLRing(self.degrees + (INF,))


def bar_ring(r: CLRing) -> CLRing:
    return r.bar_ring()


def tilde_ring(r: CLRing) -> CLRing:
    return r.tilde_ring()
