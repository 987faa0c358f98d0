"""Picard lattice of the Hirzebruch surface F_e.

A class ``aC0 + bf`` is a pair of Python ints, so coefficients never overflow.
The surface invariant ``e`` is kept separate from the class: one divisor can be
paired on several surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HirzebruchSurface:
    """F_e, with negative section C0 (C0^2 = -e) and fiber f."""

    e: int

    def __post_init__(self) -> None:
        if self.e < 0:
            raise ValueError(f"Hirzebruch invariant must be >= 0, got {self.e}")


@dataclass(frozen=True, order=True)
class DivisorClass:
    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.a}C0{self.b:+d}f"


ZERO = DivisorClass(0, 0)
C0 = DivisorClass(1, 0)
FIBER = DivisorClass(0, 1)


def intersect(d1: DivisorClass, d2: DivisorClass, surface: HirzebruchSurface) -> int:
    return -surface.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def canonical(surface: HirzebruchSurface) -> DivisorClass:
    return DivisorClass(-2, -(surface.e + 2))


def is_very_ample(h: DivisorClass, surface: HirzebruchSurface) -> bool:
    return h.a >= 1 and h.b >= h.a * surface.e + 1


def is_effective(d: DivisorClass) -> bool:
    # the effective cone of F_e is spanned by C0 and f
    return d.a >= 0 and d.b >= 0
