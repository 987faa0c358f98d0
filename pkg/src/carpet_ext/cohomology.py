"""Cohomology of line bundles on F_e via pushforward to P^1.

For p: F_e -> P^1 the pushforwards of a line bundle split, and because the base
is a curve the Leray spectral sequence degenerates, so the two rows determine
h^0, h^1, h^2 exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .divisors import DivisorClass, HirzebruchSurface, canonical, intersect


@dataclass(frozen=True)
class SplitBundle:
    """Direct sum of O(d) on P^1; an empty multiset is the zero sheaf."""

    degrees: tuple[int, ...] = ()

    def __init__(self, degrees: Iterable[int] = ()) -> None:
        object.__setattr__(self, "degrees", tuple(sorted(degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def h0(self) -> int:
        return sum(max(0, d + 1) for d in self.degrees)

    @property
    def h1(self) -> int:
        return sum(max(0, -d - 1) for d in self.degrees)

    def as_counter(self) -> Counter:
        return Counter(self.degrees)


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int
    h2: int

    def __iter__(self):
        return iter((self.h0, self.h1, self.h2))

    def __getitem__(self, i: int) -> int:
        return (self.h0, self.h1, self.h2)[i]

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    def __str__(self) -> str:
        return f"({self.h0}, {self.h1}, {self.h2})"


def pushforward(d: DivisorClass, surface: HirzebruchSurface) -> SplitBundle:
    # p_*O(aC0+bf) = Sym^a(O + O(-e)) (b)
    if d.a < 0:
        return SplitBundle()
    return SplitBundle(d.b - k * surface.e for k in range(d.a + 1))


def higher_pushforward(d: DivisorClass, surface: HirzebruchSurface) -> SplitBundle:
    # relative duality against K_rel = -2C0 - ef
    if d.a > -2:
        return SplitBundle()
    return SplitBundle(d.b + surface.e * (k + 1) for k in range(-d.a - 1))


def cohomology(d: DivisorClass, surface: HirzebruchSurface) -> CohomologyDims:
    direct = pushforward(d, surface)
    higher = higher_pushforward(d, surface)
    return CohomologyDims(direct.h0, direct.h1 + higher.h0, higher.h1)


def h0(d: DivisorClass, surface: HirzebruchSurface) -> int:
    return cohomology(d, surface).h0


def h1(d: DivisorClass, surface: HirzebruchSurface) -> int:
    return cohomology(d, surface).h1


def h2(d: DivisorClass, surface: HirzebruchSurface) -> int:
    return cohomology(d, surface).h2


def euler_char(d: DivisorClass, surface: HirzebruchSurface) -> int:
    k = canonical(surface)
    twice = intersect(d, d - k, surface)
    # D.(D-K) = D^2 - D.K is even on every smooth surface
    assert twice % 2 == 0
    return 1 + twice // 2


@dataclass(frozen=True)
class LemmaCheck:
    """One row of a vanishing table evaluated at a point.

    ``sound`` is False only when the sufficient condition holds but the group
    is nonzero, which would falsify the table.
    """

    name: str
    group: str
    condition: str
    holds: bool
    value: int
    anchor: str

    @property
    def sound(self) -> bool:
        return not self.holds or self.value == 0


def _conditions_2c0_ef_minus_h(a: int, b: int, e: int) -> tuple[tuple[str, bool], tuple[str, bool]]:
    h1_rows = [
        ("a = 1, b <= 1", a == 1 and b <= 1),
        ("a = 2, b <= e+1", a == 2 and b <= e + 1),
        ("a = 3", a == 3),
        ("a >= 4, b >= ae-2e+1", a >= 4 and b >= a * e - 2 * e + 1),
    ]
    h0_rows = [
        ("a = 1, b >= e+1", a == 1 and b >= e + 1),
        ("a = 2, b >= e+1", a == 2 and b >= e + 1),
        ("a >= 4", a >= 4),
    ]
    return _first(h1_rows), _first(h0_rows)


def _first(rows: list[tuple[str, bool]]) -> tuple[str, bool]:
    for label, ok in rows:
        if ok:
            return label, True
    return " | ".join(label for label, _ in rows), False


def vanishing_report(surface: HirzebruchSurface, a: int, b: int) -> list[LemmaCheck]:
    """Evaluate the line-bundle vanishing tables at H = aC0 + bf.

    Requires a >= 1. The tables for -H-K and -H-2K additionally assume H very
    ample; outside that range their conditions are reported as not holding.
    """
    if a < 1:
        raise ValueError("vanishing tables are stated for a >= 1")
    e = surface.e
    H = DivisorClass(a, b)
    K = canonical(surface)
    very_ample = b >= a * e + 1
    rows: list[LemmaCheck] = []

    d = DivisorClass(2, e) - H
    (c1, ok1), (c0, ok0) = _conditions_2c0_ef_minus_h(a, b, e)
    coh = cohomology(d, surface)
    rows.append(LemmaCheck("2C0+ef-H:h1", "H^1(2C0+ef-H)", c1, ok1, coh.h1, "vanish-2C0+ef-H"))
    rows.append(LemmaCheck("2C0+ef-H:h0", "H^0(2C0+ef-H)", c0, ok0, coh.h0, "vanish-2C0+ef-H"))

    d = DivisorClass(0, 2) - H
    coh = cohomology(d, surface)
    label, ok = _first([("a = 1", a == 1), ("a >= 2, b >= ae-e+3", a >= 2 and b >= a * e - e + 3)])
    rows.append(LemmaCheck("2f-H:h1", "H^1(2f-H)", label, ok, coh.h1, "vanish-2f-H"))
    rows.append(LemmaCheck("2f-H:h0", "H^0(2f-H)", "always", True, coh.h0, "vanish-2f-H"))

    rows.append(LemmaCheck(
        "-H+K:h1", "H^1(-H+K)", "b >= ae+1", very_ample, h1(K - H, surface), "vanish-H-pm-K"))
    label, ok = _first([
        ("a = 1, b <= 3", a == 1 and b <= 3),
        ("a = 2, b <= 3+e", a == 2 and b <= 3 + e),
        ("a = 3", a == 3),
        ("a >= 4, b >= ae-2e+3", a >= 4 and b >= a * e - 2 * e + 3),
    ])
    rows.append(LemmaCheck(
        "-H-K:h1", "H^1(-H-K)", label, ok and very_ample, h1(-H - K, surface), "vanish-H-pm-K"))

    label, ok = _first([("a <= 4, b >= 2e+5", a <= 4 and b >= 2 * e + 5), ("a >= 5", a >= 5)])
    rows.append(LemmaCheck(
        "-H-2K:h0", "H^0(-H-2K)", label, ok and very_ample, h0(-H - 2 * K, surface), "vanish-H-2K"))
    return rows
