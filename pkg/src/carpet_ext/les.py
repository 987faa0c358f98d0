"""Long exact sequence bookkeeping for rank-two bundles on F_e.

A bundle E with a filtration 0 -> S -> E -> Q -> 0 by line bundles has

    h0(E) = s0 + q0 - r0
    h1(E) = s1 + q1 - r0 - r1
    h2(E) = s2 + q2 - r1

where r0, r1 are the ranks of the connecting maps H^0(Q) -> H^1(S) and
H^1(Q) -> H^2(S). Ranks are never guessed: each one ranges over
[0, min(source, target)] and a component is reported exact only when that
range forces it.

Twisted normal bundles of Y in P^M are not computed; the known facts about
them live in ``RULES`` with explicit validity predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Literal

from .cohomology import CohomologyDims, cohomology, h1
from .divisors import DivisorClass, HirzebruchSurface, canonical, intersect, is_very_ample


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: int) -> Interval:
        return cls(v, v)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def __add__(self, other: Interval | int) -> Interval:
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: Interval | int) -> Interval:
        other = _as_interval(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: int) -> Interval:
        return _as_interval(other) - self

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def clamp_below(self, floor: int) -> Interval:
        return Interval(max(self.lo, floor), max(self.hi, floor))

    def __str__(self) -> str:
        return str(self.lo) if self.is_point else f"[{self.lo}, {self.hi}]"


def _as_interval(v: Interval | int) -> Interval:
    return v if isinstance(v, Interval) else Interval.point(v)


@dataclass(frozen=True)
class LesInstance:
    sub: DivisorClass
    quot: DivisorClass
    surface: HirzebruchSurface


def tangent_instance(twist: DivisorClass, surface: HirzebruchSurface) -> LesInstance:
    return LesInstance(
        sub=twist + DivisorClass(2, surface.e),
        quot=twist + DivisorClass(0, 2),
        surface=surface,
    )


@dataclass(frozen=True)
class DimResult:
    sub: CohomologyDims
    quot: CohomologyDims
    delta0_range: Interval
    delta1_range: Interval

    @property
    def kind(self) -> Literal["exact", "interval"]:
        return "exact" if self.delta0_range.is_point and self.delta1_range.is_point else "interval"

    @property
    def exact(self) -> bool:
        return self.kind == "exact"

    def at(self, r0: int, r1: int) -> tuple[int, int, int]:
        s, q = self.sub, self.quot
        return (s.h0 + q.h0 - r0, s.h1 + q.h1 - r0 - r1, s.h2 + q.h2 - r1)

    def corners(self) -> Iterator[tuple[int, int, int]]:
        d0, d1 = self.delta0_range, self.delta1_range
        for r0, r1 in product({d0.lo, d0.hi}, {d1.lo, d1.hi}):
            yield self.at(r0, r1)

    def points(self) -> Iterator[tuple[int, int, int]]:
        d0, d1 = self.delta0_range, self.delta1_range
        for r0, r1 in product(range(d0.lo, d0.hi + 1), range(d1.lo, d1.hi + 1)):
            yield self.at(r0, r1)

    def range_of(self, fn: Callable[[int, int, int], int]) -> Interval:
        """Range of a function affine in (h0, h1, h2) over all admissible ranks."""
        values = [fn(*p) for p in self.corners()]
        return Interval(min(values), max(values))

    @property
    def h0(self) -> Interval:
        return self.range_of(lambda a, b, c: a)

    @property
    def h1(self) -> Interval:
        return self.range_of(lambda a, b, c: b)

    @property
    def h2(self) -> Interval:
        return self.range_of(lambda a, b, c: c)

    @property
    def euler(self) -> int:
        return self.sub.euler + self.quot.euler

    def triple(self) -> tuple[int, int, int]:
        if not self.exact:
            raise ValueError("connecting-map ranks are not forced; result is an interval")
        return self.at(self.delta0_range.lo, self.delta1_range.lo)

    def __str__(self) -> str:
        return f"({self.h0}, {self.h1}, {self.h2}) {self.kind}"


def les_solve(inst: LesInstance) -> DimResult:
    s = cohomology(inst.sub, inst.surface)
    q = cohomology(inst.quot, inst.surface)
    return DimResult(
        sub=s,
        quot=q,
        delta0_range=Interval(0, min(q.h0, s.h1)),
        delta1_range=Interval(0, min(q.h1, s.h2)),
    )


def tangent_cohomology(twist: DivisorClass, surface: HirzebruchSurface) -> DimResult:
    """h^i(T_Y (x) O(twist)) from the relative tangent filtration."""
    return les_solve(tangent_instance(twist, surface))


@dataclass(frozen=True)
class TangentCheck:
    name: str
    group: str
    condition: str
    holds: bool
    value: Interval
    anchor: str = "vanish-tangent"

    @property
    def sound(self) -> bool:
        # a satisfied row must force exactly zero, not merely allow it
        return not self.holds or (self.value.is_point and self.value.lo == 0)


def tangent_vanishing_report(surface: HirzebruchSurface, a: int, b: int) -> list[TangentCheck]:
    e = surface.e
    H = DivisorClass(a, b)
    K = canonical(surface)
    va = b >= a * e + 1
    minus_h = tangent_cohomology(-H, surface)
    minus_h_plus_k = tangent_cohomology(K - H, surface)

    rows1 = [
        ("a = 1, b <= 1", a == 1 and b <= 1),
        # the a = 2 row reads ae-e+3 <= b <= e+1, which no b satisfies
        ("a = 2, ae-e+3 <= b <= e+1", a == 2 and a * e - e + 3 <= b <= e + 1),
        ("a = 3, b >= ae-e+3", a == 3 and b >= a * e - e + 3),
        ("a >= 4, b >= max(ae-2e+3, ae-e+3)",
         a >= 4 and b >= max(a * e - 2 * e + 3, a * e - e + 3)),
    ]
    rows2 = [("a = 1, b >= e+1", a == 1 and b >= e + 1), ("a >= 2, b >= ae+1", a >= 2 and b >= a * e + 1)]
    rows3 = [("a = 1, b >= e+1", a == 1 and b >= e + 1), ("a = 2, b >= e+1", a == 2 and b >= e + 1),
             ("a >= 3", a >= 3)]

    out = []
    for name, group, rows, value in (
        ("T(-H):h1", "H^1(T(-H))", rows1, minus_h.h1),
        ("T(-H+K):h1", "H^1(T(-H+K))", rows2, minus_h_plus_k.h1),
        ("T(-H):h0", "H^0(T(-H))", rows3, minus_h.h0),
    ):
        label, ok = next(((lab, True) for lab, c in rows if c), (" | ".join(r[0] for r in rows), False))
        out.append(TangentCheck(name, group, label, ok and va, value))
    return out


# ---------------------------------------------------------------------------
# Twisted normal bundles of Y in P^M

Twist = Literal["minusH", "minusHplusK"]


class NoRuleApplies(Exception):
    """No normal-bundle rule covers the requested (a, b, e, k, twist)."""


@dataclass(frozen=True)
class Verdict:
    value: int
    kind: Literal["exact", "upper"]
    rule: str
    conditions: str
    anchors: tuple[str, ...]

    def __str__(self) -> str:
        rel = "=" if self.kind == "exact" else "<="
        return f"{rel} {self.value}"


def carpet_span_dim(h: DivisorClass, surface: HirzebruchSurface) -> int:
    """M = 1 + H^2, the dimension of the span of the K3 carpet over Y."""
    return 1 + intersect(h, h, surface)


@dataclass(frozen=True)
class NormalTwistRule:
    name: str
    twist: Twist
    conditions: str
    applies: Callable[[DivisorClass, HirzebruchSurface, int], bool]
    evaluate: Callable[[DivisorClass, HirzebruchSurface, int], tuple[int, str]]
    anchors: tuple[str, ...] = field(default=())


def _twisted_canonical_applies(h: DivisorClass, s: HirzebruchSurface, k: int) -> bool:
    return h1(canonical(s) - k * h, s) == 0


def _twisted_canonical_value(h: DivisorClass, s: HirzebruchSurface, k: int) -> tuple[int, str]:
    return tangent_cohomology(canonical(s) - k * h, s).h1.hi, "upper"


RULES: tuple[NormalTwistRule, ...] = (
    NormalTwistRule(
        name="twisted-canonical",
        twist="minusHplusK",
        conditions="h^1(-kH+K) = 0",
        applies=_twisted_canonical_applies,
        evaluate=_twisted_canonical_value,
        anchors=("normal-twisted-canonical",),
    ),
    NormalTwistRule(
        name="a2-exact",
        twist="minusH",
        conditions="k = 1, a = 2, b >= e+3",
        applies=lambda h, s, k: k == 1 and h.a == 2 and h.b >= s.e + 3,
        evaluate=lambda h, s, k: (carpet_span_dim(h, s) + 1, "exact"),
        anchors=("normal-a2-exact",),
    ),
    NormalTwistRule(
        name="a2-special",
        twist="minusH",
        conditions="k = 1, (a, b, e) = (2, 2, 0)",
        applies=lambda h, s, k: k == 1 and (h.a, h.b, s.e) == (2, 2, 0),
        evaluate=lambda h, s, k: (carpet_span_dim(h, s) + 2, "upper"),
        anchors=("normal-a2-special",),
    ),
)


def h0_normal_twist(
    h: DivisorClass,
    surface: HirzebruchSurface,
    twist: Twist,
    k: int = 1,
    rules: tuple[NormalTwistRule, ...] | None = None,
) -> Verdict:
    """Value or upper bound for h^0(N_{Y/P^M}(-kH)) or h^0(N_{Y/P^M}(-kH+K)).

    The first rule whose validity predicate holds is used; the returned
    verdict names it.
    """
    if not is_very_ample(h, surface):
        raise ValueError(f"{h} is not very ample on F_{surface.e}")
    if k < 1:
        raise ValueError("k must be positive")
    for rule in RULES if rules is None else rules:
        if rule.twist == twist and rule.applies(h, surface, k):
            value, kind = rule.evaluate(h, surface, k)
            return Verdict(value, kind, rule.name, rule.conditions, rule.anchors)
    raise NoRuleApplies(f"no rule for h^0(N({twist})) at a={h.a}, b={h.b}, e={surface.e}, k={k}")


def generic_normal_bound(h: DivisorClass, surface: HirzebruchSurface, k: int = 1) -> int:
    """Upper bound h^0(N(-kH)) <= h^0(T_P|Y(-kH)) + h1(T(-kH)) - h0(T(-kH)).

    From 0 -> T_Y -> T_P|Y -> N -> 0 and the restricted Euler sequence.
    h^0(T_P|Y(-kH)) <= (M+1) h^0((1-k)H) + h^1(-kH).
    """
    m = carpet_span_dim(h, surface)
    euler_part = (m + 1) * cohomology((1 - k) * h, surface).h0 + h1(-k * h, surface)
    t = tangent_cohomology(-k * h, surface)
    return euler_part + t.range_of(lambda a, b, c: b - a).hi
