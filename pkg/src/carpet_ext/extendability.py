"""Extendability estimates for K3 carpets on Hirzebruch surfaces.

Y = F_e embedded by H = aC0 + bf carries K3 carpets spanning P^M with
M = 1 + H^2. Bounds on alpha of the carpet transfer by semicontinuity to the
general K3 surface in its Hilbert component, which has index r = gcd(a, b)
and genus g with 2g - 2 = H^2 / r^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Literal

from .cohomology import h0, h1
from .divisors import DivisorClass, HirzebruchSurface, canonical, is_very_ample
from .les import Interval, NoRuleApplies, h0_normal_twist, tangent_cohomology

__all__ = [
    "AlphaBound",
    "CarpetParams",
    "DoubleCoverResult",
    "ExtendabilityVerdict",
    "NoRuleApplies",
    "NotVeryAmple",
    "PreconditionFailed",
    "UnsupportedA",
    "alpha_upper",
    "beta",
    "carpet_for",
    "carpet_params",
    "carpet_verdict",
    "double_cover_alpha",
    "gamma",
    "h0_N_minus_k_bound",
    "prime_carpet_for",
    "prime_genus_family",
    "zak_lvovsky",
]


class NotVeryAmple(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


class UnsupportedA(ValueError):
    """a = 1 (scroll carpets) has no exactness rules available."""


@dataclass(frozen=True)
class CarpetParams:
    a: int
    b: int
    e: int
    r: int
    g: int
    Hsq: int
    N: int
    M: int
    prime: bool
    primality_certified: bool

    @property
    def surface(self) -> HirzebruchSurface:
        return HirzebruchSurface(self.e)

    @property
    def H(self) -> DivisorClass:
        return DivisorClass(self.a, self.b)


def carpet_params(a: int, b: int, e: int) -> CarpetParams:
    surface = HirzebruchSurface(e)
    H = DivisorClass(a, b)
    if not is_very_ample(H, surface):
        raise NotVeryAmple(f"{H} is not very ample on F_{e} (need a >= 1, b >= ae+1)")
    r = gcd(a, b)
    hsq = 2 * a * b - a * a * e
    g, rem = divmod(hsq, r * r)
    assert rem == 0
    return CarpetParams(
        a=a, b=b, e=e, r=r,
        g=1 + g,
        Hsq=hsq,
        N=h0(H, surface) - 1,
        M=1 + hsq,
        prime=r == 1,
        primality_certified=e <= 2,
    )


@dataclass(frozen=True)
class AlphaBound:
    """Certified upper bound ``alpha <= value`` for the carpet.

    ``estimate`` is the range of the estimator itself over unresolved
    connecting-map ranks; ``value`` is its top end, floored at zero.
    """

    value: int
    estimate: Interval
    estimator: Literal["beta", "gamma"]
    special_correction: int
    anchors: tuple[str, ...]
    params: CarpetParams
    terms: dict[str, str] = field(default_factory=dict, compare=False)

    @property
    def exact(self) -> bool:
        return self.estimate.is_point

    def __str__(self) -> str:
        return f"alpha <= {self.value}"


def _check_twisted_canonical(p: CarpetParams) -> None:
    s = p.surface
    if h1(canonical(s) - p.H, s) != 0:
        raise PreconditionFailed(f"h^1(-H+K) != 0 at (a,b,e)=({p.a},{p.b},{p.e})")


def _five_term(p: CarpetParams, k: int) -> tuple[Interval, dict[str, str]]:
    s = p.surface
    K = canonical(s)
    kH = k * p.H
    t_k = tangent_cohomology(K - kH, s).h1
    t_diff = tangent_cohomology(-kH, s).range_of(lambda x0, x1, x2: x1 - x0)
    l_k = h1(-kH - K, s)
    l_2k = h0(-kH - 2 * K, s)
    pre = "" if k == 1 else str(k)
    terms = {
        f"h1(T(-{pre}H+K))": str(t_k),
        f"h1(T(-{pre}H)) - h0(T(-{pre}H))": str(t_diff),
        f"h1(-{pre}H-K)": str(l_k),
        f"h0(-{pre}H-2K)": str(l_2k),
    }
    return t_k + t_diff + l_k + l_2k, terms


def beta(a: int, b: int, e: int) -> AlphaBound:
    p = carpet_params(a, b, e)
    _check_twisted_canonical(p)
    est, terms = _five_term(p, 1)
    return AlphaBound(
        value=max(0, est.hi),
        estimate=est,
        estimator="beta",
        special_correction=0,
        anchors=("beta-estimate", "vanish-tangent", "vanish-H-pm-K", "vanish-H-2K"),
        params=p,
        terms=terms,
    )


def gamma(b: int, e: int) -> AlphaBound:
    """Sharper estimate for a = 2 using the normal-bundle rule table."""
    p = carpet_params(2, b, e)
    s = p.surface
    _check_twisted_canonical(p)
    canon_part = h0_normal_twist(p.H, s, "minusHplusK", 1)
    normal = h0_normal_twist(p.H, s, "minusH", 1)
    l_2k = h0(-p.H - 2 * canonical(s), s)
    est = Interval.point(canon_part.value + normal.value + l_2k - p.M - 1)
    correction = 1 if normal.rule == "a2-special" else 0
    return AlphaBound(
        value=max(0, est.hi),
        estimate=est,
        estimator="gamma",
        special_correction=correction,
        anchors=("gamma-estimate", *canon_part.anchors, *normal.anchors, "vanish-H-2K"),
        params=p,
        terms={
            "h0(N(-H+K))": str(canon_part),
            "h0(N(-H))": str(normal),
            "h0(-H-2K)": str(l_2k),
            "-M-1": str(-p.M - 1),
        },
    )


def alpha_upper(a: int, b: int, e: int) -> AlphaBound:
    if a == 1:
        raise UnsupportedA("a = 1 (scroll carpets) is not supported")
    if a < 1:
        raise NotVeryAmple(f"a must be positive, got {a}")
    return gamma(b, e) if a == 2 else beta(a, b, e)


def h0_N_minus_k_bound(a: int, b: int, e: int, k: int) -> Interval:
    """Upper estimate for h^0(N_{carpet}(-k H~)), k >= 2."""
    if k < 2:
        raise ValueError("k must be at least 2; use alpha_upper for k = 1")
    p = carpet_params(a, b, e)
    _check_twisted_canonical(p)
    est, _ = _five_term(p, k)
    return est


def prime_genus_family(g: int) -> str | None:
    """Name of the prime-genus family containing g, if any."""
    if g % 4 == 1 and (g - 1) // 4 >= 5:
        return "4k+1"
    k, rem = divmod(g, 18)
    families = {4: ("18k+4", 1), 7: ("18k+7", 2), 13: ("18k+13", 1), 16: ("18k+16", 1)}
    if rem in families and k >= families[rem][1]:
        return families[rem][0]
    return None


def carpet_for(r: int, g: int) -> tuple[int, int, int]:
    """Carpet (a, b, e) whose smoothings have index r >= 2 and genus g >= 3."""
    if r < 2 or g < 3:
        raise ValueError("need r >= 2 and g >= 3")
    if g % 2:
        return r, r * ((g - 1) // 2), 0
    return r, r * (g // 2), 1


def prime_carpet_for(g: int) -> tuple[int, int, int] | None:
    """Carpet (a, b, e) with a in {2, 3} realising a prime genus family."""
    if g % 4 == 1 and (g - 1) // 4 >= 5:
        k = (g - 1) // 4
        return (2, k, 0) if k % 2 else (2, k + 1, 1)
    k, rem = divmod(g, 18)
    if rem == 7 and k >= 2:
        return 3, 3 * k + 1, 0
    if rem == 13 and k >= 1:
        return 3, 3 * k + 2, 0
    if rem == 16 and k >= 1:
        return 3, 3 * k + 4, 1
    if rem == 4 and k >= 2:
        # k = 1 (g = 22) is realised by no carpet with a in {2, 3}, e <= 2
        return 3, 3 * k + 2, 1
    return None


@dataclass(frozen=True)
class ExtendabilityVerdict:
    extendable: Literal["no", "unknown"]
    k_extendability_ceiling: int | None
    h0_N_minus2_bound: int | Interval | None
    reasons: tuple[str, ...]

    def headline(self) -> str:
        if self.extendable == "no":
            return "NOT extendable"
        if self.k_extendability_ceiling is not None:
            return f"not {self.k_extendability_ceiling}-extendable"
        return "extendability unknown"


def _upper(v: int | Interval | None) -> int | None:
    if v is None:
        return None
    return v.hi if isinstance(v, Interval) else v


def zak_lvovsky(alpha: AlphaBound | int, h0_minus2: int | Interval | None, M: int) -> ExtendabilityVerdict:
    a = alpha.value if isinstance(alpha, AlphaBound) else alpha
    n2 = _upper(h0_minus2)
    if a <= 0:
        return ExtendabilityVerdict("no", 1, h0_minus2, ("zak-lvovsky: alpha <= 0",))
    if a < M or n2 == 0:
        why = "alpha < M" if a < M else "h0(N(-2)) = 0"
        return ExtendabilityVerdict(
            "unknown", a + 1, h0_minus2,
            (f"zak-lvovsky: alpha <= {a} and {why}, so not {a + 1}-extendable",),
        )
    return ExtendabilityVerdict("unknown", None, h0_minus2, ("zak-lvovsky: no criterion applies",))


def carpet_verdict(a: int, b: int, e: int) -> tuple[AlphaBound, ExtendabilityVerdict]:
    """Alpha bound for the carpet plus the verdict for its general smoothing."""
    bound = alpha_upper(a, b, e)
    p = bound.params
    try:
        minus2: Interval | None = h0_N_minus_k_bound(a, b, e, 2)
    except PreconditionFailed:
        minus2 = None
    verdict = zak_lvovsky(bound, minus2, p.M)
    notes = list(verdict.reasons) + ["semicontinuity: verdict holds for the general member of the "
                                     "Hilbert component containing the carpet"]
    if not p.primality_certified:
        notes.append("carpet-index-genus: (r,g) identification not certified for e > 2")
    if p.prime and verdict.extendable == "no" and prime_genus_family(p.g) is None:
        notes.append(f"prime-genus-families: genus {p.g} lies outside the certified families")
        verdict = ExtendabilityVerdict("unknown", None, minus2, tuple(notes))
    else:
        verdict = ExtendabilityVerdict(verdict.extendable, verdict.k_extendability_ceiling,
                                       minus2, tuple(notes))
    return bound, verdict


@dataclass(frozen=True)
class DoubleCoverResult:
    alpha: AlphaBound
    split_carpet_normal: bool

    @property
    def not_extendable(self) -> bool:
        return self.split_carpet_normal and self.alpha.value == 0


def double_cover_alpha(b: int, e: int) -> DoubleCoverResult:
    """K3 double covers of F_0 or F_1 embedded by 3T0 + bT1."""
    if e not in (0, 1):
        raise ValueError("double covers are treated over F_0 and F_1 only")
    bound = beta(3, b, e)
    return DoubleCoverResult(bound, split_carpet_normal=b >= 2 * e + 2)
