"""Non-prime Fano threefolds and Mukai varieties of Picard rank one.

Emptiness is derived from the carpet alpha bounds through the Zak-L'vovsky
criterion, from degree integrality, or (for two Mukai cases) from adjunction
theory, which is recorded as an anchored verdict rather than recomputed.
Existence and irreducibility are theorems about moduli; they are emitted as
verdict strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .extendability import AlphaBound, alpha_upper, carpet_for, h0_N_minus_k_bound, zak_lvovsky

Status = Literal["empty", "nonempty-irreducible", "out-of-paper-scope"]

# (r, g) with r >= 2 realised by a smooth Fano threefold of Picard rank one
# (Fano-Iskovskih-Mori-Mukai tables)
KNOWN_FANO = frozenset({(2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (4, 3)})
KNOWN_MUKAI = frozenset({(4, 2, 5), (5, 2, 5)})
ADJUNCTION_EXCLUDED = frozenset({(2, 3), (2, 4)})


class InvalidQuery(ValueError):
    pass


@dataclass(frozen=True)
class FanoQuery:
    r: int
    g: int

    def __post_init__(self) -> None:
        if self.r < 2 or self.g < 3:
            raise InvalidQuery(f"need r >= 2 and g >= 3, got r={self.r}, g={self.g}")


@dataclass(frozen=True)
class MukaiQuery:
    n: int
    r: int
    g: int

    def __post_init__(self) -> None:
        if self.n < 4:
            raise InvalidQuery(f"Mukai varieties have dimension n >= 4, got {self.n}")
        if self.r < 2 or self.g < 3:
            raise InvalidQuery(f"need r >= 2 and g >= 3, got r={self.r}, g={self.g}")


@dataclass(frozen=True)
class ClassificationRecord:
    status: Status
    reason: str
    anchors: tuple[str, ...]
    tangent_dim_at_cone: int | None = None
    alpha: int | None = None
    alpha_bound_only: bool = False
    uniqueness_flag: bool | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.tangent_dim_at_cone is not None and self.status != "nonempty-irreducible":
            raise ValueError("tangent dimension only reported for nonempty families")
        if not self.anchors:
            raise ValueError("a classification record needs at least one anchor")


def span_plus_one(r: int, g: int) -> int:
    """2 + r^2(g-1): the ambient projective dimension of the Fano threefold, plus one."""
    return 2 + r * r * (g - 1)


def cone_tangent_dim(r: int, g: int, alpha: int, correction: int = 0) -> int:
    m1 = span_plus_one(r, g)
    return 18 + m1 * m1 + alpha + m1 + correction


def mukai_cone_tangent_dim(r: int, g: int, alpha: int, vertex_count: int) -> int:
    """Tangent dimension at the cone with a P^(vertex_count-1) vertex over a K3 section."""
    m1 = span_plus_one(r, g)
    return 18 + m1 * m1 + vertex_count * (alpha + m1)


def degree_is_integral(r: int, g: int) -> bool:
    return (2 * (g - 1)) % r == 0


def _alpha(r: int, g: int) -> AlphaBound:
    return alpha_upper(*carpet_for(r, g))


def _minus2_correction(r: int, g: int) -> int:
    return h0_N_minus_k_bound(*carpet_for(r, g), 2).hi


def classify_fano(q: FanoQuery | tuple[int, int]) -> ClassificationRecord:
    if not isinstance(q, FanoQuery):
        q = FanoQuery(*q)
    r, g = q.r, q.g
    bound = _alpha(r, g)
    integral = degree_is_integral(r, g)
    integrality_note = f"degree {2 * (g - 1)}/{r} non-integral"

    if bound.value == 0:
        notes = (integrality_note,) if not integral else ()
        return ClassificationRecord(
            "empty",
            f"alpha = 0 on carpet {carpet_for(r, g)}: the K3 section is not extendable",
            ("non-prime-high-genus", "zak-lvovsky", "semicontinuity"),
            alpha=0,
            notes=notes,
        )
    if not integral:
        return ClassificationRecord(
            "empty",
            integrality_note,
            ("fano-degree-integrality",),
            alpha=bound.value,
            alpha_bound_only=True,
        )
    if (r, g) not in KNOWN_FANO:
        return ClassificationRecord(
            "out-of-paper-scope",
            f"alpha <= {bound.value} does not decide emptiness",
            ("low-genus-table",),
            alpha=bound.value,
            alpha_bound_only=True,
        )
    correction = _minus2_correction(r, g)
    anchors = ["fano-irreducible", "low-genus-table", "cone-tangent-dimension"]
    if correction:
        anchors.append("cone-tangent-correction")
    unique = bound.value == 1
    if unique:
        anchors.append("fano-unique-extension")
    return ClassificationRecord(
        "nonempty-irreducible",
        "cone over a general K3 section is a smooth point; known families are dense",
        tuple(anchors),
        tangent_dim_at_cone=cone_tangent_dim(r, g, bound.value, correction),
        alpha=bound.value,
        uniqueness_flag=unique,
    )


def classify_mukai(q: MukaiQuery | tuple[int, int, int]) -> ClassificationRecord:
    if not isinstance(q, MukaiQuery):
        q = MukaiQuery(*q)
    n, r, g = q.n, q.r, q.g
    bound = _alpha(r, g)
    if bound.value == 0:
        return ClassificationRecord(
            "empty",
            f"alpha = 0 on carpet {carpet_for(r, g)}: the K3 section is not extendable",
            ("non-prime-high-genus", "zak-lvovsky", "mukai-extension-ceiling"),
            alpha=0,
        )
    if not degree_is_integral(r, g):
        return ClassificationRecord(
            "empty",
            f"degree {2 * (g - 1)}/{r} non-integral: no Fano threefold linear section",
            ("fano-degree-integrality",),
            alpha=bound.value,
            alpha_bound_only=True,
        )
    if (r, g) in ADJUNCTION_EXCLUDED:
        return ClassificationRecord(
            "empty",
            "excluded by adjunction theory",
            ("mukai-adjunction",),
            alpha=bound.value,
        )
    minus2 = h0_N_minus_k_bound(*carpet_for(r, g), 2)
    verdict = zak_lvovsky(bound, minus2, 1 + r * r * (g - 1))
    ceiling = verdict.k_extendability_ceiling
    if ceiling is not None and ceiling <= n - 2:
        return ClassificationRecord(
            "empty",
            f"alpha <= {bound.value}: the K3 section is not {ceiling}-extendable, "
            f"but a Mukai {n}-fold would make it {n - 2}-extendable",
            ("zak-lvovsky", "mukai-extension-ceiling", "low-genus-table"),
            alpha=bound.value,
        )
    if (n, r, g) in KNOWN_MUKAI:
        dim = mukai_cone_tangent_dim(r, g, bound.value, 3) if n == 5 else None
        anchors = ("mukai-irreducible", "mukai-triple-cone") if n == 5 else ("mukai-irreducible",)
        return ClassificationRecord(
            "nonempty-irreducible",
            "Mukai's families form an open dense irreducible subset",
            anchors,
            tangent_dim_at_cone=dim,
            alpha=bound.value,
        )
    return ClassificationRecord(
        "out-of-paper-scope",
        f"alpha <= {bound.value} does not decide emptiness for n = {n}",
        ("low-genus-table",),
        alpha=bound.value,
    )
