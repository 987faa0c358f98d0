"""Independent cohomology oracles for line bundles on F_e.

These share no code with the pushforward computation in ``cohomology``. The
toric oracle works from the fan of F_e with rays

    v1 = (1, 0) -> f,   v2 = (0, 1) -> C0,   v3 = (-1, e) -> f,   v4 = (0, -1) -> C0 + ef

so aC0 + bf is the torus-invariant divisor b*D1 + a*D2. For a character m the
graded piece H^i(D)_m is the reduced cohomology H~^{i-1} of the set of rays
with <m, v_j> < -d_j, viewed on the circle: all rays give H^2, the empty set
gives H^0, and k disjoint arcs give k - 1 classes in H^1.
"""

from __future__ import annotations


def _count(lo: int, hi: int) -> int:
    return max(0, hi - lo + 1)


def toric_cohomology(a: int, b: int, e: int) -> tuple[int, int, int]:
    """(h0, h1, h2) of O(aC0 + bf) on F_e by counting characters."""
    h0 = h1 = h2 = 0
    span = abs(a) + 1
    for y in range(-span, span + 1):
        neg2 = y + a < 0
        neg4 = -y < 0
        # v1 negative iff x < -b; v3 negative iff x > e*y
        both13 = _count(e * y + 1, -b - 1)
        none13 = _count(-b, e * y)
        if not neg2 and not neg4:
            h0 += none13
            h1 += both13  # rays {v1, v3}: two arcs
        elif neg2 and neg4:
            h2 += both13
            h1 += none13  # rays {v2, v4}: two arcs
    return h0, h1, h2


def monomial_h0(a: int, b: int, e: int) -> int:
    """h0(aC0 + bf) by listing monomials of the Cox ring in the class.

    Cox variables x1, x3 (class f), x2 (class C0), x4 (class C0 + ef); a
    monomial x1^i x2^j x3^k x4^l has class (j + l) C0 + (i + k + e*l) f.
    """
    if a < 0:
        return 0
    total = 0
    for l in range(a + 1):
        rest = b - e * l
        if rest < 0:
            continue
        # j = a - l is forced; i + k = rest
        for i in range(rest + 1):
            total += 1
    return total
