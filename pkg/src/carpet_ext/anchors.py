"""Citation anchors attached to every verdict.

Each anchor names the mathematical fact a computation relied on. Verdicts carry
the ids; ``describe`` turns an id into a one-line statement for printing.
"""

ANCHORS: dict[str, str] = {
    "very-ample": "aC0+bf is very ample on F_e iff a >= 1 and b >= ae+1",
    "carpet-conormal": "a ribbon on a smooth surface is a K3 carpet iff its conormal bundle is K_Y",
    "carpet-index-genus": "carpet of aC0+bf smooths to K3 surfaces of index gcd(a,b); certified for e <= 2",
    "leray": "over P^1 the Leray spectral sequence degenerates: h^i assembled from p_* and R^1p_*",
    "relative-duality": "R^1p_*(aC0+bf) = (p_*(K_rel - aC0 - bf))^dual with K_rel = -2C0-ef",
    "riemann-roch": "chi(D) = 1 + D.(D-K)/2 on a rational surface",
    "serre-duality": "h^i(D) = h^(2-i)(K-D)",
    "tangent-filtration": "0 -> T_{Y/P1} = 2C0+ef -> T_Y -> p^*T_P1 = 2f -> 0",
    "vanish-2C0+ef-H": "vanishing table for H^0, H^1 of 2C0+ef-H",
    "vanish-2f-H": "vanishing table for H^0, H^1 of 2f-H",
    "vanish-H-pm-K": "H^1(-H+K) = 0 for very ample H; vanishing table for H^1(-H-K)",
    "vanish-H-2K": "vanishing table for H^0(-H-2K)",
    "vanish-tangent": "vanishing table for H^1(T(-H)), H^1(T(-H+K)), H^0(T(-H))",
    "normal-twisted-canonical": "h^0(N_Y(-kH+K)) <= h^1(T_Y(-kH+K)) when h^1(-kH+K) = 0",
    "normal-a2-exact": "for a = 2 and b >= e+3, h^0(N_Y(-H)) = M+1",
    "normal-a2-special": "for (a,b,e) = (2,2,0), h^0(N_Y(-H)) <= M+2 (one-dimensional H^1 obstruction)",
    "beta-estimate": "alpha(carpet) <= beta = h1(T(-H+K)) + h1(T(-H)) - h0(T(-H)) + h1(-H-K) + h0(-H-2K)",
    "gamma-estimate": "a = 2: alpha(carpet) <= h1(T(-H+K)) + h0(N_Y(-H)) + h0(-H-2K) - M - 1",
    "semicontinuity": "alpha of the general member of the Hilbert component is bounded by alpha of the carpet",
    "zak-lvovsky": "alpha <= 0 forbids extension; alpha <= k-1 with (alpha < M or h0(N(-2)) = 0) forbids k-extension",
    "non-prime-high-genus": "alpha = 0 for r>=5,g>=3; r=4,g>=4; r=3,g>=5; r=2,g>=7",
    "prime-genus-families": "alpha = 0 for prime K3 of genus 4k+1 (k>=5), 18k+4, 18k+13, 18k+16 (k>=1), 18k+7 (k>=2)",
    "low-genus-table": "alpha for (r,g) = (2,3),(2,4),(2,5),(2,6),(3,3),(3,4),(4,3) is 10,6,3,1,<=4,1,1",
    "normal-minus-k-bound": "h^0(N(-kH~)) bounded by the five-term sum with kH in place of H",
    "double-cover-carpet": "K3 double covers of F_0, F_1 degenerate isotrivially to the split carpet",
    "split-carpet-normality": "split carpet line bundle projectively normal when a >= 2 and b >= (a-1)e+2",
    "fano-degree-integrality": "a Fano threefold of index r, genus g has degree d = 2(g-1)/r, which must be an integer",
    "cone-tangent-dimension": "dim T at the cone over X = 18 + (2+r^2(g-1))^2 + alpha + (2+r^2(g-1))",
    "cone-tangent-correction": "(r,g) = (2,3): h^0(N_X(-2)) <= 1 adds one to the cone tangent dimension",
    "fano-irreducible": "V_{r,g,1} irreducible; Fano-Iskovskih families open dense; fibers over H_{r,g} irreducible",
    "fano-unique-extension": "alpha = 1: a general K3 lies in a unique Fano threefold up to projectivities",
    "mukai-adjunction": "no Mukai n-folds (n >= 4) for (r,g) = (2,3), (2,4) by adjunction theory",
    "mukai-extension-ceiling": "a Mukai n-fold makes its K3 section (n-2)-extendable",
    "mukai-triple-cone": "dim T at the triple cone = 18 + (2+r^2(g-1))^2 + 3(alpha + 2 + r^2(g-1))",
    "mukai-irreducible": "V_{4,2,5,1}, V_{5,2,5,1} irreducible with Mukai's families open dense",
}


def describe(anchor: str) -> str:
    return f"{anchor}: {ANCHORS[anchor]}"
