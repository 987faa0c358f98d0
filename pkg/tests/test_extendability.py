import pytest

from carpet_ext.extendability import (
    NotVeryAmple, UnsupportedA, alpha_upper, beta, carpet_for, carpet_params, carpet_verdict,
    double_cover_alpha, gamma, h0_N_minus_k_bound, prime_carpet_for, prime_genus_family, zak_lvovsky,
)
from carpet_ext.les import Interval, NoRuleApplies


def test_carpet_params_examples():
    p = carpet_params(2, 6, 0)
    assert (p.r, p.g, p.Hsq, p.M, p.N, p.prime) == (2, 7, 24, 25, 20, False)
    p = carpet_params(3, 3, 0)
    assert (p.r, p.g, p.M) == (3, 3, 19)
    p = carpet_params(1, 3, 1)
    assert (p.r, p.g) == (1, 6)
    assert not carpet_params(2, 7, 3).primality_certified


def test_not_very_ample():
    with pytest.raises(NotVeryAmple):
        carpet_params(2, 2, 1)


def test_beta_examples():
    assert beta(3, 5, 0).value == 0
    assert beta(3, 3, 0).value == 4
    b = beta(4, 4, 0)
    assert b.value == 1 and b.terms["h0(-H-2K)"] == "1"


def test_gamma_examples():
    assert gamma(6, 0).value == 0
    g = gamma(2, 0)
    assert g.value == 10 and g.special_correction == 1
    g = gamma(4, 1)
    assert g.value == 6 and g.special_correction == 0
    assert gamma(3, 0).value == 6


def test_gamma_outside_rules():
    with pytest.raises(NoRuleApplies):
        gamma(3, 1)
    with pytest.raises(NoRuleApplies):
        gamma(1, 0)


def test_alpha_upper_examples():
    assert alpha_upper(2, 6, 0).value == 0
    b = alpha_upper(3, 6, 1)
    assert b.value == 1 and (b.params.r, b.params.g) == (3, 4)
    with pytest.raises(UnsupportedA):
        alpha_upper(1, 3, 0)


def test_zak_lvovsky_examples():
    assert zak_lvovsky(0, 0, 25).headline() == "NOT extendable"
    v = zak_lvovsky(3, 0, 17)
    assert v.k_extendability_ceiling == 4 and v.headline() == "not 4-extendable"
    assert zak_lvovsky(1, Interval.point(0), 30).k_extendability_ceiling == 2
    assert zak_lvovsky(10, 1, 9).headline() == "extendability unknown"


def test_minus_k_examples():
    assert h0_N_minus_k_bound(2, 3, 0, 2) == Interval.point(0)
    assert h0_N_minus_k_bound(2, 2, 0, 2) == Interval.point(1)
    assert h0_N_minus_k_bound(2, 2, 0, 3) == Interval.point(0)
    with pytest.raises(ValueError):
        h0_N_minus_k_bound(2, 2, 0, 1)


def test_double_cover_examples():
    assert double_cover_alpha(5, 0).not_extendable
    assert double_cover_alpha(7, 1).not_extendable
    assert not double_cover_alpha(4, 0).not_extendable
    with pytest.raises(ValueError):
        double_cover_alpha(9, 2)


def test_carpet_for_matches_params():
    for r in range(2, 9):
        for g in range(3, 21):
            p = carpet_params(*carpet_for(r, g))
            assert (p.r, p.g) == (r, g)


def test_prime_carpets_land_in_their_family():
    for g in range(3, 120):
        t = prime_carpet_for(g)
        if t is None:
            continue
        p = carpet_params(*t)
        assert p.prime and p.g == g and prime_genus_family(g) is not None
        assert alpha_upper(*t).value == 0


def test_genus_22_has_no_supported_carpet():
    assert prime_genus_family(22) == "18k+4"
    assert prime_carpet_for(22) is None


def test_verdict_phrasing():
    bound, verdict = carpet_verdict(2, 6, 0)
    assert verdict.headline() == "NOT extendable"
    assert any("general member" in r for r in verdict.reasons)
    # prime genus 13 lies outside the certified families: no claim is made
    bound, verdict = carpet_verdict(2, 3, 0)
    assert bound.value == 6 and verdict.headline() != "NOT extendable"
    bound, verdict = carpet_verdict(3, 5, 0)  # g = 31 = 18+13
    assert verdict.headline() == "NOT extendable"
    bound, verdict = carpet_verdict(3, 4, 0)  # g = 25 = 4*6+1 is a family, alpha = 2
    assert bound.value == 2


def test_m_minus_n_is_h0_h_plus_k():
    from carpet_ext.cohomology import h0
    from carpet_ext.divisors import canonical

    for e in range(5):
        for a in range(1, 9):
            for b in range(a * e + 1, a * e + 15):
                p = carpet_params(a, b, e)
                assert p.M - p.N == h0(p.H + canonical(p.surface), p.surface)


def test_genus_parity():
    for r in range(1, 7):
        for m in range(1, 11):
            assert carpet_params(r, r * m, 0).g == 2 * m + 1
            if m >= 2:
                assert carpet_params(r, r * m, 1).g == 2 * m


def test_anticanonical_multiples_keep_a_section():
    # -H-2K = 0 at (4,6,1) and -2H-2K = 0 at (2,3,1): the constant section survives
    b = beta(4, 6, 1)
    assert b.terms["h0(-H-2K)"] == "1" and b.value == 1
    assert h0_N_minus_k_bound(2, 3, 1, 2) == Interval.point(1)
