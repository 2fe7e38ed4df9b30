import math
from fractions import Fraction

import pytest

from etaq import algebra
from etaq.algebra import EtaFunction, apply_series, hodge_dual, inner_product, variables_sum
from etaq.scalars import QQi
from etaq.states import (
    FamilyParams,
    REGISTRY,
    cw,
    g_abcd,
    ghz,
    lookup,
    psi_a,
    psi_ad,
    psi_c,
    psi_c_alpha,
    psi_cs,
    psi_d,
    psi_s,
    psi_s_alpha,
    star_w,
    w,
)


def kets(state):
    """Map ket index -> complex coefficient of the unnormalized function."""
    amps = algebra.to_amplitudes(state.fn).amps
    return {k: complex(a) for k, a in enumerate(amps) if complex(a) != 0}


# ---------------------------------------------------------------------------
# canonical states against their displayed binary forms
# ---------------------------------------------------------------------------

def test_ghz2_is_cos_form():
    st = ghz(2)
    assert st.fn == EtaFunction(2, {0: 1, 0b11: -1})
    assert st.norm_sq == 2
    assert kets(st) == {0b00: 1, 0b11: -1}


def test_ghz34_plus_sign():
    assert kets(ghz(3)) == {0b000: 1, 0b111: 1}
    assert kets(ghz(4)) == {0b0000: 1, 0b1111: 1}


def test_w_states():
    st = w(4)
    assert st.fn == variables_sum(4)
    assert st.norm_sq == 4
    assert kets(st) == {0b1000: 1, 0b0100: 1, 0b0010: 1, 0b0001: 1}
    assert kets(w(3)) == {0b100: 1, 0b010: 1, 0b001: 1}


def test_cw_states():
    assert cw(4).norm_sq == 6
    assert kets(cw(4)) == {k: 1 for k in (0b1100, 0b1010, 0b1001, 0b0110, 0b0101, 0b0011)}
    assert cw(3).norm_sq == 3
    assert kets(cw(3)) == {0b110: 1, 0b101: 1, 0b011: 1}


def test_star_w_binary_form():
    st = star_w()
    assert st.fn == hodge_dual(w(4).fn)
    assert kets(st) == {0b1110: 1, 0b1101: 1, 0b1011: 1, 0b0111: 1}
    assert st.norm_sq == 4


def test_unsupported_sizes():
    for bad in (1, 5):
        with pytest.raises(ValueError):
            ghz(bad)
        with pytest.raises(ValueError):
            w(bad)
    with pytest.raises(ValueError):
        cw(2)
    with pytest.raises(ValueError):
        star_w(3)


# ---------------------------------------------------------------------------
# trigonometric states (built from the series, checked against the displays)
# ---------------------------------------------------------------------------

def test_psi_c_series_equality():
    for n in (2, 3, 4):
        assert psi_c(n).fn == apply_series(variables_sum(n), "cos")
        assert psi_s(n).fn == apply_series(variables_sum(n), "sin")


def test_psi_c3_display():
    st = psi_c(3)
    assert kets(st) == {0b000: 1, 0b110: -1, 0b101: -1, 0b011: -1}
    assert st.norm_sq == 4


def test_psi_s3_display():
    st = psi_s(3)
    assert kets(st) == {0b100: 1, 0b010: 1, 0b001: 1, 0b111: -1}
    assert st.norm_sq == 4


def test_psi_c2_psi_s2_displays():
    assert kets(psi_c(2)) == {0b00: 1, 0b11: -1}
    assert kets(psi_s(2)) == {0b01: 1, 0b10: 1}
    assert psi_c(2).norm_sq == 2
    assert psi_s(2).norm_sq == 2


def test_psi_c4_psi_s4_displays():
    st = psi_c(4)
    expect = {0b0000: 1, 0b1111: 1}
    expect.update({k: -1 for k in (0b1100, 0b1010, 0b1001, 0b0110, 0b0101, 0b0011)})
    assert kets(st) == expect
    assert st.norm_sq == 8
    st = psi_s(4)
    expect = {k: 1 for k in (0b1000, 0b0100, 0b0010, 0b0001)}
    expect.update({k: -1 for k in (0b1110, 0b1101, 0b1011, 0b0111)})
    assert kets(st) == expect
    assert st.norm_sq == 8


def test_decompositions():
    # psi_c4 = GHZ4 - CW4 over unnormalized integers; psi_s4 = W4 - dual W4
    assert psi_c(4).fn == ghz(4).fn - cw(4).fn
    assert psi_s(4).fn == w(4).fn - star_w().fn


def test_psi_cs():
    st = psi_cs()
    assert st.fn == EtaFunction(4, {0b0000: 1, 0b0011: 1, 0b1100: 1, 0b1111: -1})
    assert st.norm_sq == 4
    assert kets(st)[0b1111] == -1
    assert inner_product(st.fn, st.fn) == QQi(4)


# ---------------------------------------------------------------------------
# the generic family
# ---------------------------------------------------------------------------

def test_g_abcd_coefficient_placement():
    st = g_abcd(FamilyParams(Fraction(3), Fraction(5), Fraction(7), Fraction(11)))
    k = kets(st)
    assert k[0b0000] == k[0b1111] == 7.0     # (a+d)/2
    assert k[0b0011] == k[0b1100] == -4.0    # (a-d)/2
    assert k[0b0101] == k[0b1010] == 6.0     # (b+c)/2
    assert k[0b0110] == k[0b1001] == -1.0    # (b-c)/2


def test_g_abcd_ones():
    st = g_abcd(FamilyParams(1, 1, 1, 1))
    assert kets(st) == {0b0000: 1, 0b1111: 1, 0b0101: 1, 0b1010: 1}


def test_g_all_zero_rejected():
    with pytest.raises(ValueError):
        FamilyParams(0, 0, 0, 0)


def test_psi_ad_placement():
    a, d = Fraction(2), Fraction(5)
    st = psi_ad(a, d)
    k = kets(st)
    p, q = float((a + d) / 2), float((a - d) / 2)
    for ket in (0b0000, 0b1111, 0b0101, 0b1010):
        assert k[ket] == p
    for ket in (0b0011, 0b1100, 0b0110, 0b1001):
        assert k[ket] == q
    assert st.fn == g_abcd(FamilyParams(a, a, d, d)).fn


def test_psi_a_factorizes():
    st = psi_a(1)
    e = lambda *i: algebra.unit(4, 1) if not i else algebra.multiply(
        algebra.variable(4, i[0]), algebra.variable(4, i[1]))
    left = algebra.unit(4, 1) + e(1, 3)
    right = algebra.unit(4, 1) + e(2, 4)
    assert st.fn == algebra.multiply(left, right)
    assert st.fn == EtaFunction(4, {0: 1, 0b0101: 1, 0b1010: 1, 0b1111: 1})


def test_psi_d_form():
    st = psi_d(1)
    assert st.fn == EtaFunction(4, {0b0011: 1, 0b1001: 1, 0b0110: 1, 0b1100: 1})
    left = algebra.variable(4, 1) + algebra.variable(4, 3)
    right = algebra.variable(4, 2) + algebra.variable(4, 4)
    assert st.fn == algebra.multiply(left, right)


def test_psi_ad_relations():
    # d = a recovers psi_a; a = -d recovers -psi_d
    assert psi_ad(1, 1).fn == psi_a(1).fn
    assert psi_ad(-1, 1).fn == algebra.scale(-1, psi_d(1).fn)
    # d = 0 spreads 1/2 over all eight support kets
    half = Fraction(1, 2)
    assert kets(psi_ad(1, 0)) == {k: 0.5 for k in
                                  (0b0000, 0b1111, 0b0011, 0b1100,
                                   0b0101, 0b1010, 0b0110, 0b1001)}
    assert psi_ad(1, 0).norm_sq == 8 * half ** 2
    with pytest.raises(ValueError):
        psi_ad(0, 0)
    with pytest.raises(ValueError):
        psi_a(0)
    with pytest.raises(ValueError):
        psi_d(0)


# ---------------------------------------------------------------------------
# alpha families
# ---------------------------------------------------------------------------

def test_alpha_families_normalized():
    for alpha in (0.0, 0.3, math.pi / 4, 2.0, math.pi):
        for fam in (psi_c_alpha, psi_s_alpha):
            st = fam(alpha)
            assert abs(st.norm_sq - 1.0) < 1e-12


def test_alpha_family_endpoints():
    st = psi_c_alpha(0.0)
    ghz_amps = lookup("GHZ4").normalized_amplitudes()
    assert all(abs(a - b) < 1e-12 for a, b in zip(st.normalized_amplitudes(), ghz_amps))
    st = psi_s_alpha(-math.pi / 4)
    target = psi_s(4).normalized_amplitudes()
    assert all(abs(a - b) < 1e-12 for a, b in zip(st.normalized_amplitudes(), target))
    # +pi/4 is the equal-weight sum of W4 and its dual
    st = psi_s_alpha(math.pi / 4)
    b = 0.5 / math.sqrt(2)
    expected = {k: b for k in (0b1000, 0b0100, 0b0010, 0b0001,
                               0b1110, 0b1101, 0b1011, 0b0111)}
    got = {k: a.real for k, a in enumerate(st.normalized_amplitudes()) if abs(a) > 1e-14}
    assert got.keys() == expected.keys()
    assert all(abs(got[k] - expected[k]) < 1e-12 for k in expected)


def test_alpha_ingredients_orthogonal():
    assert inner_product(ghz(4).fn, cw(4).fn) == QQi(0)
    assert inner_product(w(4).fn, star_w().fn) == QQi(0)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def test_registry_labels_resolve():
    for label in REGISTRY:
        st = lookup(label)
        assert st.label == label or st.label.startswith(label[:3])
        assert inner_product(st.fn, st.fn) == QQi(Fraction(st.norm_sq))


def test_registry_unknown():
    with pytest.raises(KeyError):
        lookup("NOPE")


def test_norm_sq_invariant_enforced():
    from etaq.states import NamedState

    with pytest.raises(ValueError):
        NamedState("BAD", variables_sum(3), 7)
