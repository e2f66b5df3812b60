import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from disc24.errors import ParityViolation, TooManyHypersurfaces
from disc24.hilbert import (
    CIProfile,
    HilbertPolynomial,
    adjunction_genus,
    binom_poly,
    ci_canonical_twist,
    ci_hilbert_poly,
    curve_hp,
    glue_points_genus,
    liaison_link,
    nodal_sextic_del_pezzo_hp,
    residual_hp,
    smooth_sextic_del_pezzo_hp,
)


def falling_binom(m: int, r: int) -> Fraction:
    # independent pointwise oracle for the extended binomial coefficient
    num = 1
    for i in range(r):
        num *= m - i
    return Fraction(num, math.factorial(r))


def koszul_oracle(ambient: int, degrees: tuple[int, ...], n: int) -> Fraction:
    total = Fraction(0)
    for mask in range(1 << len(degrees)):
        s = sum(d for i, d in enumerate(degrees) if mask >> i & 1)
        bits = bin(mask).count("1")
        total += (-1) ** bits * falling_binom(n - s + ambient, ambient)
    return total


@given(st.integers(min_value=-8, max_value=8), st.integers(min_value=0, max_value=5))
@settings(max_examples=80, deadline=None)
def test_binom_poly_matches_pointwise_oracle(shift, r):
    poly = binom_poly(shift, r)
    for n in range(-4, 5):
        assert poly(n) == falling_binom(n + shift, r)


def test_ci_p5_223():
    got = ci_hilbert_poly(CIProfile(5, (2, 2, 3)))
    assert got.coefficients == (Fraction(7), Fraction(-6), Fraction(6))
    assert str(got) == "6n^2 - 6n + 7"


def test_ci_p2_line():
    assert ci_hilbert_poly(CIProfile(2, (1,))).coefficients == (Fraction(1), Fraction(1))


def test_ci_p4_223_koszul_value():
    # the Koszul oracle pins the (P^4; 2,2,3) curve at degree 12, genus 13
    got = ci_hilbert_poly(CIProfile(4, (2, 2, 3)))
    assert got.coefficients == (Fraction(-12), Fraction(12))
    for n in range(-3, 7):
        assert got(n) == koszul_oracle(4, (2, 2, 3), n)


@given(
    st.integers(min_value=2, max_value=5),
    st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
)
@settings(max_examples=60, deadline=None)
def test_ci_matches_oracle_everywhere(ambient, degrees):
    if len(degrees) > ambient:
        with pytest.raises(TooManyHypersurfaces):
            CIProfile(ambient, tuple(degrees))
        return
    poly = ci_hilbert_poly(CIProfile(ambient, tuple(degrees)))
    for n in range(-3, 7):
        assert poly(n) == koszul_oracle(ambient, tuple(degrees), n)


def test_ci_chi_at_zero():
    # chi(O) = 1 exactly when the canonical twist is negative (p_g = 0);
    # the degree-eight surface carries p_g = 6, so chi(O) = 7 there.
    for profile in [CIProfile(2, (1,)), CIProfile(4, (2, 2)), CIProfile(3, (2,))]:
        assert ci_canonical_twist(profile) < 0
        assert ci_hilbert_poly(profile)(0) == 1
    assert ci_hilbert_poly(CIProfile(5, (2, 2, 3)))(0) == 7


def test_curve_hp_examples():
    assert curve_hp(12, 8).coefficients == (Fraction(-7), Fraction(12))
    assert curve_hp(1, 0).coefficients == (Fraction(1), Fraction(1))
    assert curve_hp(6, 1).coefficients == (Fraction(0), Fraction(6))


def test_residuation_identity():
    total = ci_hilbert_poly(CIProfile(5, (2, 2, 3)))
    kept = nodal_sextic_del_pezzo_hp()
    conductor = curve_hp(12, 8)
    out = residual_hp(total, kept, conductor)
    assert out.coefficients == (Fraction(0), Fraction(3), Fraction(3))


def test_residuation_trivial_and_involution():
    total = ci_hilbert_poly(CIProfile(5, (2, 2, 3)))
    zero = HilbertPolynomial.of()
    assert residual_hp(total, total, zero).coefficients == ()
    kept = nodal_sextic_del_pezzo_hp()
    conductor = curve_hp(12, 8)
    once = residual_hp(total, kept, conductor)
    assert residual_hp(total, once, conductor) == kept


def test_adjunction_examples():
    assert adjunction_genus(24, -12) == 7    # -2K on the sextic del Pezzo
    assert adjunction_genus(-1, -1) == 0     # exceptional line
    assert adjunction_genus(6, -6) == 1      # -K: elliptic sextic curve
    with pytest.raises(ParityViolation):
        adjunction_genus(1, 0)


def test_glue_points():
    assert glue_points_genus(5, 4) == 8
    assert glue_points_genus(glue_points_genus(5, 2), 2) == 7
    assert glue_points_genus(3, 1) == 3


def test_liaison_fixed_point():
    assert liaison_link(CIProfile(4, (2, 2, 3)), 6, 1) == (6, 1)


def test_liaison_quadric_pencil():
    assert liaison_link(CIProfile(3, (2, 2)), 1, 0) == (3, 0)


def test_liaison_canonical_twist():
    assert ci_canonical_twist(CIProfile(4, (2, 2, 3))) == 2


def test_liaison_involution_property():
    for profile, d, p in [
        (CIProfile(4, (2, 2, 3)), 5, 2),
        (CIProfile(3, (2, 3)), 2, 0),
        (CIProfile(4, (2, 2, 2)), 4, 1),
    ]:
        d1, p1 = liaison_link(profile, d, p)
        assert liaison_link(profile, d1, p1) == (d, p)


def test_liaison_genus_always_integral():
    # parity forces integrality: an odd canonical twist needs all degrees odd,
    # which makes deg C - deg C' even in every curve-CI profile
    for ambient in (3, 4):
        for degrees in [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 2, 3), (3, 3, 3)]:
            if len(degrees) != ambient - 1:
                continue
            for d in range(1, 6):
                for p in range(0, 4):
                    deg_res, genus_res = liaison_link(CIProfile(ambient, degrees), d, p)
                    assert isinstance(genus_res, int)


def test_del_pezzo_constants():
    assert smooth_sextic_del_pezzo_hp().coefficients == (Fraction(1), Fraction(3), Fraction(3))
    assert nodal_sextic_del_pezzo_hp().coefficients == (Fraction(0), Fraction(3), Fraction(3))
    diff = smooth_sextic_del_pezzo_hp() - nodal_sextic_del_pezzo_hp()
    assert diff.coefficients == (Fraction(1),)


def test_integrality_window():
    polys = [
        ci_hilbert_poly(CIProfile(5, (2, 2, 3))),
        ci_hilbert_poly(CIProfile(4, (2, 2, 3))),
        curve_hp(12, 8),
        curve_hp(6, 1),
        smooth_sextic_del_pezzo_hp(),
        nodal_sextic_del_pezzo_hp(),
        residual_hp(
            ci_hilbert_poly(CIProfile(5, (2, 2, 3))),
            nodal_sextic_del_pezzo_hp(),
            curve_hp(12, 8),
        ),
    ]
    for poly in polys:
        assert poly.integral_on(-3, 6)
