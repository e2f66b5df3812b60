from fractions import Fraction

import pytest

from disc24.discforms import (
    disc_form_with_map,
    discriminant_form,
    fqf_isomorphic,
    glue_subquotient,
    isotropic_elements,
)
from disc24.errors import Degenerate, TooLarge
from disc24.exactmat import IntMatrix
from disc24.lattices import (
    GlueVector,
    Lattice,
    direct_sum,
    lattice_invariants,
    overlattice_from_glue,
    standard_lattice,
)

U = standard_lattice("U")
A2LIKE = standard_lattice("A2like")
E8NEG = standard_lattice("E8neg")


def test_trivial_group_for_unimodular():
    assert discriminant_form(U).order == 1
    assert discriminant_form(E8NEG).order == 1


def test_rank1_minus6():
    F = discriminant_form(standard_lattice("rank1", -6))
    assert F.invariant_factors == (6,)
    assert F.q_modulus == 2
    assert F.q_of((1,)) == Fraction(-1, 6) % 2
    # only the identity is isotropic: q(3g) = -9/6 = -3/2 mod 2, nonzero
    assert isotropic_elements(F) == [(0,)]


def test_block_z3_z8():
    L = direct_sum(A2LIKE, standard_lattice("rank1", 8))
    F = discriminant_form(L)
    assert F.order == 24
    assert sorted(F.invariant_factors) == [24] or F.invariant_factors == (24,)


def test_degenerate_rejected():
    with pytest.raises(Degenerate):
        discriminant_form(Lattice(IntMatrix.from_rows([[0]])))


def test_order_equals_disc():
    for L in [
        standard_lattice("rank1", -6),
        direct_sum(A2LIKE, standard_lattice("rank1", 8)),
        direct_sum(A2LIKE, standard_lattice("rank1", 8), U, E8NEG, E8NEG),
        Lattice(IntMatrix.from_rows([[3, 6], [6, 20]])),
    ]:
        assert discriminant_form(L).order == lattice_invariants(L).disc


def test_isotropic_in_rank21_form():
    L = direct_sum(A2LIKE, standard_lattice("rank1", 8), U, E8NEG, E8NEG)
    F, class_of = disc_form_with_map(L)
    half8 = [Fraction(0)] * 21
    half8[2] = Fraction(1, 2)
    cls = class_of(half8)
    assert F.element_order(cls) == 2
    assert F.q_of(cls) == 0
    assert cls in isotropic_elements(F)


def test_isotropic_respects_limit():
    F = discriminant_form(standard_lattice("rank1", -6))
    with pytest.raises(TooLarge):
        isotropic_elements(F, limit=2)


def test_fqf_isomorphic_reflexive_symmetric():
    forms = [
        discriminant_form(standard_lattice("rank1", -6)),
        discriminant_form(direct_sum(A2LIKE, standard_lattice("rank1", 8))),
        discriminant_form(Lattice(IntMatrix.from_rows([[3, 6], [6, 20]]))),
    ]
    for F in forms:
        assert fqf_isomorphic(F, F)
    for F1 in forms:
        for F2 in forms:
            assert fqf_isomorphic(F1, F2) == fqf_isomorphic(F2, F1)


def test_fqf_q_value_mismatch():
    F_neg = discriminant_form(standard_lattice("rank1", -6))
    F_pos = discriminant_form(standard_lattice("rank1", 6))
    assert not fqf_isomorphic(F_neg, F_pos)


def test_extension_matches_degree_six_side():
    rank21 = direct_sum(A2LIKE, standard_lattice("rank1", 8), U, E8NEG, E8NEG)
    glue = GlueVector(tuple(1 if i == 2 else 0 for i in range(21)), 2)
    extension, _ = overlattice_from_glue(rank21, glue)
    other = direct_sum(standard_lattice("rank1", -6), U, U, E8NEG, E8NEG)
    assert fqf_isomorphic(discriminant_form(extension), discriminant_form(other))


def test_glue_subquotient_matches_overlattice():
    cases = [
        (standard_lattice("rank1", 8), GlueVector((1,), 2)),
        (direct_sum(A2LIKE, standard_lattice("rank1", 8)), GlueVector((0, 0, 1), 2)),
        (direct_sum(standard_lattice("rank1", 4), standard_lattice("rank1", 4)),
         GlueVector((1, 1), 2)),
    ]
    for L, glue in cases:
        F, class_of = disc_form_with_map(L)
        vec = [Fraction(n, glue.denominator) for n in glue.numerator]
        cls = class_of(vec)
        sub = glue_subquotient(F, cls)
        new, _ = overlattice_from_glue(L, glue)
        assert fqf_isomorphic(sub, discriminant_form(new))


def test_glue_subquotient_rejects_anisotropic():
    F = discriminant_form(standard_lattice("rank1", -6))
    with pytest.raises(Degenerate):
        glue_subquotient(F, (3,))


def test_fqf_distinguishes_same_group_different_q():
    # both groups are (Z/2)^2 but the q multisets differ
    hyperbolic = discriminant_form(Lattice(IntMatrix.from_rows([[0, 2], [2, 0]])))
    split = discriminant_form(Lattice(IntMatrix.from_rows([[2, 0], [0, 2]])))
    assert hyperbolic.invariant_factors == split.invariant_factors == (2, 2)
    assert not fqf_isomorphic(hyperbolic, split)
