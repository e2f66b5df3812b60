import random
from fractions import Fraction

import pytest

from disc24 import certificates as cert
from disc24.errors import NotIntegralPairing
from disc24.exactmat import IntMatrix, determinant
from disc24.lattices import SublatticeEmbedding, orthogonal_complement
from disc24.mukai import (
    BField,
    K3_LATTICE,
    K3_RANK,
    MukaiVector,
    b_kernel_sublattice,
    combo,
    criterion_matrix,
    degree_six_polarization,
    exp_B,
    fano24_chain,
    gram_of_mukai,
    half_period_b_field,
    k3_pair,
    minimal_integral_twist_class,
    moduli_polarization,
    moduli_vector,
    mukai_pairing,
    orthogonality_report,
    p4_embedding_check,
    point_class,
    polarization_vector,
    rigid_divisor_class,
    twisted_rank_two_class,
)


def test_pairing_structure_unit_point():
    one = MukaiVector.of(1)
    pt = point_class()
    assert mukai_pairing(one, pt) == -1


def test_polarization_square_six():
    f = polarization_vector()
    assert mukai_pairing(f, f) == 6


def test_moduli_vector_square_two():
    v = moduli_vector()
    assert mukai_pairing(v, v) == 2


def test_exp_zero_is_identity():
    v = moduli_vector()
    zero = BField(tuple(Fraction(0) for _ in range(K3_RANK)))
    assert exp_B(v, zero) == v


def test_exp_of_polarization_on_unit():
    f = degree_six_polarization()
    B = BField(tuple(Fraction(c) for c in f))
    out = exp_B(MukaiVector.of(1), B)
    assert out.r == 1
    assert out.d == tuple(Fraction(c) for c in f)
    assert out.s == 3  # f.f / 2


def test_exp_half_period_on_u1():
    B = half_period_b_field()
    out = exp_B(MukaiVector.of(0, combo(u1=1), 0), B)
    assert out.d == combo(u1=1)
    assert out.s == Fraction(1, 2)


def test_twisted_class_matrix():
    got = gram_of_mukai([twisted_rank_two_class(), polarization_vector(), point_class()])
    assert got.to_lists() == [[-2, -1, -2], [-1, 6, 0], [-2, 0, 0]]


def test_g_E_gram_matches_fano_form():
    got = gram_of_mukai([moduli_polarization(), rigid_divisor_class()])
    assert got.to_lists() == [[6, 6], [6, -2]]


def test_point_self_pairing():
    assert gram_of_mukai([point_class()]).to_lists() == [[0]]


def test_orthogonality_report():
    v = moduli_vector()
    rep = orthogonality_report(
        v, [moduli_polarization(), rigid_divisor_class(), point_class()]
    )
    assert [p for p, _ in rep] == [0, 0, -2]
    assert [z for _, z in rep] == [True, True, False]


def test_b_field_values():
    B = half_period_b_field()
    f = degree_six_polarization()
    assert B.dot(f) == Fraction(1, 2)
    assert B.square() == Fraction(-1, 2)


def _f_perp():
    f = degree_six_polarization()
    emb = SublatticeEmbedding(K3_LATTICE, IntMatrix.from_rows([list(f)]))
    return orthogonal_complement(emb)


def test_b_kernel_trivial_for_integral_field():
    perp = _f_perp()
    zero = BField(tuple(Fraction(0) for _ in range(K3_RANK)))
    _, index = b_kernel_sublattice(zero, perp)
    assert index == 1


def test_b_kernel_index_two():
    perp = _f_perp()
    assert perp.rank == 21
    sub, index = b_kernel_sublattice(half_period_b_field(), perp)
    assert index == 2
    B = half_period_b_field()
    for i in range(sub.basis.rows):
        assert k3_pair(sub.basis.row(i), B.coords).denominator == 1


def test_b_kernel_index_divides_denominator():
    rng = random.Random(303)
    perp = _f_perp()
    for _ in range(10):
        coords = [Fraction(rng.randint(-2, 2), rng.choice((1, 2, 3))) for _ in range(K3_RANK)]
        B = BField(tuple(coords))
        sub, index = b_kernel_sublattice(B, perp)
        # pairings against integral vectors have denominator dividing den(B),
        # so the image subgroup order (= the index) divides it too
        assert B.denominator() % index == 0
        for i in range(min(3, sub.basis.rows)):
            assert k3_pair(sub.basis.row(i), B.coords).denominator == 1


def _random_bfield(rng):
    return BField(tuple(
        Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3, 4))) for _ in range(K3_RANK)
    ))


def _random_mukai(rng):
    return MukaiVector.of(
        rng.randint(-3, 3),
        [rng.randint(-2, 2) for _ in range(K3_RANK)],
        rng.randint(-3, 3),
    )


def test_exp_b_preserves_pairing_200_trials():
    rng = random.Random(777)
    for _ in range(200):
        B = _random_bfield(rng)
        x, y = _random_mukai(rng), _random_mukai(rng)
        assert mukai_pairing(exp_B(x, B), exp_B(y, B)) == mukai_pairing(x, y)


def test_exp_b_group_action():
    rng = random.Random(778)
    for _ in range(40):
        B1, B2 = _random_bfield(rng), _random_bfield(rng)
        x = _random_mukai(rng)
        sum_field = BField(tuple(a + b for a, b in zip(B1.coords, B2.coords)))
        assert exp_B(exp_B(x, B2), B1) == exp_B(x, sum_field)


def test_gram_of_mukai_symmetric():
    rng = random.Random(779)
    vecs = [_random_mukai(rng) for _ in range(4)]
    g = gram_of_mukai(vecs)
    for i in range(4):
        for j in range(4):
            assert g.at(i, j) == g.at(j, i)


def test_minimal_integral_twist_class():
    w = minimal_integral_twist_class()
    assert w.r == 4
    assert w.is_integral()
    assert mukai_pairing(w, w) == 0


def test_fano24_chain_all_pass():
    checks = fano24_chain()
    assert len(checks) >= 7
    assert all(c.status == cert.PASS for c in checks)


def test_fano24_chain_identity_control():
    checks = fano24_chain(involution=IntMatrix.identity(2))
    by_name = {c.name: c for c in checks}
    assert by_name["involution_is_isometry"].status == cert.PASS
    assert by_name["involution_nontrivial"].status == cert.PASS


def test_fano24_chain_bad_glue_denominator():
    with pytest.raises(NotIntegralPairing):
        fano24_chain(glue_denominator=3)


def test_criterion_matrix():
    gram, ok = criterion_matrix(0, 1, -2)
    assert ok and gram.to_lists() == [[3, 6, 0], [6, 20, 1], [0, 1, -2]]
    _, ok = criterion_matrix(6, 20, 5)
    assert not ok  # duplicating the surface class gives even pairing
    gram, ok = criterion_matrix(0, 3, 0)
    assert ok
    assert determinant(gram) == -27


def test_p4_embedding_check():
    checks = p4_embedding_check()
    assert all(c.status == cert.PASS for c in checks)
    by_name = {c.name: c for c in checks}
    assert by_name["moduli_square_minus14"].actual == -14
    assert by_name["eightfold_square_minus14"].actual == -14
    assert by_name["control_square_minus2"].actual == -2


def test_k3_class_pairing():
    from disc24.mukai import K3Class, basis_vector

    u1 = K3Class(basis_vector("u1"))
    v1 = K3Class(basis_vector("v1"))
    assert u1.pair(v1) == 1
    assert u1.pair(u1) == 0
    f = K3Class(degree_six_polarization())
    assert f.pair(f) == 6
