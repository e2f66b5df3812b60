import pytest

from disc24.errors import (
    CenterOnImage,
    ConfigError,
    EnumerationTooLarge,
    ExhaustedDomain,
    NotIdentified,
    RankNotStabilized,
)
from disc24.ffgeom import (
    PrimeFieldSpec,
    ProjPointSet,
    build_nodal_del_pezzo,
    build_two_nodal_scroll,
    containment_check,
    curve_cubic_dim_in_plane,
    fresh_surface_points,
    ideal_piece,
    linear_projection,
    node_certificate,
    parametrize_del_pezzo,
    parametrize_scroll,
    pencil_cubic,
    quadric_pencil,
    random_plane_control,
    residual_scan,
    sample_points,
    singular_scan,
)
from disc24.ffgeom.modp import draw
from disc24.ffgeom.polys import dense_eval, monomials, poly_from_dense

P_SMALL = PrimeFieldSpec(31)
P_BIG = PrimeFieldSpec(10007)


@pytest.fixture(scope="module")
def dp31():
    return build_nodal_del_pezzo(P_SMALL, 0)


@pytest.fixture(scope="module")
def scroll31():
    return build_two_nodal_scroll(P_SMALL, 0)


def test_prime_spec_validation():
    with pytest.raises(ConfigError):
        PrimeFieldSpec(6)
    with pytest.raises(ConfigError):
        PrimeFieldSpec(3)
    with pytest.raises(ConfigError):
        PrimeFieldSpec(2**31 + 11)
    PrimeFieldSpec(5)   # smallest admissible


def test_draw_is_pure():
    assert draw(1, 2, 3) == draw(1, 2, 3)
    assert draw(1, 2, 3) != draw(1, 2, 4)
    assert draw(1, 2, 3) != draw(2, 2, 3)


def test_monomials_graded_lex():
    monos = monomials(3, 2)
    assert monos == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert len(monomials(6, 3)) == 56
    assert len(monomials(6, 2)) == 21


def test_del_pezzo_parametrization():
    par = parametrize_del_pezzo(P_BIG)
    assert len(par.forms) == 7
    assert par.image_of((1, 1, 1)) == (1,) * 7
    for base in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        assert par.image_of(base) is None
    assert par.in_excluded_locus((1, 0, 5))
    assert not par.in_excluded_locus((1, 2, 5))


def test_del_pezzo_quadric_count():
    par = parametrize_del_pezzo(P_BIG)
    pts = sample_points(par, 200, 0)
    assert ideal_piece(pts, 2).dim == 9


def test_scroll_parametrization():
    par = parametrize_scroll(P_BIG)
    assert len(par.forms) == 8
    with pytest.raises(ConfigError):
        parametrize_scroll(PrimeFieldSpec(7))
    pts = sample_points(par, 300, 0)
    assert ideal_piece(pts, 1).dim == 0     # linearly normal image
    assert ideal_piece(pts, 2).dim == 15


def test_sample_points_contract():
    par = parametrize_del_pezzo(P_BIG)
    assert len(sample_points(par, 0, 0)) == 0
    pts = sample_points(par, 500, 0)
    assert len(pts) == 500
    assert len(set(pts.points)) == 500
    again = sample_points(par, 500, 0)
    assert pts == again                      # determinism
    other = sample_points(par, 500, 1)
    assert pts != other


def test_sample_points_exhaustion():
    par = parametrize_del_pezzo(PrimeFieldSpec(5))
    with pytest.raises(ExhaustedDomain):
        sample_points(par, 400, 0)


def test_projection_center_on_image_guard():
    par = parametrize_del_pezzo(P_BIG)
    img = par.image_of((1, 2, 3))
    with pytest.raises(CenterOnImage):
        linear_projection(par, [img])


def test_ideal_piece_needs_points():
    par = parametrize_del_pezzo(P_BIG)
    pts = sample_points(par, 40, 0)
    with pytest.raises(RankNotStabilized):
        ideal_piece(pts, 2)


def test_ideal_piece_monotone_and_stable(dp31):
    par = dp31.par
    dims = []
    for count in (120, 140, 160):
        pts = sample_points(par, count, 5)
        dims.append(ideal_piece(pts, 3).dim)
    assert dims[0] >= dims[1] >= dims[2]
    assert dims[1] == dims[2] == 20


def test_nodal_dims_31(dp31):
    assert dp31.quadrics.dim == 3
    assert dp31.cubics.dim == 20


def test_basis_vanishes_on_fresh_points(dp31):
    fresh = fresh_surface_points(dp31, 100, 17)
    for pt in fresh.points:
        assert dp31.quadrics.vanishes_at(pt)
        assert dp31.cubics.vanishes_at(pt)


def test_node_certificate_controls(dp31):
    assert dp31.node_cert.transverse
    assert dp31.node_cert.span_dim == 4
    with pytest.raises(NotIdentified):
        node_certificate(dp31.smooth_par, (dp31.w_plus, dp31.w_minus))


def test_scroll_model(scroll31):
    assert scroll31.quadrics.dim == 2
    assert scroll31.cubics.dim == 18
    assert all(c.transverse for c in scroll31.node_certs)
    assert scroll31.nodes[0] != scroll31.nodes[1]


def test_plane_containment_and_control(dp31):
    p = P_SMALL.p
    rep1 = containment_check(dp31.quadrics, [list(r) for r in dp31.line_plane], 3)
    rep2 = containment_check(dp31.quadrics, [list(r) for r in dp31.conic_plane], 3)
    assert rep1.contained and rep2.contained
    assert random_plane_control(dp31.quadrics, dp31.node, 3)
    dim = curve_cubic_dim_in_plane(
        dp31.line_images, [list(r) for r in dp31.line_plane], p
    )
    assert dim == 1


def test_cubic_through_properties(dp31):
    X = pencil_cubic(dp31, 0)
    monos3 = monomials(6, 3)
    fresh = fresh_surface_points(dp31, 100, 23)
    for pt in fresh.points:
        assert dense_eval(X, monos3, pt, P_SMALL.p) == 0
    # not identically zero on either plane
    from disc24.ffgeom.certify import plane_points

    for basis in (dp31.line_plane, dp31.conic_plane):
        pts = plane_points([list(r) for r in basis], P_SMALL.p, 10, 99)
        assert any(dense_eval(X, monos3, pt, P_SMALL.p) != 0 for pt in pts)


def test_point_set_text_roundtrip(dp31):
    text = dp31.points.to_text()
    back = ProjPointSet.from_text(text)
    assert back == dp31.points
    assert text.splitlines()[0] == "31 5"


@pytest.fixture(scope="module")
def scan31(dp31):
    pencil = quadric_pencil(dp31, 0)
    X = pencil_cubic(dp31, 0)
    return residual_scan(pencil, X, dp31.quadrics, dp31.cubics, P_SMALL, threads=1), X


def test_residual_scan_counts(dp31, scan31):
    res, _ = scan31
    assert len(res.wprime_points) >= 200
    assert dp31.node in res.wprime_points.points
    assert dp31.node in res.w_points.points
    assert res.wprime_quadrics.dim == 3
    assert res.wprime_cubics.dim == 20


def test_residual_scan_partition(dp31, scan31):
    res, X = scan31
    # every kept intersection point is W or W'
    union = set(res.w_points.points) | set(res.wprime_points.points)
    assert len(union) == res.total_intersection
    # overlap is exactly the conductor
    overlap = set(res.w_points.points) & set(res.wprime_points.points)
    assert overlap == set(res.conductor_points)
    # some W point off the conductor fails some W' form
    off = [pt for pt in res.w_points.points if pt not in overlap]
    assert off
    failures = sum(
        1 for pt in off[:20] if any(res.wprime_cubics.eval_basis(pt))
    )
    assert failures > 0


def test_residual_scan_determinism(dp31, scan31):
    res, X = scan31
    pencil = quadric_pencil(dp31, 0)
    again = residual_scan(pencil, X, dp31.quadrics, dp31.cubics, P_SMALL, threads=2)
    assert again.w_points == res.w_points
    assert again.wprime_points == res.wprime_points
    assert again.conductor_points == res.conductor_points


def test_scan_size_guard():
    q = tuple([1] + [0] * 20)
    x = tuple([1] + [0] * 55)
    with pytest.raises(EnumerationTooLarge):
        residual_scan((q, q), x, None, None, PrimeFieldSpec(67))


def test_singular_scan_fermat_and_cone():
    spec7 = PrimeFieldSpec(7)
    fermat = {tuple(3 if i == j else 0 for i in range(6)): 1 for j in range(6)}
    assert singular_scan([fermat], spec7) == []
    cone = {tuple(3 if i == j else 0 for i in range(6)): 1 for j in range(5)}
    assert singular_scan([cone], spec7) == [(0, 0, 0, 0, 0, 1)]


def test_singular_scan_reports_node(dp31):
    forms = [poly_from_dense(r, dp31.quadrics.monos) for r in dp31.quadrics.basis]
    forms += [poly_from_dense(r, dp31.cubics.monos) for r in dp31.cubics.basis]
    pts = list(dp31.points.points)
    if dp31.node not in pts:
        pts.append(dp31.node)
    sing = singular_scan(forms, P_SMALL, points=pts, expected_codim=3)
    assert sing == [dp31.node]


def test_node_transversality_across_five_seeds():
    for seed in range(5):
        model = build_nodal_del_pezzo(P_BIG, seed)
        assert model.node_cert.transverse
        assert model.node_cert.span_dim == 4


def test_plane_containment_record(dp31):
    from disc24.ffgeom import plane_containment_check

    record = plane_containment_check(
        dp31.par, dp31.w_plus, dp31.w_minus, dp31.quadrics, dp31.node, 2
    )
    assert record.line_contained and record.conic_contained
    assert record.nodal_cubic_dim == 1
    assert record.control_failed
    assert len(record.line_plane) == 3 and len(record.conic_plane) == 3


def test_common_zeros_scan_matches_brute_force_oracle():
    # independent route: evaluate the dense forms pointwise over every
    # canonical representative of P^5(F_5) in plain Python
    from disc24.ffgeom.modp import draw
    from disc24.ffgeom.scan import common_zeros_scan

    spec5 = PrimeFieldSpec(5)
    p = 5
    monos2 = monomials(6, 2)
    monos3 = monomials(6, 3)
    q = tuple(draw(2024, 1, i) % p for i in range(len(monos2)))
    x = tuple(draw(2024, 2, i) % p for i in range(len(monos3)))

    def all_reps():
        import itertools

        for k in range(6):
            for tail in itertools.product(range(p), repeat=5 - k):
                yield (0,) * k + (1,) + tail

    expected = sorted(
        pt
        for pt in all_reps()
        if dense_eval(q, monos2, pt, p) == 0 and dense_eval(x, monos3, pt, p) == 0
    )
    got = common_zeros_scan([q, x], [monos2, monos3], spec5, threads=1)
    assert got == expected
    got_parallel = common_zeros_scan([q, x], [monos2, monos3], spec5, threads=2)
    assert got_parallel == expected


def test_scan_w_count_matches_motivic_oracle(dp31, scan31):
    # the split blown-up plane has p^2 + 4p + 1 rational points; projecting
    # from the secant point glues exactly two of them into the node
    res, _ = scan31
    p = P_SMALL.p
    assert len(res.w_points) == p * p + 4 * p


def test_scroll_residuation_at_31(scroll31):
    # the two interpolated quadrics are the canonical complete intersection
    # through the scroll; cutting with a cubic through it yields a residual
    # surface with the same ideal dimensions and both nodes on the conductor
    from disc24.ffgeom.modp import Draws

    p = P_SMALL.p
    q1, q2 = (tuple(r) for r in scroll31.quadrics.basis)
    draws = Draws(0, 41)
    coeffs = [draws.mod(p) for _ in range(scroll31.cubics.dim)]
    dense = [0] * len(scroll31.cubics.monos)
    for c, row in zip(coeffs, scroll31.cubics.basis):
        for i, a in enumerate(row):
            dense[i] = (dense[i] + c * a) % p
    res = residual_scan(
        (q1, q2), tuple(dense), scroll31.quadrics, scroll31.cubics, P_SMALL
    )
    # split quadric surface: (p+1)^2 points, two pairs glued by the projection
    assert len(res.w_points) == (p + 1) ** 2 - 2
    assert res.wprime_quadrics.dim == 2
    assert res.wprime_cubics.dim == 18
    assert scroll31.nodes[0] in res.wprime_points.points
    assert scroll31.nodes[1] in res.wprime_points.points


def test_conic_threefold_quadric_dim(dp31):
    from disc24.ffgeom import conic_threefold_quadric_dim

    assert conic_threefold_quadric_dim(dp31, 0) == 1
