"""Node certificates, plane containment, and cubic selection."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import (
    ContainmentFails,
    NotIdentified,
    NotTransverse,
    RetriesExhausted,
    SpanNotPlane,
)
from .ideals import IdealPiece, ideal_piece
from .modp import Draws, inv_mod, normalize_point, rank_mod_p, rref, solve_in_span
from .parametrize import Parametrization, ProjPointSet
from .polys import poly_diff, poly_eval

STREAM_PLANE = 3
STREAM_CONTROL = 4
STREAM_CUBIC = 6
STREAM_CONIC = 7


def _domain_chart_vars(par: Parametrization, pt) -> list[int]:
    """Free coordinates of an affine chart at pt (pivots held constant)."""
    if par.domain == "P2":
        pivot = max(i for i in range(3) if pt[i] % par.p)
        return [i for i in range(3) if i != pivot]
    piv1 = 0 if pt[0] % par.p else 1
    piv2 = 2 if pt[2] % par.p else 3
    free_first = 1 - piv1
    free_second = 5 - piv2
    return [free_first, free_second]


def _branch_tangent_rows(par: Parametrization, pt, chart: int) -> list[list[int]]:
    """Rows spanning the branch tangent plane in the target affine chart.

    d(F_j / F_c) = (dF_j * F_c - F_j * dF_c) / F_c^2 evaluated at pt, over
    each free domain coordinate.
    """
    p = par.p
    fc = poly_eval(par.forms[chart], pt, p)
    if fc == 0:
        raise NotTransverse("image leaves the affine chart")
    inv_fc2 = inv_mod(fc * fc % p, p)
    fvals = [poly_eval(f, pt, p) for f in par.forms]
    rows = []
    for var in _domain_chart_vars(par, pt):
        dvals = [poly_eval(poly_diff(f, var), pt, p) for f in par.forms]
        row = []
        for j in range(len(par.forms)):
            if j == chart:
                continue
            row.append((dvals[j] * fc - fvals[j] * dvals[chart]) * inv_fc2 % p)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class NodeCertificate:
    node: tuple[int, ...]
    branch_dims: tuple[int, int]
    span_dim: int
    transverse: bool


def node_certificate(par: Parametrization, preimages) -> NodeCertificate:
    """Certify that the two preimages hit the same point with transverse
    branch tangent planes (2 + 2 = 4 inside the 5-dim affine tangent space)."""
    pre_a, pre_b = preimages
    img_a = par.image_of(pre_a)
    img_b = par.image_of(pre_b)
    if img_a is None or img_b is None:
        raise NotIdentified("a preimage has no defined image")
    if img_a != img_b:
        raise NotIdentified("preimages map to distinct points")
    node = img_a
    chart = next(i for i, x in enumerate(node) if x)
    rows_a = _branch_tangent_rows(par, pre_a, chart)
    rows_b = _branch_tangent_rows(par, pre_b, chart)
    p = par.p
    dim_a = rank_mod_p(rows_a, p)
    dim_b = rank_mod_p(rows_b, p)
    if dim_a != 2 or dim_b != 2:
        raise NotTransverse(f"branch tangents have dimensions {dim_a}, {dim_b}")
    span = rank_mod_p(rows_a + rows_b, p)
    if span != 4:
        raise NotTransverse(f"tangent planes span dimension {span}, not 4")
    return NodeCertificate(node, (dim_a, dim_b), span, True)


def span_of_points(points, p: int, expect_dim: int | None = None) -> list[list[int]]:
    """RREF basis of the linear span; optionally insist on its dimension."""
    basis, _ = rref([list(pt) for pt in points], p)
    if expect_dim is not None and len(basis) != expect_dim:
        raise SpanNotPlane(f"span dimension {len(basis)}, expected {expect_dim}")
    return basis


def plane_points(basis, p: int, count: int, seed: int, stream: int = STREAM_PLANE):
    """Distinct normalized points of the plane spanned by three basis rows."""
    draws = Draws(seed, stream)
    n = len(basis[0])
    out = []
    seen = set()
    while len(out) < count:
        coeffs = [draws.mod(p) for _ in basis]
        if not any(coeffs):
            continue
        vec = [sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(n)]
        pt = normalize_point(vec, p)
        if pt is None or pt in seen:
            continue
        seen.add(pt)
        out.append(pt)
    return out


def line_in_plane_points(par: Parametrization, w_plus, w_minus, minimum: int = 12,
                         cap: int = 40):
    """Images of the line joining the two chosen plane points.

    Members of the line class through both torus points push forward to the
    curve whose span is the first distinguished plane.
    """
    p = par.p
    images = []
    seen = set()
    for m in range(p):
        pt = tuple((a + m * b) % p for a, b in zip(w_plus, w_minus))
        if not any(pt) or par.in_excluded_locus(pt):
            continue
        img = par.image_of(pt)
        if img is not None and img not in seen:
            seen.add(img)
            images.append(img)
        if len(images) >= cap:
            break
    img = par.image_of(w_minus)
    if img is not None and img not in seen:
        images.append(img)
    if len(images) < minimum:
        raise SpanNotPlane(f"only {len(images)} usable line points")
    return images


def conic_through_points(base_points, p: int):
    """Coefficients (x^2, xy, xz, y^2, yz, z^2) of the conic through the
    five points; raises if the conic is not unique or degenerates."""
    from .polys import eval_monomials, monomials

    monos = monomials(3, 2)
    rows = [eval_monomials(pt, monos, p) for pt in base_points]
    from .modp import kernel_mod_p

    kern = kernel_mod_p(rows, 6, p)
    if len(kern) != 1:
        raise SpanNotPlane("conic through the five points is not unique")
    coeffs = dict(zip(monos, kern[0]))
    conic = {m: c for m, c in coeffs.items() if c}
    # through the three coordinate points the pure squares must vanish
    for square in ((2, 0, 0), (0, 2, 0), (0, 0, 2)):
        if conic.get(square):
            raise SpanNotPlane("conic misses a coordinate base point")
    a = conic.get((1, 1, 0), 0)  # xy
    b = conic.get((1, 0, 1), 0)  # xz
    c = conic.get((0, 1, 1), 0)  # yz
    if a == 0 or b == 0 or c == 0:
        raise SpanNotPlane("conic degenerates into lines")
    return a, b, c


def conic_in_plane_points(par: Parametrization, w_plus, w_minus, minimum: int = 12,
                          cap: int = 40):
    """Images of the unique conic through the three coordinate points and
    the two torus points; spans the second distinguished plane."""
    p = par.p
    base = [(1, 0, 0), (0, 1, 0), (0, 0, 1), w_plus, w_minus]
    a, b, c = conic_through_points(base, p)
    images = []
    seen = set()
    for m in range(1, p):
        # a*xy + b*xz + c*yz = 0 parametrized through [1,0,0]: y = m z
        denom = (a * m + b) % p
        if denom == 0:
            continue
        pt = ((-c * m) % p, m * denom % p, denom)
        if par.in_excluded_locus(pt):
            continue
        img = par.image_of(pt)
        if img is not None and img not in seen:
            seen.add(img)
            images.append(img)
        if len(images) >= cap:
            break
    if len(images) < minimum:
        raise SpanNotPlane(f"only {len(images)} usable conic points")
    return images


@dataclass(frozen=True)
class PlaneReport:
    plane_basis: tuple[tuple[int, ...], ...]
    checked_points: int
    contained: bool


def containment_check(quadrics: IdealPiece, basis, seed: int, count: int = 12,
                      stream: int = STREAM_PLANE) -> PlaneReport:
    """Evaluate every interpolated quadric on sampled plane points."""
    pts = plane_points(basis, quadrics.prime, count, seed, stream)
    for pt in pts:
        if not quadrics.vanishes_at(pt):
            raise ContainmentFails("a quadric does not vanish on the plane")
    return PlaneReport(tuple(tuple(b) for b in basis), len(pts), True)


def random_plane_control(quadrics: IdealPiece, through, seed: int, trials: int = 3) -> bool:
    """A random plane through the node must fail containment, every trial."""
    p = quadrics.prime
    n = quadrics.ambient_dim + 1
    draws = Draws(seed, STREAM_CONTROL)
    failures = 0
    done = 0
    while done < trials:
        rows = [list(through)] + [[draws.mod(p) for _ in range(n)] for _ in range(2)]
        basis, _ = rref(rows, p)
        if len(basis) != 3:
            continue
        done += 1
        try:
            containment_check(quadrics, basis, draws.next_int() % (1 << 32),
                              stream=STREAM_CONTROL)
        except ContainmentFails:
            failures += 1
    return failures == trials


def plane_coordinates(points, basis, p: int):
    """Coordinates of each point over the three plane basis rows."""
    coords = []
    for pt in points:
        sol = solve_in_span(basis, list(pt), p)
        if sol is None:
            raise SpanNotPlane("point leaves the plane span")
        coords.append(tuple(sol))
    return coords


def curve_cubic_dim_in_plane(curve_points, basis, p: int) -> int:
    """Dimension of plane cubics vanishing on the curve sample."""
    coords = plane_coordinates(curve_points, basis, p)
    normalized = []
    seen = set()
    for c in coords:
        nc = normalize_point(c, p)
        if nc is not None and nc not in seen:
            seen.add(nc)
            normalized.append(nc)
    piece = ideal_piece(ProjPointSet(p, 2, tuple(normalized)), 3)
    return piece.dim


def cubic_through(
    cubics: IdealPiece,
    plane_bases,
    seed: int,
    retries: int = 5,
) -> tuple[int, ...]:
    """A seeded combination of the degree-3 ideal basis not vanishing on
    either distinguished plane; dense coefficient row over the cubic basis."""
    p = cubics.prime
    draws = Draws(seed, STREAM_CUBIC)
    for _ in range(retries + 1):
        coeffs = [draws.mod(p) for _ in range(cubics.dim)]
        if not any(coeffs):
            continue
        dense = [0] * len(cubics.monos)
        for c, row in zip(coeffs, cubics.basis):
            if c:
                for i, a in enumerate(row):
                    dense[i] = (dense[i] + c * a) % p
        ok = True
        for basis in plane_bases:
            pts = plane_points(basis, p, 10, draws.next_int() % (1 << 32),
                               stream=STREAM_CUBIC)
            from .polys import dense_eval

            if all(dense_eval(dense, cubics.monos, pt, p) == 0 for pt in pts):
                ok = False
                break
        if ok:
            return tuple(dense)
    raise RetriesExhausted("no cubic avoiding both planes found")


@dataclass(frozen=True)
class PlaneContainmentRecord:
    line_plane: tuple[tuple[int, ...], ...]
    conic_plane: tuple[tuple[int, ...], ...]
    line_contained: bool
    conic_contained: bool
    nodal_cubic_dim: int
    control_failed: bool


def plane_containment_check(
    par: Parametrization, w_plus, w_minus, quadrics: IdealPiece, node, seed: int
) -> PlaneContainmentRecord:
    """Full plane certificate for one nodal surface construction.

    Builds the two distinguished curves (the line through the chosen torus
    points and the unique conic through them and the three coordinate
    points), spans their image planes, evaluates every interpolated quadric
    on both, checks the nodal-plane-cubic dimension, and runs the
    random-plane control, which must fail containment across its trials.
    """
    p = par.p
    line_images = line_in_plane_points(par, w_plus, w_minus)
    line_plane = span_of_points(line_images, p, expect_dim=3)
    conic_images = conic_in_plane_points(par, w_plus, w_minus)
    conic_plane = span_of_points(conic_images, p, expect_dim=3)
    line_ok = containment_check(quadrics, line_plane, seed).contained
    conic_ok = containment_check(quadrics, conic_plane, seed).contained
    cubic_dim = curve_cubic_dim_in_plane(line_images, line_plane, p)
    control = random_plane_control(quadrics, node, seed)
    return PlaneContainmentRecord(
        line_plane=tuple(tuple(r) for r in line_plane),
        conic_plane=tuple(tuple(r) for r in conic_plane),
        line_contained=line_ok,
        conic_contained=conic_ok,
        nodal_cubic_dim=cubic_dim,
        control_failed=control,
    )
