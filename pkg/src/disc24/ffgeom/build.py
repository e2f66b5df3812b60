"""Seeded construction drivers with bounded genericity retries.

Parameter choices over a small field can be unlucky; every random choice is
drawn from a counter lane derived from (seed, attempt), each failed attempt
is logged, and after the retry budget the last genericity error propagates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import (
    CenterOnImage,
    ExhaustedDomain,
    NotIdentified,
    NotTransverse,
    RankNotStabilized,
    RetriesExhausted,
    SpanNotPlane,
    VerifierError,
)
from .certify import (
    NodeCertificate,
    conic_in_plane_points,
    cubic_through,
    line_in_plane_points,
    node_certificate,
    span_of_points,
)
from .ideals import IdealPiece, ideal_piece
from .modp import Draws, draw, normalize_point, rank_mod_p
from .parametrize import (
    Parametrization,
    PrimeFieldSpec,
    ProjPointSet,
    linear_projection,
    parametrize_del_pezzo,
    parametrize_scroll,
    sample_points,
)

STREAM_TORUS = 11
STREAM_SECANT = 12
STREAM_SAMPLE = 13
STREAM_PENCIL = 14
STREAM_FRESH = 15

GENERICITY_ERRORS = (
    CenterOnImage,
    ExhaustedDomain,
    NotIdentified,
    NotTransverse,
    RankNotStabilized,
    SpanNotPlane,
)


def attempt_seed(seed: int, attempt: int) -> int:
    return draw(seed, 997, attempt)


@dataclass
class NodalDelPezzoModel:
    spec: PrimeFieldSpec
    seed: int
    attempt: int
    smooth_par: Parametrization          # into P^6
    par: Parametrization                 # projected, into P^5
    w_plus: tuple[int, ...]              # torus preimages of the node
    w_minus: tuple[int, ...]
    secant_point: tuple[int, ...]
    node: tuple[int, ...]
    points: ProjPointSet                 # sample of the nodal surface
    quadrics: IdealPiece
    cubics: IdealPiece
    node_cert: NodeCertificate
    line_plane: tuple[tuple[int, ...], ...]   # span basis of the first plane
    conic_plane: tuple[tuple[int, ...], ...]  # span basis of the second plane
    line_images: list = field(default_factory=list)
    retries_used: int = 0


def _torus_pair(p: int, draws: Draws):
    """Two torus points, distinct under all three coordinate-ratio maps."""
    while True:
        y1, z1 = draws.nonzero_mod(p), draws.nonzero_mod(p)
        y2, z2 = draws.nonzero_mod(p), draws.nonzero_mod(p)
        w_plus, w_minus = (1, y1, z1), (1, y2, z2)
        if y1 == y2 or z1 == z2:
            continue
        if (y1 * z2 - y2 * z1) % p == 0:
            continue
        return w_plus, w_minus


def build_nodal_del_pezzo(
    spec: PrimeFieldSpec, seed: int, retries: int = 5, sample_count: int = 160
) -> NodalDelPezzoModel:
    p = spec.p
    smooth_par = parametrize_del_pezzo(spec)
    last: VerifierError | None = None
    for attempt in range(retries + 1):
        aseed = attempt_seed(seed, attempt)
        try:
            torus = Draws(aseed, STREAM_TORUS)
            w_plus, w_minus = _torus_pair(p, torus)
            img_plus = smooth_par.image_of(w_plus)
            img_minus = smooth_par.image_of(w_minus)
            lam = Draws(aseed, STREAM_SECANT).nonzero_mod(p)
            x = normalize_point(
                [(a + lam * b) % p for a, b in zip(img_plus, img_minus)], p
            )
            par = linear_projection(smooth_par, [x])
            cert = node_certificate(par, (w_plus, w_minus))
            points = sample_points(par, sample_count, aseed, STREAM_SAMPLE)
            quadrics = ideal_piece(points, 2)
            cubics = ideal_piece(points, 3)
            line_images = line_in_plane_points(par, w_plus, w_minus)
            line_plane = span_of_points(line_images, p, expect_dim=3)
            conic_images = conic_in_plane_points(par, w_plus, w_minus)
            conic_plane = span_of_points(conic_images, p, expect_dim=3)
            return NodalDelPezzoModel(
                spec=spec,
                seed=seed,
                attempt=attempt,
                smooth_par=smooth_par,
                par=par,
                w_plus=w_plus,
                w_minus=w_minus,
                secant_point=x,
                node=cert.node,
                points=points,
                quadrics=quadrics,
                cubics=cubics,
                node_cert=cert,
                line_plane=tuple(tuple(r) for r in line_plane),
                conic_plane=tuple(tuple(r) for r in conic_plane),
                line_images=line_images,
                retries_used=attempt,
            )
        except GENERICITY_ERRORS as err:
            last = err
    raise RetriesExhausted(f"nodal surface construction failed: {last}")


@dataclass
class TwoNodalScrollModel:
    spec: PrimeFieldSpec
    seed: int
    attempt: int
    smooth_par: Parametrization          # into P^7
    par: Parametrization                 # projected, into P^5
    pairs: tuple                          # ((t1+, t1-), (t2+, t2-)) domain points
    centers: tuple                        # the two secant points spanning the line
    nodes: tuple                          # images of the two identified pairs
    points: ProjPointSet
    quadrics: IdealPiece
    cubics: IdealPiece
    node_certs: tuple[NodeCertificate, NodeCertificate]
    retries_used: int = 0


def _scroll_quadruple(p: int, draws: Draws):
    """Four domain points, pairwise distinct in both rulings."""
    while True:
        pts = []
        for _ in range(4):
            pts.append((draws.mod(p), 1, draws.mod(p), 1))
        s_coords = [pt[0] for pt in pts]
        u_coords = [pt[2] for pt in pts]
        if len(set(s_coords)) == 4 and len(set(u_coords)) == 4:
            return (pts[0], pts[1]), (pts[2], pts[3])


def build_two_nodal_scroll(
    spec: PrimeFieldSpec, seed: int, retries: int = 5, sample_count: int = 160
) -> TwoNodalScrollModel:
    p = spec.p
    smooth_par = parametrize_scroll(spec)
    last: VerifierError | None = None
    for attempt in range(retries + 1):
        aseed = attempt_seed(seed, attempt)
        try:
            draws = Draws(aseed, STREAM_TORUS)
            pair1, pair2 = _scroll_quadruple(p, draws)
            images = [smooth_par.image_of(t) for t in (*pair1, *pair2)]
            if rank_mod_p([list(img) for img in images], p) != 4:
                raise SpanNotPlane("secant lines are not skew")
            secant_draws = Draws(aseed, STREAM_SECANT)
            centers = []
            for (ta, tb) in (pair1, pair2):
                lam = secant_draws.nonzero_mod(p)
                ia = smooth_par.image_of(ta)
                ib = smooth_par.image_of(tb)
                centers.append(
                    normalize_point([(a + lam * b) % p for a, b in zip(ia, ib)], p)
                )
            par = linear_projection(smooth_par, centers)
            cert1 = node_certificate(par, pair1)
            cert2 = node_certificate(par, pair2)
            if cert1.node == cert2.node:
                raise NotTransverse("the two nodes collide")
            points = sample_points(par, sample_count, aseed, STREAM_SAMPLE)
            quadrics = ideal_piece(points, 2)
            cubics = ideal_piece(points, 3)
            return TwoNodalScrollModel(
                spec=spec,
                seed=seed,
                attempt=attempt,
                smooth_par=smooth_par,
                par=par,
                pairs=(pair1, pair2),
                centers=tuple(centers),
                nodes=(cert1.node, cert2.node),
                points=points,
                quadrics=quadrics,
                cubics=cubics,
                node_certs=(cert1, cert2),
                retries_used=attempt,
            )
        except GENERICITY_ERRORS as err:
            last = err
    raise RetriesExhausted(f"two-nodal scroll construction failed: {last}")


def quadric_pencil(model: NodalDelPezzoModel, seed: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two independent members of the interpolated quadric system."""
    p = model.spec.p
    draws = Draws(seed, STREAM_PENCIL)
    dim = model.quadrics.dim
    while True:
        a = [draws.mod(p) for _ in range(dim)]
        b = [draws.mod(p) for _ in range(dim)]
        if rank_mod_p([a, b], p) == 2:
            break
    q1 = [0] * len(model.quadrics.monos)
    q2 = [0] * len(model.quadrics.monos)
    for c1, c2, row in zip(a, b, model.quadrics.basis):
        for i, val in enumerate(row):
            q1[i] = (q1[i] + c1 * val) % p
            q2[i] = (q2[i] + c2 * val) % p
    return tuple(q1), tuple(q2)


def pencil_cubic(model: NodalDelPezzoModel, seed: int, retries: int = 5) -> tuple[int, ...]:
    """A cubic through the surface avoiding both distinguished planes."""
    return cubic_through(
        model.cubics, [model.line_plane, model.conic_plane], seed, retries
    )


def fresh_surface_points(model, count: int, seed: int) -> ProjPointSet:
    """An independent sample (fresh stream) of the same surface."""
    return sample_points(model.par, count, seed, STREAM_FRESH)


def conic_threefold_quadric_dim(model: NodalDelPezzoModel, seed: int,
                                fibers: int = 24) -> int:
    """Quadrics through the threefold swept by the conic-fibration planes.

    Each fiber of the first conic fibration maps to a conic spanning a plane;
    the union of those planes is a quartic threefold through the surface, and
    exactly one quadric contains it.
    """
    from .certify import plane_points, span_of_points
    from .ideals import ideal_piece
    from .modp import Draws

    p = model.spec.p
    draws = Draws(seed, 77)
    pts: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    used = 0
    m = 0
    while used < fibers and m < p:
        fiber_images: list[tuple[int, ...]] = []
        for _ in range(40):
            s, t = draws.mod(p), draws.mod(p)
            if s == 0 and t == 0:
                continue
            dom = (s, (m * t) % p, t)
            if model.par.in_excluded_locus(dom):
                continue
            img = model.par.image_of(dom)
            if img is not None and img not in fiber_images:
                fiber_images.append(img)
            if len(fiber_images) >= 8:
                break
        m += 1
        if len(fiber_images) < 4:
            continue
        try:
            basis = span_of_points(fiber_images, p, expect_dim=3)
        except SpanNotPlane:
            continue
        used += 1
        for q in plane_points(basis, p, 10, draws.next_int() % (1 << 32)):
            if q not in seen:
                seen.add(q)
                pts.append(q)
    piece = ideal_piece(ProjPointSet(p, 5, tuple(pts)), 2)
    return piece.dim
