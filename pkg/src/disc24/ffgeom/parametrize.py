"""Rational parametrizations of the two surfaces over prime fields.

The anticanonically embedded plane blown up at the three coordinate points
maps to P^6 through the seven cubic monomials other than x^3, y^3, z^3; the
smooth quadric maps to P^7 through the eight bidegree-(1,3) monomials.
Projections compose symbolically, so exact derivatives stay available.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CenterOnImage, ConfigError, DimensionMismatch, ExhaustedDomain
from .modp import Draws, certify_prime_spec, kernel_mod_p, normalize_point
from .polys import Poly, monomials, poly_eval, poly_lincomb

STREAM_DOMAIN = 1
STREAM_PROJCHECK = 8


@dataclass(frozen=True)
class PrimeFieldSpec:
    p: int

    def __post_init__(self) -> None:
        certify_prime_spec(self.p)


@dataclass(frozen=True)
class ProjPointSet:
    p: int
    dim: int  # ambient projective dimension N
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise DimensionMismatch("points must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.points)

    def to_text(self) -> str:
        lines = [f"{self.p} {self.dim}"]
        for pt in self.points:
            lines.append(" ".join(str(x) for x in pt))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "ProjPointSet":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        p, dim = (int(x) for x in lines[0].split())
        pts = tuple(tuple(int(x) for x in ln.split()) for ln in lines[1:])
        return ProjPointSet(p, dim, pts)


@dataclass
class Parametrization:
    p: int
    domain: str                       # "P2" or "P1xP1"
    target_dim: int
    forms: list[Poly]
    excluded_locus: list[Poly] = field(default_factory=list)
    projected: bool = False
    base_forms: list[Poly] | None = None  # pre-projection forms for base-point tests

    def __post_init__(self) -> None:
        if self.domain not in ("P2", "P1xP1"):
            raise ConfigError(f"unknown domain {self.domain!r}")
        if len(self.forms) != self.target_dim + 1:
            raise DimensionMismatch("need target_dim + 1 forms")
        if self.base_forms is None:
            self.base_forms = list(self.forms)

    @property
    def domain_nvars(self) -> int:
        return 3 if self.domain == "P2" else 4

    def is_base_point(self, pt) -> bool:
        return all(poly_eval(f, pt, self.p) == 0 for f in self.base_forms)

    def in_excluded_locus(self, pt) -> bool:
        if not self.excluded_locus:
            return False
        return all(poly_eval(f, pt, self.p) == 0 for f in self.excluded_locus)

    def image_of(self, pt) -> tuple[int, ...] | None:
        """Normalized image; None off the domain (base point), or raises
        CenterOnImage when a projection center sits on the surface."""
        vals = [poly_eval(f, pt, self.p) for f in self.forms]
        img = normalize_point(vals, self.p)
        if img is None:
            if self.projected and not self.is_base_point(pt):
                raise CenterOnImage("projection center lies on the image")
            return None
        return img


def _domain_point(par: Parametrization, draws: Draws):
    p = par.p
    if par.domain == "P2":
        pt = (draws.mod(p), draws.mod(p), draws.mod(p))
        return None if not any(pt) else pt
    s, t, u, v = draws.mod(p), draws.mod(p), draws.mod(p), draws.mod(p)
    if (s == 0 and t == 0) or (u == 0 and v == 0):
        return None
    return (s, t, u, v)


def parametrize_del_pezzo(spec: PrimeFieldSpec) -> Parametrization:
    """Cubics through the three coordinate points of the plane, into P^6."""
    p = spec.p
    cubics = [m for m in monomials(3, 3) if m not in ((3, 0, 0), (0, 3, 0), (0, 0, 3))]
    forms: list[Poly] = [{m: 1} for m in cubics]
    # the hexagon of lines comes from the coordinate triangle xyz = 0
    excluded: list[Poly] = [{(1, 1, 1): 1}]
    return Parametrization(p, "P2", 6, forms, excluded)


def parametrize_scroll(spec: PrimeFieldSpec) -> Parametrization:
    """Bidegree (1,3) monomials on the quadric surface, into P^7."""
    p = spec.p
    if p < 11:
        raise ConfigError("scroll parametrization needs p >= 11")
    forms: list[Poly] = []
    for i in (1, 0):          # s-degree on the first factor
        for j in range(3, -1, -1):
            expo = (i, 1 - i, j, 3 - j)
            forms.append({expo: 1})
    return Parametrization(p, "P1xP1", 7, forms)


def sample_points(
    par: Parametrization, count: int, seed: int, stream: int = STREAM_DOMAIN
) -> ProjPointSet:
    """Distinct normalized image points avoiding the excluded locus.

    Deterministic for (seed, stream); the attempt counter is independent of
    acceptance, so prefixes of longer runs agree with shorter runs.
    """
    draws = Draws(seed, stream)
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    attempts = 0
    max_attempts = 64 * count + 4096
    while len(out) < count and attempts < max_attempts:
        attempts += 1
        pt = _domain_point(par, draws)
        if pt is None or par.in_excluded_locus(pt):
            continue
        img = par.image_of(pt)
        if img is None or img in seen:
            continue
        seen.add(img)
        out.append(img)
    if len(out) < count:
        raise ExhaustedDomain(
            f"found {len(out)} of {count} points after {attempts} attempts"
        )
    return ProjPointSet(par.p, par.target_dim, tuple(out))


def sample_with_preimages(
    par: Parametrization, count: int, seed: int, stream: int = STREAM_DOMAIN
):
    """Like sample_points but keeps the domain points alongside."""
    draws = Draws(seed, stream)
    seen: set[tuple[int, ...]] = set()
    out = []
    attempts = 0
    max_attempts = 64 * count + 4096
    while len(out) < count and attempts < max_attempts:
        attempts += 1
        pt = _domain_point(par, draws)
        if pt is None or par.in_excluded_locus(pt):
            continue
        img = par.image_of(pt)
        if img is None or img in seen:
            continue
        seen.add(img)
        out.append((pt, img))
    if len(out) < count:
        raise ExhaustedDomain(f"found {len(out)} of {count} points")
    return out


def torus_preimage(par: Parametrization, target) -> tuple[int, ...] | None:
    """Invert the monomial parametrization at a torus-image point.

    Returns a domain point mapping to ``target`` or None when the ratio
    reconstruction is inconclusive (some needed coordinate vanishes, or the
    forward check fails).  Only defined for the two unprojected embeddings.
    """
    if par.projected:
        return None
    p = par.p
    t = [x % p for x in target]
    from .modp import inv_mod as _inv

    if par.domain == "P2" and len(t) == 7:
        # forms: x^2 y, x^2 z, x y^2, x y z, x z^2, y^2 z, y z^2
        if t[1] == 0 or t[0] == 0:
            return None
        y = t[3] * _inv(t[1], p) % p
        z = t[3] * _inv(t[0], p) % p
        cand = (1, y, z)
    elif par.domain == "P1xP1" and len(t) == 8:
        # forms: s u^3, s u^2 v, s u v^2, s v^3, t u^3, t u^2 v, t u v^2, t v^3
        if t[4] == 0 or t[1] == 0:
            return None
        s = t[0] * _inv(t[4], p) % p
        u = t[0] * _inv(t[1], p) % p
        cand = (s, 1, u, 1)
    else:
        return None
    img = par.image_of(cand)
    if img is not None and img == normalize_point(t, p):
        return cand
    return None


def linear_projection(par: Parametrization, centers: list[tuple[int, ...]]) -> Parametrization:
    """Compose with the projection away from the span of the centers."""
    p = par.p
    n1 = par.target_dim + 1
    if len(centers) not in (1, 2):
        raise DimensionMismatch("projection centers: one point or a line")
    norm_centers = []
    for c in centers:
        nc = normalize_point(c, p)
        if nc is None:
            raise DimensionMismatch("zero vector is not a projective point")
        if torus_preimage(par, nc) is not None:
            raise CenterOnImage("projection center lies on the surface")
        norm_centers.append(nc)
    if len(set(norm_centers)) != len(norm_centers):
        raise DimensionMismatch("projection centers must be distinct")
    functionals = kernel_mod_p([list(c) for c in norm_centers], n1, p)
    if len(functionals) != n1 - len(norm_centers):
        raise DimensionMismatch("projection center span degenerate")
    new_forms = [poly_lincomb(lam, par.forms, p) for lam in functionals]
    out = Parametrization(
        p,
        par.domain,
        par.target_dim - len(norm_centers),
        new_forms,
        excluded_locus=list(par.excluded_locus),
        projected=True,
        base_forms=list(par.base_forms),
    )
    # spot check: a center visibly on the image fails fast
    draws = Draws(0, STREAM_PROJCHECK)
    for _ in range(48):
        pt = _domain_point(par, draws)
        if pt is None or par.is_base_point(pt):
            continue
        out.image_of(pt)  # raises CenterOnImage on a hit
    return out
