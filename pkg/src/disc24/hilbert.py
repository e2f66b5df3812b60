"""Euler-characteristic and liaison bookkeeping for curves and surfaces.

Hilbert polynomials are exact rational polynomials of degree <= 5 in one
variable.  Binomial coefficients use the falling-factorial extension, valid
for negative arguments, so the Koszul alternating sum is uniform in n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NonIntegralGenus,
    ParityViolation,
    TooManyHypersurfaces,
)

MAX_DEGREE = 5


@dataclass(frozen=True)
class HilbertPolynomial:
    """Coefficients in ascending powers of n, exact rationals."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) > MAX_DEGREE + 1:
            raise DimensionMismatch("polynomial degree exceeds 5")

    @staticmethod
    def of(*coeffs) -> "HilbertPolynomial":
        vals = [Fraction(c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        return HilbertPolynomial(tuple(vals))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else 0

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __add__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return HilbertPolynomial.of(
            *[
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(size)
            ]
        )

    def __sub__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        return self + HilbertPolynomial.of(*[-c for c in other.coefficients])

    def __mul__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return HilbertPolynomial.of(*out)

    def integral_on(self, lo: int = -3, hi: int = 6) -> bool:
        return all(self(n).denominator == 1 for n in range(lo, hi + 1))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            term = "" if (abs(c) == 1 and i > 0) else str(abs(c))
            if i == 1:
                term += "n"
            elif i > 1:
                term += f"n^{i}"
            parts.append(("-" if c < 0 else "+", term))
        sign0, t0 = parts[0]
        out = ("-" if sign0 == "-" else "") + t0
        for sign, t in parts[1:]:
            out += f" {sign} {t}"
        return out


ZERO = HilbertPolynomial.of()


def binom_poly(shift: int, r: int) -> HilbertPolynomial:
    """C(n + shift, r) as a polynomial in n (falling-factorial extension)."""
    poly = HilbertPolynomial.of(1)
    for i in range(r):
        poly = poly * HilbertPolynomial.of(shift - i, 1)
    return HilbertPolynomial.of(*[c / math.factorial(r) for c in poly.coefficients])


@dataclass(frozen=True)
class CIProfile:
    """Complete intersection of |degrees| hypersurfaces in P^ambient_dim."""

    ambient_dim: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (1 <= len(self.degrees) <= self.ambient_dim):
            raise TooManyHypersurfaces(
                f"{len(self.degrees)} hypersurfaces in P^{self.ambient_dim}"
            )
        if any(d < 1 for d in self.degrees):
            raise DimensionMismatch("degrees must be positive")


def ci_hilbert_poly(profile: CIProfile) -> HilbertPolynomial:
    """chi(O(n)) of the complete intersection via the Koszul alternating sum."""
    r = profile.ambient_dim
    if r > MAX_DEGREE:
        raise DimensionMismatch("ambient dimension above 5 is unsupported")
    total = ZERO
    k = len(profile.degrees)
    for mask in range(1 << k):
        shift = r
        bits = 0
        for i in range(k):
            if mask >> i & 1:
                shift -= profile.degrees[i]
                bits += 1
        term = binom_poly(shift, r)
        if bits % 2:
            term = HilbertPolynomial.of(*[-c for c in term.coefficients])
        total = total + term
    return total


def curve_hp(degree: int, arithmetic_genus: int) -> HilbertPolynomial:
    """chi(O_C(n)) = d n + 1 - p for a degree-d genus-p curve."""
    if degree < 1:
        raise DimensionMismatch("curve degree must be positive")
    return HilbertPolynomial.of(1 - arithmetic_genus, degree)


def residual_hp(
    total: HilbertPolynomial, kept: HilbertPolynomial, conductor: HilbertPolynomial
) -> HilbertPolynomial:
    """Residuation bookkeeping: chi(kept') = chi(total) - chi(kept) + chi(conductor)."""
    return total - kept + conductor


def adjunction_genus(d_sq: int, d_dot_k: int) -> int:
    """Arithmetic genus 1 + (D^2 + D.K)/2 of a divisor on a surface."""
    if (d_sq + d_dot_k) % 2:
        raise ParityViolation("D^2 + D.K must be even")
    return 1 + (d_sq + d_dot_k) // 2


def glue_points_genus(genus_in: int, points_glued: int) -> int:
    """Gluing k points to one point raises arithmetic genus by k - 1."""
    if points_glued < 1:
        raise DimensionMismatch("need at least one point")
    return genus_in + points_glued - 1


def ci_canonical_twist(profile: CIProfile) -> int:
    """The twist t with omega = O(t) on the complete intersection."""
    return sum(profile.degrees) - profile.ambient_dim - 1


def liaison_link(profile: CIProfile, deg_c: int, genus_c: int) -> tuple[int, int]:
    """Invariants of the curve linked to C inside the complete intersection.

    For a curve CI profile (|degrees| = ambient_dim - 1):
       deg C' = prod(degrees) - deg C,
       genus C - genus C' = ((sum(degrees) - r - 1)/2) (deg C - deg C').
    """
    if len(profile.degrees) != profile.ambient_dim - 1:
        raise DimensionMismatch("need a curve-linking profile")
    ci_degree = 1
    for d in profile.degrees:
        ci_degree *= d
    deg_res = ci_degree - deg_c
    twist = Fraction(ci_canonical_twist(profile), 2)
    genus_res = Fraction(genus_c) - twist * (deg_c - deg_res)
    if genus_res.denominator != 1:
        raise NonIntegralGenus("liaison produced a non-integral genus")
    return deg_res, int(genus_res)


def smooth_sextic_del_pezzo_hp() -> HilbertPolynomial:
    """chi(O(n)) = 3n^2 + 3n + 1 for the anticanonical sextic surface."""
    return HilbertPolynomial.of(1, 3, 3)


def nodal_sextic_del_pezzo_hp() -> HilbertPolynomial:
    """A transverse double point drops chi by exactly 1: 3n^2 + 3n."""
    return HilbertPolynomial.of(0, 3, 3)
