"""Splitting-type arithmetic for bundles on the projective line.

Covers the generic-scroll dimension formulas, the balanced quotient/extension
rules, and the rank-3 projective-bundle intersection numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadMonomial, DimensionMismatch

# a surface class a*xi + b*f in the projective bundle
PClass = tuple[int, int]


@dataclass(frozen=True)
class SplittingType:
    """Multiset of line-bundle twists, kept in descending order."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.degrees:
            raise DimensionMismatch("splitting type cannot be empty")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @staticmethod
    def of(*degrees: int) -> "SplittingType":
        return SplittingType(tuple(degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def dual(self) -> "SplittingType":
        return SplittingType(tuple(-d for d in self.degrees))

    def __str__(self) -> str:
        return " + ".join(f"O({d})" for d in self.degrees)


def h0_splitting(T: SplittingType) -> int:
    """Global sections: sum of max(d + 1, 0)."""
    return sum(max(d + 1, 0) for d in T.degrees)


@dataclass(frozen=True)
class ScrollProfile:
    """E = O(-a)^s + O(-a-1)^(r-s) on the line, projectivized and embedded."""

    r: int
    s: int
    a: int

    def __post_init__(self) -> None:
        if self.r < 2 or not (1 <= self.s <= self.r) or self.a < 1:
            raise DimensionMismatch("need r >= 2, 1 <= s <= r, a >= 1")

    def bundle(self) -> SplittingType:
        return SplittingType((-self.a,) * self.s + (-self.a - 1,) * (self.r - self.s))

    def bundle_dual(self) -> SplittingType:
        return self.bundle().dual()


@dataclass(frozen=True)
class ScrollInvariants:
    n: int                 # ambient projective dimension
    d: int                 # scroll degree
    sections: int          # h^0 of the dual bundle
    dim_aut_bundle: int    # r^2
    dim_aut_scroll: int    # r^2 + 2
    hilb_scroll: int       # dim Hilb of the scroll in P^n
    hilb_flag: int         # dim Hilb of (divisor in scroll in P^n)
    hilb_projected: int    # dim Hilb of the source scroll with the center point
    moduli_flag: int
    moduli_projected: int


def scroll_profile_invariants(p: ScrollProfile) -> ScrollInvariants:
    r, s, a = p.r, p.s, p.a
    n = r * (a + 2) - s - 1
    d = r * (a + 1) - s
    sections = r * (a + 2) - s
    hilb_scroll = n * n + 2 * n - r * r - 2
    hilb_flag = n * n + 3 * n - r * r + 2 * r - 2
    # expanded form of the flag-with-center dimension (the printed cubic-in-n
    # variant does not close the moduli identity; the expansion does)
    hilb_projected = n * n + 5 * n + 1 - r * r + 2 * r
    moduli_flag = hilb_flag - (n * n + 2 * n)
    moduli_projected = hilb_projected - ((n + 2) ** 2 - 1)
    inv = ScrollInvariants(
        n=n,
        d=d,
        sections=sections,
        dim_aut_bundle=r * r,
        dim_aut_scroll=r * r + 2,
        hilb_scroll=hilb_scroll,
        hilb_flag=hilb_flag,
        hilb_projected=hilb_projected,
        moduli_flag=moduli_flag,
        moduli_projected=moduli_projected,
    )
    assert inv.moduli_flag == inv.moduli_projected == n - r * r + 2 * r - 2
    return inv


def balanced_splitting(rank: int, degree: int) -> SplittingType:
    """The unique multiset of ``rank`` integers summing to ``degree`` with
    max - min <= 1."""
    q, rem = divmod(degree, rank)
    return SplittingType((q + 1,) * rem + (q,) * (rank - rem))


def balanced_quotient_splitting(e_dual: SplittingType, quotient_rank: int) -> SplittingType:
    """Generic quotient F-dual in 0 -> O(-2) -> E-dual -> F-dual -> 0."""
    if not (1 <= quotient_rank < e_dual.rank):
        raise DimensionMismatch("quotient rank out of range")
    return balanced_splitting(quotient_rank, e_dual.degree + 2)


def extension_bundle_splitting(f_dual: SplittingType) -> SplittingType:
    """Generic extension E-dual in 0 -> O(-2) -> E-dual -> F-dual -> 0."""
    return balanced_splitting(f_dual.rank + 1, f_dual.degree - 2)


@dataclass(frozen=True)
class TableEntry:
    r: int
    s: int
    a: int
    printed: SplittingType
    balanced: SplittingType

    @property
    def agrees(self) -> bool:
        return self.printed == self.balanced


def _printed_quotient(r: int, s: int, a: int) -> SplittingType:
    """The quotient splitting as printed in the worked example table."""
    if r == 2:
        return SplittingType.of(2 * a + 2 if s == 2 else 2 * a + 3)
    if r == 3 and s == 3:
        if a % 2 == 0:
            return SplittingType.of(1 + 3 * a // 2, 1 + 3 * a // 2)
        return SplittingType.of((3 * a + 1) // 2, (3 * a + 3) // 2)
    if r == 3 and s == 2:
        if a % 2 == 0:
            return SplittingType.of(1 + 3 * a // 2, 2 + 3 * a // 2)
        return SplittingType.of((3 * a + 3) // 2, (3 * a + 3) // 2)
    if r == 3 and s == 1:
        if a % 2 == 0:
            return SplittingType.of(2 + 3 * a // 2, 2 + 3 * a // 2)
        return SplittingType.of((3 * a + 1) // 2, (3 * a + 3) // 2)
    raise DimensionMismatch("no printed table entry for this profile")


def example_table(a_even: int = 2, a_odd: int = 1) -> list[TableEntry]:
    """Printed-vs-balanced comparison across the worked example rows."""
    entries = []
    for r, s in [(2, 2), (2, 1), (3, 3), (3, 2), (3, 1)]:
        parities = (a_even,) if r == 2 else (a_even, a_odd)
        for a in parities:
            profile = ScrollProfile(r, s, a)
            balanced = balanced_quotient_splitting(profile.bundle_dual(), r - 1)
            entries.append(TableEntry(r, s, a, _printed_quotient(r, s, a), balanced))
    return entries


def pbundle_intersection(E: SplittingType, monomial: tuple[int, int]) -> int:
    """Top intersection numbers on the rank-3 projective bundle over the line.

    The Grothendieck relation gives xi^3 = -c1(E) and xi^2 f = 1; f^2 = 0
    kills everything else, so only (3,0) and (2,1) are admissible.
    """
    if E.rank != 3:
        raise BadMonomial("intersection table implemented for rank 3 only")
    i, j = monomial
    if i + j != 3 or j > 1 or i < 0 or j < 0:
        raise BadMonomial("monomial must be xi^3 or xi^2 f")
    if j == 0:
        return -E.degree
    return 1


def surface_class_degree(E: SplittingType, cls: PClass) -> int:
    """Degree of the surface a*xi + b*f: a * xi^3 + b * xi^2 f."""
    a, b = cls
    return a * pbundle_intersection(E, (3, 0)) + b * pbundle_intersection(E, (2, 1))


def residual_class_in_pbundle(total: PClass, kept: PClass) -> PClass:
    """Residual surface class total - kept in the bundle."""
    return (total[0] - kept[0], total[1] - kept[1])
