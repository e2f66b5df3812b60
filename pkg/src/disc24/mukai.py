"""Fixed-basis K3 and Mukai lattice arithmetic with B-field twists.

The K3 second cohomology is pinned to the ordered basis
(u1, v1, u2, v2, u3, v3, e1..e8, f1..f8) with Gram U + U + U + (-E8) + (-E8).
A Mukai vector is an exact triple (r, D, s); the pairing is
<(r1,D1,s1),(r2,D2,s2)> = D1.D2 - r1*s2 - r2*s1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import certificates as cert
from .discforms import discriminant_form, fqf_isomorphic
from .errors import DimensionMismatch
from .exactmat import IntMatrix, RatMatrix, block_diag, determinant
from .lattices import (
    PRIMITIVE_SIGN_FLIP,
    GlueVector,
    Lattice,
    SublatticeEmbedding,
    direct_sum,
    gram_of,
    lattice_invariants,
    overlattice_from_glue,
    standard_lattice,
    verify_isometry,
)

K3_RANK = 22
K3_BASIS = (
    "u1", "v1", "u2", "v2", "u3", "v3",
    "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8",
    "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8",
)

_U = standard_lattice("U").gram
_E8NEG = standard_lattice("E8neg").gram
K3_GRAM: IntMatrix = block_diag(_U, _U, _U, _E8NEG, _E8NEG)
K3_LATTICE = Lattice(K3_GRAM)


def basis_vector(name: str) -> tuple[int, ...]:
    i = K3_BASIS.index(name)
    return tuple(1 if j == i else 0 for j in range(K3_RANK))


def combo(**coeffs) -> tuple[Fraction, ...]:
    """Linear combination of named basis vectors, exact coefficients."""
    out = [Fraction(0)] * K3_RANK
    for name, c in coeffs.items():
        i = K3_BASIS.index(name)
        out[i] += Fraction(c)
    return tuple(out)


_K3_NONZERO = tuple(
    (i, j, K3_GRAM.at(i, j))
    for i in range(K3_RANK)
    for j in range(K3_RANK)
    if K3_GRAM.at(i, j) != 0
)


def k3_pair(x, y) -> Fraction:
    total = Fraction(0)
    for i, j, g in _K3_NONZERO:
        xi = x[i]
        yj = y[j]
        if xi and yj:
            total += xi * g * yj
    return total


@dataclass(frozen=True)
class K3Class:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != K3_RANK:
            raise DimensionMismatch("K3 class needs 22 coordinates")

    def pair(self, other: "K3Class") -> int:
        return int(k3_pair(self.coords, other.coords))


@dataclass(frozen=True)
class BField:
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != K3_RANK:
            raise DimensionMismatch("B-field needs 22 coordinates")

    def dot(self, d) -> Fraction:
        return k3_pair(self.coords, d)

    def square(self) -> Fraction:
        return k3_pair(self.coords, self.coords)

    def denominator(self) -> int:
        from math import lcm

        return lcm(*(c.denominator for c in self.coords))


@dataclass(frozen=True)
class MukaiVector:
    r: Fraction
    d: tuple[Fraction, ...]
    s: Fraction

    def __post_init__(self) -> None:
        if len(self.d) != K3_RANK:
            raise DimensionMismatch("Mukai vector needs a 22-dim middle part")

    @staticmethod
    def of(r, d=None, s=0) -> "MukaiVector":
        dd = tuple(Fraction(x) for x in (d if d is not None else [0] * K3_RANK))
        return MukaiVector(Fraction(r), dd, Fraction(s))

    def is_integral(self) -> bool:
        return (
            self.r.denominator == 1
            and self.s.denominator == 1
            and all(c.denominator == 1 for c in self.d)
        )


def mukai_pairing(x: MukaiVector, y: MukaiVector) -> Fraction:
    return k3_pair(x.d, y.d) - x.r * y.s - y.r * x.s


def exp_B(x: MukaiVector, B: BField) -> MukaiVector:
    """Twist action: (r, D, s) -> (r, D + B r, s + B.D + B^2 r / 2)."""
    d = tuple(c + b * x.r for c, b in zip(x.d, B.coords))
    s = x.s + B.dot(x.d) + B.square() * x.r / 2
    return MukaiVector(x.r, d, s)


def gram_of_mukai(vectors: list[MukaiVector]) -> RatMatrix:
    n = len(vectors)
    return RatMatrix.from_rows(
        [[mukai_pairing(vectors[i], vectors[j]) for j in range(n)] for i in range(n)]
    )


def orthogonality_report(v: MukaiVector, others: list[MukaiVector]):
    """Pairings of v against each vector, with zero flags."""
    out = []
    for w in others:
        p = mukai_pairing(v, w)
        out.append((p, p == 0))
    return out


def b_kernel_sublattice(
    B: BField, ambient: SublatticeEmbedding
) -> tuple[SublatticeEmbedding, int]:
    """{x in ambient : B.x integral} with its index in the ambient sublattice."""
    from math import lcm

    from .exactmat import kernel_basis, row_hnf_mod

    k = ambient.rank
    gram = ambient.ambient.gram
    n = ambient.ambient.rank
    t = []
    for i in range(k):
        row = ambient.basis.row(i)
        t.append(sum((Fraction(row[j]) * gram.at(j, a) * B.coords[a]
                      for j in range(n) for a in range(n)), Fraction(0)))
    m = lcm(*(x.denominator for x in t)) if t else 1
    if m == 1:
        return ambient, 1
    trow = [int(x * m) for x in t]
    kern = kernel_basis(IntMatrix.from_rows([trow + [m]]))
    sol = [list(kern.row(i))[:-1] for i in range(kern.rows)]
    C = row_hnf_mod(IntMatrix.from_rows(sol), m)
    if C.rows != k:
        raise DimensionMismatch("kernel sublattice degenerate")
    index = abs(determinant(C))
    new_basis = C.mul(ambient.basis)
    return SublatticeEmbedding(ambient.ambient, new_basis), index


# named classes of the degree-six twisted construction ------------------------

def degree_six_polarization() -> tuple[int, ...]:
    """f = u1 + 3 v1, the square-6 divisor class."""
    return tuple(int(c) for c in combo(u1=1, v1=3))


def half_period_b_field() -> BField:
    """B = (v1 + u2 - v2)/2, an order-two Brauer lift."""
    return BField(combo(v1=Fraction(1, 2), u2=Fraction(1, 2), v2=Fraction(-1, 2)))


def twisted_rank_two_class() -> MukaiVector:
    """2 - (v1 + u2 - v2): rank-two twisted Hodge class."""
    return MukaiVector.of(2, combo(v1=-1, u2=-1, v2=1), 0)


def point_class() -> MukaiVector:
    return MukaiVector.of(0, None, 1)


def polarization_vector() -> MukaiVector:
    return MukaiVector.of(0, degree_six_polarization(), 0)


def moduli_vector() -> MukaiVector:
    """v = 2 + u1 + 2 v1 - u2 + v2, the square-2 Mukai vector."""
    return MukaiVector.of(2, combo(u1=1, v1=2, u2=-1, v2=1), 0)


def moduli_polarization() -> MukaiVector:
    """g = -6 - u1 + 3 u2 - 3 v2 + 2 [pt], orthogonal to v."""
    return MukaiVector.of(-6, combo(u1=-1, u2=3, v2=-3), 2)


def rigid_divisor_class() -> MukaiVector:
    """E = 2 + u1 + 2 v1 - u2 + v2 + [pt], square -2, orthogonal to v."""
    return MukaiVector.of(2, combo(u1=1, v1=2, u2=-1, v2=1), 1)


def minimal_integral_twist_class() -> MukaiVector:
    """r (1 + B + B^2/2) with the least r making it integral (r = 4 here)."""
    B = half_period_b_field()
    r = 1
    while True:
        cand = MukaiVector(
            Fraction(r),
            tuple(r * c for c in B.coords),
            Fraction(r) * B.square() / 2,
        )
        if cand.is_integral():
            return cand
        r += 1


# certificate fragments --------------------------------------------------------

DISC24_GRAM = IntMatrix.from_rows([[3, 6], [6, 20]])
INVOLUTION = IntMatrix.from_rows([[1, 4], [0, -1]])
FANO_GV_GRAM = IntMatrix.from_rows([[6, 0], [0, -8]])
FANO_GE_GRAM = IntMatrix.from_rows([[6, 6], [6, -2]])
BASIS_CERT_BLOCK = IntMatrix.from_rows([[2, 1, 0], [2, 0, 1], [3, 1, 1]])


def fano24_chain(
    involution: IntMatrix | None = None, glue_denominator: int = 2
) -> list[cert.Check]:
    """The full lattice chain: disc-24 form, involution, Fano-side Grams,
    rank-21 complement, its index-two extension and the identification with
    the degree-six K3 lattice, plus the discriminant-form comparison.
    """
    checks: list[cert.Check] = []
    L24 = Lattice(DISC24_GRAM)
    inv24 = lattice_invariants(L24)
    checks.append(cert.check(
        "disc24_det_and_signature",
        {"det": 24, "signature": [2, 0, 0]},
        {"det": determinant(DISC24_GRAM), "signature": list(inv24.signature)},
        cert.STATED, "disc-24 intersection form",
    ))
    supplied = involution if involution is not None else INVOLUTION
    checks.append(cert.check(
        "involution_is_isometry",
        True,
        verify_isometry(L24, L24, supplied),
        cert.STATED, "residuation involution on the disc-24 form",
    ))
    nontrivial = verify_isometry(L24, L24, INVOLUTION) and (
        INVOLUTION.entries != IntMatrix.identity(2).entries
    )
    checks.append(cert.check(
        "involution_nontrivial",
        True, nontrivial,
        cert.DERIVED, "residuation involution differs from the identity",
    ))
    checks.append(cert.check(
        "orthogonal_basis_gram",
        [[3, 0], [0, 8]],
        gram_of(L24, [(1, 0), (-2, 1)]),
        cert.STATED, "orthogonalized disc-24 basis",
    ))
    fano_gram = IntMatrix.from_rows(
        [[6, 0], [0, PRIMITIVE_SIGN_FLIP * 8]]
    )
    checks.append(cert.check(
        "fano_side_gram",
        FANO_GV_GRAM, fano_gram,
        cert.STATED, "Fano-side pairing of the two divisor classes",
    ))
    # E = g + w, E' = g - w against the Fano-side Gram
    fano = Lattice(FANO_GV_GRAM)
    g = (1, 0)
    e_plus = (1, 1)
    e_minus = (1, -1)
    checks.append(cert.check(
        "ruled_divisor_grams",
        {"gE": [[6, 6], [6, -2]], "E2": -2, "Eprime2": -2, "EEprime": 14},
        {
            "gE": gram_of(fano, [g, e_plus]),
            "E2": fano.pair(e_plus, e_plus),
            "Eprime2": fano.pair(e_minus, e_minus),
            "EEprime": fano.pair(e_plus, e_minus),
        },
        cert.STATED, "square -2 ruled divisor classes",
    ))
    rank21 = direct_sum(
        standard_lattice("A2like"),
        standard_lattice("rank1", 8),
        standard_lattice("U"),
        standard_lattice("E8neg"),
        standard_lattice("E8neg"),
    )
    inv21 = lattice_invariants(rank21)
    checks.append(cert.check(
        "rank21_invariants",
        {"rank": 21, "disc": 24, "even": True, "signature": [2, 19, 0]},
        {"rank": inv21.rank, "disc": inv21.disc, "even": inv21.is_even,
         "signature": list(inv21.signature)},
        cert.STATED, "rank-21 complement lattice invariants",
    ))
    glue = GlueVector(tuple(1 if i == 2 else 0 for i in range(21)), glue_denominator)
    extension, index = overlattice_from_glue(rank21, glue)
    ext_inv = lattice_invariants(extension)
    checks.append(cert.check(
        "index_two_extension",
        {"index": 2, "disc": 6, "even": True},
        {"index": index, "disc": ext_inv.disc, "even": ext_inv.is_even},
        cert.STATED, "canonical index-two extension",
    ))
    degree_six = direct_sum(
        standard_lattice("rank1", -6),
        standard_lattice("U"),
        standard_lattice("U"),
        standard_lattice("E8neg"),
        standard_lattice("E8neg"),
    )
    T = block_diag(BASIS_CERT_BLOCK, IntMatrix.identity(18))
    checks.append(cert.check(
        "extension_isometric_to_degree_six",
        True,
        verify_isometry(extension, degree_six, T),
        cert.STATED, "basis certificate identifying the extension",
    ))
    # the extension's discriminant form is recorded (not asserted against a
    # printed value: the source never displays it), then compared with the
    # degree-six side
    ext_form = discriminant_form(extension)
    deg6_form = discriminant_form(degree_six)
    isomorphic = fqf_isomorphic(ext_form, deg6_form)
    checks.append(cert.Check(
        "discriminant_forms_isomorphic",
        cert.PASS if isomorphic else cert.FAIL,
        {"isomorphic": True},
        {
            "isomorphic": isomorphic,
            "extension_form": {
                "factors": list(ext_form.invariant_factors),
                "q_values": [str(q) for q in ext_form.q_values],
            },
            "degree_six_form": {
                "factors": list(deg6_form.invariant_factors),
                "q_values": [str(q) for q in deg6_form.q_values],
            },
        },
        cert.DERIVED, "discriminant forms of both sides",
    ))
    return checks


def criterion_matrix(m: int, a: int, s: int) -> tuple[IntMatrix, bool]:
    """Rank-3 extension Gram [[3,6,m],[6,20,a],[m,a,s]]; rationality parity test."""
    gram = IntMatrix.from_rows([[3, 6, m], [6, 20, a], [m, a, s]])
    return gram, (a % 2 == 1)


def p4_embedding_check() -> list[cert.Check]:
    """Square -14 classes on both the abstract and the Fano-side Grams."""
    checks = []
    mv = Lattice(IntMatrix.from_rows([[6, 3], [3, -2]]))  # pairings of {v, a}
    v, a = (1, 0), (0, 1)
    v2a = tuple(x - 2 * y for x, y in zip(v, a))
    checks.append(cert.check(
        "moduli_square_minus14",
        -14, mv.pair(v2a, v2a),
        cert.STATED, "square of v - 2a in the rank-2 algebraic block",
    ))
    eightfold = Lattice(IntMatrix.from_rows([[2, 0], [0, -8]]))
    g, w = (1, 0), (0, 1)
    cls = tuple(3 * x - 2 * y for x, y in zip(g, w))
    checks.append(cert.check(
        "eightfold_picard_gram",
        [[2, 0], [0, -8]], eightfold.gram,
        cert.STATED, "Picard pairing of the eightfold",
    ))
    checks.append(cert.check(
        "eightfold_square_minus14",
        -14, eightfold.pair(cls, cls),
        cert.STATED, "square of 3g - 2w on the eightfold",
    ))
    checks.append(cert.check(
        "control_square_minus2",
        -2, mv.pair((1, -1), (1, -1)),
        cert.DERIVED, "control: square of v - a",
    ))
    return checks
