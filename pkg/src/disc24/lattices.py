"""Integral lattices with bilinear forms.

Conventions
-----------
* A ``Lattice`` is Z^rank with the symmetric Gram matrix attached.
* ``verify_isometry(L1, L2, T)`` treats the *columns* of T as the images of
  L2's basis vectors written in L1 coordinates, so it accepts iff
  ``T^t G1 T = G2`` with ``|det T| = 1``.
* The cubic-side to Fano-side sign flip on primitive classes is the single
  constant ``PRIMITIVE_SIGN_FLIP`` below; Fano-side Grams are stored with it
  applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NotDefinite,
    NotEven,
    NotIntegralPairing,
    UnknownName,
)
from .exactmat import (
    IntMatrix,
    block_diag,
    determinant,
    inverse_unimodular,
    kernel_basis,
    rank,
    row_hnf_mod,
    signature_of_symmetric,
    smith_normal_form,
)

# Sign applied to primitive-part self-intersections when moving from the
# cubic fourfold side to the Fano-of-lines side.
PRIMITIVE_SIGN_FLIP = -1


@dataclass(frozen=True)
class Lattice:
    """Free Z-module with an integral symmetric bilinear form."""

    gram: IntMatrix

    def __post_init__(self) -> None:
        if not self.gram.is_symmetric():
            raise DimensionMismatch("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return self.gram.rows

    def is_even(self) -> bool:
        return all(self.gram.at(i, i) % 2 == 0 for i in range(self.rank))

    def pair(self, x, y) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionMismatch("vector length != rank")
        return sum(x[i] * self.gram.at(i, j) * y[j] for i in range(self.rank) for j in range(self.rank))


def standard_lattice(name: str, d: int | None = None) -> Lattice:
    """Named building blocks: U, E8neg, A2like, rank1(d)."""
    if name == "U":
        return Lattice(IntMatrix.from_rows([[0, 1], [1, 0]]))
    if name == "A2like":
        return Lattice(IntMatrix.from_rows([[-2, -1], [-1, -2]]))
    if name == "E8neg":
        # negated E8 Cartan matrix (Bourbaki node ordering), determinant 1
        adj = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        g = [[0] * 8 for _ in range(8)]
        for i in range(8):
            g[i][i] = -2
        for a, b in adj:
            g[a - 1][b - 1] = g[b - 1][a - 1] = 1
        return Lattice(IntMatrix.from_rows(g))
    if name == "rank1":
        if d is None or d == 0:
            raise UnknownName("rank1 needs a nonzero integer")
        return Lattice(IntMatrix.from_rows([[int(d)]]))
    raise UnknownName(f"unknown lattice name: {name!r}")


def direct_sum(*lattices: Lattice) -> Lattice:
    return Lattice(block_diag(*(latt.gram for latt in lattices)))


def gram_of(L: Lattice, vectors) -> IntMatrix:
    """Gram matrix of the given vectors (ambient coordinates)."""
    vecs = [list(v) for v in vectors]
    if any(len(v) != L.rank for v in vecs):
        raise DimensionMismatch("vector length != rank")
    n = len(vecs)
    return IntMatrix.from_rows(
        [[L.pair(vecs[i], vecs[j]) for j in range(n)] for i in range(n)]
    )


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    disc: int
    det_sign: int  # -1, 0 or +1
    signature: tuple[int, int, int]
    is_even: bool


def lattice_invariants(L: Lattice) -> LatticeInvariants:
    det = determinant(L.gram)
    sign = 0 if det == 0 else (1 if det > 0 else -1)
    return LatticeInvariants(
        rank=L.rank,
        disc=abs(det),
        det_sign=sign,
        signature=signature_of_symmetric(L.gram),
        is_even=L.is_even(),
    )


@dataclass(frozen=True)
class SublatticeEmbedding:
    """Sublattice given by basis rows in ambient coordinates."""

    ambient: Lattice
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient.rank:
            raise DimensionMismatch("basis width != ambient rank")
        if self.basis.rows and rank(self.basis) != self.basis.rows:
            raise DimensionMismatch("basis rows are dependent")

    @property
    def rank(self) -> int:
        return self.basis.rows

    def induced_gram(self) -> IntMatrix:
        return self.basis.mul(self.ambient.gram).mul(self.basis.transpose())

    def induced_lattice(self) -> Lattice:
        return Lattice(self.induced_gram())


def orthogonal_complement(emb: SublatticeEmbedding) -> SublatticeEmbedding:
    """Saturated sublattice pairing to zero with every basis row."""
    pairing_rows = emb.basis.mul(emb.ambient.gram)
    comp = kernel_basis(pairing_rows)
    return SublatticeEmbedding(emb.ambient, comp)


def saturate(emb: SublatticeEmbedding) -> tuple[SublatticeEmbedding, int]:
    """Primitive closure inside the ambient lattice, with its index."""
    d, _, v = smith_normal_form(emb.basis)
    k = emb.rank
    index = 1
    for i in range(k):
        index *= d.at(i, i)
    vinv = inverse_unimodular(v)
    closure = IntMatrix.from_rows([list(vinv.row(i)) for i in range(k)])
    return SublatticeEmbedding(emb.ambient, closure), index


@dataclass(frozen=True)
class GlueVector:
    """Rational vector numerator/denominator extending a lattice."""

    numerator: tuple[int, ...]
    denominator: int

    def reduced(self) -> "GlueVector":
        g = math.gcd(self.denominator, *(abs(x) for x in self.numerator)) or 1
        return GlueVector(tuple(x // g for x in self.numerator), self.denominator // g)


def overlattice_from_glue(L: Lattice, glue: GlueVector) -> tuple[Lattice, int]:
    """Even overlattice L + Z*glue, with the extension index.

    The new basis is the Hermite basis of the subgroup of (1/m)Z^n generated
    by L and the glue vector; the basis is deterministic, so callers may rely
    on the resulting Gram block structure.
    """
    g = glue.reduced()
    m = g.denominator
    if m <= 1:
        raise NotIntegralPairing("glue vector is integral; not a proper glue")
    if len(g.numerator) != L.rank:
        raise DimensionMismatch("glue length != rank")
    w = list(g.numerator)
    gw = [sum(L.gram.at(i, j) * w[j] for j in range(L.rank)) for i in range(L.rank)]
    if any(x % m != 0 for x in gw):
        raise NotIntegralPairing("glue does not pair integrally with the lattice")
    self_pair = Fraction(sum(w[i] * gw[i] for i in range(L.rank)), m * m)
    if self_pair.denominator != 1 or self_pair.numerator % 2 != 0:
        raise NotEven("glue self-pairing is not an even integer")
    # generators in units of 1/m: m*e_i and w
    gens = [[m if i == j else 0 for j in range(L.rank)] for i in range(L.rank)]
    gens.append(w)
    basis = row_hnf_mod(IntMatrix.from_rows(gens), m)
    if basis.rows != L.rank:
        raise DimensionMismatch("overlattice basis degenerate")
    index = m ** L.rank // abs(determinant(basis))
    scaled = basis.mul(L.gram).mul(basis.transpose())
    entries = []
    for x in scaled.entries:
        q, r = divmod(x, m * m)
        if r:
            raise NotIntegralPairing("overlattice Gram is not integral")
        entries.append(q)
    new_gram = IntMatrix(L.rank, L.rank, tuple(entries))
    return Lattice(new_gram), index


def verify_isometry(L1: Lattice, L2: Lattice, T: IntMatrix) -> bool:
    """True iff T^t G1 T = G2 and |det T| = 1 (columns: L2 basis in L1 coords)."""
    if not T.is_square() or T.rows != L1.rank or L1.rank != L2.rank:
        raise DimensionMismatch("isometry matrix has wrong shape")
    if abs(determinant(T)) != 1:
        return False
    return T.transpose().mul(L1.gram).mul(T).entries == L2.gram.entries


def _ldl(G: IntMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    # positive definite: G = C^t diag(d) C with C unit upper triangular
    n = G.rows
    a = [[Fraction(G.at(i, j)) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    c = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        d.append(a[k][k])
        c[k][k] = Fraction(1)
        for j in range(k + 1, n):
            c[k][j] = a[k][j] / a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] -= a[i][k] * a[k][j] / a[k][k]
    return d, c


def short_vectors(G: IntMatrix, norm: int) -> list[tuple[int, ...]]:
    """All x with x^t G x = norm, G positive definite; canonical (lex) order."""
    n = G.rows
    if norm < 0:
        return []
    if norm == 0:
        return []
    d, c = _ldl(G)
    results: list[tuple[int, ...]] = []
    target = Fraction(norm)

    def rec(i: int, rem: Fraction, suffix: tuple[int, ...]) -> None:
        if i < 0:
            if rem == 0:
                results.append(suffix)
            return
        center = sum((c[i][j] * suffix[j - i - 1] for j in range(i + 1, n)), Fraction(0))
        # float window with slack, exact acceptance test per candidate
        radius = math.sqrt(float(rem / d[i])) + 2.0
        lo = math.ceil(float(-center) - radius)
        hi = math.floor(float(-center) + radius)
        for x in range(lo, hi + 1):
            val = d[i] * (x + center) ** 2
            if val <= rem:
                rec(i - 1, rem - val, (x,) + suffix)

    rec(n - 1, target, ())
    return sorted(results)


def find_isometry_definite(L1: Lattice, L2: Lattice) -> IntMatrix | None:
    """Backtracking isometry search for definite lattices of rank <= 8.

    Candidate image vectors come from bounded short-vector enumeration;
    the first solution in canonical DFS order is returned.
    """
    s1 = signature_of_symmetric(L1.gram)
    s2 = signature_of_symmetric(L2.gram)
    for s in (s1, s2):
        if s[2] != 0 or (s[0] != 0 and s[1] != 0):
            raise NotDefinite("both lattices must be definite")
    if L1.rank > 8 or L2.rank > 8:
        raise NotDefinite("search restricted to rank <= 8")
    if L1.rank != L2.rank or s1 != s2:
        return None
    if abs(determinant(L1.gram)) != abs(determinant(L2.gram)):
        return None
    sign = 1 if s1[0] else -1
    W1 = L1.gram if sign == 1 else L1.gram.neg()
    W2 = L2.gram if sign == 1 else L2.gram.neg()
    n = L1.rank
    cache: dict[int, list[tuple[int, ...]]] = {}

    def candidates(norm: int) -> list[tuple[int, ...]]:
        if norm not in cache:
            cache[norm] = short_vectors(W1, norm)
        return cache[norm]

    chosen: list[tuple[int, ...]] = []

    def pair(x, y) -> int:
        return sum(x[i] * W1.at(i, j) * y[j] for i in range(n) for j in range(n))

    def dfs(j: int) -> bool:
        if j == n:
            return True
        for v in candidates(W2.at(j, j)):
            if all(pair(chosen[i], v) == W2.at(i, j) for i in range(j)):
                chosen.append(v)
                if dfs(j + 1):
                    return True
                chosen.pop()
        return False

    if not dfs(0):
        return None
    T = IntMatrix.from_rows([list(r) for r in chosen]).transpose()
    assert verify_isometry(L1, L2, T)
    return T
