"""Finite discriminant groups L*/L with their quadratic forms.

Generators are lifted deterministically from the Smith-form transform of the
Gram matrix, so certificates are reproducible.  q-values carry an explicit
modulus tag: 2 for even source lattices, 1 for odd ones (where only the
pairing is well defined).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import Degenerate, TooLarge
from .exactmat import (
    IntMatrix,
    determinant,
    inverse_unimodular,
    kernel_basis,
    row_hnf_mod,
    smith_normal_form,
)
from .lattices import Lattice


@dataclass(frozen=True)
class FiniteQuadraticForm:
    invariant_factors: tuple[int, ...]          # d1 | d2 | ..., each > 1
    q_values: tuple[Fraction, ...]              # q on generators, mod q_modulus
    pairings: tuple[tuple[Fraction, ...], ...]  # symmetric, mod 1
    q_modulus: int                              # 2 (even lattice) or 1 (odd)

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def q_of(self, element: tuple[int, ...]) -> Fraction:
        """q(sum a_i g_i) = sum a_i^2 q_i + 2 sum_{i<j} a_i a_j b_ij, reduced."""
        k = len(self.invariant_factors)
        val = Fraction(0)
        for i in range(k):
            val += element[i] * element[i] * self.q_values[i]
            for j in range(i + 1, k):
                val += 2 * element[i] * element[j] * self.pairings[i][j]
        return val % self.q_modulus

    def pairing_of(self, x: tuple[int, ...], y: tuple[int, ...]) -> Fraction:
        k = len(self.invariant_factors)
        val = Fraction(0)
        for i in range(k):
            for j in range(k):
                val += x[i] * y[j] * self.pairings[i][j]
        return val % 1

    def elements(self):
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def element_order(self, element: tuple[int, ...]) -> int:
        o = 1
        for a, d in zip(element, self.invariant_factors):
            o_i = d // math.gcd(a % d, d) if a % d else 1
            o = o * o_i // math.gcd(o, o_i)
        return o


def disc_form_with_map(L: Lattice) -> tuple[FiniteQuadraticForm, Callable]:
    """Discriminant form plus a map from rational vectors in L* to classes."""
    n = L.rank
    if determinant(L.gram) == 0:
        raise Degenerate("lattice is degenerate")
    d, u, v = smith_normal_form(L.gram)
    modulus = 2 if L.is_even() else 1
    idx = [i for i in range(n) if d.at(i, i) > 1]
    factors = tuple(d.at(i, i) for i in idx)
    # generator lifts: column i of V divided by the invariant factor d_i
    lifts = [
        tuple(Fraction(v.at(r, i), d.at(i, i)) for r in range(n)) for i in idx
    ]
    gram = L.gram

    def pair_rat(x, y) -> Fraction:
        return sum(
            (x[a] * gram.at(a, b) * y[b] for a in range(n) for b in range(n)),
            Fraction(0),
        )

    q_vals = tuple(pair_rat(g, g) % modulus for g in lifts)
    pairings = tuple(
        tuple(pair_rat(lifts[i], lifts[j]) % 1 for j in range(len(lifts)))
        for i in range(len(lifts))
    )
    form = FiniteQuadraticForm(factors, q_vals, pairings, modulus)

    def class_of(x) -> tuple[int, ...]:
        # x in L*: U (G x) mod d gives coordinates over the generators
        gx = [
            sum((Fraction(x[b]) * gram.at(a, b) for b in range(n)), Fraction(0))
            for a in range(n)
        ]
        if any(t.denominator != 1 for t in gx):
            raise Degenerate("vector does not pair integrally with the lattice")
        gxi = [int(t) for t in gx]
        ux = [sum(u.at(a, b) * gxi[b] for b in range(n)) for a in range(n)]
        return tuple(ux[i] % d.at(i, i) for i in idx)

    return form, class_of


def discriminant_form(L: Lattice) -> FiniteQuadraticForm:
    return disc_form_with_map(L)[0]


def isotropic_elements(F: FiniteQuadraticForm, limit: int = 10**6) -> list[tuple[int, ...]]:
    """All classes with q = 0 modulo the form's q-modulus."""
    if F.order > limit:
        raise TooLarge(f"group order {F.order} exceeds {limit}")
    return [e for e in F.elements() if F.q_of(e) == 0]


def fqf_isomorphic(
    F1: FiniteQuadraticForm, F2: FiniteQuadraticForm, limit: int = 10**4
) -> bool:
    """Brute-force isomorphism test respecting q-values and pairings."""
    if F1.order > limit or F2.order > limit:
        raise TooLarge("group order exceeds the brute-force bound")
    if (
        F1.order != F2.order
        or F1.invariant_factors != F2.invariant_factors
        or F1.q_modulus != F2.q_modulus
    ):
        return False
    profile1 = sorted((F1.element_order(e), F1.q_of(e)) for e in F1.elements())
    profile2 = sorted((F2.element_order(e), F2.q_of(e)) for e in F2.elements())
    if profile1 != profile2:
        return False
    k = len(F1.invariant_factors)
    if k == 0:
        return True
    by_order_q: dict[tuple[int, Fraction], list] = {}
    for e in F2.elements():
        by_order_q.setdefault((F2.element_order(e), F2.q_of(e)), []).append(e)
    gens_meta = [
        (F1.invariant_factors[i], F1.q_values[i] % F1.q_modulus) for i in range(k)
    ]
    factors2 = F2.invariant_factors

    def generated_size(images: list) -> int:
        zero = (0,) * k
        seen = {zero}
        stack = [zero]
        while stack:
            cur = stack.pop()
            for img in images:
                nxt = tuple((c + i) % dd for c, i, dd in zip(cur, img, factors2))
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen)

    def search(i: int, images: list) -> bool:
        if i == k:
            return generated_size(images) == F2.order
        d_i, q_i = gens_meta[i]
        for cand in by_order_q.get((d_i, q_i), []):
            if all(
                F2.pairing_of(images[j], cand) == F1.pairings[j][i] % 1
                for j in range(i)
            ):
                images.append(cand)
                if search(i + 1, images):
                    return True
                images.pop()
        return False

    return search(0, [])


def _solve_square_int(S: IntMatrix, row: list[int]) -> list[int]:
    """Integer coordinates of ``row`` over the basis rows of square S."""
    k = S.rows
    # solve coords * S = row, i.e. S^t * coords^t = row^t
    a = [[Fraction(S.at(j, i)) for j in range(k)] + [Fraction(row[i])] for i in range(k)]
    piv = 0
    for col in range(k):
        sel = next((i for i in range(piv, k) if a[i][col] != 0), None)
        if sel is None:
            continue
        a[piv], a[sel] = a[sel], a[piv]
        f = a[piv][col]
        a[piv] = [x / f for x in a[piv]]
        for i in range(k):
            if i != piv and a[i][col] != 0:
                g = a[i][col]
                a[i] = [x - g * y for x, y in zip(a[i], a[piv])]
        piv += 1
    if piv != k:
        raise Degenerate("singular coordinate system")
    coords = [a[i][k] for i in range(k)]
    if any(c.denominator != 1 for c in coords):
        raise Degenerate("relation does not lie in the sublattice")
    return [int(c) for c in coords]


def glue_subquotient(F: FiniteQuadraticForm, element: tuple[int, ...]) -> FiniteQuadraticForm:
    """Subquotient e^perp / <e> for an isotropic class e.

    This is the overlattice dictionary: the discriminant form of the
    overlattice defined by a glue vector equals this subquotient applied to
    the glue's class.
    """
    if F.q_of(element) != 0:
        raise Degenerate("element is not isotropic")
    k = len(F.invariant_factors)
    basis_vecs = [tuple(1 if a == i else 0 for a in range(k)) for i in range(k)]
    t = [F.pairing_of(basis_vecs[i], element) for i in range(k)]
    denom = 1
    for val in t:
        denom = denom * val.denominator // math.gcd(denom, val.denominator)
    trow = [int(val * denom) for val in t]
    # solution lattice of sum a_i trow_i = 0 (mod denom) inside Z^k
    kern = kernel_basis(IntMatrix.from_rows([trow + [denom]]))
    sol_rows = [list(kern.row(i))[:-1] for i in range(kern.rows)]
    S = row_hnf_mod(IntMatrix.from_rows(sol_rows), denom)
    if S.rows != k:
        raise Degenerate("pairing-kernel sublattice is degenerate")
    rel_rows = [
        [F.invariant_factors[i] if j == i else 0 for j in range(k)] for i in range(k)
    ]
    rel_rows.append([int(x) for x in element])
    rel_in_s = [_solve_square_int(S, row) for row in rel_rows]
    relt = IntMatrix.from_rows(rel_in_s).transpose()  # k x (k+1)
    dmat, u, _ = smith_normal_form(relt)
    uinv = inverse_unimodular(u)
    new_factors = []
    gen_classes = []
    for i in range(k):
        di = dmat.at(i, i)
        if di > 1:
            new_factors.append(di)
            gvec = [uinv.at(r, i) for r in range(k)]
            amb = tuple(
                sum(gvec[j] * S.at(j, c) for j in range(k)) for c in range(k)
            )
            gen_classes.append(amb)
    q_vals = tuple(F.q_of(g) for g in gen_classes)
    pairings = tuple(
        tuple(F.pairing_of(gen_classes[i], gen_classes[j]) for j in range(len(gen_classes)))
        for i in range(len(gen_classes))
    )
    return FiniteQuadraticForm(tuple(new_factors), q_vals, pairings, F.q_modulus)
