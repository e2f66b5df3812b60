"""Sparse polynomials over F_p and graded-lex monomial bases.

A Poly is a dict {exponent tuple: coefficient}; the monomial order used for
interpolation matrices is graded lexicographic on the fixed variable order
x0 > x1 > ... (exponent tuples compared lexicographically, descending).
"""

from __future__ import annotations

from functools import lru_cache

Poly = dict[tuple[int, ...], int]


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, graded-lex order."""

    def gen(remaining_vars: int, remaining_deg: int):
        if remaining_vars == 1:
            yield (remaining_deg,)
            return
        for e in range(remaining_deg, -1, -1):
            for rest in gen(remaining_vars - 1, remaining_deg - e):
                yield (e,) + rest

    return tuple(gen(nvars, degree))


def monomial_order_tag(nvars: int) -> str:
    return "grlex(" + ">".join(f"x{i}" for i in range(nvars)) + ")"


def mono_value(point, expo, p: int) -> int:
    v = 1
    for x, e in zip(point, expo):
        if e:
            v = v * pow(x, e, p) % p
    return v


def poly_eval(poly: Poly, point, p: int) -> int:
    total = 0
    for expo, c in poly.items():
        total += c * mono_value(point, expo, p)
    return total % p


def poly_diff(poly: Poly, var: int) -> Poly:
    out: Poly = {}
    for expo, c in poly.items():
        e = expo[var]
        if e == 0:
            continue
        new = list(expo)
        new[var] = e - 1
        key = tuple(new)
        out[key] = out.get(key, 0) + c * e
    return {k: v for k, v in out.items() if v}


def poly_lincomb(coeffs, polys, p: int) -> Poly:
    out: Poly = {}
    for c, poly in zip(coeffs, polys):
        if c % p == 0:
            continue
        for expo, a in poly.items():
            out[expo] = (out.get(expo, 0) + c * a) % p
    return {k: v for k, v in out.items() if v}


def dense_from_poly(poly: Poly, monos) -> tuple[int, ...]:
    return tuple(poly.get(m, 0) for m in monos)


def poly_from_dense(coeffs, monos) -> Poly:
    return {m: c for m, c in zip(monos, coeffs) if c}


def dense_eval(coeffs, monos, point, p: int) -> int:
    total = 0
    for c, m in zip(coeffs, monos):
        if c:
            total += c * mono_value(point, m, p)
    return total % p


def eval_monomials(point, monos, p: int) -> list[int]:
    """Values of every monomial in the list at the point."""
    return [mono_value(point, m, p) for m in monos]
