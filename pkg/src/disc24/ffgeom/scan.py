"""Brute-force point scans of projective space over a small prime field.

The enumeration walks canonical representatives (first nonzero coordinate 1)
of P^5 in levels; levels with >= 3 free coordinates are evaluated with a
vectorized int64 kernel (values stay far below 2^63, so the arithmetic is
exact), the small tail levels in plain Python.  Chunks are independent and
may be processed in any order by forked workers; results are merged as
sorted sets and are therefore identical at every worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

import numpy as np

from ..errors import EnumerationTooLarge
from .ideals import IdealPiece, ideal_piece
from .modp import rank_mod_p
from .parametrize import PrimeFieldSpec, ProjPointSet
from .polys import Poly, dense_eval, eval_monomials, monomials, poly_diff, poly_from_dense

NVARS = 6
MAX_REPS = 10**9
MAX_SCAN_PRIME = 61


def reps_count(p: int) -> int:
    return (p**NVARS - 1) // (p - 1)


def _check_scan_size(p: int) -> None:
    if p > MAX_SCAN_PRIME or reps_count(p) > MAX_REPS:
        raise EnumerationTooLarge(f"P^5(F_{p}) has {reps_count(p)} points")


class _GridKernel:
    """Shared vector tables for one scan: coordinate grids and their power
    products for every exponent pattern of total degree <= 3."""

    def __init__(self, p: int):
        self.p = p
        size = p**3
        a = np.arange(size, dtype=np.int64)
        g2 = a % p
        g1 = (a // p) % p
        g0 = a // (p * p)
        self.grids = (g0, g1, g2)
        self.pows: dict[tuple[int, int, int], np.ndarray] = {}
        for expo in monomials(3, 0) + monomials(3, 1) + monomials(3, 2) + monomials(3, 3):
            arr = np.ones(size, dtype=np.int64)
            for g, e in zip(self.grids, expo):
                for _ in range(e):
                    arr = arr * g
            self.pows[expo] = arr % p

    def eval_terms(self, terms: dict[tuple[int, int, int], int]) -> np.ndarray:
        total = np.zeros(self.p**3, dtype=np.int64)
        for expo, c in terms.items():
            if c:
                total += c * self.pows[expo]
        return total % self.p


def _split_terms(form: Poly, fixed: tuple, vec_pos: tuple[int, int, int], p: int):
    """Partial-evaluate a form at the fixed coordinates, leaving the three
    vector positions symbolic: {vector exponent pattern: scalar coefficient}."""
    out: dict[tuple[int, int, int], int] = {}
    for expo, coeff in form.items():
        scal = coeff
        vexp = [0, 0, 0]
        dead = False
        for pos in range(NVARS):
            e = expo[pos]
            if not e:
                continue
            if pos in vec_pos:
                vexp[vec_pos.index(pos)] += e
            else:
                base = fixed[pos]
                if base == 0:
                    dead = True
                    break
                scal = scal * pow(base, e, p) % p
        if dead or scal % p == 0:
            continue
        key = tuple(vexp)
        out[key] = (out.get(key, 0) + scal) % p
    return {k: v for k, v in out.items() if v}


def _level_chunks(p: int):
    """Chunk descriptors: (fixed 6-tuple with None at vector slots, vec_pos).

    Level k fixes coordinates 0..k-1 at 0, coordinate k at 1; the last three
    free coordinates are vectorized, any remaining free ones are looped."""
    import itertools

    for k in range(NVARS):
        m = NVARS - 1 - k
        if m < 3:
            continue
        loop_pos = list(range(k + 1, k + 1 + m - 3))
        vec_pos = tuple(range(NVARS - 3, NVARS))
        for values in itertools.product(range(p), repeat=len(loop_pos)):
            fixed = [0] * NVARS
            fixed[k] = 1
            for pos, val in zip(loop_pos, values):
                fixed[pos] = val
            for pos in vec_pos:
                fixed[pos] = None
            yield tuple(fixed), vec_pos


def _tail_points(p: int):
    """Canonical representatives of the levels with < 3 free coordinates."""
    for k in range(NVARS):
        m = NVARS - 1 - k
        if m >= 3:
            continue
        import itertools

        for values in itertools.product(range(p), repeat=m):
            pt = [0] * NVARS
            pt[k] = 1
            for i, val in enumerate(values):
                pt[k + 1 + i] = val
            yield tuple(pt)


def _chunk_common_zeros(kernel: _GridKernel, forms_sparse, fixed, vec_pos):
    """Points of one chunk where every form vanishes, as full tuples."""
    p = kernel.p
    mask = None
    for form in forms_sparse:
        terms = _split_terms(form, fixed, vec_pos, p)
        vals = kernel.eval_terms(terms)
        m = vals == 0
        mask = m if mask is None else (mask & m)
        if not mask.any():
            return []
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return []
    out = []
    cols = [kernel.grids[i][idx] for i in range(3)]
    for row in range(idx.size):
        pt = list(fixed)
        for slot, pos in enumerate(vec_pos):
            pt[pos] = int(cols[slot][row])
        out.append(tuple(pt))
    return out


# fork-based workers share the kernel tables copy-on-write; each task is one
# chunk descriptor, and the sorted-set merge makes every worker count agree
_WORKER: dict = {}


def _worker_init(p, forms_sparse):
    _WORKER["kernel"] = _GridKernel(p)
    _WORKER["forms"] = forms_sparse


def _worker_job(chunk):
    fixed, vec_pos = chunk
    return _chunk_common_zeros(_WORKER["kernel"], _WORKER["forms"], fixed, vec_pos)


def common_zeros_scan(forms_dense, monos_list, spec: PrimeFieldSpec, threads: int = 1):
    """All canonical P^5 points where every supplied form vanishes."""
    p = spec.p
    _check_scan_size(p)
    forms_sparse = [poly_from_dense(c, m) for c, m in zip(forms_dense, monos_list)]
    chunks = list(_level_chunks(p))
    found: list[tuple[int, ...]] = []
    parallel = threads > 1 and "fork" in multiprocessing.get_all_start_methods()
    if parallel:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(
            processes=threads, initializer=_worker_init, initargs=(p, forms_sparse)
        ) as pool:
            for part in pool.imap_unordered(_worker_job, chunks, chunksize=16):
                found.extend(part)
    else:
        kernel = _GridKernel(p)
        for chunk in chunks:
            found.extend(_chunk_common_zeros(kernel, forms_sparse, chunk[0], chunk[1]))
    for pt in _tail_points(p):
        if all(
            dense_eval(c, m, pt, p) == 0 for c, m in zip(forms_dense, monos_list)
        ):
            found.append(pt)
    return sorted(set(found))


@dataclass
class ScanResult:
    w_points: ProjPointSet
    wprime_points: ProjPointSet
    conductor_points: tuple[tuple[int, ...], ...]
    wprime_quadrics: IdealPiece
    wprime_cubics: IdealPiece
    total_intersection: int

    def __iter__(self):
        return iter((self.w_points, self.wprime_points))


def residual_scan(
    pencil,
    cubic_form,
    w_quadrics: IdealPiece,
    w_cubics: IdealPiece,
    spec: PrimeFieldSpec,
    threads: int = 1,
) -> ScanResult:
    """Classify the rational points of the pencil-cut cubic section.

    First pass: raw partition by membership in the interpolated surface ideal
    (all quadrics and all cubics vanish -> surface side).  Second pass: the
    residual ideal is interpolated from the raw residual points, and raw
    surface points where it vanishes (the conductor) are added to the
    residual set, which therefore contains the node.
    """
    p = spec.p
    q1, q2 = pencil
    monos2 = monomials(NVARS, 2)
    monos3 = monomials(NVARS, 3)
    kept = common_zeros_scan(
        [q1, q2, cubic_form], [monos2, monos2, monos3], spec, threads
    )
    w_raw: list[tuple[int, ...]] = []
    other: list[tuple[int, ...]] = []
    for pt in kept:
        vals2 = eval_monomials(pt, monos2, p)
        on_w = all(
            sum(c * v for c, v in zip(row, vals2) if c) % p == 0
            for row in w_quadrics.basis
        )
        if on_w:
            vals3 = eval_monomials(pt, monos3, p)
            on_w = all(
                sum(c * v for c, v in zip(row, vals3) if c) % p == 0
                for row in w_cubics.basis
            )
        (w_raw if on_w else other).append(pt)
    wprime_raw = ProjPointSet(p, 5, tuple(sorted(other)))
    wprime_quadrics = ideal_piece(wprime_raw, 2)
    wprime_cubics = ideal_piece(wprime_raw, 3)
    conductor = []
    for pt in w_raw:
        vals2 = eval_monomials(pt, monos2, p)
        ok = all(
            sum(c * v for c, v in zip(row, vals2) if c) % p == 0
            for row in wprime_quadrics.basis
        )
        if ok:
            vals3 = eval_monomials(pt, monos3, p)
            ok = all(
                sum(c * v for c, v in zip(row, vals3) if c) % p == 0
                for row in wprime_cubics.basis
            )
        if ok:
            conductor.append(pt)
    wprime_all = sorted(set(other) | set(conductor))
    return ScanResult(
        w_points=ProjPointSet(p, 5, tuple(sorted(w_raw))),
        wprime_points=ProjPointSet(p, 5, tuple(wprime_all)),
        conductor_points=tuple(sorted(conductor)),
        wprime_quadrics=wprime_quadrics,
        wprime_cubics=wprime_cubics,
        total_intersection=len(kept),
    )


def singular_scan(
    forms,
    spec: PrimeFieldSpec,
    points=None,
    expected_codim: int = 1,
    threads: int = 1,
):
    """Points where the Jacobian of the forms drops below the expected
    codimension.  With no point set, a single hypersurface form is scanned
    over all of P^5; with a point set, any number of forms is allowed.
    """
    p = spec.p
    jacobians = [[poly_diff(f, var) for var in range(NVARS)] for f in forms]
    if points is None:
        if len(forms) != 1 or expected_codim != 1:
            raise EnumerationTooLarge(
                "full enumeration supports a single hypersurface form"
            )
        monos_f = [sorted(forms[0]) or [(0,) * NVARS]]
        dense = [[forms[0].get(m, 0) for m in monos_f[0]]]
        zero_locus = common_zeros_scan(dense, monos_f, spec, threads)
        singular = []
        for pt in zero_locus:
            grads = [
                sum(c * _mono(pt, e, p) for e, c in g.items()) % p
                for g in jacobians[0]
            ]
            if not any(grads):
                singular.append(pt)
        return singular
    singular = []
    for pt in points.points if isinstance(points, ProjPointSet) else points:
        rows = [
            [sum(c * _mono(pt, e, p) for e, c in g.items()) % p for g in row]
            for row in jacobians
        ]
        if rank_mod_p(rows, p) < expected_codim:
            singular.append(tuple(pt))
    return sorted(set(singular))


def _mono(pt, expo, p):
    v = 1
    for x, e in zip(pt, expo):
        if e:
            v = v * pow(x, e, p) % p
    return v
