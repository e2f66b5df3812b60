"""Exact integer and rational matrix kernels.

Everything here runs on Python's arbitrary-precision integers or on
``fractions.Fraction``; no floating point ever enters.  These kernels back the
lattice, discriminant-form and Mukai computations, so correctness beats speed:
matrices stay small (rank <= 24) but intermediate entries may grow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NonSymmetric


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch("entry count does not match shape")

    @staticmethod
    def from_rows(rows: list[list[int]] | tuple) -> "IntMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged rows")
        return IntMatrix(n, m, tuple(int(x) for r in rows for x in r))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        return self.mul(other)

    def neg(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.at(i, j) == self.at(j, i) for i in range(self.rows) for j in range(i)
        )

    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class RatMatrix:
    """Immutable matrix of exact rationals (Fraction keeps lowest terms)."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    @staticmethod
    def from_rows(rows) -> "RatMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged rows")
        return RatMatrix(n, m, tuple(Fraction(x) for r in rows for x in r))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def to_lists(self) -> list[list[Fraction]]:
        return [[self.at(i, j) for j in range(self.cols)] for i in range(self.rows)]


def block_diag(*mats: IntMatrix) -> IntMatrix:
    n = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    out = [[0] * c for _ in range(n)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out[r0 + i][c0 + j] = m.at(i, j)
        r0 += m.rows
        c0 += m.cols
    return IntMatrix.from_rows(out)


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square():
        raise DimensionMismatch("determinant needs a square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(M: IntMatrix) -> int:
    a = [[Fraction(x) for x in M.row(i)] for i in range(M.rows)]
    r = 0
    for col in range(M.cols):
        piv = next((i for i in range(r, M.rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col]
        for i in range(M.rows):
            if i != r and a[i][col] != 0:
                f = a[i][col] / inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == M.rows:
            break
    return r


def inverse_unimodular(M: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with det = +-1 (the result is integral)."""
    if not M.is_square():
        raise DimensionMismatch("inverse needs a square matrix")
    n = M.rows
    a = [[Fraction(x) for x in M.row(i)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise DimensionMismatch("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    out = []
    for i in range(n):
        for j in range(n):
            v = a[i][n + j]
            if v.denominator != 1:
                raise DimensionMismatch("matrix is not unimodular")
            out.append(v.numerator)
    return IntMatrix(n, n, tuple(out))


def _swap_rows(a: list[list[int]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: list[list[int]], i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with U*M*V = D diagonal, d1 | d2 | ..., di >= 0.

    U and V are unimodular.  Pivots are always the smallest nonzero entry of
    the remaining submatrix, which keeps intermediate growth in check.
    """
    r, c = M.rows, M.cols
    a = M.to_lists()
    u = IntMatrix.identity(r).to_lists()
    v = IntMatrix.identity(c).to_lists()
    t = 0
    while t < min(r, c):
        # locate the smallest nonzero entry of the submatrix
        piv = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        _swap_rows(a, t, piv[0])
        _swap_rows(u, t, piv[0])
        _swap_cols(a, t, piv[1])
        _swap_cols(v, t, piv[1])
        while True:
            # clear column t by row operations
            again = False
            for i in range(t + 1, r):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if a[i][t] != 0:  # remainder became the smaller pivot
                    _swap_rows(a, t, i)
                    _swap_rows(u, t, i)
                    again = True
            if again:
                continue
            # clear row t by column operations
            for j in range(t + 1, c):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                for row in a:
                    row[j] -= q * row[t]
                for vrow in v:
                    vrow[j] -= q * vrow[t]
                if a[t][j] != 0:
                    _swap_cols(a, t, j)
                    _swap_cols(v, t, j)
                    again = True
                    break
            if again:
                continue
            if any(a[i][t] != 0 for i in range(t + 1, r)):
                continue
            # enforce divisibility of the remaining block by the pivot
            witness = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t] != 0:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[witness])]
            u[t] = [x + y for x, y in zip(u[t], u[witness])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return (
        IntMatrix.from_rows(a),
        IntMatrix.from_rows(u),
        IntMatrix.from_rows(v),
    )


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Basis of the saturated integer kernel {x : M x = 0}, rows = vectors.

    Returned rows extend to a basis of Z^cols (they come from columns of the
    unimodular V of the Smith form), so the kernel is primitive by
    construction.  A zero kernel yields a 0 x cols matrix.
    """
    d, _, v = smith_normal_form(M)
    nonzero = sum(1 for i in range(min(M.rows, M.cols)) if d.at(i, i) != 0)
    rows = []
    for j in range(nonzero, M.cols):
        rows.append([v.at(i, j) for i in range(M.cols)])
    if not rows:
        return IntMatrix.zero(0, M.cols)
    return IntMatrix.from_rows(rows)


def signature_of_symmetric(G: IntMatrix) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) via exact rational congruence diagonalization.

    Zero pivots with a nonzero column use the hyperbolic trick (add the
    partner row/column); fully zero columns count toward the radical.
    """
    if not G.is_symmetric():
        raise NonSymmetric("matrix is not symmetric")
    n = G.rows
    a = [[Fraction(G.at(i, j)) for j in range(n)] for i in range(n)]
    n_plus = n_minus = n_zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                partner = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if partner is None:
                    n_zero += 1
                    continue
                a[k] = [x + y for x, y in zip(a[k], a[partner])]
                for row in a:
                    row[k] = row[k] + row[partner]
        p = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / p
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        for j in range(k + 1, n):
            if a[k][j] == 0:
                continue
            f = a[k][j] / p
            for row in a:
                row[j] = row[j] - f * row[k]
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1
    return (n_plus, n_minus, n_zero)


def row_hnf(M: IntMatrix) -> IntMatrix:
    """Hermite-style canonical basis of the row lattice of M.

    Rows of the result are a basis (positive pivots, entries above each pivot
    reduced into [0, pivot)); zero rows are dropped.  Deterministic for a
    given input.  Plain integer arithmetic: fine for small inputs, but prefer
    :func:`row_hnf_mod` whenever the lattice contains a known D * Z^n, since
    unreduced HNF entries can blow up exponentially.
    """
    a = M.to_lists()
    ncols = M.cols
    nrows = len(a)
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][col] != 0 and (piv is None or abs(a[i][col]) < abs(a[piv][col])):
                piv = i
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        # gcd-reduce the column below the pivot
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, nrows):
                if a[i][col] == 0:
                    continue
                q = a[i][col] // a[r][col]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                if a[i][col] != 0:
                    a[r], a[i] = a[i], a[r]
                    changed = True
        if a[r][col] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][col] // a[r][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    rows = [row for row in a[:r]]
    if not rows:
        return IntMatrix.zero(0, ncols)
    return IntMatrix.from_rows(rows)


def row_hnf_mod(M: IntMatrix, modulus: int) -> IntMatrix:
    """HNF basis of the lattice spanned by the rows of M together with D*Z^n.

    All arithmetic is reduced mod D (Domich-style), so entries stay bounded.
    The result is the full-rank canonical Hermite basis: positive pivots on a
    staircase, entries above each pivot reduced into [0, pivot).
    """
    import math as _math

    n = M.cols
    D = modulus
    if D <= 0:
        raise DimensionMismatch("modulus must be positive")
    if D == 1:
        return IntMatrix.identity(n)
    rows = [[x % D for x in M.row(i)] for i in range(M.rows)]
    rows = [r for r in rows if any(r)]
    result: list[list[int]] = []
    for col in range(n):
        # Euclid among working rows on this column; entries stay in [0, D)
        while True:
            nz = sorted(
                (i for i, r in enumerate(rows) if r[col] != 0),
                key=lambda i: rows[i][col],
            )
            if len(nz) <= 1:
                break
            i0, i1 = nz[0], nz[1]
            q = rows[i1][col] // rows[i0][col]
            rows[i1] = [(x - q * y) % D for x, y in zip(rows[i1], rows[i0])]
        nz = [i for i, r in enumerate(rows) if r[col] != 0]
        if nz:
            i0 = nz[0]
            g0 = rows[i0][col]
            p = _math.gcd(g0, D)
            if p == g0:
                piv = list(rows[i0])
            else:
                # x * (g0/p) = 1 mod D/p gives a lattice row with pivot exactly p
                x = pow(g0 // p, -1, D // p)
                piv = [(x * v) % D for v in rows[i0]]
                piv[col] = p
            q = g0 // p
            rows[i0] = [(a - q * b) % D for a, b in zip(rows[i0], piv)]
            if not any(rows[i0]):
                rows.pop(i0)
        else:
            p = D
            piv = [D if j == col else 0 for j in range(n)]
        if p != D:
            # (D/p) * piv lies over D * e_col, so its tail stays in the
            # lattice with a zero entry at this column; without it the
            # remaining columns would see too small a lattice
            extra = [((D // p) * v) % D for v in piv]
            if any(extra):
                rows.append(extra)
        result.append(piv)
    # canonical reduction of entries above each pivot
    for j in range(n):
        pj = result[j][j]
        for i in range(j):
            q = result[i][j] // pj
            if q:
                result[i] = [x - q * y for x, y in zip(result[i], result[j])]
    return IntMatrix.from_rows(result)
