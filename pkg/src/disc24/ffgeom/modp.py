"""Prime fields: certification, counter-based randomness, mod-p linear algebra.

The random draws are a pure function of (seed, stream, counter), so parallel
and serial runs agree bit for bit and sampling never depends on acceptance
history of other streams.
"""

from __future__ import annotations

from ..errors import ConfigError

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def draw(seed: int, stream: int, counter: int) -> int:
    """Deterministic 64-bit value for the given (seed, stream, counter)."""
    base = _mix64((seed + _GOLDEN * (stream + 1)) & MASK64)
    return _mix64((base + _GOLDEN * counter) & MASK64)


class Draws:
    """Sequential view over one (seed, stream) counter lane."""

    def __init__(self, seed: int, stream: int):
        self.seed = seed
        self.stream = stream
        self.counter = 0

    def next_int(self) -> int:
        v = draw(self.seed, self.stream, self.counter)
        self.counter += 1
        return v

    def mod(self, p: int) -> int:
        return self.next_int() % p

    def nonzero_mod(self, p: int) -> int:
        while True:
            v = self.mod(p)
            if v:
                return v


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_certified_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the base set is exact far beyond 2^31."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def certify_prime_spec(p: int) -> int:
    if not isinstance(p, int) or not (3 < p < 2**31):
        raise ConfigError(f"prime must satisfy 3 < p < 2^31, got {p}")
    if not is_certified_prime(p):
        raise ConfigError(f"{p} is not prime")
    return p


def inv_mod(a: int, p: int) -> int:
    return pow(a % p, p - 2, p)


def normalize_point(vec, p: int) -> tuple[int, ...] | None:
    """Scale so the first nonzero coordinate is 1; None for the zero vector."""
    vec = [x % p for x in vec]
    lead = next((i for i, x in enumerate(vec) if x), None)
    if lead is None:
        return None
    inv = inv_mod(vec[lead], p)
    return tuple(x * inv % p for x in vec)


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (rows, pivot columns)."""
    a = [[x % p for x in row] for row in rows]
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = next((i for i in range(r, len(a)) if a[i][col]), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = inv_mod(a[r][col], p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    return len(rref(rows, p)[0])


def kernel_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Canonical kernel basis of the row-matrix acting on column vectors.

    One basis vector per free column: 1 at the free column, pivot entries
    back-substituted; ordered by free column index.
    """
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-red[r][f]) % p
        basis.append(vec)
    return basis


def solve_in_span(basis_rows: list[list[int]], target: list[int], p: int) -> list[int] | None:
    """Coefficients expressing target over the basis rows, or None."""
    k = len(basis_rows)
    n = len(target)
    aug = [[basis_rows[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, pivots = rref(aug, p)
    coords = [0] * k
    for r, c in enumerate(pivots):
        if c == k:  # inconsistent system
            return None
        coords[c] = red[r][k]
    # verify (also covers underdetermined consistency)
    for i in range(n):
        if sum(coords[j] * basis_rows[j][i] for j in range(k)) % p != target[i] % p:
            return None
    return coords
