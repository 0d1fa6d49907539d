"""Exact dense linear algebra over Z and Q.

Everything here runs on Python integers.  Elimination is fraction-free
(Bareiss), so intermediate entries stay integral and the division at each
step is exact.  A multimodular path (numpy, word-size primes) is provided
for matrices too large for pure-Python products; it is only used where a
bound turns the modular answer into an exact certificate.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument


class IntMatrix:
    """Dense row-major matrix of Python integers."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int | None = None):
        self.rows = [[int(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise InvalidArgument("ragged matrix")
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: int | None = None) -> "IntMatrix":
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls([list(r) for r in zip(*cols)] if cols else [[] for _ in range(nrows)], len(cols))

    @property
    def shape(self) -> tuple:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"IntMatrix({self.rows!r})"

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.ncols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix([list(c) for c in zip(*self.rows)] if self.nrows else [], self.nrows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(min(self.shape)))

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "IntMatrix":
        return IntMatrix([r[c0:c1] for r in self.rows[r0:r1]], c1 - c0)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise InvalidArgument(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._same_shape(other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def shift(self, r: int) -> "IntMatrix":
        """self - r*I."""
        out = self.tolist()
        for i in range(min(self.shape)):
            out[i][i] -= r
        return IntMatrix(out, self.ncols)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise InvalidArgument("inner dimensions differ")
            brows = other.rows
            out = []
            for r in self.rows:
                acc = [0] * other.ncols
                for a, b in zip(r, brows):
                    if a:
                        acc = [x + a * y for x, y in zip(acc, b)]
                out.append(acc)
            return IntMatrix(out, other.ncols)
        vec = list(other)
        if len(vec) != self.ncols:
            raise InvalidArgument("vector length differs from column count")
        return [sum(a * b for a, b in zip(r, vec)) for r in self.rows]

    def max_abs(self) -> int:
        return max((abs(x) for r in self.rows for x in r), default=0)

    def row_sum_norm(self) -> int:
        """Infinity norm: max over rows of the sum of absolute entries."""
        return max((sum(abs(x) for x in r) for r in self.rows), default=0)


def _as_rows(A) -> list:
    if isinstance(A, IntMatrix):
        return A.tolist()
    return [[int(x) for x in r] for r in A]


def bareiss_echelon(A) -> tuple:
    """Fraction-free row echelon form.

    Returns (rows, pivot_columns).  Rows below the rank are zero.
    """
    M = _as_rows(A)
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        prow = M[r]
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[c]
            if f:
                M[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                M[i] = [(p * x) // prev for x in row]
        pivots.append(c)
        prev = p
        r += 1
    return M, pivots


def rank(A) -> int:
    """Rank over Q by fraction-free elimination."""
    return len(bareiss_echelon(A)[1])


def rref_fraction_free(A) -> tuple:
    """Fraction-free Gauss-Jordan reduction.

    Returns (rows, pivot_columns, d).  Every pivot entry equals d and pivot
    columns are zero off their pivot row, so the rational RREF is rows / d.
    """
    M = _as_rows(A)
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        prow = M[r]
        for i in range(nrows):
            if i == r:
                continue
            row = M[i]
            f = row[c]
            if f:
                M[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                M[i] = [(p * x) // prev for x in row]
        pivots.append(c)
        prev = p
        r += 1
    return M, pivots, prev


def kernel_basis(A) -> list:
    """Basis of the right kernel as lists of Fractions.

    One vector per free column, in increasing column order; the free
    coordinate is 1 and the other free coordinates are 0.
    """
    M = _as_rows(A)
    ncols = len(M[0]) if M else (A.ncols if isinstance(A, IntMatrix) else 0)
    if not M:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots, d = rref_fraction_free(M)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = Fraction(-R[r][f], d)
        basis.append(v)
    return basis


def primitive(vec: Sequence) -> list:
    """Scale a rational vector to coprime integers, first nonzero positive."""
    vec = [Fraction(x) for x in vec]
    den = math.lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * den) for x in vec]
    g = math.gcd(*ints) if ints else 0
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def annihilation_check(A: IntMatrix, roots: Sequence[int]) -> bool:
    """True iff prod_r (A - r I) is exactly zero."""
    if A.nrows != A.ncols:
        raise InvalidArgument("square matrix required")
    if not roots:
        return A.nrows == 0
    P = A.shift(roots[0])
    for r in roots[1:]:
        P = P @ A.shift(r)
    return P.is_zero()


def eigen_multiplicity(A: IntMatrix, r: int) -> int:
    """dim ker(A - r I) over Q."""
    if A.nrows != A.ncols:
        raise InvalidArgument("square matrix required")
    return A.nrows - rank(A.shift(r))


class RowSpace:
    """Incrementally maintained echelon basis of an integer row space.

    Rows are kept primitive (content divided out) so entries stay small.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Sequence[int]) -> list:
        v = [int(x) for x in row]
        for c in sorted(self._pivots):
            if v[c]:
                b = self._pivots[c]
                p, f = b[c], v[c]
                g = math.gcd(p, f)
                v = [(p // g) * x - (f // g) * y for x, y in zip(v, b)]
                v = _strip_content(v)
        return v

    def add(self, row: Sequence[int]) -> bool:
        """Insert a row; True if it increased the rank."""
        if len(row) != self.ncols:
            raise InvalidArgument("row length differs from ncols")
        v = self.reduce(row)
        lead = next((c for c, x in enumerate(v) if x), None)
        if lead is None:
            return False
        self._pivots[lead] = v
        return True


def _strip_content(v: list) -> list:
    g = math.gcd(*v)
    return [x // g for x in v] if g > 1 else v


# -- multimodular route -------------------------------------------------------

_PRIME_START = (1 << 25) - 40


def _primes_below(start: int):
    """Odd primes below ``start``, descending."""
    p = start if start % 2 else start - 1
    while p > 2:
        if all(p % q for q in range(3, math.isqrt(p) + 1, 2)):
            yield p
        p -= 2


def _mod_matrix(A: IntMatrix, p: int) -> np.ndarray:
    return np.array([[x % p for x in r] for r in A.rows], dtype=np.int64).reshape(A.nrows, A.ncols)


def _matmul_mod(X: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    # p < 2**25: split Y into 13-bit halves so every dot product fits in int64.
    lo = Y & 0x1FFF
    hi = Y >> 13
    return ((X @ lo) % p + (((X @ hi) % p) << 13) % p) % p


def rank_mod_p(A: IntMatrix, p: int) -> int:
    """Rank over F_p.  Never exceeds the rank over Q."""
    M = _mod_matrix(A, p)
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        below = M[r + 1:, c].copy()
        rows = np.nonzero(below)[0]
        if rows.size:
            sub = M[r + 1 + rows]
            prod = (below[rows][:, None] * M[r]) % p
            M[r + 1 + rows] = (sub - prod) % p
        r += 1
    return r


def annihilation_check_modular(A: IntMatrix, roots: Sequence[int]) -> bool:
    """Exact annihilation test via enough primes to exceed the entry bound.

    |entries of prod (A - rI)| <= prod ||A - rI||_inf, so vanishing modulo
    primes whose product exceeds twice that bound proves exact vanishing.
    """
    if A.nrows != A.ncols:
        raise InvalidArgument("square matrix required")
    factors = [A.shift(r) for r in roots]
    bound = 1
    for F in factors:
        bound *= max(F.row_sum_norm(), 1)
    needed = 2 * bound + 1
    modulus = 1
    for p in _primes_below(_PRIME_START):
        P = _mod_matrix(factors[0], p)
        for F in factors[1:]:
            P = _matmul_mod(P, _mod_matrix(F, p), p)
        if P.any():
            return False
        modulus *= p
        if modulus >= needed:
            return True
    raise RuntimeError("ran out of primes")  # pragma: no cover


def default_prime() -> int:
    return next(_primes_below(_PRIME_START))
