"""The Young-symmetrizer construction of simple modules over F_2.

For a partition lam of d, let C and R be the column and row stabilizers of
the row-major filling of its diagram, and C_bar, R_bar their element sums in
F_2[S_d].  S_d acts on (F_2^m)^{x d} by permuting tensor positions; the
image of V^{x d} under C_bar R_bar C_bar is the candidate simple module.

Matrices over F_2 are lists of Python ints, one bitset per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import InvalidArgument, ResourceLimitError
from .partitions import conjugate

MAX_DEGREE = 8
DEFAULT_BUDGET = 1 << 15


class F2Matrix:
    """Bit-packed matrix over F_2: bit j of rows[i] is entry (i, j)."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = list(rows)
        self.ncols = ncols
        limit = 1 << ncols
        if any(r < 0 or r >= limit for r in self.rows):
            raise InvalidArgument("row wider than ncols")

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls((1 << i for i in range(n)), n)

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> "F2Matrix":
        ncols = len(lists[0]) if lists else 0
        return cls((sum((x & 1) << j for j, x in enumerate(r)) for r in lists), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, F2Matrix) and self.ncols == other.ncols and self.rows == other.rows

    def tolists(self) -> list:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __add__(self, other):
        return F2Matrix((a ^ b for a, b in zip(self.rows, other.rows)), self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise InvalidArgument("inner dimensions differ")
        brows = other.rows
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= brows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return f2_rank(self.rows)


def f2_rank(rows: Iterable[int]) -> int:
    """Rank of bitset rows; pivots keyed by highest set bit."""
    pivots: dict = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                break
            r ^= p
    return len(pivots)


@dataclass(frozen=True)
class YoungStabilizers:
    shape: tuple
    filling: tuple
    row_group: tuple
    column_group: tuple


def canonical_filling(shape: Sequence[int]) -> list:
    """Row-major filling of the diagram with 0..d-1."""
    rows, k = [], 0
    for length in shape:
        rows.append(list(range(k, k + length)))
        k += length
    return rows


def _stabilizer(blocks: Sequence[Sequence[int]], d: int) -> tuple:
    perms = []
    for choice in product(*(permutations(b) for b in blocks)):
        img = list(range(d))
        for block, images in zip(blocks, choice):
            for src, dst in zip(block, images):
                img[src] = dst
        perms.append(tuple(img))
    return tuple(perms)


def young_stabilizers(shape: Sequence[int], filling: Sequence[Sequence[int]] | None = None) -> YoungStabilizers:
    """Row and column stabilizers as tuples of permutations of range(d)."""
    shape = tuple(p for p in shape if p > 0)
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidArgument("shape must be weakly decreasing")
    d = sum(shape)
    if d > MAX_DEGREE:
        raise ResourceLimitError(f"|lambda| = {d} exceeds the cap {MAX_DEGREE}")
    rows = [list(r) for r in filling] if filling is not None else canonical_filling(shape)
    if [len(r) for r in rows] != list(shape) or sorted(x for r in rows for x in r) != list(range(d)):
        raise InvalidArgument("filling does not match the shape")
    cols = [[rows[i][j] for i in range(c)] for j, c in enumerate(conjugate(shape))]
    return YoungStabilizers(shape, tuple(map(tuple, rows)), _stabilizer(rows, d), _stabilizer(cols, d))


def _check_budget(m: int, d: int, budget: int) -> int:
    size = m ** d
    if size > budget:
        raise ResourceLimitError(f"{m}^{d} = {size} exceeds the budget {budget}")
    return size


def algebra_action_matrix(perms: Iterable[Sequence[int]], m: int, d: int, budget: int = DEFAULT_BUDGET) -> F2Matrix:
    """Matrix of sum_sigma sigma on (F_2^m)^{x d}, row-vector convention.

    A basis tensor is a digit string (i_0, ..., i_{d-1}) in base m, read
    lexicographically.  sigma sends it to the tensor whose position sigma(j)
    carries digit i_j.
    """
    size = _check_budget(m, d, budget)
    perms = [tuple(s) for s in perms]
    for s in perms:
        if sorted(s) != list(range(d)):
            raise InvalidArgument(f"{s} is not a permutation of range({d})")
    weights = [m ** (d - 1 - j) for j in range(d)]
    rows = []
    for idx in range(size):
        digits = []
        x = idx
        for w in weights:
            digits.append(x // w)
            x %= w
        acc = 0
        for s in perms:
            acc ^= 1 << sum(digits[j] * weights[s[j]] for j in range(d))
        rows.append(acc)
    return F2Matrix(rows, size)


def jk_matrix(shape: Sequence[int], m: int, budget: int = DEFAULT_BUDGET, filling=None) -> F2Matrix:
    stab = young_stabilizers(shape, filling)
    d = sum(stab.shape)
    c_bar = algebra_action_matrix(stab.column_group, m, d, budget)
    r_bar = algebra_action_matrix(stab.row_group, m, d, budget)
    return c_bar @ r_bar @ c_bar


def jk_image_dim(shape: Sequence[int], m: int, budget: int = DEFAULT_BUDGET, filling=None) -> int:
    """dim_F2 of V^{x d} C_bar R_bar C_bar with V = F_2^m."""
    if m < 0:
        raise InvalidArgument("m must be nonnegative")
    return jk_matrix(shape, m, budget, filling).rank()


def group_order(shape: Sequence[int]) -> tuple:
    """(|row group|, |column group|) from the factorial formulas."""
    return prod(factorial(p) for p in shape), prod(factorial(c) for c in conjugate(shape))
