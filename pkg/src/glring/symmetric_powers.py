"""Symmetric powers in the exterior-power basis via the Koszul recursion.

    [S^k] = sum_{i=1..min(k,n)} (-1)^(i+1) [S^(k-i)] [Lambda^i]

computed in M mode.  Rank analysis of the span of the [S^k] is what decides
whether the Poincare series of the indecomposable summands are linearly
independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod

from .errors import InvalidArgument
from .exact_linalg import RowSpace, kernel_basis, primitive
from .lambda_ring import Mode, RingElement, normalize


@dataclass
class SymTable:
    """Rows [S^0], [S^1], ... for one n, extended on demand."""

    n: int
    rows: list = field(default_factory=list)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument("n must be nonnegative")
        self.mode = Mode.M(self.n)
        if not self.rows:
            self.rows.append(RingElement.one(self.mode))

    def extend(self, k: int) -> "SymTable":
        while len(self.rows) <= k:
            m = len(self.rows)
            acc = RingElement.zero(self.mode)
            for i in range(1, min(m, self.n) + 1):
                term = self.rows[m - i].times_lambda(i)
                acc = acc + term if i % 2 else acc - term
            self.rows.append(acc)
        return self

    def __getitem__(self, k: int) -> RingElement:
        self.extend(k)
        return self.rows[k]


_TABLES: dict = {}


def sym_table(n: int, max_k: int) -> SymTable:
    table = _TABLES.get(n)
    if table is None:
        table = _TABLES[n] = SymTable(n)
    return table.extend(max_k)


def expand_sym(n: int, k: int) -> RingElement:
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    return sym_table(n, k)[k]


def mod2_reduce(x: RingElement) -> RingElement:
    return x.map_coefficients(lambda c: c % 2)


def _product_by_rewriting(x: RingElement, k: int) -> RingElement:
    acc = RingElement.zero(x.mode)
    for key, c in x.items():
        acc = acc + normalize(list(key) + [k], x.mode).scale(c)
    return acc


def koszul_residual(n: int, k: int) -> RingElement:
    """sum_{i=0..min(k,n)} (-1)^i [S^(k-i)] [Lambda^i]; zero when exact.

    Products are redone with the multiset rewrite system rather than the
    memoized kernel used by the recursion.
    """
    if k < 1:
        raise InvalidArgument("k must be at least 1")
    table = sym_table(n, k)
    acc = RingElement.zero(table.mode)
    for i in range(min(k, n) + 1):
        term = _product_by_rewriting(table[k - i], i)
        acc = acc - term if i % 2 else acc + term
    return acc


def dimension(x: RingElement) -> int:
    """Dimension of a class: Lambda^a has dimension C(n, a)."""
    n = x.mode.n
    return sum(c * prod(comb(n, a) for a in key) for key, c in x.items())


def sym_rank_profile(n: int, max_k: int) -> list:
    """Rank of span(s_0..s_k) over Q for each k = 0..max_k."""
    if max_k < 0:
        raise InvalidArgument("max_k must be nonnegative")
    table = sym_table(n, max_k)
    space = RowSpace(1 << n)
    profile = []
    for k in range(max_k + 1):
        space.add(table[k].coordinates())
        profile.append(space.rank)
    return profile


def sym_matrix(n: int, max_k: int) -> list:
    table = sym_table(n, max_k)
    return [table[k].coordinates() for k in range(max_k + 1)]


def left_null_covectors(n: int, max_k: int) -> list:
    """Integer basis of {c : c . s_k = 0 for all k <= max_k}.

    Each vector is primitive with first nonzero entry positive.
    """
    return [primitive(v) for v in kernel_basis(sym_matrix(n, max_k))]


def clear_tables() -> None:
    _TABLES.clear()
