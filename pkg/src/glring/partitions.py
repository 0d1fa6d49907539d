"""Strict partitions, basis enumeration and index conversions.

Partitions are tuples of positive integers.  The strictly decreasing ones
index the exterior-power basis; conjugation and dominance also accept weakly
decreasing input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate, zip_longest
from typing import Iterable, Sequence

from .errors import InvalidArgument, PaperParseError


class Partition(tuple):
    """A strictly decreasing tuple of positive integers (possibly empty).

    Hashes and compares like the plain tuple, so it can be mixed freely with
    tuple keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise InvalidArgument(f"parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise InvalidArgument(f"parts must be strictly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def tail(self) -> "Partition":
        """The partition with the first part removed."""
        return Partition(self[1:])

    @property
    def bitmask(self) -> int:
        return bitmask(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


class Kind(str, Enum):
    M = "M"
    GL = "GL"


def bitmask(parts: Iterable[int]) -> int:
    """Encode a strict partition as the integer sum of 2**(part-1)."""
    return sum(1 << (p - 1) for p in parts)


def from_bitmask(mask: int) -> Partition:
    parts = []
    j = mask.bit_length()
    while j > 0:
        if mask >> (j - 1) & 1:
            parts.append(j)
        j -= 1
    return Partition(parts)


@dataclass(frozen=True)
class BasisOrder:
    """Ordered basis of the Grothendieck ring in one of the two modes.

    In GL mode ``table`` holds the tails mu; the basis class is (n, mu).
    """

    n: int
    mode: "Kind"
    table: tuple

    def __len__(self):
        return len(self.table)

    def __iter__(self):
        return iter(self.table)

    def index(self, p) -> int:
        return bitmask(p)

    def labels(self) -> list:
        """Partitions as printed in tables: GL tails get the leading n back."""
        if self.mode is Kind.GL:
            return [Partition((self.n,) + tuple(mu)) for mu in self.table]
        return list(self.table)


def enumerate_basis(n: int, mode=Kind.M) -> BasisOrder:
    mode = Kind(mode)
    if n < 0:
        raise InvalidArgument("n must be nonnegative")
    if mode is Kind.GL and n == 0:
        raise InvalidArgument("GL mode requires n >= 1")
    top = n if mode is Kind.M else n - 1
    return BasisOrder(n, mode, tuple(from_bitmask(m) for m in range(1 << top)))


def conjugate(parts: Sequence[int]) -> tuple:
    """Transpose of the Young diagram of a weakly decreasing partition."""
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def harris_shank_index(parts: Sequence[int]) -> tuple:
    """Differences of consecutive parts of the conjugate, last part kept."""
    c = conjugate(parts)
    return tuple(a - b for a, b in zip(c, c[1:])) + c[-1:]


class Dominance(str, Enum):
    LOWER = "lower"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominance_compare(lam: Sequence[int], mu: Sequence[int]) -> Dominance:
    """Compare in the order where (n) is the smallest partition of n.

    Smaller total size is lower.  For equal sizes lam is lower than mu when
    every partial sum of lam is at least the matching partial sum of mu.
    """
    lam = [p for p in lam if p > 0]
    mu = [p for p in mu if p > 0]
    if sum(lam) != sum(mu):
        return Dominance.LOWER if sum(lam) < sum(mu) else Dominance.GREATER
    if lam == mu:
        return Dominance.EQUAL
    pairs = list(zip_longest(accumulate(lam), accumulate(mu), fillvalue=sum(lam)))
    if all(a >= b for a, b in pairs):
        return Dominance.LOWER
    if all(a <= b for a, b in pairs):
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def format_partition(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")" if len(parts) else "(0)"


def parse_partition(text: str) -> Partition:
    """Parse "(3,1)", "3,1" or "(0)"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        parts = [int(tok) for tok in body.split(",") if tok.strip()]
    except ValueError:
        raise PaperParseError(f"bad partition {text!r}") from None
    if parts == [0]:
        parts = []
    return Partition(parts)
