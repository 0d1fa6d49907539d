"""Grothendieck-ring arithmetic in the exterior-power basis.

Basis classes are products of exterior powers Lambda^{l1} x ... x Lambda^{lh}
with l1 > ... > lh.  A product with a repeated exponent is rewritten with

    [L^k L^k] = [L^k] + sum_{i=1..k} (-1)^(i-1) 2 [L^(k+i) L^(k-i)]

until every exponent occurs once.  Two ambient rings are supported:

* M mode, the ring of M_n(F_2):  L^k = 0 for k > n, L^0 = 1.
* GL mode, the ring of GL_n(F_2): additionally L^n = 1 (the determinant is
  trivial over F_2).  Basis keys are then the tails mu of (n, mu).

Two independent product routes exist.  ``RingElement.__mul__`` inserts one
exponent at a time through a memoized kernel; ``normalize`` runs the rewrite
system on whole multisets and may choose rewrite pairs at random.  Tests
compare the two.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import InvalidArgument
from .partitions import BasisOrder, Kind, bitmask, enumerate_basis, format_partition


@dataclass(frozen=True)
class Mode:
    kind: Kind
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 0 or (self.kind is Kind.GL and self.n < 1):
            raise InvalidArgument(f"invalid mode {self.kind.value}({self.n})")

    @classmethod
    def M(cls, n: int) -> "Mode":
        return cls(Kind.M, n)

    @classmethod
    def GL(cls, n: int) -> "Mode":
        return cls(Kind.GL, n)

    @property
    def top(self) -> int:
        """Largest exponent that survives as a basis part."""
        return self.n if self.kind is Kind.M else self.n - 1

    def is_unit_exponent(self, k: int) -> bool:
        return k == 0 or (self.kind is Kind.GL and k == self.n)

    def basis(self) -> BasisOrder:
        return enumerate_basis(self.n, self.kind)

    def __str__(self):
        return f"{self.kind.value}({self.n})"


def _reduce_parts(parts: Iterable[int], mode: Mode):
    """Apply unit absorption; None if some factor vanishes."""
    out = []
    for k in parts:
        if k > mode.n:
            return None
        if not mode.is_unit_exponent(k):
            out.append(k)
    return out


def _add_into(acc: dict, terms: Mapping, scale: int = 1) -> None:
    for key, c in terms.items():
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


@lru_cache(maxsize=None)
def _times_lambda(mode: Mode, p: tuple, k: int):
    """[Lambda^p] * [Lambda^k] as a tuple of (key, coefficient) pairs."""
    if k > mode.n:
        return ()
    if mode.is_unit_exponent(k):
        return ((p, 1),)
    if k not in p:
        return ((tuple(sorted(p + (k,), reverse=True)), 1),)
    rest = tuple(x for x in p if x != k)
    acc: dict = {}
    _add_into(acc, dict(_times_lambda(mode, rest, k)))
    for i in range(1, k + 1):
        if k + i > mode.n:
            break
        sign = 2 if i % 2 else -2
        for key, c in _times_lambda(mode, rest, k + i):
            _add_into(acc, dict(_times_lambda(mode, key, k - i)), sign * c)
    return tuple(acc.items())


class RingElement:
    """Immutable finitely supported map from strict partitions to integers."""

    __slots__ = ("mode", "_terms")

    def __init__(self, mode: Mode, terms: Mapping | None = None):
        self.mode = mode
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if any(a <= b for a, b in zip(key, key[1:])) or (key and (key[-1] <= 0 or key[0] > mode.top)):
                raise InvalidArgument(f"{format_partition(key)} is not a basis key in {mode}")
            if c:
                clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, mode: Mode, terms: dict) -> "RingElement":
        obj = cls.__new__(cls)
        obj.mode = mode
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, mode: Mode) -> "RingElement":
        return cls._raw(mode, {})

    @classmethod
    def one(cls, mode: Mode) -> "RingElement":
        return cls._raw(mode, {(): 1})

    @classmethod
    def basis_element(cls, mode: Mode, parts) -> "RingElement":
        return cls(mode, {tuple(parts): 1})

    @classmethod
    def lambda_power(cls, mode: Mode, k: int) -> "RingElement":
        """The class [Lambda^k] with mode reductions applied."""
        if k < 0:
            raise InvalidArgument("negative exponent")
        reduced = _reduce_parts([k], mode)
        return cls.zero(mode) if reduced is None else cls._raw(mode, {tuple(reduced): 1})

    # -- mapping interface -------------------------------------------------
    def __getitem__(self, key) -> int:
        return self._terms.get(tuple(key), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.keys())

    def keys(self) -> list:
        """Support in basis order."""
        return sorted(self._terms, key=bitmask)

    def items(self) -> list:
        return [(k, self._terms[k]) for k in self.keys()]

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coordinates(self) -> list:
        """Dense coefficient vector indexed by basis position."""
        vec = [0] * (1 << self.mode.top)
        for key, c in self._terms.items():
            vec[bitmask(key)] = c
        return vec

    @classmethod
    def from_coordinates(cls, mode: Mode, vec) -> "RingElement":
        basis = mode.basis().table
        if len(vec) != len(basis):
            raise InvalidArgument("coordinate vector has wrong length")
        return cls._raw(mode, {tuple(p): int(c) for p, c in zip(basis, vec) if c})

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.mode != self.mode:
            raise InvalidArgument(f"mode mismatch: {self.mode} vs {other.mode}")

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.mode == other.mode and self._terms == other._terms

    def __hash__(self):
        return hash((self.mode, frozenset(self._terms.items())))

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return RingElement._raw(self.mode, acc)

    def __neg__(self):
        return RingElement._raw(self.mode, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "RingElement":
        if not c:
            return RingElement.zero(self.mode)
        return RingElement._raw(self.mode, {k: c * v for k, v in self._terms.items()})

    def times_lambda(self, k: int) -> "RingElement":
        """Product with [Lambda^k]."""
        acc: dict = {}
        for key, c in self._terms.items():
            for out, d in _times_lambda(self.mode, key, k):
                v = acc.get(out, 0) + c * d
                if v:
                    acc[out] = v
                else:
                    acc.pop(out, None)
        return RingElement._raw(self.mode, acc)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def map_coefficients(self, fn: Callable[[int], int]) -> "RingElement":
        return RingElement._raw(self.mode, {k: fn(v) for k, v in self._terms.items() if fn(v)})

    # -- text --------------------------------------------------------------
    def label(self, key) -> tuple:
        """Partition as printed: GL tails get the leading n back."""
        if self.mode.kind is Kind.GL:
            return (self.mode.n,) + tuple(key)
        return tuple(key)

    def to_paper(self, explicit_unit: bool = True) -> str:
        return render_paper(self, explicit_unit=explicit_unit)

    def __str__(self):
        return self.to_paper()

    def __repr__(self):
        return f"RingElement({self.mode}, {self.to_paper()!r})"


def render_paper(x: RingElement, explicit_unit: bool = True) -> str:
    """Additive notation, e.g. "(1)+3(2)-2(4)"; zero renders as "0"."""
    out = []
    for key, c in x.items():
        label = format_partition(x.label(key))
        if c == 1:
            coef = "1" if explicit_unit and not x.label(key) else ""
        elif c == -1:
            coef = "-" if x.label(key) else "-1"
        else:
            coef = str(c)
        if out and not coef.startswith("-"):
            out.append("+")
        out.append(coef + label)
    return "".join(out) if out else "0"


def multiply(a: RingElement, b: RingElement) -> RingElement:
    """Ring product through the memoized insertion kernel."""
    a._check(b)
    acc: dict = {}
    for q, cb in b._terms.items():
        part = a
        for k in q:
            part = part.times_lambda(k)
        _add_into(acc, part._terms, cb)
    return RingElement._raw(a.mode, acc)


def straighten_pair(k: int, mode: Mode) -> RingElement:
    """[Lambda^k x Lambda^k] in the basis."""
    if k <= 0:
        raise InvalidArgument("k must be positive")
    if k > mode.n:
        raise InvalidArgument(f"k = {k} exceeds n = {mode.n}")
    return normalize([k, k], mode)


def _pair_rewrites(k: int):
    """Signed replacements for a pair {k, k}."""
    yield 1, (k,)
    for i in range(1, k + 1):
        yield (2 if i % 2 else -2), (k + i, k - i)


def normalize(
    exponents: Iterable[int],
    mode: Mode,
    rng: random.Random | None = None,
    on_rewrite: Callable[[tuple, list], None] | None = None,
) -> RingElement:
    """Express the product of Lambda^k over a multiset of exponents.

    By default the duplicated exponent with the largest value is rewritten
    first.  With ``rng`` the duplicate to rewrite is chosen at random at
    every step.  ``on_rewrite(before, produced)`` is called for every
    rewrite with the reduced multisets (as sorted tuples) it produced.
    """
    exps = list(exponents)
    if any(k < 0 for k in exps):
        raise InvalidArgument("exponents must be nonnegative")
    start = _reduce_parts(exps, mode)
    if start is None:
        return RingElement.zero(mode)
    pending = {tuple(sorted(start, reverse=True)): 1}
    done: dict = {}
    while pending:
        ms, c = pending.popitem()
        counts = Counter(ms)
        dups = sorted(k for k, m in counts.items() if m >= 2)
        if not dups:
            _add_into(done, {ms: c})
            continue
        k = rng.choice(dups) if rng is not None else dups[-1]
        rest = list(ms)
        rest.remove(k)
        rest.remove(k)
        produced = []
        for sign, repl in _pair_rewrites(k):
            reduced = _reduce_parts(rest + list(repl), mode)
            if reduced is None:
                continue
            key = tuple(sorted(reduced, reverse=True))
            produced.append(key)
            _add_into(pending, {key: sign * c})
        if on_rewrite is not None:
            on_rewrite(ms, produced)
    return RingElement._raw(mode, done)


def mult_by_sum_lambda(a: RingElement) -> RingElement:
    """a * sum_{i=0..n} [Lambda^i]."""
    acc: dict = {}
    for i in range(a.mode.n + 1):
        _add_into(acc, a.times_lambda(i)._terms)
    return RingElement._raw(a.mode, acc)


def clear_cache() -> None:
    _times_lambda.cache_clear()
