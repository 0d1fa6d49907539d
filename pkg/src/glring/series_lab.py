"""Integer power series and rational forms N(q) / prod_j (1 - q^d_j).

Polynomials are tuples of integer coefficients, lowest degree first.
Forms are never reduced automatically; ``cancel_factors`` does it on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgument

DEFAULT_ORDER = 64


def _trim(coeffs: Sequence[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_prod(polys) -> tuple:
    out = (1,)
    for p in polys:
        out = poly_mul(out, p)
    return out


def one_minus_q_pow(d: int) -> tuple:
    return (1,) + (0,) * (d - 1) + (-1,) if d > 0 else ()


def geometric_sum(d: int) -> tuple:
    """1 + q + ... + q^(d-1); the empty sum for d = 0 is taken as 1."""
    return (1,) * d if d > 0 else (1,)


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple:
    """Exact-integer long division; den must have leading coefficient +-1."""
    num = list(_trim(num))
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    if abs(lead) != 1:
        raise InvalidArgument("divisor must be monic up to sign")
    if len(num) < len(den):
        return (), tuple(num)
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + len(den) - 1] * lead
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return _trim(quot), _trim(num[: len(den) - 1])


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of q^0..q^order; arithmetic truncates at the smaller order."""

    coefficients: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise InvalidArgument("order must be nonnegative")
        c = tuple(int(x) for x in self.coefficients[: self.order + 1])
        object.__setattr__(self, "coefficients", c + (0,) * (self.order + 1 - len(c)))

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def __add__(self, other):
        order = min(self.order, other.order)
        return PowerSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), order)

    def __sub__(self, other):
        order = min(self.order, other.order)
        return PowerSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)), order)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a:
                for j, b in enumerate(other.coefficients[: order + 1 - i]):
                    out[i + j] += a * b
        return PowerSeries(tuple(out), order)

    def valuation(self):
        """Degree of the first nonzero coefficient, None for the zero series."""
        return next((i for i, c in enumerate(self.coefficients) if c), None)

    def support(self) -> list:
        return [i for i, c in enumerate(self.coefficients) if c]

    def sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.coefficients) if c}


@dataclass(frozen=True)
class RationalForm:
    numerator: tuple
    denominator_exponents: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(int(x) for x in self.numerator))
        dens = tuple(sorted(int(d) for d in self.denominator_exponents))
        if any(d <= 0 for d in dens):
            raise InvalidArgument("denominator exponents must be positive")
        object.__setattr__(self, "denominator_exponents", dens)

    @classmethod
    def monomial(cls, degree: int, dens: Sequence[int] = ()) -> "RationalForm":
        return cls((0,) * degree + (1,), tuple(dens))

    def __mul__(self, other):
        return RationalForm(poly_mul(self.numerator, other.numerator),
                            self.denominator_exponents + other.denominator_exponents)

    def denominator(self) -> tuple:
        return poly_prod(one_minus_q_pow(d) for d in self.denominator_exponents)

    def __str__(self):
        num = format_poly(self.numerator)
        den = "".join(f"(1-q^{d})" if d > 1 else "(1-q)" for d in self.denominator_exponents)
        return f"({num})/({den})" if den else num


def format_poly(p: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
        if mono and abs(c) == 1:
            coef = "-" if c < 0 else "+"
        else:
            coef = f"{c:+d}"
        terms.append(coef + mono)
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


def expand(form: RationalForm, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Truncated expansion: numerator convolved with each geometric series."""
    if order < 0:
        raise InvalidArgument("order must be nonnegative")
    c = list(form.numerator[: order + 1]) + [0] * max(0, order + 1 - len(form.numerator))
    for d in form.denominator_exponents:
        for m in range(d, order + 1):
            c[m] += c[m - d]
    return PowerSeries(tuple(c), order)


def steinberg_form(n: int) -> RationalForm:
    """q^(sum (2^i - 1)) / prod_{i=1..n} (1 - q^(2^i - 1))."""
    if n < 1:
        raise InvalidArgument("n must be at least 1")
    exps = [(1 << i) - 1 for i in range(1, n + 1)]
    return RationalForm.monomial(sum(exps), exps)


def connectivity(parts: Sequence[int]) -> int:
    """lambda_1 + 2 lambda_2 + ... + 2^(h-1) lambda_h."""
    return sum(p << i for i, p in enumerate(parts))


def root_multiplicity_at_one(p: Sequence[int]) -> int:
    p = _trim(p)
    if not p:
        raise InvalidArgument("zero polynomial has infinite multiplicity at 1")
    m = 0
    while True:
        q, r = poly_divmod(p, (1, -1))
        if r:
            return m
        p = q
        m += 1


def pole_order_at_one(form: RationalForm) -> int:
    return len(form.denominator_exponents) - root_multiplicity_at_one(form.numerator)


def chi_series(j: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """sum_{h >= 0} q^(j 2^h) truncated at ``order``."""
    if j <= 0 or j % 2 == 0:
        raise InvalidArgument("j must be a positive odd integer")
    c = [0] * (order + 1)
    d = j
    while d <= order:
        c[d] = 1
        d *= 2
    return PowerSeries(tuple(c), order)


def eigenvector_denominator_form(n: int) -> RationalForm:
    """prod_{i=1..n} (1 + q + ... + q^(2^i - 2)) written as
    prod (1 - q^(2^i - 1)) / (1 - q)^n.

    The i = 1 factor is the constant 1.
    """
    if n < 1:
        raise InvalidArgument("n must be at least 1")
    num = poly_prod(one_minus_q_pow((1 << i) - 1) for i in range(1, n + 1))
    return RationalForm(num, (1,) * n)


def eigenvector_denominator_poly(n: int) -> tuple:
    if n < 1:
        raise InvalidArgument("n must be at least 1")
    return poly_prod(geometric_sum((1 << i) - 1) for i in range(1, n + 1))


def cancel_factors(form: RationalForm) -> RationalForm:
    """Divide out every denominator factor (1 - q^d) that divides the numerator."""
    num = form.numerator
    kept = []
    for d in form.denominator_exponents:
        q, r = poly_divmod(num, one_minus_q_pow(d)) if num else ((), ())
        if num and not r:
            num = q
        else:
            kept.append(d)
    return RationalForm(num, tuple(kept))


def forms_equal(a: RationalForm, b: RationalForm) -> bool:
    """Exact equality: N_a D_b == N_b D_a as polynomials."""
    return poly_mul(a.numerator, b.denominator()) == poly_mul(b.numerator, a.denominator())


def parse_poly(text: str) -> tuple:
    """Coefficient list "0,0,0,0,1" (lowest degree first) to a polynomial."""
    try:
        return _trim(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InvalidArgument(f"bad coefficient list {text!r}") from None
