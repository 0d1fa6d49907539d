"""Machine check of the spectrum and diagonalizability of t_n.

The expected spectrum is 2**i with multiplicity 2**(n-1-i) for i < n and
2**n with multiplicity 1.  Diagonalizability with spectrum inside
{1, 2, ..., 2**n} follows from prod_i (t_n - 2**i) = 0; the kernel
dimensions then give the exact multiplicities.

``method="exact"`` uses pure-Python integer products and Bareiss ranks.
``method="modular"`` certifies annihilation with enough primes to beat an a
priori entry bound and takes ranks modulo one prime.  Modular ranks can only
overestimate kernel dimensions, so if they already sum to 2**n they are
exact once annihilation holds.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .errors import InvalidArgument
from .exact_linalg import (
    annihilation_check,
    annihilation_check_modular,
    default_prime,
    eigen_multiplicity,
    kernel_basis,
    primitive,
    rank_mod_p,
)
from .t_operator import build_t


def expected_multiplicities(n: int) -> dict:
    out = {1 << i: 1 << (n - 1 - i) for i in range(n)}
    out[1 << n] = 1
    return out


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ConjectureReport:
    n: int
    method: str
    spectrum: dict
    expected: dict
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    kernel_at_one: list | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        d = asdict(self)
        d["spectrum"] = {str(k): v for k, v in self.spectrum.items()}
        d["expected"] = {str(k): v for k, v in self.expected.items()}
        d["passed"] = self.passed
        if self.kernel_at_one is None:
            d.pop("kernel_at_one")
        return d


def conjecture_report(n: int, method: str = "auto", kernel_at_one: bool = False) -> ConjectureReport:
    if n < 1:
        raise InvalidArgument("n must be at least 1")
    if method == "auto":
        method = "exact" if n <= 7 else "modular"
    if method not in ("exact", "modular"):
        raise InvalidArgument(f"unknown method {method!r}")

    timings = {}
    t0 = time.perf_counter()
    t = build_t(n)
    timings["build"] = time.perf_counter() - t0

    roots = [1 << i for i in range(n + 1)]
    t0 = time.perf_counter()
    if method == "exact":
        annihilated = annihilation_check(t, roots)
    else:
        annihilated = annihilation_check_modular(t, roots)
    timings["annihilation"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if method == "exact":
        spectrum = {r: eigen_multiplicity(t, r) for r in roots}
    else:
        p = default_prime()
        spectrum = {r: t.nrows - rank_mod_p(t.shift(r), p) for r in roots}
    timings["multiplicities"] = time.perf_counter() - t0

    expected = expected_multiplicities(n)
    report = ConjectureReport(n, method, spectrum, expected, timings=timings)
    report.checks.append(Check("annihilated by prod (x - 2^i)", annihilated))
    total = sum(spectrum.values())
    report.checks.append(Check("multiplicities sum to 2^n", total == 1 << n, f"{total} vs {1 << n}"))
    for r in roots:
        report.checks.append(
            Check(f"multiplicity of {r}", spectrum[r] == expected[r], f"{spectrum[r]} vs {expected[r]}")
        )
    if kernel_at_one:
        t0 = time.perf_counter()
        report.kernel_at_one = [primitive(v) for v in kernel_basis(t.shift(1))]
        timings["kernel"] = time.perf_counter() - t0
        report.checks.append(
            Check("dim ker(t - 1) = 2^(n-1)", len(report.kernel_at_one) == 1 << (n - 1))
        )
    return report
