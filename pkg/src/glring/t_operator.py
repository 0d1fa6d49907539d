"""Matrices of multiplication by sum_i [Lambda^i] and the T-operator blocks.

``mult_M`` and ``mult_GL`` have the image of the j-th basis class in column j.
The printed tau_n tables are ``mult_GL`` as is; t_n is the transpose of
``mult_M``.  With the bitmask basis order, classes without the part n come
first, so t_n splits at 2**(n-1) into [[t_{n-1}, delta], [0, tau_block]].
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument
from .exact_linalg import IntMatrix
from .lambda_ring import Mode, RingElement, mult_by_sum_lambda


def operator_matrix(mode: Mode) -> IntMatrix:
    basis = mode.basis()
    cols = []
    for p in basis:
        image = mult_by_sum_lambda(RingElement.basis_element(mode, p))
        cols.append(image.coordinates())
    return IntMatrix.from_columns(cols)


@dataclass(frozen=True)
class TMatrices:
    n: int
    mult_M: IntMatrix
    mult_GL: IntMatrix
    t: IntMatrix
    tau_printed: IntMatrix


def build_t_matrices(n: int) -> TMatrices:
    if n < 0:
        raise InvalidArgument("n must be nonnegative")
    if n == 0:
        one = IntMatrix([[1]])
        return TMatrices(0, one, one, one, one)
    mult_M = operator_matrix(Mode.M(n))
    mult_GL = operator_matrix(Mode.GL(n))
    return TMatrices(n, mult_M, mult_GL, mult_M.T, mult_GL)


def build_t(n: int) -> IntMatrix:
    if n == 0:
        return IntMatrix([[1]])
    return operator_matrix(Mode.M(n)).T


@dataclass(frozen=True)
class Blocks:
    t_prev: IntMatrix
    delta: IntMatrix
    lower_left: IntMatrix
    tau_block: IntMatrix


def block_decompose(t: IntMatrix, n: int) -> Blocks:
    if n < 1 or t.shape != (1 << n, 1 << n):
        raise InvalidArgument(f"expected a {1 << n}x{1 << n} matrix for n = {n}, got {t.shape}")
    h = 1 << (n - 1)
    s = 1 << n
    return Blocks(t.block(0, h, 0, h), t.block(0, h, h, s), t.block(h, s, 0, h), t.block(h, s, h, s))


def printed_tau_trace(n: int) -> int:
    """Trace of tau_n predicted by the eigenvalue pattern (n >= 2)."""
    return (n - 1) * (1 << (n - 2)) + (1 << n)
