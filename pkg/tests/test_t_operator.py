import pytest

from glring.errors import InvalidArgument
from glring.exact_linalg import IntMatrix
from glring.t_operator import block_decompose, build_t_matrices, printed_tau_trace


def test_small_cases():
    assert build_t_matrices(2).tau_printed == IntMatrix([[2, 2], [1, 3]])
    assert [r[3] for r in build_t_matrices(3).tau_printed.rows] == [0, 6, 6, 4]
    assert build_t_matrices(1).t == IntMatrix([[1, 1], [0, 2]])
    assert build_t_matrices(1).tau_printed == IntMatrix([[2]])
    zero = build_t_matrices(0)
    assert zero.t == zero.tau_printed == IntMatrix([[1]])


def test_block_decompose_n2():
    b = block_decompose(build_t_matrices(2).t, 2)
    assert b.t_prev == IntMatrix([[1, 1], [0, 2]])
    assert b.delta == IntMatrix([[1, 0], [2, 1]])
    assert b.lower_left.is_zero()
    assert b.tau_block == IntMatrix([[2, 1], [2, 3]])
    assert b.tau_block == build_t_matrices(2).tau_printed.T


def test_block_decompose_size_check():
    with pytest.raises(InvalidArgument):
        block_decompose(IntMatrix.identity(3), 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_block_structure_and_traces(n):
    mats = build_t_matrices(n)
    b = block_decompose(mats.t, n)
    assert b.lower_left.is_zero()
    assert b.tau_block == b.t_prev + b.delta
    assert b.tau_block == mats.mult_GL.T
    assert b.t_prev == build_t_matrices(n - 1).t
    assert mats.t.trace() == n * 2 ** (n - 1) + 2 ** n
    if n >= 2:
        assert mats.tau_printed.trace() == printed_tau_trace(n)


def test_printed_trace_values():
    assert printed_tau_trace(4) == 28
    assert printed_tau_trace(5) == 64
