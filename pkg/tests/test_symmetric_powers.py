from math import comb

import pytest

from glring.exact_linalg import rank
from glring.lambda_ring import Mode, RingElement
from glring.paper_tables import parse_paper_notation
from glring.symmetric_powers import (
    dimension,
    expand_sym,
    koszul_residual,
    left_null_covectors,
    mod2_reduce,
    sym_matrix,
    sym_rank_profile,
)

M4 = Mode.M(4)


def test_expand_examples():
    assert expand_sym(4, 4) == parse_paper_notation("(1)+(2)+(2,1)+(4)")
    assert expand_sym(4, 0) == RingElement.one(M4)
    assert expand_sym(4, 26).to_paper().endswith("+7(4,3,2)+(4,3,2,1)")
    # S^3 = S^2 L^1 - S^1 L^2 at n = 2, worked by hand
    assert expand_sym(2, 3) == RingElement(Mode.M(2), {(1,): 1, (2,): 2})


def test_mod2_examples():
    assert mod2_reduce(expand_sym(4, 7)) == parse_paper_notation("(1)+(3,2)")
    assert mod2_reduce(expand_sym(4, 6)) == parse_paper_notation("(1)+(2)+(2,1)+(3)+(4,1)")
    assert mod2_reduce(RingElement.zero(M4)) == RingElement.zero(M4)


@pytest.mark.parametrize("n,k", [(4, 5), (2, 1), (6, 12), (3, 9)])
def test_koszul_residual_examples(n, k):
    assert not koszul_residual(n, k)


def test_stability_in_n():
    for n in range(0, 9):
        for k in range(0, n + 1):
            a, b = expand_sym(n, k), expand_sym(n + 1, k)
            assert a.as_dict() == b.as_dict(), (n, k)


@pytest.mark.parametrize("n", range(1, 6))
def test_dimension_count(n):
    for k in range(31):
        assert dimension(expand_sym(n, k)) == comb(n + k - 1, k)


def test_rank_profiles():
    assert sym_rank_profile(2, 4) == [1, 2, 3, 3, 4]
    assert sym_rank_profile(1, 2) == [1, 2, 2]


@pytest.mark.parametrize("n,K", [(2, 10), (3, 40), (4, 60)])
def test_profile_matches_bareiss_rank(n, K):
    profile = sym_rank_profile(n, K)
    assert all(a <= b for a, b in zip(profile, profile[1:]))
    assert profile[-1] <= 2 ** n
    for k in (0, K // 3, K):
        assert profile[k] == rank(sym_matrix(n, k))


def test_null_covectors():
    assert left_null_covectors(2, 4) == []
    assert left_null_covectors(1, 1) == []
    cov = left_null_covectors(4, 200)
    assert sym_rank_profile(4, 200)[-1] == 16 - len(cov)
    assert cov
    for c in cov:
        assert next(x for x in c if x) > 0
        for row in sym_matrix(4, 200):
            assert sum(a * b for a, b in zip(c, row)) == 0


def test_null_covectors_empty_once_full_rank():
    for n, K in [(1, 3), (2, 6), (3, 20)]:
        if sym_rank_profile(n, K)[-1] == 2 ** n:
            assert left_null_covectors(n, K) == []
