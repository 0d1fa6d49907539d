"""Exact computations in the Grothendieck rings of M_n(F_2) and GL_n(F_2)."""

from .errors import InvalidArgument, PaperParseError, ResourceLimitError
from .exact_linalg import IntMatrix
from .lambda_ring import Mode, RingElement, mult_by_sum_lambda, multiply, normalize, straighten_pair
from .partitions import Kind, Partition, conjugate, dominance_compare, enumerate_basis, harris_shank_index
from .symmetric_powers import expand_sym, koszul_residual, left_null_covectors, mod2_reduce, sym_rank_profile
from .t_operator import block_decompose, build_t_matrices

__version__ = "0.1.0"
