"""Lattice basis computation with a multi-dimensional Euclidean algorithm."""

__version__ = "0.1.0"

from .arith import altered_mod1, ext_gcd, gcd_many, lcm_many, round_nearest
from .errors import (DimensionMismatch, InvariantViolation, LatticeError, MatrixParseError,
                     RankDeficient, SingularMatrix, TooLarge)
from .euclid_basic import ExchangeTrace, basic_basis, choose_fractional_index
from .euclid_fast import (BasisResult, TranslateChain, choose_max_fractionality_pivot, fast_basis,
                          gcd_chain, lowrank_basis, row_lcms, translate_chain,
                          update_solution_after_exchange)
from .linalg import det, find_independent_columns, find_independent_rows, rank, solve_exact
from .matrix import IntMatrix, RatMatrix, naive_matmul, xadic_matmul
from .oracles import (enumerate_parallelepiped, fractionality_bruteforce, is_basis_of,
                      is_basis_of_projected, lattice_det_minor_gcd)
from .reduction import balance_column, reduce_basis, reduce_result
