"""
Weighted Sobolev polynomials and the moment basis of image blocks.

    S_bar_n(x) = S_n(x) sqrt(rho(x) / ||S_n||_lam^2)
    A[x][n]    = S_bar_n(x),  x, n = 0..N-1
    M = A C A^T,   W = A^T M A

Weighted values are evaluated on the mpmath twin of the Sobolev family:
for x < n the classical value is an O(mu^(n-x)) remainder of O(1) terms
and double precision recurrences lose it. Transforms run in numpy on the
rounded basis and broadcast over stacks of blocks.
"""

import logging
from functools import lru_cache

import mpmath
import numpy as np

from core.conf import sobomark_setting
from core.exceptions import ConstructionError, DimensionError, ParameterError, SingularPointError
from core.models.basis import MomentBasis
from core.models.sobolev import SobolevFamily
from core.numerics import arith
from core.numerics.sobolev import (
    SobolevCoefficients, twin_family, high_precision, sobolev_eval, sobolev_norm_sq,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def _twin_norm(fam, sob, n_max, digits, n):
    # only called inside high_precision()
    return sobolev_norm_sq(twin_family(fam, sob, n_max, digits), n)


def _norm_sq(twin: SobolevFamily, n: int):
    fam, sob = twin.fam.to_float(), twin.sob.to_float()
    return _twin_norm(fam, sob, twin.n_max, mpmath.mp.dps, n)


def _weighted(twin: SobolevFamily, n: int, x: int):
    value = sobolev_eval(twin, n, x)
    log_scale = (twin.fam.log_weight(x) - arith.log(_norm_sq(twin, n))) / 2
    return value * arith.exp(log_scale)


def _check_grid_point(x) -> int:
    if isinstance(x, bool) or int(x) != x or x < 0:
        raise ParameterError(f"Weighted polynomials are sampled on the pixel grid; got x={x!r}.")
    return int(x)


def weighted_eval(sf: SobolevFamily, n: int, x) -> float:
    """S_bar_n(x) rounded to double."""
    x = _check_grid_point(x)
    sf.check_degree(n)
    with high_precision(sf) as twin:
        return float(_weighted(twin, n, x))


def weighted_recurrence_eval(sf: SobolevFamily, degree: int, x) -> float:
    """
    S_bar_{n+1}(x) = Psi_1 S_bar_n(x) + Psi_2 S_bar_{n-1}(x) with n = degree - 1,

        Psi_1 = (||S_n|| / ||S_{n+1}||) alpha_bar_n / Xi_2,
        Psi_2 = (||S_{n-1}|| / ||S_{n+1}||) beta_bar_n / Xi_2.

    alpha_bar is an O(lam) remainder of O(1) terms, so the whole
    evaluation runs on the high-precision twin.

    Raises:
        SingularPointError: Xi_2(x) vanishes or x is degenerate
    """
    x = _check_grid_point(x)
    if degree < 2:
        raise ParameterError("weighted_recurrence_eval needs degree n + 1 >= 2.")
    if degree > sf.n_max:
        raise ParameterError(f"Degree {degree} exceeds the family's n_max={sf.n_max}.")
    n = degree - 1
    with high_precision(sf) as twin:
        coefficients = SobolevCoefficients(twin, mpmath.mpf(x))
        xi2, alpha_bar, beta_bar = coefficients.recurrence(n)
        if not xi2:
            raise SingularPointError(f"Xi_2 vanishes at x={x} for n={n}; use weighted_eval.")
        norm_next = arith.sqrt(_norm_sq(twin, n + 1))
        psi1 = arith.sqrt(_norm_sq(twin, n)) / norm_next * alpha_bar / xi2
        psi2 = arith.sqrt(_norm_sq(twin, n - 1)) / norm_next * beta_bar / xi2
        return float(psi1 * _weighted(twin, n, x) + psi2 * _weighted(twin, n - 1, x))


def build_basis(sf: SobolevFamily, size: int = None) -> MomentBasis:
    """
    Moment basis A with A[x][n] = S_bar_n(x).

    Raises:
        ParameterError: size < 2 or beyond the family's cached degrees
        ConstructionError: non-finite entry
    """
    size = size or sobomark_setting('BLOCK_SIZE')
    if size < 2:
        raise ParameterError("MomentBasis size N must be at least 2.")
    if size - 1 > sf.n_max:
        raise ParameterError(f"MomentBasis size {size} needs n_max >= {size - 1}, got {sf.n_max}.")

    matrix = np.empty((size, size), dtype=np.float64)
    with high_precision(sf) as twin:
        for x in range(size):
            for n in range(size):
                matrix[x, n] = float(_weighted(twin, n, x))
    bad = np.argwhere(~np.isfinite(matrix))
    if bad.size:
        x, n = bad[0]
        raise ConstructionError(f"MomentBasis entry (n={n}, x={x}) is not finite for {sf}.")
    basis = MomentBasis(sf, matrix)
    logger.info("Built %dx%d moment basis for %s (orthonormality deviation %.3g)",
                size, size, sf, gram_deviation(basis))
    return basis


def identity_basis(size: int) -> MomentBasis:
    return MomentBasis(None, np.eye(size))


def _check_blocks(basis: MomentBasis, blocks) -> np.ndarray:
    blocks = np.asarray(blocks, dtype=np.float64)
    size = basis.size
    if blocks.ndim < 2 or blocks.shape[-2:] != (size, size):
        raise DimensionError(
            f"Blocks must end in shape ({size}, {size}), got {blocks.shape}."
        )
    return blocks


def direct_moments(basis: MomentBasis, block) -> np.ndarray:
    """M = A (C A^T); accepts one block or a stack of blocks."""
    a = basis.matrix
    return a @ (_check_blocks(basis, block) @ a.T)


def inverse_moments(basis: MomentBasis, moments) -> np.ndarray:
    """W = A^T (M A); accepts one matrix or a stack."""
    a = basis.matrix
    return a.T @ (_check_blocks(basis, moments) @ a)


def gram_deviation(basis: MomentBasis) -> float:
    """max |A^T A - I|."""
    a = basis.matrix
    return float(np.max(np.abs(a.T @ a - np.eye(basis.size))))


def round_trip_error(basis: MomentBasis, blocks) -> float:
    blocks = _check_blocks(basis, blocks)
    return float(np.max(np.abs(inverse_moments(basis, direct_moments(basis, blocks)) - blocks)))


def basis_rows(basis: MomentBasis) -> list:
    """Rows x = 0..N-1 of A as strings with 17 significant digits."""
    return [[format(value, '.17g') for value in row] for row in basis.matrix.tolist()]


def exact_recovery_bound(basis: MomentBasis) -> float:
    """N^2 * 255 * max|A^T A - I|, the round-trip error bound for byte blocks."""
    return basis.size ** 2 * 255 * gram_deviation(basis)
