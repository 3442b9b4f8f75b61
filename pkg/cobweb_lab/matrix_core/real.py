"""
Small real matrix algebra for the exponential identity
exp(A (+) B) = exp(A) (x) exp(B), where (+) is the Kronecker sum.
"""

import math

import numpy as np

from cobweb_lab.constants import DEFAULT_EXP_TOL, REAL_EXP_MAX_TERMS
from cobweb_lab.models.custom_errors import ArgumentError, ShapeError
from cobweb_lab.models.matrix import RealMatrix
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)


def kronecker_product(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return RealMatrix(np.kron(a.data, b.data))


def kronecker_sum(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    """a (x) I_m + I_n (x) b for square a (n x n) and b (m x m)."""
    if not a.is_square or not b.is_square:
        raise ShapeError(
            f"kronecker_sum needs square operands, got {a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    return RealMatrix(
        np.kron(a.data, np.eye(b.rows)) + np.kron(np.eye(a.rows), b.data)
    )


def _tail_bound(q: float, last: int) -> float:
    """
    Bound on sum_{j > last} q^j / j! for q >= 0, valid once last + 2 > q.
    """
    if q <= 0:
        return 0.0
    log_first = (last + 1) * math.log(q) - math.lgamma(last + 2)
    if log_first > 700:
        return math.inf
    first = math.exp(log_first)
    return first / (1.0 - q / (last + 2))


def real_exp(m: RealMatrix, tol: float = DEFAULT_EXP_TOL) -> RealMatrix:
    """
    Matrix exponential by plain Taylor summation.

    Summation stops once the tail bound, computed with q = n * max|m_ij|
    (which dominates every power entrywise: |m^j|_ij <= q^j / n), falls
    below tol. A nilpotent input terminates exactly when its power vanishes.
    """
    if not m.is_square:
        raise ShapeError(f"real_exp needs a square matrix, got {m.rows}x{m.cols}")
    if not tol > 0:
        raise ArgumentError(f"tol must be positive, got {tol}")
    if not m.is_finite():
        raise ArgumentError("real_exp input has non-finite entries")

    n = m.rows
    q = n * float(np.max(np.abs(m.data)))
    total = np.eye(n)
    term = np.eye(n)
    for j in range(1, REAL_EXP_MAX_TERMS + 1):
        term = term @ m.data / j
        if not term.any():
            logger.debug("exp series terminated exactly after %d term(s)", j)
            return RealMatrix(total)
        total = total + term
        if j + 2 > q and _tail_bound(q, j) < tol:
            logger.debug("exp series converged after %d term(s), q=%.3g", j, q)
            return RealMatrix(total)
    raise ArgumentError(
        f"real_exp did not reach tol={tol} within {REAL_EXP_MAX_TERMS} terms (q={q:.3g})"
    )
