"""
Classical monic Charlier and Meixner polynomials.

Evaluation by the three-term recurrence
    x P_n(x) = P_{n+1}(x) + alpha_n P_n(x) + beta_n P_{n-1}(x),  P_0 = 1,
forward/backward differences by binomial expansion, squared norms and
weights in log-space, and Christoffel-Darboux kernels with difference
derivatives.

All functions are generic in the scalar type: floats, mpmath mpf (when the
FamilyParams carry mpf fields) and Tracked running-error values.
"""

import logging
import math
from functools import lru_cache
from typing import Callable, List, Sequence

import mpmath

from core.conf import sobomark_setting
from core.exceptions import ParameterError
from core.models.family import FamilyParams, KernelSpec
from core.models.report import Residual
from core.numerics import arith
from core.numerics.arith import Tracked

logger = logging.getLogger(__name__)


def _check_order(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParameterError(f"{name} must be a non-negative integer, got {value!r}.")


def recurrence_digits(fam: FamilyParams, n: int) -> int:
    """
    Digits that keep the forward recurrence exact to double precision.

    Near the support the recurrence cancels about log10(1/mu) digits per
    degree (and log10(1/gamma) once for Meixner).
    """
    fam = fam.to_float()
    loss = n * max(0.0, -math.log10(fam.mu))
    if fam.gamma is not None:
        loss += max(0.0, -math.log10(fam.gamma))
    return sobomark_setting('EXTRA_DIGITS') + math.ceil(loss)


@lru_cache(maxsize=16384)
def _cached_values(fam: FamilyParams, n: int, x: float) -> tuple:
    # double-precision families: run on mpf and round once
    with arith.precision(recurrence_digits(fam, n)):
        return tuple(float(v) for v in _recurrence(fam.to_mp(), n, mpmath.mpf(x)))


def _recurrence(fam: FamilyParams, n: int, x) -> List:
    values = [1]
    if n >= 1:
        values.append(x - fam.alpha(0))
    for k in range(1, n):
        values.append((x - fam.alpha(k)) * values[k] - fam.beta(k) * values[k - 1])
    return values


def classical_values(fam: FamilyParams, n: int, x) -> Sequence:
    """
    P_0(x), ..., P_n(x) by forward recurrence.

    Double-precision families at plain numbers get values rounded once from
    an mpf recurrence; mpf and Tracked arguments use their own arithmetic.
    """
    _check_order('Degree n', n)
    if isinstance(x, (int, float)) and not arith.is_mp(fam.mu):
        return _cached_values(fam, n, float(x))
    return _recurrence(fam, n, x)


def eval_classical(fam: FamilyParams, n: int, x):
    """Monic P_n(x) of the family."""
    return classical_values(fam, n, x)[n]


def squared_norm(fam: FamilyParams, n: int):
    """||P_n||^2, evaluated as exp of the log-space norm."""
    _check_order('Degree n', n)
    return arith.exp(fam.log_squared_norm(n))


def forward_diff(f: Callable, k: int, x):
    """Delta^k f(x) = sum_m (-1)^(k-m) C(k, m) f(x + m)."""
    _check_order('Difference order k', k)
    if k == 0:
        return f(x)
    terms = [(-1) ** (k - m) * math.comb(k, m) * f(x + m) for m in range(k + 1)]
    return _plain_sum(terms)


def backward_diff(f: Callable, k: int, x):
    """nabla^k f(x) = sum_m (-1)^m C(k, m) f(x - m)."""
    _check_order('Difference order k', k)
    if k == 0:
        return f(x)
    terms = [(-1) ** m * math.comb(k, m) * f(x - m) for m in range(k + 1)]
    return _plain_sum(terms)


def _plain_sum(terms):
    # left to right, so Tracked and mpf terms keep their own arithmetic
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def falling_factorial(x, k: int):
    """[x]_k = x (x - 1) ... (x - k + 1), [x]_0 = 1."""
    _check_order('Order k', k)
    result = 1
    for i in range(k):
        result = result * (x - i)
    return result


def difference_values(fam: FamilyParams, n: int, order: int, x) -> List:
    """
    Delta^order P_k(x) for k = 0..n.

    Degrees below the order vanish and Delta^k P_k = k! (monic), so those
    entries are exact; the rest use the binomial expansion.
    """
    _check_order('Difference order', order)
    if order == 0:
        return list(classical_values(fam, n, x))
    shifted = [classical_values(fam, n, x + m) for m in range(order + 1)]
    weights = [(-1) ** (order - m) * math.comb(order, m) for m in range(order + 1)]
    values = []
    for k in range(n + 1):
        if k < order:
            values.append(0)
        elif k == order:
            values.append(math.factorial(order))
        else:
            values.append(_plain_sum([w * row[k] for w, row in zip(weights, shifted)]))
    return values


def weight(fam: FamilyParams, x):
    return fam.weight(x)


@lru_cache(maxsize=256)
def tail_limit(fam: FamilyParams, degree: int = None) -> int:
    """
    Last support point X kept when truncating sums over x >= 0.

    Accumulates until the magnitude bound rho(x) (1 + x)^degree of the next
    term stays below TAIL_TOLERANCE times the running sum of bounds for
    TAIL_RUN consecutive points; capped at TAIL_CAP.
    """
    fam = fam.to_float()
    if degree is None:
        degree = 2 * sobomark_setting('N_MAX')
    log_tol = math.log(sobomark_setting('TAIL_TOLERANCE'))
    run_needed = sobomark_setting('TAIL_RUN')
    cap = sobomark_setting('TAIL_CAP')

    log_total = -math.inf
    run = 0
    for x in range(cap + 1):
        log_term = fam.log_weight(x) + degree * math.log1p(x)
        if log_total > -math.inf and log_term < log_total + log_tol:
            run += 1
            if run >= run_needed:
                return x
        else:
            run = 0
        log_total = max(log_total, log_term) + math.log1p(math.exp(-abs(log_total - log_term)))
    logger.warning("Tail truncation for %s reached the cap X_max=%d", fam, cap)
    return cap


def classical_inner(fam: FamilyParams, f: Callable, g: Callable, degree: int = None):
    """Truncated sum over x = 0..X of f(x) g(x) rho(x)."""
    limit = tail_limit(fam.to_float(), degree)
    terms = [f(x) * g(x) * fam.weight(x) for x in range(limit + 1)]
    return arith.accurate_sum(terms)


def kernel(fam: FamilyParams, n: int, x, y):
    """
    K_n(x, y) = sum_{k<=n} P_k(x) P_k(y) / ||P_k||^2.

    Off the diagonal (|x - y| > DELTA_CD) the Christoffel-Darboux quotient
    is used; close to it, the definitional sum.
    """
    _check_order('Degree n', n)
    if abs(x - y) > sobomark_setting('DELTA_CD'):
        px = classical_values(fam, n + 1, x)
        py = classical_values(fam, n + 1, y)
        numerator = px[n + 1] * py[n] - px[n] * py[n + 1]
        return numerator / (squared_norm(fam, n) * (x - y))
    return kernel_ij(fam, n, 0, 0, x, y)


def kernel_ij(fam: FamilyParams, n: int, i: int, j: int, x, y):
    """K_n^{(i,j)}(x, y) = sum_{k<=n} Delta^i P_k(x) Delta^j P_k(y) / ||P_k||^2."""
    _check_order('Degree n', n)
    dx = difference_values(fam, n, i, x)
    dy = difference_values(fam, n, j, y)
    return _plain_sum([dx[k] * dy[k] / squared_norm(fam, k) for k in range(n + 1)])


def evaluate_kernel(fam: FamilyParams, spec: KernelSpec):
    return kernel_ij(fam, spec.n, spec.i, spec.j, spec.x, spec.y)


def verify_structure_relation(fam: FamilyParams, n: int, x) -> Residual:
    """[sigma(x) + tau(x)] Delta P_n(x) = alpha~_n P_n(x) + beta~_n P_{n-1}(x)."""
    _check_order('Degree n', n)
    x = Tracked.lift(x)
    values = classical_values(fam, n, x)
    delta = difference_values(fam, n, 1, x)[n]
    lhs = (fam.sigma(x) + fam.tau(x)) * delta
    previous = values[n - 1] if n else 0
    rhs = fam.alpha_tilde(n) * values[n] + fam.beta_tilde(n) * previous
    return Residual.between(Tracked.lift(lhs), Tracked.lift(rhs))


def verify_hypergeometric_eq(fam: FamilyParams, n: int, x) -> Residual:
    """sigma(x) Delta nabla P_n(x) + tau(x) Delta P_n(x) + lambda_n P_n(x) = 0."""
    _check_order('Degree n', n)
    x = Tracked.lift(x)
    below = classical_values(fam, n, x - 1)[n]
    here = classical_values(fam, n, x)[n]
    above = classical_values(fam, n, x + 1)[n]
    # Delta nabla P(x) = P(x+1) - 2 P(x) + P(x-1)
    second = above - 2 * here + below
    lhs = fam.sigma(x) * second + fam.tau(x) * (above - here)
    rhs = -(fam.eigenvalue(n) * here)
    return Residual.between(Tracked.lift(lhs), Tracked.lift(rhs))
