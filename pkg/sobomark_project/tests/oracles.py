"""
Independent reference values for the numerics tests.

Charlier polynomials are evaluated exactly with fractions.Fraction from
the explicit sum C_n(x) = sum_k binom(n, k) (-mu)^(n-k) [x]_k; Meixner
polynomials at 50 digits from the terminating 2F1 representation.
Sobolev-type values reuse both through the connection formula.
"""

import math
from fractions import Fraction

import mpmath

ORACLE_DIGITS = 50


def _falling(x, k):
    result = 1
    for i in range(k):
        result *= x - i
    return result


def _rising(a, k):
    result = 1
    for i in range(k):
        result *= a + i
    return result


def charlier_exact(mu, n: int, x) -> Fraction:
    mu, x = Fraction(mu), Fraction(x)
    return sum(math.comb(n, k) * (-mu) ** (n - k) * _falling(x, k) for k in range(n + 1))


def meixner_mp(mu, gamma, n: int, x):
    """Monic Meixner: (gamma)_n (mu / (mu - 1))^n 2F1(-n, -x; gamma; 1 - 1/mu)."""
    with mpmath.workdps(max(mpmath.mp.dps, ORACLE_DIGITS)):
        mu, gamma, x = mpmath.mpf(mu), mpmath.mpf(gamma), mpmath.mpf(x)
        z = 1 - 1 / mu
        series = mpmath.fsum(
            _rising(-n, k) * _rising(-x, k) / (_rising(gamma, k) * mpmath.factorial(k)) * z ** k
            for k in range(n + 1)
        )
        return _rising(gamma, n) * (mu / (mu - 1)) ** n * series


def charlier_mp(mu, n: int, x):
    mu, x = mpmath.mpf(mu), mpmath.mpf(x)
    return mpmath.fsum(math.comb(n, k) * (-mu) ** (n - k) * _falling(x, k) for k in range(n + 1))


def classical_mp(fam, n: int, x):
    """P_n(x) at the current mpmath precision, for either family."""
    if fam.is_charlier:
        return charlier_mp(fam.mu, n, x)
    return meixner_mp(fam.mu, fam.gamma, n, x)


def squared_norm_mp(fam, n: int):
    mu = mpmath.mpf(fam.mu)
    value = mpmath.factorial(n) * mu ** n
    if fam.is_charlier:
        return value
    gamma = mpmath.mpf(fam.gamma)
    return value * _rising(gamma, n) / (1 - mu) ** (gamma + 2 * n)


def forward_difference_mp(f, k: int, x):
    return mpmath.fsum((-1) ** (k - i) * math.comb(k, i) * f(x + i) for i in range(k + 1))


def sobolev_mp(fam, alpha, lam, j: int, n: int, x, digits: int = 120):
    """S_n(x) straight from the connection formula at `digits` digits."""
    with mpmath.workdps(digits):
        alpha, lam, x = mpmath.mpf(alpha), mpmath.mpf(lam), mpmath.mpf(x)
        if n == 0:
            return mpmath.mpf(1)

        def diff_at_alpha(k):
            return forward_difference_mp(lambda t: classical_mp(fam, k, t), j, alpha)

        norms = [squared_norm_mp(fam, k) for k in range(n)]
        diagonal = mpmath.fsum(diff_at_alpha(k) ** 2 / norms[k] for k in range(n))
        kernel = mpmath.fsum(classical_mp(fam, k, x) * diff_at_alpha(k) / norms[k] for k in range(n))
        correction = lam * diff_at_alpha(n) / (1 + lam * diagonal)
        return +(classical_mp(fam, n, x) - correction * kernel)
