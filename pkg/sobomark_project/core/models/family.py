"""
Classical family parameters.

Business Rules:
1. Charlier: mu > 0; gamma is ignored.
2. Meixner: 0 < mu < 1 and gamma > 0.

FamilyParams is the single source of the family coefficient table:
recurrence coefficients, Pearson data (sigma, tau), eigenvalues, structure
relation coefficients, weight and squared norms. Every method works on
float fields or on mpmath mpf fields, so the same code serves the double
precision path and its high-precision twin.
"""

from dataclasses import dataclass, replace
from typing import Optional

import mpmath
from django.db import models

from core.exceptions import ParameterError, SingularPointError
from core.numerics import arith


class FamilyKind(models.TextChoices):
    CHARLIER = 'charlier', 'Charlier'
    MEIXNER = 'meixner', 'Meixner'


@dataclass(frozen=True)
class FamilyParams:
    kind: str
    mu: float
    gamma: Optional[float] = None

    def __post_init__(self):
        if self.kind not in FamilyKind.values:
            raise ParameterError(
                f"FamilyParams.kind must be one of {', '.join(FamilyKind.values)}."
            )
        object.__setattr__(self, 'kind', FamilyKind(self.kind).value)
        if not arith.isfinite(self.mu) or self.mu <= 0:
            raise ParameterError("FamilyParams.mu must be a positive finite number.")
        if self.kind == FamilyKind.MEIXNER:
            if self.mu >= 1:
                raise ParameterError("FamilyParams.mu must satisfy 0 < mu < 1 for Meixner.")
            if self.gamma is None or not arith.isfinite(self.gamma) or self.gamma <= 0:
                raise ParameterError("FamilyParams.gamma must be positive for Meixner.")
        elif self.gamma is not None:
            object.__setattr__(self, 'gamma', None)

    @classmethod
    def charlier(cls, mu) -> 'FamilyParams':
        return cls(FamilyKind.CHARLIER, mu)

    @classmethod
    def meixner(cls, mu, gamma) -> 'FamilyParams':
        return cls(FamilyKind.MEIXNER, mu, gamma)

    @property
    def is_charlier(self) -> bool:
        return self.kind == FamilyKind.CHARLIER

    def to_mp(self) -> 'FamilyParams':
        """Copy with mpf fields at the current mpmath precision."""
        gamma = None if self.gamma is None else mpmath.mpf(self.gamma)
        return replace(self, mu=mpmath.mpf(self.mu), gamma=gamma)

    def to_float(self) -> 'FamilyParams':
        gamma = None if self.gamma is None else float(self.gamma)
        return replace(self, mu=float(self.mu), gamma=gamma)

    # Three-term recurrence x P_n = P_{n+1} + alpha_n P_n + beta_n P_{n-1}

    def alpha(self, n: int):
        mu = self.mu
        if self.is_charlier:
            return n + mu
        return (n * (1 + mu) + mu * self.gamma) / (1 - mu)

    def beta(self, n: int):
        mu = self.mu
        if self.is_charlier:
            return n * mu
        return n * mu * (n - 1 + self.gamma) / (1 - mu) ** 2

    # Pearson pair and hypergeometric eigenvalue

    def sigma(self, x):
        return x

    def tau(self, x):
        mu = self.mu
        if self.is_charlier:
            return mu - x
        return (mu - 1) * x + mu * self.gamma

    def sigma_plus_tau(self, x):
        if self.is_charlier:
            return self.mu
        return self.mu * (x + self.gamma)

    def eigenvalue(self, n: int):
        if self.is_charlier:
            return n
        return (1 - self.mu) * n

    # Structure relation (sigma + tau) Delta P_n = alpha~_n P_n + beta~_n P_{n-1}

    def alpha_tilde(self, n: int):
        if self.is_charlier:
            return 0
        return n * self.mu

    def beta_tilde(self, n: int):
        mu = self.mu
        if self.is_charlier:
            return n * mu
        return n * mu * (n - 1 + self.gamma) / (1 - mu)

    def theta(self, x):
        """Theta(x) = 1 / (sigma(x) + tau(x))."""
        denominator = self.sigma_plus_tau(x)
        if not denominator:
            raise SingularPointError(f"FamilyParams.theta is singular at x={float(x)!r}.")
        return 1 / denominator

    # Weight and norms, log-space

    def _like_mu(self, value):
        return mpmath.mpf(value) if arith.is_mp(self.mu) else value

    def log_weight(self, x):
        mu = self.mu
        x = self._like_mu(x)
        if self.is_charlier:
            return -mu + x * arith.log(mu) - arith.loggamma(x + 1)
        gamma = self.gamma
        return (x * arith.log(mu) + arith.loggamma(gamma + x)
                - arith.loggamma(gamma) - arith.loggamma(x + 1))

    def weight(self, x):
        return arith.exp(self.log_weight(x))

    def log_squared_norm(self, n: int):
        mu = self.mu
        n = self._like_mu(n)
        value = arith.loggamma(n + 1) + n * arith.log(mu)
        if self.is_charlier:
            return value
        gamma = self.gamma
        return (value + arith.loggamma(gamma + n) - arith.loggamma(gamma)
                - (gamma + 2 * n) * arith.log(1 - mu))

    def __str__(self):
        if self.is_charlier:
            return f'Charlier(mu={float(self.mu)!r})'
        return f'Meixner(mu={float(self.mu)!r}, gamma={float(self.gamma)!r})'


@dataclass(frozen=True)
class KernelSpec:
    """Arguments of a difference kernel K_n^{(i,j)}(x, y)."""
    n: int
    i: int
    j: int
    x: float
    y: float

    def __post_init__(self):
        for name in ('n', 'i', 'j'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ParameterError(f"KernelSpec.{name} must be a non-negative integer.")
