"""
Scalar arithmetic shared by the float, mpmath and running-error paths.

The numerical modules are written once against plain operators; the
helpers here dispatch the few transcendental functions they need to the
right backend (math/scipy for floats, mpmath for mpf) and provide
Tracked, a float carrying a first-order running error bound, used to
scale identity residuals.
"""

import math
import threading
from contextlib import contextmanager
from typing import Iterable

import mpmath
from scipy import special

# mpmath keeps its precision in process-global state
PRECISION_LOCK = threading.RLock()


@contextmanager
def precision(digits: int):
    """mpmath working precision of `digits` decimal digits, one thread at a time."""
    with PRECISION_LOCK, mpmath.workdps(digits):
        yield


def is_mp(value) -> bool:
    return isinstance(value, (mpmath.mpf, mpmath.mpc))


def exp(value):
    if is_mp(value):
        return mpmath.exp(value)
    return math.exp(float(value))


def log(value):
    if is_mp(value):
        return mpmath.log(value)
    return math.log(float(value))


def sqrt(value):
    if is_mp(value):
        return mpmath.sqrt(value)
    return math.sqrt(float(value))


def loggamma(value):
    if is_mp(value):
        return mpmath.loggamma(value)
    return float(special.gammaln(float(value)))


def isfinite(value) -> bool:
    if is_mp(value):
        return bool(mpmath.isfinite(value))
    return math.isfinite(float(value))


def accurate_sum(values: Iterable):
    """
    Sum values with compensated (exactly rounded) summation.

    Terms are ordered by magnitude so the largest are combined last.
    Tracked terms keep their bounds, mpf terms go through mpmath.fsum.
    """
    terms = sorted(values, key=abs)
    if not terms:
        return 0.0
    if any(isinstance(t, Tracked) for t in terms):
        return Tracked.total(terms)
    if any(is_mp(t) for t in terms):
        return mpmath.fsum(terms)
    return math.fsum(terms)


class Tracked:
    """
    A float with a running bound on the magnitudes that produced it.

    `bound` accumulates |result| of every rounded operation together with
    the propagated bounds of the operands (first-order, Wilkinson style),
    so the rounding error of `value` is at most a small multiple of
    unit-roundoff times `bound`. Integers enter exactly (bound 0), floats
    with bound |c|.
    """

    __slots__ = ('value', 'bound')

    def __init__(self, value, bound=None):
        self.value = float(value)
        if bound is None:
            bound = 0.0 if isinstance(value, int) else abs(self.value)
        self.bound = float(bound)

    @classmethod
    def lift(cls, other) -> 'Tracked':
        if isinstance(other, Tracked):
            return other
        return cls(other)

    @classmethod
    def total(cls, terms) -> 'Tracked':
        lifted = [cls.lift(t) for t in terms]
        value = math.fsum(t.value for t in lifted)
        return cls(value, math.fsum(t.bound for t in lifted) + abs(value))

    def __add__(self, other):
        other = Tracked.lift(other)
        value = self.value + other.value
        return Tracked(value, self.bound + other.bound + abs(value))

    __radd__ = __add__

    def __sub__(self, other):
        other = Tracked.lift(other)
        value = self.value - other.value
        return Tracked(value, self.bound + other.bound + abs(value))

    def __rsub__(self, other):
        return Tracked.lift(other) - self

    def __mul__(self, other):
        other = Tracked.lift(other)
        value = self.value * other.value
        bound = self.bound * abs(other.value) + abs(self.value) * other.bound + abs(value)
        return Tracked(value, bound)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Tracked.lift(other)
        if not other.value:
            raise ZeroDivisionError('Tracked division by zero')
        value = self.value / other.value
        bound = (self.bound + abs(value) * other.bound) / abs(other.value) + abs(value)
        return Tracked(value, bound)

    def __rtruediv__(self, other):
        return Tracked.lift(other) / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Tracked(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __neg__(self):
        return Tracked(-self.value, self.bound)

    def __abs__(self):
        return abs(self.value)

    def __float__(self):
        return self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        return self.value == float(other)

    def __lt__(self, other):
        return self.value < float(other)

    def __le__(self, other):
        return self.value <= float(other)

    def __gt__(self, other):
        return self.value > float(other)

    def __ge__(self, other):
        return self.value >= float(other)

    __hash__ = None

    def __repr__(self):
        return f'Tracked({self.value!r}, bound={self.bound!r})'
