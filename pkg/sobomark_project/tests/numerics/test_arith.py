"""
Unit Tests for the scalar helpers: running error bounds and accurate sums.
"""

import math

import mpmath
import pytest

from core.numerics import arith
from core.numerics.arith import Tracked, accurate_sum


@pytest.mark.unit
class TestTracked:
    """First-order running error bounds."""

    def test_integers_enter_exactly(self):
        assert Tracked(3).bound == 0

    def test_floats_enter_with_their_magnitude(self):
        assert Tracked(-0.5).bound == 0.5

    def test_bound_accumulates_operand_bounds(self):
        """
        Arrange: a = 2.0 (bound 2), b = 3 (exact)
        Act: a * b + 1
        Assert: value 7; bound = (2*3 + 6) + 7
        """
        result = Tracked(2.0) * 3 + 1

        assert result.value == 7
        assert result.bound == pytest.approx(19)

    def test_division_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            Tracked(1.0) / 0

    def test_cancellation_keeps_large_bound(self):
        # Act
        result = (Tracked(1e16) + 1.0) - 1e16

        # Assert - the error of the value stays below eps * bound
        assert abs(result.value - 1.0) <= 2 * 2.0 ** -52 * result.bound

    def test_reflected_operations(self):
        assert (1 - Tracked(0.25)).value == 0.75
        assert (1 / Tracked(4.0)).value == 0.25
        assert (Tracked(2.0) ** 3).value == 8


@pytest.mark.unit
class TestAccurateSum:

    def test_float_sum_is_exactly_rounded(self):
        assert accurate_sum([1e16, 1.0, -1e16]) == 1.0

    def test_empty_sum_is_zero(self):
        assert accurate_sum([]) == 0.0

    def test_tracked_terms_give_tracked_total(self):
        total = accurate_sum([Tracked(1.0), 2.0])

        assert isinstance(total, Tracked)
        assert total.value == 3.0

    def test_mp_terms_stay_mp(self):
        with mpmath.workdps(40):
            total = accurate_sum([mpmath.mpf(1) / 3, mpmath.mpf(2) / 3])

        assert arith.is_mp(total)
        assert abs(total - 1) < mpmath.mpf("1e-35")


@pytest.mark.unit
def test_loggamma_dispatch():
    assert arith.loggamma(5.0) == pytest.approx(math.log(24))
    with mpmath.workdps(30):
        assert arith.is_mp(arith.loggamma(mpmath.mpf(5)))
