"""
Unit Tests for the classical Charlier / Meixner polynomials.

Rules Tested:
1. Family parameter validation (Charlier mu > 0; Meixner 0 < mu < 1, gamma > 0)
2. Recurrence evaluation against exact / 50-digit oracles
3. Orthogonality and squared norms of the truncated weighted sums
4. Christoffel-Darboux kernel against the definitional sum
5. Structure relation and hypergeometric equation residuals

Test Pattern: AAA (Arrange-Act-Assert)
"""

import math
from fractions import Fraction

import mpmath
import pytest

from core.exceptions import ParameterError, SingularPointError
from core.models import FamilyParams, KernelSpec
from core.numerics.polyfamilies import (
    backward_diff, classical_inner, difference_values, eval_classical, evaluate_kernel,
    falling_factorial, forward_diff, kernel, kernel_ij, squared_norm, tail_limit,
    verify_hypergeometric_eq, verify_structure_relation,
)
from tests.oracles import ORACLE_DIGITS, charlier_exact, meixner_mp


def _oracle_error(fam, n, x, oracle):
    """|P_n(x) - oracle| and the comparison scale max(1, |oracle|)."""
    return abs(eval_classical(fam, n, x) - oracle), max(1.0, abs(oracle))


# ============================================================================
# PARAMETER RULES
# ============================================================================

@pytest.mark.unit
class TestFamilyParamsRules:
    """Validation of the classical family parameters."""

    def test_meixner_mu_must_be_below_one(self):
        """
        Arrange: Meixner with mu = 1
        Act: Construct FamilyParams
        Assert: ParameterError naming the admissible range
        """
        # Act & Assert
        with pytest.raises(ParameterError, match="0 < mu < 1 for Meixner"):
            FamilyParams.meixner(1.0, 2.0)

    def test_meixner_gamma_must_be_positive(self):
        with pytest.raises(ParameterError, match="gamma must be positive"):
            FamilyParams.meixner(0.5, 0.0)

    def test_charlier_mu_must_be_positive(self):
        with pytest.raises(ParameterError, match="positive finite"):
            FamilyParams.charlier(0.0)

    def test_charlier_ignores_gamma(self):
        # Arrange & Act
        fam = FamilyParams('charlier', 0.5, 3.0)

        # Assert
        assert fam.gamma is None

    def test_theta_singular_where_sigma_plus_tau_vanishes(self):
        """
        Arrange: Meixner gamma = 2, so sigma + tau = mu (x + 2) vanishes at x = -2
        Act: Evaluate Theta(-2)
        Assert: SingularPointError
        """
        fam = FamilyParams.meixner(0.5, 2.0)

        with pytest.raises(SingularPointError):
            fam.theta(-2.0)

    def test_negative_degree_rejected(self, charlier_unit):
        with pytest.raises(ParameterError, match="non-negative integer"):
            eval_classical(charlier_unit, -1, 0.0)


# ============================================================================
# EVALUATION
# ============================================================================

@pytest.mark.unit
class TestClassicalEvaluation:
    """Recurrence values against independent oracles."""

    def test_degree_zero_is_one(self, charlier_unit, meixner_reference):
        assert eval_classical(charlier_unit, 0, 3.7) == 1
        assert eval_classical(meixner_reference, 0, -2.0) == 1

    def test_charlier_first_degrees_by_hand(self, charlier_unit):
        """
        Arrange: mu = 1, so P_1 = x - 1 and P_2 = x^2 - 3x + 1
        Act: Evaluate at x = 4
        Assert: 3 and 5
        """
        assert eval_classical(charlier_unit, 1, 4.0) == 3
        assert eval_classical(charlier_unit, 2, 4.0) == 5

    @pytest.mark.parametrize('mu', [1.0, 0.0007, 0.0005])
    def test_charlier_matches_exact_rational_oracle(self, mu):
        """
        Arrange: Charlier family, exact Fraction oracle of the explicit sum
        Act: Evaluate n <= 12 on x = -21..20
        Assert: Agreement within 1e-10 of the comparison scale
        """
        fam = FamilyParams.charlier(mu)

        for n in range(13):
            for x in range(-21, 21):
                error, scale = _oracle_error(fam, n, x, float(charlier_exact(mu, n, x)))
                assert error <= 1e-10 * scale, (n, x)

    @pytest.mark.parametrize('mu,gamma', [(0.3, 2.0), (0.0008, 0.000041), (0.0001, 0.000075)])
    def test_meixner_matches_hypergeometric_oracle(self, mu, gamma):
        fam = FamilyParams.meixner(mu, gamma)

        with mpmath.workdps(3 * ORACLE_DIGITS):
            for n in range(13):
                for x in range(-21, 21):
                    error, scale = _oracle_error(fam, n, x, float(meixner_mp(mu, gamma, n, x)))
                    assert error <= 1e-10 * scale, (n, x)

    def test_difference_values_exact_below_and_at_order(self, meixner_reference):
        # Act
        values = difference_values(meixner_reference, 5, 3, 1.5)

        # Assert
        assert values[:3] == [0, 0, 0]
        assert values[3] == 6

    def test_difference_helpers(self):
        assert forward_diff(lambda t: t * t, 2, 5.0) == 2
        assert backward_diff(lambda t: t * t, 1, 3) == 5
        assert falling_factorial(5, 3) == 60
        assert falling_factorial(2.5, 0) == 1


# ============================================================================
# ORTHOGONALITY AND NORMS
# ============================================================================

@pytest.mark.unit
class TestOrthogonality:
    """Truncated weighted sums of products of classical polynomials."""

    def test_charlier_weight_is_a_probability_mass(self):
        for mu in (1.0, 0.0007):
            fam = FamilyParams.charlier(mu)
            assert classical_inner(fam, lambda x: 1, lambda x: 1) == pytest.approx(1.0, rel=1e-12)

    def test_meixner_weight_total(self, meixner_reference):
        """
        Arrange: sum_x (gamma)_x mu^x / x! = (1 - mu)^(-gamma)
        Act: Truncated sum
        Assert: Matches the closed form
        """
        expected = (1 - 0.3) ** -2.0

        total = classical_inner(meixner_reference, lambda x: 1, lambda x: 1)

        assert total == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize('fixture_name', ['charlier_unit', 'meixner_reference'])
    def test_distinct_degrees_are_orthogonal(self, fixture_name, request):
        fam = request.getfixturevalue(fixture_name)

        for n in range(7):
            for m in range(n):
                inner = classical_inner(fam, lambda x: eval_classical(fam, n, x),
                                        lambda x: eval_classical(fam, m, x))
                assert abs(inner) <= 1e-8 * math.sqrt(squared_norm(fam, n) * squared_norm(fam, m))

    @pytest.mark.parametrize('fixture_name', ['charlier_unit', 'meixner_reference'])
    def test_squared_norm_matches_sum(self, fixture_name, request):
        fam = request.getfixturevalue(fixture_name)

        for n in range(7):
            inner = classical_inner(fam, lambda x: eval_classical(fam, n, x),
                                    lambda x: eval_classical(fam, n, x))
            assert inner == pytest.approx(squared_norm(fam, n), rel=1e-8)

    def test_charlier_squared_norm_closed_form(self):
        fam = FamilyParams.charlier(0.5)

        assert squared_norm(fam, 4) == pytest.approx(24 * 0.5 ** 4, rel=1e-13)

    def test_tail_limit_is_finite_and_small_for_presets(self):
        fam = FamilyParams.charlier(0.0007)

        limit = tail_limit(fam)

        assert 8 <= limit < 200


# ============================================================================
# KERNELS
# ============================================================================

@pytest.mark.unit
class TestKernels:
    """Christoffel-Darboux and difference kernels."""

    def test_difference_kernel_by_hand(self, charlier_unit):
        """
        Arrange: mu = 1, n = 2, i = j = 1, x = y = 0
                 Delta P_1 = 1, Delta P_2(0) = -2, norms 1 and 2
        Act: K_2^{(1,1)}(0, 0)
        Assert: 1 + 4 / 2 = 3
        """
        value = evaluate_kernel(charlier_unit, KernelSpec(n=2, i=1, j=1, x=0, y=0))

        assert value == pytest.approx(3.0, rel=1e-12)

    def test_difference_kernel_against_exact_sum(self):
        fam = FamilyParams.charlier(1.0)

        def delta(n, x):
            return charlier_exact(1, n, x + 1) - charlier_exact(1, n, x)

        expected = sum(delta(k, 3) * delta(k, -2) / math.factorial(k) for k in range(6))

        assert kernel_ij(fam, 5, 1, 1, 3, -2) == pytest.approx(float(expected), rel=1e-10, abs=1e-9)

    @pytest.mark.parametrize('fixture_name', ['charlier_unit', 'meixner_reference'])
    def test_christoffel_darboux_matches_definition(self, fixture_name, request):
        fam = request.getfixturevalue(fixture_name)

        for n in range(7):
            for x, y in ((2.5, 0.0), (4.0, 1.0), (-3.0, 6.0)):
                assert kernel(fam, n, x, y) == pytest.approx(kernel_ij(fam, n, 0, 0, x, y), rel=1e-10, abs=1e-12)

    def test_near_diagonal_uses_definitional_sum(self, charlier_unit):
        # Arrange - |x - y| below DELTA_CD
        x, y = 2.0, 2.0 + 1e-9

        # Act & Assert
        assert kernel(charlier_unit, 4, x, y) == pytest.approx(kernel_ij(charlier_unit, 4, 0, 0, x, y))

    def test_exact_rational_kernel_value(self):
        """Cross-check of K_2(1, 0) for mu = 1 with Fractions."""
        expected = sum(charlier_exact(1, k, 1) * charlier_exact(1, k, 0) / math.factorial(k) for k in range(3))

        assert kernel(FamilyParams.charlier(1.0), 2, 1.0, 0.0) == pytest.approx(float(Fraction(expected)), rel=1e-12)


# ============================================================================
# IDENTITY RESIDUALS
# ============================================================================

@pytest.mark.unit
class TestClassicalIdentities:
    """Structure relation and hypergeometric difference equation."""

    def test_structure_relation_degree_one_by_hand(self, charlier_unit):
        residual = verify_structure_relation(charlier_unit, 1, 0)

        assert residual.absolute == 0

    def test_degree_zero_residuals_vanish(self, meixner_reference):
        assert verify_structure_relation(meixner_reference, 0, 4).absolute == 0
        assert verify_hypergeometric_eq(meixner_reference, 0, 4).absolute == 0

    def test_hypergeometric_degree_one_by_hand(self, charlier_unit):
        assert verify_hypergeometric_eq(charlier_unit, 1, 3).relative <= 1e-15

    @pytest.mark.parametrize('fam', [
        FamilyParams.charlier(1.0),
        FamilyParams.charlier(0.0007),
        FamilyParams.meixner(0.5, 1.0),
        FamilyParams.meixner(0.3, 2.0),
        FamilyParams.meixner(0.0008, 0.000041),
    ], ids=str)
    def test_residuals_vanish_on_grid(self, fam):
        """
        Arrange: n <= 12, x = 0..20
        Act: Both classical identities
        Assert: Relative residuals within 1e-9
        """
        for n in range(13):
            for x in range(21):
                assert verify_structure_relation(fam, n, x).relative <= 1e-9, (n, x)
                assert verify_hypergeometric_eq(fam, n, x).relative <= 1e-9, (n, x)
