from __future__ import annotations

import math

import numpy as np
import pytest

from stablevoigt.core.errors import InvalidParameterError
from stablevoigt.core.models import ClassicVoigtSpec, StableParams, VoigtSpec
from stablevoigt.numerics.symbol import LevySymbol
from tests.conftest import cauchy


class TestConstruction:
    def test_classic_coefficients(self) -> None:
        symbol = LevySymbol.from_classic(ClassicVoigtSpec(omega_g=2.0, omega_l=0.5))
        assert symbol.alphas == (1.0, 2.0)
        assert symbol.coeffs == (0.5, 1.0)

    def test_equal_exponents_merge(self) -> None:
        symbol = LevySymbol.from_voigt(VoigtSpec(1.5, 1.5, tau=2.0))
        assert symbol.alphas == (1.5,)
        assert symbol.coeffs == (4.0,)

    def test_terms_sorted_by_exponent(self) -> None:
        symbol = LevySymbol.build([(2.0, 1.0), (0.5, 3.0)])
        assert symbol.alphas == (0.5, 2.0)
        assert symbol.coeffs == (3.0, 1.0)

    def test_invalid_term(self) -> None:
        with pytest.raises(InvalidParameterError):
            LevySymbol(alphas=(2.5,), coeffs=(1.0,))
        with pytest.raises(InvalidParameterError):
            LevySymbol(alphas=(1.0,), coeffs=(0.0,))
        with pytest.raises(InvalidParameterError):
            LevySymbol(alphas=(1.0, 2.0), coeffs=(1.0,))


class TestEvaluation:
    def test_cf_is_exp_of_minus_symbol(self) -> None:
        symbol = LevySymbol.from_voigt(VoigtSpec(1.0, 2.0, tau=0.7))
        k = np.array([-3.0, -0.5, 0.0, 0.5, 3.0])
        expected = np.exp(-0.7 * (np.abs(k) + k**2))
        np.testing.assert_allclose(symbol.cf(k), expected, rtol=1e-13)
        assert symbol.cf_scalar(-3.0) == pytest.approx(expected[0], rel=1e-13)

    def test_rescaled_to_unit_width(self) -> None:
        symbol = LevySymbol.from_voigt(VoigtSpec(0.5, 1.5, tau=10.0))
        unit = symbol.rescaled(symbol.width)
        assert unit.width == pytest.approx(1.0, rel=1e-14)

    def test_cutoff(self) -> None:
        symbol = LevySymbol.from_stable(StableParams(2.0, 4.0))
        k = symbol.cutoff(36.0)
        assert k == pytest.approx(3.0)
        assert symbol.cf_scalar(k) == pytest.approx(math.exp(-36.0))

    def test_origin_density(self) -> None:
        for alpha in (0.5, 1.0, 1.5, 2.0):
            symbol = LevySymbol.from_stable(StableParams(alpha, 2.0))
            expected = math.gamma(1.0 + 1.0 / alpha) * 2.0 ** (-1.0 / alpha) / math.pi
            assert symbol.origin_density() == pytest.approx(expected, rel=1e-12)
        assert LevySymbol.from_voigt(VoigtSpec(1.0, 2.0)).origin_density() is None


class TestTailSeries:
    def test_cauchy_tail_terms(self) -> None:
        symbol = LevySymbol.from_stable(StableParams(1.0, 2.0))
        terms = symbol.tail_terms(order=3)
        # even powers of |k| carry no tail
        assert [t.beta for t in terms] == [1.0, 3.0]
        assert terms[0].coeff == pytest.approx(2.0 / math.pi)
        assert terms[1].coeff == pytest.approx(-8.0 / math.pi)

    def test_tail_density_matches_cauchy(self) -> None:
        symbol = LevySymbol.from_stable(StableParams(1.0, 1.0))
        x = np.array([200.0, 1e3, 1e5])
        np.testing.assert_allclose(symbol.tail_density(x), cauchy(x), rtol=1e-12)

    def test_gaussian_has_no_algebraic_tail(self) -> None:
        symbol = LevySymbol.from_stable(StableParams(2.0, 1.0))
        assert symbol.tail_terms() == []
        assert symbol.is_gaussian

    def test_tail_mass_cauchy(self) -> None:
        symbol = LevySymbol.from_stable(StableParams(1.0, 1.0))
        expected = 1.0 - 2.0 / math.pi * math.atan(100.0)
        assert symbol.tail_mass(100.0) == pytest.approx(expected, rel=1e-12)

    def test_tail_moment_cauchy(self) -> None:
        symbol = LevySymbol.from_stable(StableParams(1.0, 1.0))
        value, last = symbol.tail_moment(1e4, 0.5)
        # int_X^inf x^0.5 / (pi x^2) dx = X^-0.5 / (0.5 pi)
        assert value == pytest.approx(1e4**-0.5 / (0.5 * math.pi), rel=1e-7)
        assert last < 1e-20

    def test_envelope_bounds_leading_tail(self) -> None:
        symbol = LevySymbol.from_voigt(VoigtSpec(0.5, 2.0, tau=1.0))
        x = np.geomspace(100.0, 1e6, 20)
        assert np.all(symbol.tail_envelope(x) >= np.abs(symbol.leading_tail(x)))
