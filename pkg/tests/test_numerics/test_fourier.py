from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import special

from stablevoigt.core.errors import QuadratureError
from stablevoigt.core.models import Grid1D, StableParams
from stablevoigt.numerics.fourier import (
    apply_multiplier,
    central_mass,
    cosine_inversion,
    dft_inversion,
    inversion_bound,
    periodized_edge_bound,
    quad_checked,
    wavenumbers,
)
from stablevoigt.numerics.symbol import LevySymbol
from tests.conftest import cauchy, gaussian

GAUSS = LevySymbol.from_stable(StableParams(2.0, 1.0))
CAUCHY = LevySymbol.from_stable(StableParams(1.0, 1.0))


class TestCosineInversion:
    @pytest.mark.parametrize("x", [0.0, 0.3, 1.0, 4.0])
    def test_gaussian(self, x: float) -> None:
        value, err = cosine_inversion(GAUSS, x, 1e-12)
        assert value == pytest.approx(float(gaussian(x)), abs=1e-12)
        assert err <= 1e-12

    @pytest.mark.parametrize("x", [0.0, 2.0, 50.0, 500.0])
    def test_cauchy_all_regimes(self, x: float) -> None:
        # 500 * cutoff is past the finite-interval limit, so QAWF is used there
        value, _ = cosine_inversion(CAUCHY, x, 1e-12)
        assert value == pytest.approx(float(cauchy(x)), abs=1e-11)

    def test_even_in_x(self) -> None:
        assert cosine_inversion(CAUCHY, -3.0, 1e-12)[0] == cosine_inversion(CAUCHY, 3.0, 1e-12)[0]


class TestCentralMass:
    def test_cauchy_quartiles(self) -> None:
        assert central_mass(CAUCHY, 1.0) == pytest.approx(0.5, abs=1e-9)

    def test_gaussian(self) -> None:
        # variance 2: P(|X| <= a) = erf(a / 2)
        assert central_mass(GAUSS, 2.0) == pytest.approx(special.erf(1.0), abs=1e-9)

    def test_zero_width(self) -> None:
        assert central_mass(GAUSS, 0.0) == 0.0


class TestDiscreteInversion:
    def test_gaussian_samples(self) -> None:
        grid = Grid1D(extent=20.0, n=401)
        values = dft_inversion(GAUSS.cf(wavenumbers(grid)), grid)
        np.testing.assert_allclose(values, gaussian(grid.points), atol=1e-13)

    def test_even_grid_size_is_symmetric(self) -> None:
        grid = Grid1D(extent=20.0, n=400)
        values = dft_inversion(GAUSS.cf(wavenumbers(grid)), grid)
        np.testing.assert_array_equal(values, values[::-1])
        np.testing.assert_allclose(values, gaussian(grid.points), atol=1e-13)

    def test_periodic_mass_is_one_for_heavy_tails(self) -> None:
        grid = Grid1D(extent=10.0, n=2001)
        values = dft_inversion(CAUCHY.cf(wavenumbers(grid)), grid)
        assert np.sum(values) * grid.spacing == pytest.approx(1.0, abs=1e-12)

    def test_bound_separates_easy_and_hard_grids(self) -> None:
        assert inversion_bound(GAUSS, Grid1D(extent=20.0, n=401)) < 1e-12
        assert inversion_bound(CAUCHY, Grid1D(extent=10.0, n=201)) > 1e-6

    def test_edge_bound_covers_periodized_value(self) -> None:
        grid = Grid1D(extent=10.0, n=2001)
        values = dft_inversion(CAUCHY.cf(wavenumbers(grid)), grid)
        bound = periodized_edge_bound(CAUCHY, grid)
        # the edge sample sits well above the unperiodized density there
        assert values[-1] > 1.5 * float(cauchy(grid.extent))
        assert values[-1] <= bound < 3.0 * values[-1]

    def test_identity_multiplier(self) -> None:
        values = np.random.default_rng(3).normal(size=64)
        np.testing.assert_allclose(apply_multiplier(values, np.ones(64)), values, atol=1e-14)


class TestQuadChecked:
    def test_smooth_integral(self) -> None:
        value, err = quad_checked(math.exp, 0.0, 1.0, tol=1e-12, what="exp")
        assert value == pytest.approx(math.e - 1.0, rel=1e-14)
        assert err < 1e-12

    def test_divergent_integral_raises(self) -> None:
        with pytest.raises(QuadratureError):
            quad_checked(lambda x: 1.0 / x, 0.0, 1.0, tol=1e-10, what="1/x")
