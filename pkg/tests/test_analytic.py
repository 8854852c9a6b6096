"""Closed-form interferometer model: values, oracles, and invariants."""

import math

import numpy as np
import pytest

from dispersive_mzi import analytic
from dispersive_mzi.analytic import (
    FisherMatrix,
    LandscapeGrid,
    ModelParams,
    fim_analytic,
    output_probabilities,
    plateau_mask,
    probability_gradient,
    scalar_figures,
    two_outcome_fim,
    visibility,
    visibility_derivative,
)
from dispersive_mzi.errors import ConfigError, DegeneratePointError

RNG = np.random.default_rng(20260809)


def random_params(n=1, beta_span=4.0, rng=RNG):
    return ModelParams(
        beta=float(rng.uniform(-beta_span, beta_span)),
        x=float(rng.uniform(-np.pi / 2, np.pi / 2)),
        n_photons=n,
    )


class TestVisibility:
    def test_infinite_temperature_value(self):
        # V(0) = 1/3
        assert visibility(ModelParams(beta=0.0, x=0.0)) == pytest.approx(1 / 3, abs=1e-15)

    def test_asymptotes(self):
        assert visibility(ModelParams(beta=50.0, x=0.0)) == pytest.approx(0.0, abs=1e-12)
        assert visibility(ModelParams(beta=-50.0, x=0.0)) == pytest.approx(1.0, abs=1e-12)

    def test_inverted_value(self):
        # direct evaluation e^4/(2+e^4)
        expected = math.exp(4.0) / (2.0 + math.exp(4.0))
        assert expected == pytest.approx(0.964663, abs=5e-7)
        assert visibility(ModelParams(beta=-4.0, x=0.0)) == pytest.approx(expected, rel=1e-14)

    def test_overflow_safety(self):
        v = visibility(ModelParams(beta=-800.0, x=0.0))
        assert 0.0 < v <= 1.0 and math.isfinite(v)
        v = visibility(ModelParams(beta=800.0, x=0.0))
        assert 0.0 <= v < 1.0 and math.isfinite(v)

    def test_strictly_decreasing(self):
        betas = np.sort(RNG.uniform(-8, 8, size=200))
        vals = [visibility(ModelParams(beta=b, x=0.0)) for b in betas]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_hbar_omega0_scaling(self):
        # V depends on beta only through beta*hw0
        a = visibility(ModelParams(beta=1.5, x=0.0, hbar_omega0=2.0))
        b = visibility(ModelParams(beta=3.0, x=0.0, hbar_omega0=1.0))
        assert a == pytest.approx(b, rel=1e-15)


class TestVisibilityDerivative:
    def test_value_at_zero(self):
        assert visibility_derivative(ModelParams(beta=0.0, x=0.0)) == pytest.approx(-2 / 9, abs=1e-15)

    def test_limits(self):
        assert visibility_derivative(ModelParams(beta=60.0, x=0.0)) == pytest.approx(0.0, abs=1e-12)
        assert visibility_derivative(ModelParams(beta=-60.0, x=0.0)) == pytest.approx(0.0, abs=1e-12)

    def test_always_negative(self):
        for _ in range(50):
            p = random_params()
            assert visibility_derivative(p) < 0

    def test_central_difference_oracle(self):
        h = 1e-5
        for beta in np.linspace(-4, 4, 33):
            fd = (
                visibility(ModelParams(beta=beta + h, x=0.0))
                - visibility(ModelParams(beta=beta - h, x=0.0))
            ) / (2 * h)
            assert visibility_derivative(ModelParams(beta=beta, x=0.0)) == pytest.approx(fd, abs=1e-8)


class TestOutputProbabilities:
    def test_inverted_minimum(self):
        # (1-V)/(1+V) at beta=-4: frozen from e^4/(2+e^4) evaluated exactly
        p = output_probabilities(ModelParams(beta=-4.0, x=-np.pi / 2, n_photons=1))
        assert p.p0 == pytest.approx(0.0179862, abs=5e-8)

    def test_fringe_maximum_any_beta(self):
        for beta in (-6.0, -1.0, 0.0, 2.0, 7.5):
            p = output_probabilities(ModelParams(beta=beta, x=0.0))
            assert p.p0 == 1.0

    def test_infinite_temperature_quadrature(self):
        p = output_probabilities(ModelParams(beta=0.0, x=np.pi / 2, n_photons=1))
        assert p.p0 == pytest.approx(0.5, abs=1e-15)

    def test_normalization_random_grid(self):
        for _ in range(500):
            n = int(RNG.integers(1, 12))
            p = output_probabilities(random_params(n=n, beta_span=8.0))
            assert abs(p.p0 + p.pN - 1.0) < 1e-12
            assert 0.0 <= p.p0 <= 1.0

    def test_matches_published_form(self):
        # same algebra as (1 + V cos 2Nx)/(1 + V)
        for _ in range(200):
            mp = random_params(n=int(RNG.integers(1, 6)))
            v = visibility(mp)
            direct = (1 + v * math.cos(2 * mp.n_photons * mp.x)) / (1 + v)
            assert output_probabilities(mp).p0 == pytest.approx(direct, abs=1e-14)


class TestProbabilityGradient:
    def test_zero_at_fringe_max(self):
        assert probability_gradient(ModelParams(beta=1.2, x=0.0)) == (0.0, 0.0)

    def test_x_slope_value(self):
        _, dx = probability_gradient(ModelParams(beta=0.0, x=np.pi / 4, n_photons=1))
        assert dx == pytest.approx(-0.5, abs=1e-15)

    def test_beta_slope_sign(self):
        for _ in range(100):
            d_beta, _ = probability_gradient(random_params(beta_span=6.0))
            assert d_beta >= 0.0

    def test_x_antisymmetry(self):
        for _ in range(100):
            mp = random_params()
            _, dplus = probability_gradient(mp)
            _, dminus = probability_gradient(ModelParams(beta=mp.beta, x=-mp.x))
            assert dplus == pytest.approx(-dminus, abs=1e-14)

    def test_central_difference_oracle_grid(self):
        h = 1e-6
        for beta in np.linspace(-4, 4, 20):
            for x in np.linspace(-np.pi / 2, np.pi / 2, 20):
                mp = ModelParams(beta=beta, x=x)
                db, dx = probability_gradient(mp)
                fd_b = (
                    output_probabilities(ModelParams(beta=beta + h, x=x)).p0
                    - output_probabilities(ModelParams(beta=beta - h, x=x)).p0
                ) / (2 * h)
                fd_x = (
                    output_probabilities(ModelParams(beta=beta, x=x + h)).p0
                    - output_probabilities(ModelParams(beta=beta, x=x - h)).p0
                ) / (2 * h)
                assert db == pytest.approx(fd_b, abs=1e-8)
                assert dx == pytest.approx(fd_x, abs=1e-8)


class TestFisherMatrix:
    def test_heisenberg_ceiling(self):
        f = fim_analytic(ModelParams(beta=-50.0, x=1e-6, n_photons=1), degeneracy_floor=0.0)
        assert f.f_xx == pytest.approx(4.0, abs=1e-4)

    def test_quadrature_point_values(self):
        f = fim_analytic(ModelParams(beta=0.0, x=np.pi / 2, n_photons=1))
        assert f.f_bb == pytest.approx(0.25, abs=1e-15)
        assert f.f_bx == pytest.approx(0.0, abs=1e-15)

    def test_rank_one_identity(self):
        for _ in range(500):
            mp = random_params(n=int(RNG.integers(1, 8)), beta_span=6.0)
            try:
                f = fim_analytic(mp)
            except DegeneratePointError:
                continue
            assert f.f_bx**2 == pytest.approx(f.f_bb * f.f_xx, abs=1e-9)
            assert f.f_bb >= 0 and f.f_xx >= 0

    def test_two_outcome_oracle(self):
        # closed forms must coincide with the generic binary-outcome FIM;
        # 1/(p0*pN) is the condition number of the ratio, so the float64
        # agreement degrades accordingly near deterministic points
        for _ in range(500):
            mp = random_params(n=int(RNG.integers(1, 6)), beta_span=5.0)
            probs = output_probabilities(mp)
            cond = probs.p0 * probs.pN
            if cond <= 1e-12:
                continue
            tol = 1e-12 + 1e-13 / cond
            oracle = two_outcome_fim(probs.p0, probability_gradient(mp))
            f = fim_analytic(mp)
            assert f.f_bb == pytest.approx(oracle.f_bb, abs=tol)
            assert f.f_xx == pytest.approx(oracle.f_xx, abs=tol)
            assert f.f_bx == pytest.approx(oracle.f_bx, abs=tol)

    def test_degenerate_point_raises(self):
        with pytest.raises(DegeneratePointError):
            fim_analytic(ModelParams(beta=1.0, x=0.0))

    def test_f_bb_independent_of_n_at_matched_phase(self):
        # same Nx argument: F_bb does not grow with N
        f1 = fim_analytic(ModelParams(beta=0.7, x=0.9, n_photons=1))
        f3 = fim_analytic(ModelParams(beta=0.7, x=0.3, n_photons=3))
        assert f1.f_bb == pytest.approx(f3.f_bb, rel=1e-12)


class TestScalarFigures:
    def test_purely_thermometric(self):
        f_eff, tr, fx = scalar_figures(FisherMatrix(0.25, 0.0, 0.0))
        assert (f_eff, tr, fx) == (0.0, 0.25, 0.0)

    def test_rank_one_gives_zero_f_eff(self):
        for _ in range(100):
            a, c = RNG.uniform(0.1, 3.0, size=2)
            f = FisherMatrix(f_bb=a, f_xx=c, f_bx=math.sqrt(a * c))
            f_eff, _, _ = scalar_figures(f)
            assert abs(f_eff) < 1e-9

    def test_diagonal_arithmetic(self):
        f_eff, tr, fx = scalar_figures(FisherMatrix(1.0, 3.0, 0.0))
        assert f_eff == pytest.approx(0.75)
        assert tr == pytest.approx(4.0)
        assert fx == pytest.approx(0.75)

    def test_zero_trace_raises(self):
        with pytest.raises(DegeneratePointError):
            scalar_figures(FisherMatrix(0.0, 0.0, 0.0))


class TestPlateau:
    GRID = LandscapeGrid(beta_min=-4, beta_max=4, x_min=-np.pi / 2, x_max=np.pi / 2)

    def test_delta_near_one_marks_all(self):
        mask = plateau_mask(self.GRID, ModelParams(beta=0, x=0), delta=1 - 1e-12)
        assert mask.all()

    def test_delta_near_zero_marks_argmax_only(self):
        mask = plateau_mask(self.GRID, ModelParams(beta=0, x=0), delta=1e-12)
        assert 1 <= mask.sum() <= 4  # argmax plus exact ties

    def test_default_plateau_sits_at_negative_beta(self):
        mask = plateau_mask(self.GRID, ModelParams(beta=0, x=0), delta=0.05)
        assert mask.any()
        betas = self.GRID.beta_values()
        marked_betas = betas[mask.any(axis=1)]
        assert (marked_betas < 0).all()

    def test_bad_delta_rejected(self):
        with pytest.raises(ConfigError):
            plateau_mask(self.GRID, ModelParams(beta=0, x=0), delta=0.0)


class TestValidation:
    def test_bad_hbar_omega0(self):
        with pytest.raises(ConfigError):
            ModelParams(beta=0.0, x=0.0, hbar_omega0=0.0)

    def test_bad_photon_number(self):
        with pytest.raises(ConfigError):
            ModelParams(beta=0.0, x=0.0, n_photons=0)

    def test_nonfinite_rejected(self):
        with pytest.raises(ConfigError):
            ModelParams(beta=float("nan"), x=0.0)
