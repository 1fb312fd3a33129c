import math

import numpy as np
import pytest

from ostrowski_frac.fracint import (
    ConvergenceError,
    DomainError,
    FracParams,
    QuadConfig,
    adaptive_gauss,
    gamma,
    mexp_integral,
    rl_lower,
    rl_upper,
)

from conftest import simpson

SQRT_PI = 1.7724538509055160


class TestGamma:
    def test_anchor_values(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-12)
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-12)
        assert gamma(0.5) == pytest.approx(SQRT_PI, rel=1e-12)

    def test_recurrence(self):
        rng = np.random.default_rng(42)
        for z in rng.uniform(0.1, 40.0, size=200):
            lhs = gamma(z + 1.0)
            assert abs(lhs - z * gamma(z)) / lhs <= 1e-11

    @pytest.mark.parametrize("z", [0.0, -1.0, float("nan"), float("inf")])
    def test_domain_errors(self, z):
        with pytest.raises(DomainError):
            gamma(z)


class TestFracParams:
    def test_valid(self):
        FracParams(0.0, 2.0, 1.0, 0.5)

    @pytest.mark.parametrize(
        "a,b,x,mu",
        [(-0.1, 1, 0.5, 1), (1, 1, 1, 1), (0, 1, 1.5, 1), (0, 1, 0.5, 0), (0, 1, 0.5, -2)],
    )
    def test_invalid(self, a, b, x, mu):
        with pytest.raises(DomainError):
            FracParams(a, b, x, mu)


class TestQuadConfig:
    def test_defaults(self):
        cfg = QuadConfig()
        assert cfg.abs_tol == 1e-10 and cfg.rel_tol == 1e-9

    def test_invalid(self):
        with pytest.raises(DomainError):
            QuadConfig(abs_tol=0.0)
        with pytest.raises(DomainError):
            QuadConfig(max_subdivisions=0)


class TestAdaptiveGauss:
    def test_polynomial_exact(self):
        got = adaptive_gauss(lambda s: s**3 - 2 * s, 0.0, 2.0)
        assert got == pytest.approx(0.0, abs=1e-12)

    def test_empty_interval(self):
        assert adaptive_gauss(np.exp, 1.0, 1.0) == 0.0

    def test_reversed_bounds(self):
        with pytest.raises(DomainError):
            adaptive_gauss(np.exp, 1.0, 0.0)

    def test_convergence_error(self):
        cfg = QuadConfig(abs_tol=1e-14, rel_tol=1e-14, max_subdivisions=2)
        with pytest.raises(ConvergenceError):
            adaptive_gauss(lambda s: np.abs(s - 1 / 3) ** 0.05, 0.0, 1.0, cfg)


class TestRlLower:
    def test_constant_half_order(self):
        # J of the constant 1 is (x-a)^mu / Gamma(mu+1)
        got = rl_lower(lambda t: np.ones_like(t), 0.0, 1.0, 0.5)
        assert got == pytest.approx(1.1283791670955126, abs=1e-10)

    def test_identity_function_classical(self):
        got = rl_lower(lambda t: t, 0.0, 1.0, 1.0)
        assert got == pytest.approx(0.5, abs=1e-10)

    def test_square_frozen_oracle(self):
        # 10,000-panel composite rule on the substituted integrand
        got = rl_lower(lambda t: t**2, 0.0, 2.0, 0.5)
        assert got == pytest.approx(3.4043074594255588, abs=1e-9)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            rl_lower(lambda t: t, 1.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            rl_lower(lambda t: t, 0.0, 1.0, 0.0)

    def test_reduction_to_classical(self, corpus):
        rng = np.random.default_rng(7)
        for spec in corpus.values():
            lo, hi = spec.domain
            for _ in range(50):
                a, x = sorted(rng.uniform(lo, hi, size=2))
                if x - a < 1e-3:
                    continue
                got = rl_lower(spec, a, x, 1.0)
                want = simpson(spec.f, a, x, panels=2000)
                assert abs(got - want) <= 1e-9

    def test_linearity(self):
        f = lambda t: np.sin(t)
        g = lambda t: t**2
        mix = lambda t: 2.0 * np.sin(t) + 3.0 * t**2
        got = rl_lower(mix, 0.0, 1.5, 0.7)
        want = 2.0 * rl_lower(f, 0.0, 1.5, 0.7) + 3.0 * rl_lower(g, 0.0, 1.5, 0.7)
        assert abs(got - want) <= 1e-9

    @pytest.mark.parametrize("p", [0, 1, 2])
    @pytest.mark.parametrize("mu", [0.3, 0.5, 1.0, 1.7, 2.5])
    def test_power_rule(self, p, mu):
        a, x = 0.5, 2.0
        got = rl_lower(lambda t: (t - a) ** p, a, x, mu)
        want = math.gamma(p + 1) / math.gamma(p + 1 + mu) * (x - a) ** (p + mu)
        assert abs(got - want) <= 1e-9


class TestRlUpper:
    def test_constant_symmetry(self):
        got = rl_upper(lambda t: np.ones_like(t), 0.0, 1.0, 0.5)
        assert got == pytest.approx(1.1283791670955126, abs=1e-10)

    def test_identity_function_classical(self):
        got = rl_upper(lambda t: t, 0.0, 1.0, 1.0)
        assert got == pytest.approx(0.5, abs=1e-10)

    def test_exp_frozen_oracle(self):
        got = rl_upper(np.exp, 0.0, 1.0, 0.75)
        assert got == pytest.approx(1.7475526813924685, abs=1e-9)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            rl_upper(lambda t: t, 1.0, 1.0, 0.5)

    def test_mirror_of_lower(self):
        # reflecting f about the midpoint swaps the two operators
        f = lambda t: np.cos(t) + t
        a, b, mu = 0.2, 1.8, 0.6
        refl = lambda t: np.cos(a + b - t) + (a + b - t)
        assert rl_upper(f, a, b, mu) == pytest.approx(
            rl_lower(refl, a, b, mu), abs=1e-9
        )


class TestMexpIntegral:
    def test_c_one(self):
        assert mexp_integral(1.0, 3.0) == 0.25
        for mu in (0.5, 1.0, 2.7):
            assert mexp_integral(1.0, mu) == 1.0 / (mu + 1.0)

    def test_closed_form_mu1(self):
        c = 0.5
        ln = math.log(c)
        want = c / ln - (c - 1.0) / ln**2
        assert mexp_integral(0.5, 1.0) == pytest.approx(want, rel=1e-13)
        # frozen brute-force value of int_0^1 t 0.5^t dt
        assert mexp_integral(0.5, 1.0) == pytest.approx(0.3193369700583222, abs=1e-12)

    def test_integer_mu_matches_quadrature(self):
        for c in (0.1, 0.5, 0.9):
            for mu in (1.0, 2.0, 4.0):
                want = simpson(lambda t: t**mu * c**t, 0.0, 1.0)
                assert mexp_integral(c, mu) == pytest.approx(want, abs=1e-11)

    def test_noninteger_mu_against_oracle(self):
        # composite Simpson converges too slowly on the t^mu corner for
        # mu < 1, so the oracle here is arbitrary-precision quadrature
        import mpmath as mp

        for c in (0.2, 0.7):
            for mu in (0.5, 1.3, 3.7):
                want = float(mp.quad(lambda t: t**mu * mp.mpf(c) ** t, [0, 1]))
                assert mexp_integral(c, mu) == pytest.approx(want, abs=1e-10)

    def test_continuity_at_one(self):
        mu = 1.4
        limit = 1.0 / (mu + 1.0)
        errs = [
            abs(mexp_integral(1.0 - eps, mu) - limit)
            for eps in (1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10)
        ]
        assert errs[-1] < 1e-9
        assert all(e2 <= e1 + 1e-15 for e1, e2 in zip(errs, errs[1:]))

    def test_domain_errors(self):
        for c in (0.0, -0.5, 1.5):
            with pytest.raises(DomainError):
                mexp_integral(c, 1.0)
        with pytest.raises(DomainError):
            mexp_integral(0.5, 0.0)
