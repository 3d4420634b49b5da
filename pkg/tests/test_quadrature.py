import math

import numpy as np
import pytest

from atomcomplexity.measures import RadialDensity
from atomcomplexity.quadrature import (
    QuadratureError,
    QuadratureSpec,
    gauss_legendre,
    integrate_semi_infinite,
    radial_moment,
)

# (integrand, exact value, tail_scale): exponential, Lorentzian-power and Gaussian tails
CLOSED_FORMS = [
    (lambda x: np.exp(-x), 1.0, 1.0),
    (lambda x: 4.0 * x**2 * np.exp(-2 * x), 1.0, 0.5),
    (lambda k: 4 * np.pi * k**2 * 8 / (np.pi**2 * (1 + k * k) ** 4), 1.0, 1.0),
    (lambda x: x**4 * np.exp(-3 * x), 24 / 3**5, 1 / 3),
    (lambda x: np.exp(-x) + np.exp(-100 * x), 1.01, 1.0),
    (lambda x: 1.0 / (1 + x) ** 2, 1.0, 1.0),
    (lambda x: 1.0 / (1 + x) ** 3, 0.5, 1.0),
    (lambda x: 1.0 / (1 + x * x) ** 2, math.pi / 4, 1.0),
    (lambda x: np.exp(-x * x), math.sqrt(math.pi) / 2, 1.0),
    (lambda x: x * np.exp(-0.5 * x * x), 1.0, 2.0),
]


def test_gauss_legendre_rule():
    x, w = gauss_legendre(10)
    assert w.sum() == pytest.approx(1.0, abs=1e-15)
    # exact for degree 19 polynomials
    np.testing.assert_allclose(np.dot(w, x**19), 1 / 20, rtol=1e-14)


@pytest.mark.parametrize("f,exact,scale", CLOSED_FORMS)
def test_closed_forms(f, exact, scale):
    spec = QuadratureSpec(tail_scale=scale)
    res = integrate_semi_infinite(f, spec)
    assert res.converged
    err = abs(res.value - exact)
    assert err <= max(spec.rel_tol * abs(exact), spec.abs_tol)
    assert err <= 10 * res.error_estimate


@pytest.mark.parametrize("f,exact,scale", CLOSED_FORMS)
@pytest.mark.parametrize("factor", [0.25, 4.0])
def test_tail_scale_independence(f, exact, scale, factor):
    a = integrate_semi_infinite(f, QuadratureSpec(tail_scale=scale))
    b = integrate_semi_infinite(f, QuadratureSpec(tail_scale=scale * factor))
    assert b.converged
    assert abs(a.value - b.value) <= max(1e-10 * abs(a.value), 1e-12)


def test_nonconvergence_is_flagged():
    res = integrate_semi_infinite(lambda x: 1.0 / (1.0 + x), QuadratureSpec(max_refinements=6))
    assert not res.converged
    assert np.isfinite(res.value)
    assert res.error_estimate > 0


def test_nonfinite_integrand():
    with pytest.raises(QuadratureError):
        integrate_semi_infinite(lambda x: np.where(x > 1.0, np.nan, 1.0))


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_refinements=0)
    with pytest.raises(ValueError):
        QuadratureSpec(tail_scale=-1)


class TestRadialMoment:
    pos = RadialDensity(lambda r: np.exp(-2 * r) / np.pi, "position", 0.5)
    mom = RadialDensity(lambda k: 8 / (np.pi**2 * (1 + k * k) ** 4), "momentum", 1.0)

    def test_hydrogen(self):
        assert radial_moment(self.pos, 2) == pytest.approx(3.0, abs=1e-12)
        assert radial_moment(self.mom, 2) == pytest.approx(1.0, abs=1e-12)
        assert radial_moment(self.pos, 0) == pytest.approx(1.0, abs=1e-13)
        assert radial_moment(self.mom, 0) == pytest.approx(1.0, abs=1e-13)
        assert radial_moment(self.pos, -1) == pytest.approx(1.0, abs=1e-12)

    def test_divergent(self):
        # <k^6> of 1/(1+k^2)^4 diverges logarithmically
        with pytest.raises(QuadratureError):
            radial_moment(self.mom, 6, QuadratureSpec(max_refinements=8))
