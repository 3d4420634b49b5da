import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomcomplexity.measures import (
    DEFAULT_GAMMAS,
    S_MIN,
    BoundViolation,
    GammaParams,
    MeasureSet,
    NormalizationError,
    ProbabilityVector,
    RadialDensity,
    disequilibrium_discrete,
    entropy_bounds,
    lmc_complexity,
    normalization,
    onicescu_discrete,
    onicescu_radial,
    order_disorder,
    renyi_discrete,
    sdl_gamma,
    sdl_gamma_max,
    shannon_discrete,
    shannon_max_discrete,
    shannon_radial,
)

# hydrogen 1s densities
H_POS = RadialDensity(lambda r: np.exp(-2 * r) / np.pi, "position", 0.5)
H_MOM = RadialDensity(lambda k: 8 / (np.pi**2 * (1 + k * k) ** 4), "momentum", 1.0)
# mpmath, 30 digits: quad of the analytic momentum density
H_SK = 2.4218623411651935620
H_EK = 0.20897494126232165360
# 3(1 + ln pi) + 1.5 ln(8/9 * 3 * 0.5)
H_SMAX = 3 * (1 + math.log(math.pi)) + 1.5 * math.log(4 / 3)


def prob_vectors(max_k=16):
    return st.lists(st.floats(0, 1), min_size=1, max_size=max_k).filter(lambda v: sum(v) > 1e-3).map(
        lambda v: np.array(v) / np.sum(v)
    )


class TestProbabilityVector:
    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            ProbabilityVector([])
        with pytest.raises(ValueError):
            ProbabilityVector([1.2, -0.2])
        with pytest.raises(NormalizationError):
            ProbabilityVector([0.5, 0.4])

    def test_frozen(self):
        p = ProbabilityVector([0.25, 0.75])
        assert p.k == 2
        with pytest.raises(ValueError):
            p.p[0] = 1.0


def test_shannon_examples():
    assert shannon_discrete([1.0, 0.0, 0.0]) == 0.0
    np.testing.assert_allclose(shannon_discrete(np.full(4, 0.25)), math.log(4), rtol=0, atol=1e-15)
    np.testing.assert_allclose(shannon_discrete([0.5, 0.5]), 0.693147, atol=1e-6)
    assert shannon_max_discrete(8) == math.log(8)
    with pytest.raises(ValueError):
        shannon_max_discrete(0)


def test_onicescu_and_disequilibrium_examples():
    assert onicescu_discrete([1.0, 0.0]) == 1.0
    np.testing.assert_allclose(onicescu_discrete(np.full(5, 0.2)), 0.2, rtol=1e-15)
    np.testing.assert_allclose(disequilibrium_discrete([1, 0, 0, 0]), 0.75, rtol=1e-15)
    assert disequilibrium_discrete(np.full(3, 1 / 3)) == pytest.approx(0.0, abs=1e-16)


def test_renyi():
    p = [0.2, 0.3, 0.5]
    assert renyi_discrete(p, 0) == pytest.approx(math.log(3))
    assert renyi_discrete(p, 2) == pytest.approx(-math.log(onicescu_discrete(p)))
    with pytest.raises(ValueError):
        renyi_discrete(p, 1)
    with pytest.raises(ValueError):
        renyi_discrete(p, -0.5)


@settings(max_examples=200, deadline=None)
@given(prob_vectors())
def test_discrete_identities(p):
    k = p.size
    p = p / p.sum()
    pv = ProbabilityVector(p)
    H = shannon_discrete(pv)
    assert -1e-15 <= H <= math.log(k) + 1e-12
    assert abs(disequilibrium_discrete(pv) - (onicescu_discrete(pv) - 1.0 / k)) <= 1e-14
    lo, hi = renyi_discrete(pv, 1.0 + 1e-5), renyi_discrete(pv, 1.0 - 1e-5)
    assert lo - 1e-3 <= H <= hi + 1e-3


class TestRadial:
    def test_hydrogen_position(self):
        np.testing.assert_allclose(normalization(H_POS), 1.0, atol=1e-12)
        np.testing.assert_allclose(shannon_radial(H_POS), 3 + math.log(math.pi), atol=1e-10)
        np.testing.assert_allclose(onicescu_radial(H_POS), 1 / (8 * math.pi), atol=1e-13)

    def test_hydrogen_momentum(self):
        np.testing.assert_allclose(shannon_radial(H_MOM), H_SK, atol=1e-9)
        np.testing.assert_allclose(onicescu_radial(H_MOM), H_EK, atol=1e-11)

    def test_unnormalized_rejected(self):
        rho = RadialDensity(lambda r: 2 * np.exp(-2 * r) / np.pi, "position", 0.5)
        with pytest.raises(NormalizationError):
            shannon_radial(rho)
        with pytest.raises(NormalizationError):
            onicescu_radial(rho)

    def test_underflow_region_contributes_nothing(self):
        # density vanishing identically beyond r = 5 keeps ln() away from zeros
        rho = RadialDensity(lambda r: np.where(r < 50, np.exp(-2 * r) / np.pi, 0.0), "position", 0.5)
        np.testing.assert_allclose(shannon_radial(rho), 3 + math.log(math.pi), atol=1e-10)

    def test_bad_space(self):
        with pytest.raises(ValueError):
            RadialDensity(lambda r: r, "spin")


class TestBounds:
    def test_hydrogen(self):
        b = entropy_bounds(3.0, 0.5)
        np.testing.assert_allclose(b.S_max, H_SMAX, atol=1e-13)
        np.testing.assert_allclose(b.S_max, 6.865713, atol=1e-6)
        np.testing.assert_allclose(b.S_min, 6.434189, atol=1e-6)
        base = 1.5 * (1 + math.log(math.pi))
        np.testing.assert_allclose(b.S_r_max, base + 1.5 * math.log(2.0), atol=1e-14)
        np.testing.assert_allclose(b.S_r_min, base - 1.5 * math.log(2 / 3), atol=1e-14)
        np.testing.assert_allclose(b.S_r_max, 4.256815, atol=1e-6)

    def test_degenerate_product(self):
        b = entropy_bounds(9 / 8, 1.0)
        assert b.S_max == pytest.approx(b.S_min, abs=1e-14)
        assert S_MIN == pytest.approx(3 * (1 + math.log(math.pi)), abs=1e-15)

    def test_scaling_invariant(self):
        assert entropy_bounds(0.75, 2.0).S_max == pytest.approx(entropy_bounds(3.0, 0.5).S_max, abs=1e-14)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
    def test_additivity(self, r2, T):
        b = entropy_bounds(r2, T)
        tol = 1e-12 * max(1.0, abs(b.S_max))
        assert abs(b.S_r_max + b.S_k_max - b.S_max) <= tol
        assert abs(b.S_r_min + b.S_k_max - b.S_min) <= tol
        assert abs(b.S_r_max + b.S_k_min - b.S_min) <= tol

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            entropy_bounds(0.0, 1.0)


class TestOrderDisorder:
    def test_examples(self):
        assert order_disorder(2.0, 2.0) == (1.0, 0.0)
        d, o = order_disorder(3 + math.log(math.pi) + H_SK, H_SMAX)
        np.testing.assert_allclose([d, o], [0.9564327042, 0.0435672958], atol=1e-10)
        assert order_disorder(3.0, 6.0) == (0.5, 0.5)

    def test_violation_not_clamped(self):
        with pytest.raises(BoundViolation):
            order_disorder(7.0, 6.9)
        with pytest.raises(ValueError):
            order_disorder(0.0, 1.0)


class TestGamma:
    def test_labels(self):
        assert [g.column for g in DEFAULT_GAMMAS] == [
            "Gamma_1_1", "Gamma_1_0.25", "Gamma_0.25_0", "Gamma_0_4",
        ]
        g = GammaParams.parse("0,4")
        assert g == GammaParams(0.0, 4.0) and g.column == "Gamma_0_4"
        with pytest.raises(ValueError):
            GammaParams.parse("1")
        with pytest.raises(ValueError):
            GammaParams(0, 0)
        with pytest.raises(ValueError):
            GammaParams(-1, 1)

    def test_values(self):
        assert sdl_gamma(0.5, GammaParams(1, 1)) == 0.25
        assert sdl_gamma(0.0, GammaParams(0, 4)) == 1.0  # 0**0 = 1
        assert sdl_gamma(1.0, GammaParams(0.25, 0)) == 1.0
        np.testing.assert_allclose(sdl_gamma(0.956434, GammaParams(0, 4)), 3.60e-6, rtol=5e-3)
        with pytest.raises(ValueError):
            sdl_gamma(1.2, GammaParams(1, 1))

    @pytest.mark.parametrize("a,b", [(1, 1), (1, 4), (2, 2), (0.25, 3)])
    def test_max(self, a, b):
        g = GammaParams(a, b)
        m = sdl_gamma_max(g)
        grid = np.linspace(0, 1, 10001)
        vals = grid**a * (1 - grid) ** b
        i = int(np.argmax(vals))
        assert abs(vals[i] - m.value) <= 1e-8
        assert abs(grid[i] - a / (a + b)) <= 1e-4

    def test_max_requires_interior(self):
        with pytest.raises(ValueError):
            sdl_gamma_max(GammaParams(0, 4))


def test_lmc():
    assert lmc_complexity(2.0, 0.5, 0.25) == 0.25
    with pytest.raises(ValueError):
        lmc_complexity(1.0, 0.0, 1.0)


def test_measure_set_bound_violations():
    b = entropy_bounds(3.0, 0.5)
    kw = dict(Z=1, symbol="H", S_r=4.1, S_k=2.4, S=6.5, E_r=0.04, E_k=0.2, D=0.008, O=125.0,
              r2=3.0, T=0.5, S_r_min=b.S_r_min, S_r_max=b.S_r_max, S_k_min=b.S_k_min,
              S_k_max=b.S_k_max, S_min=b.S_min, S_max=b.S_max, Delta=0.95, Omega=0.05,
              gammas={}, C=0.052)
    assert MeasureSet(**kw).bound_violations() == []
    kw["S"] = 7.0
    assert MeasureSet(**kw).bound_violations() == ["S <= S_max"]
