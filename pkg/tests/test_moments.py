import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lebquad import (
    BasisSpec,
    ConfigurationError,
    DegreeRangeError,
    DomainMap,
    Family,
    InputDataError,
    SampleSet,
    accumulate_grams,
    grams_from_moments,
    moments_from_samples,
)


def monomial(size, lo=-1.0, hi=1.0):
    return BasisSpec(family=Family.MONOMIAL, size=size, domain=DomainMap(lo, hi))


def test_sampleset_validation():
    with pytest.raises(InputDataError):
        SampleSet(x=np.array([]), w=np.array([]), f=np.array([]))
    with pytest.raises(InputDataError, match="record 2"):
        SampleSet(x=np.array([0.0, 1.0]), w=np.array([1.0, -1.0]), f=np.zeros(2))
    with pytest.raises(InputDataError, match="record 1"):
        SampleSet(x=np.array([np.nan, 1.0]), w=np.ones(2), f=np.zeros(2))
    with pytest.raises(InputDataError):
        SampleSet(x=np.array([0.0]), w=np.array([1.0]), f=np.array([1.0, 2.0]))


def test_all_zero_weights_rejected():
    with pytest.raises(InputDataError):
        SampleSet(x=np.array([0.0, 1.0]), w=np.zeros(2), f=np.ones(2))


def test_two_sample_order_one_grams():
    # {(0,1,3,5), (1,1,4,6)} with Q_0 = 1
    s = SampleSet(x=np.array([0.0, 1.0]), w=np.ones(2),
                  f=np.array([3.0, 4.0]), g=np.array([5.0, 6.0]))
    grams = accumulate_grams(s, monomial(1, 0.0, 1.0), 1)
    np.testing.assert_allclose(grams.G, [[2.0]])
    np.testing.assert_allclose(grams.A_f, [[7.0]])
    np.testing.assert_allclose(grams.A_g, [[11.0]])
    np.testing.assert_allclose(grams.m, [2.0])
    assert grams.total_measure == 2.0


def test_two_atom_order_two_grams(two_atom):
    grams = accumulate_grams(two_atom, monomial(2), 2)
    np.testing.assert_allclose(grams.G, [[2.0, 0.0], [0.0, 2.0]])
    np.testing.assert_allclose(grams.A_f, [[0.0, 2.0], [2.0, 0.0]])
    np.testing.assert_allclose(grams.m, [2.0, 0.0])


def test_two_atom_moments(two_atom):
    mom = moments_from_samples(two_atom, monomial(4), 2)
    np.testing.assert_allclose(mom.mu, [2.0, 0.0, 2.0, 0.0])
    np.testing.assert_allclose(mom.mu_f, [0.0, 2.0, 0.0, 2.0])


def test_single_sample_moments():
    s = SampleSet(x=np.array([0.3]), w=np.array([1.0]), f=np.array([4.5]))
    b = monomial(2, 0.0, 1.0)
    mom = moments_from_samples(s, b, 1)
    t = b.domain(0.3)
    np.testing.assert_allclose(mom.mu, [1.0, t])
    np.testing.assert_allclose(mom.mu_f, [4.5, 4.5 * t])


def test_riemann_sum_moments():
    M = 10**4
    x = np.linspace(-1, 1, M)
    s = SampleSet(x=x, w=np.full(M, 2.0 / M), f=x)
    mom = moments_from_samples(s, monomial(4), 2)
    np.testing.assert_allclose(mom.mu, [2.0, 0.0, 2.0 / 3.0, 0.0], atol=1e-3)


def test_grams_from_moments_matches_direct(two_atom):
    direct = accumulate_grams(two_atom, monomial(2), 2)
    via = grams_from_moments(moments_from_samples(two_atom, monomial(4), 2), 2)
    np.testing.assert_allclose(via.G, direct.G, rtol=1e-10)
    np.testing.assert_allclose(via.A_f, direct.A_f, rtol=1e-10)
    np.testing.assert_allclose(via.A_g, direct.A_g, rtol=1e-10)
    np.testing.assert_allclose(via.m, direct.m, rtol=1e-10)


def test_order_one_gram_from_moments(two_atom):
    via = grams_from_moments(moments_from_samples(two_atom, monomial(2), 1), 1)
    np.testing.assert_allclose(via.G, [[2.0]])
    np.testing.assert_allclose(via.A_f, [[0.0]])


def test_chebyshev_square_linearization_in_gram():
    rng = np.random.default_rng(5)
    x = rng.uniform(-1, 1, 200)
    s = SampleSet(x=x, w=np.ones(200), f=x)
    b = BasisSpec(family=Family.CHEBYSHEV, size=4, domain=DomainMap(-1, 1))
    mom = moments_from_samples(s, b, 2)
    grams = grams_from_moments(mom, 2)
    assert grams.G[1, 1] == pytest.approx((mom.mu[0] + mom.mu[2]) / 2, rel=1e-14)


@pytest.mark.parametrize("family", list(Family))
def test_path_equivalence_random_data(family):
    rng = np.random.default_rng(11)
    x = rng.uniform(-2, 3, 500)
    s = SampleSet(x=x, w=rng.uniform(0.1, 1, 500),
                  f=np.sin(x), g=np.cos(x))
    n = 4
    dm = DomainMap.from_samples(x)
    direct = accumulate_grams(s, BasisSpec(family, n, dm), n)
    via = grams_from_moments(
        moments_from_samples(s, BasisSpec(family, 2 * n, dm), n), n)
    scale = np.abs(direct.G).max()
    assert np.abs(via.G - direct.G).max() <= 1e-10 * scale
    assert np.abs(via.A_f - direct.A_f).max() <= 1e-10 * np.abs(direct.A_f).max()
    assert np.abs(via.A_g - direct.A_g).max() <= 1e-10 * np.abs(direct.A_g).max()


@settings(max_examples=25, deadline=None)
@given(log2c=st.integers(-8, 8), seed=st.integers(0, 2**16))
def test_weight_scaling_by_powers_of_two_is_bit_exact(log2c, seed):
    c = 2.0**log2c
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1, 1, 20)
    s = SampleSet(x=x, w=rng.uniform(0.5, 1.5, 20), f=rng.standard_normal(20))
    b = monomial(3)
    g1 = accumulate_grams(s, b, 3)
    g2 = accumulate_grams(s.scaled(c), b, 3)
    np.testing.assert_array_equal(g2.G, c * g1.G)
    np.testing.assert_array_equal(g2.A_f, c * g1.A_f)
    np.testing.assert_array_equal(g2.m, c * g1.m)
    assert g2.total_measure == c * g1.total_measure


@settings(max_examples=25, deadline=None)
@given(c=st.floats(min_value=1e-3, max_value=1e3), seed=st.integers(0, 2**16))
def test_weight_scaling_general_factor(c, seed):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1, 1, 20)
    s = SampleSet(x=x, w=rng.uniform(0.5, 1.5, 20), f=rng.standard_normal(20))
    b = monomial(3)
    g1 = accumulate_grams(s, b, 3)
    g2 = accumulate_grams(s.scaled(c), b, 3)
    np.testing.assert_allclose(g2.G, c * g1.G, rtol=1e-14)
    np.testing.assert_allclose(g2.A_f, c * g1.A_f, rtol=1e-14, atol=1e-14 * c)
    assert g2.total_measure == pytest.approx(c * g1.total_measure, rel=1e-14)


def test_zero_weight_sample_changes_nothing():
    x = np.array([-0.5, 0.2, 0.9])
    s1 = SampleSet(x=x, w=np.ones(3), f=x**2)
    s2 = SampleSet(x=np.append(x, 0.42), w=np.array([1.0, 1, 1, 0]),
                   f=np.append(x**2, 17.0))
    b = monomial(3)
    g1 = accumulate_grams(s1, b, 3)
    g2 = accumulate_grams(s2, b, 3)
    np.testing.assert_array_equal(g1.G, g2.G)
    np.testing.assert_array_equal(g1.A_f, g2.A_f)


def test_gram_is_psd(scenario_samples):
    for samples in scenario_samples.values():
        b = BasisSpec(Family.CHEBYSHEV, 8, DomainMap.from_samples(samples.x))
        grams = accumulate_grams(samples, b, 8)
        ev = np.linalg.eigvalsh(grams.G)
        assert ev.min() >= -1e-12 * ev.max()
        assert np.array_equal(grams.G, grams.G.T)


def test_symmetry_is_bitwise(scenario_samples):
    samples = scenario_samples["smooth"]
    b = BasisSpec(Family.LEGENDRE, 6, DomainMap.from_samples(samples.x))
    grams = accumulate_grams(samples, b, 6)
    for M in (grams.G, grams.A_f, grams.A_g):
        assert np.array_equal(M, M.T)


def test_configuration_errors(two_atom):
    with pytest.raises(ConfigurationError):
        accumulate_grams(two_atom, monomial(2), 3)
    with pytest.raises(ConfigurationError):
        accumulate_grams(two_atom, monomial(2), 0)
    with pytest.raises(ConfigurationError):
        moments_from_samples(two_atom, monomial(3), 2)
    mom = moments_from_samples(two_atom, monomial(4), 2)
    with pytest.raises(DegreeRangeError):
        grams_from_moments(mom, 3)
