import numpy as np
import pytest

from dlite import dlite, jsd, kl, make_distribution, smooth, tv
from dlite.errors import KlUndefined

# 0.5 ln 2 + 0.5 ln(2/3), computed at extended precision and frozen.
KL_EXAMPLE = 0.14384103622589046
# jsd((.5,.5), (.25,.75)), same provenance.
JSD_EXAMPLE = 0.03382207556860523
LN2 = 0.6931471805599453


def _pair(w1, w2, labels=("a", "b")):
    return (
        make_distribution(labels, w1),
        make_distribution(labels, w2),
    )


class TestKl:
    def test_self_is_zero(self):
        p, _ = _pair([0.5, 0.5], [1, 1])
        assert kl(p, p) == 0.0

    def test_frozen_value(self):
        p, q = _pair([0.5, 0.5], [0.25, 0.75])
        np.testing.assert_allclose(kl(p, q), KL_EXAMPLE, rtol=1e-14)

    def test_undefined_on_support_violation(self):
        p, q = _pair([1, 0], [0, 1])
        with pytest.raises(KlUndefined):
            kl(p, q)

    def test_zero_p_outcomes_contribute_nothing(self):
        p, q = _pair([0.5, 0.5, 0.0], [0.25, 0.25, 0.5], labels=("a", "b", "c"))
        np.testing.assert_allclose(kl(p, q), 0.5 * np.log(2) + 0.5 * np.log(2), rtol=1e-14)

    def test_asymmetry_witness(self):
        p, q = _pair([0.9, 0.1], [0.2, 0.8])
        assert abs(kl(p, q) - kl(q, p)) > 1e-6

    def test_nonnegative_on_samples(self):
        rng = np.random.default_rng(42)
        for _ in range(500):
            a = rng.dirichlet(np.ones(4))
            b = rng.dirichlet(np.ones(4))
            p = make_distribution(list("wxyz"), a)
            q = make_distribution(list("wxyz"), b)
            assert kl(p, q) >= -1e-12

    def test_smoothing_makes_defined(self):
        p, q = _pair([1, 0], [0, 1])
        value = kl(smooth(p, 1e-6), smooth(q, 1e-6))
        assert np.isfinite(value) and value > 0


class TestJsd:
    def test_self_is_zero(self):
        p, _ = _pair([0.3, 0.7], [1, 1])
        assert jsd(p, p) == 0.0

    def test_disjoint_supports_saturate(self):
        p, q = _pair([1, 0], [0, 1])
        np.testing.assert_allclose(jsd(p, q), LN2, rtol=1e-15)

    def test_frozen_value(self):
        p, q = _pair([0.5, 0.5], [0.25, 0.75])
        np.testing.assert_allclose(jsd(p, q), JSD_EXAMPLE, rtol=1e-13)

    def test_symmetric_bit_exact(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            a = rng.dirichlet(np.ones(3))
            b = rng.dirichlet(np.ones(3))
            p = make_distribution(list("abc"), a)
            q = make_distribution(list("abc"), b)
            assert jsd(p, q) == jsd(q, p)

    def test_bounds(self):
        rng = np.random.default_rng(3)
        for _ in range(500):
            p = make_distribution(list("ab"), rng.dirichlet(np.ones(2)))
            q = make_distribution(list("ab"), rng.dirichlet(np.ones(2)))
            assert -1e-15 <= jsd(p, q) <= LN2 + 1e-12

    def test_defined_with_zeros(self):
        p, q = _pair([1, 0, 0], [0, 0.5, 0.5], labels=("a", "b", "c"))
        assert np.isfinite(jsd(p, q))


class TestTv:
    def test_examples(self):
        p, q = _pair([0.5, 0.5], [0.25, 0.75])
        assert tv(p, q) == 0.25
        p, q = _pair([1, 0], [0, 1])
        assert tv(p, q) == 1.0
        assert tv(p, p) == 0.0

    def test_bounds_and_symmetry(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            p = make_distribution(list("abcd"), rng.dirichlet(np.ones(4)))
            q = make_distribution(list("abcd"), rng.dirichlet(np.ones(4)))
            v = tv(p, q)
            assert 0.0 <= v <= 1.0
            assert v == tv(q, p)


class TestBaselineMetricAxioms:
    """TV is a metric; sqrt(JSD) satisfies the triangle inequality."""

    def _sample(self, rng, n=200, dim=4):
        labels = [f"x{k}" for k in range(dim)]
        return [
            make_distribution(labels, rng.dirichlet(np.ones(dim)))
            for _ in range(n)
        ]

    def test_tv_triangle(self):
        rng = np.random.default_rng(5)
        ds = self._sample(rng, n=60)
        for i in range(0, 60, 3):
            p, q, r = ds[i], ds[i + 1], ds[i + 2]
            assert tv(p, q) + tv(q, r) - tv(p, r) >= -1e-12

    def test_sqrt_jsd_triangle(self):
        rng = np.random.default_rng(9)
        ds = self._sample(rng, n=60)
        for i in range(0, 60, 3):
            p, q, r = ds[i], ds[i + 1], ds[i + 2]
            lhs = np.sqrt(jsd(p, q)) + np.sqrt(jsd(q, r))
            assert lhs - np.sqrt(jsd(p, r)) >= -1e-12


class TestBoundednessContrast:
    """DLITE stays bounded on the paths where KL blows up."""

    @pytest.mark.parametrize("eps", [1e-3, 1e-6, 1e-9])
    def test_dlite_bounded_where_kl_undefined(self, eps):
        p = make_distribution(["a", "b"], [1 - eps, eps])
        q = make_distribution(["a", "b"], [1, 0])
        assert dlite(p, q).total <= 1.0
        with pytest.raises(KlUndefined):
            kl(p, q)

    def test_kl_grows_without_bound_under_smoothing(self):
        # With ever-smaller smoothing, KL on near-disjoint supports explodes
        # while DLITE stays put.
        p = make_distribution(["a", "b"], [1, 0])
        q = make_distribution(["a", "b"], [0, 1])
        values = [
            kl(smooth(p, eps), smooth(q, eps)) for eps in (1e-3, 1e-6, 1e-9)
        ]
        assert values[0] < values[1] < values[2]
        assert dlite(p, q).total == 1.0
