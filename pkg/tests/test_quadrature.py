import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, mpc

from zetax.numerics import ToleranceConfig, certified_integral, gauss_legendre_nodes, integrate


@pytest.mark.parametrize("n", [1, 2, 5, 8, 17])
def test_nodes_integrate_polynomials_exactly(n):
    nodes, weights = gauss_legendre_nodes(n, 30)
    assert len(nodes) == n
    with mp.workdps(30):
        for k in range(2 * n):
            exact = mpf(2) / (k + 1) if k % 2 == 0 else mpf(0)
            approx = mp.fsum(w * x ** k for x, w in zip(nodes, weights))
            assert abs(approx - exact) < mpf("1e-25")


@pytest.mark.parametrize("fn,a,b,truth", [
    (mp.exp, 0, 1, lambda: mp.e - 1),
    (mp.cos, 0, 10, lambda: mp.sin(10)),
    (lambda t: 1 / (1 + t * t), -1, 1, lambda: mp.pi / 2),
    (lambda t: mp.exp(mpc(0, 3) * t), 0, 2, lambda: (mp.exp(mpc(0, 6)) - 1) / mpc(0, 3)),
])
def test_certified_integral_encloses(cfg, fn, a, b, truth):
    out = certified_integral(fn, a, b, cfg)
    with mp.workdps(60):
        assert abs(out.value - truth()) <= out.radius
    assert out.radius < mpf("1e-24")


def test_near_singularity_subdivides(cfg):
    # pole at +-0.01i forces halving
    out = certified_integral(lambda t: 1 / (t * t + mpf("1e-4")), -1, 1, cfg)
    with mp.workdps(60):
        assert abs(out.value - 200 * mp.atan(100)) <= out.radius


def test_zero_integrand(cfg):
    with cfg.workdps():
        value, err = integrate(lambda t: mpf(0), 0, 1, cfg)
    assert value == 0 and err == 0


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=-3, max_value=3), st.floats(min_value=0.1, max_value=4))
def test_exponential_family(w, length):
    cfg = ToleranceConfig(20)
    out = certified_integral(lambda t: mp.exp(w * t), 0, length, cfg)
    with mp.workdps(50):
        ww = mpf(w)
        truth = mp.expm1(ww * mpf(length)) / ww if ww else mpf(length)
        assert abs(out.value - truth) <= out.radius
