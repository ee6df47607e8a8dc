import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, mpc

from zetax.numerics import (
    DomainError,
    S_series,
    ToleranceConfig,
    digamma,
    stirling_deviation,
    zeta_deriv_real,
    zeta_log_deriv,
    zeta_real,
)


def _encloses(cert, truth):
    return abs(cert.value - truth) <= cert.radius


@pytest.mark.parametrize("sigma", ["1.001", "1.01", "1.5", "2", "3.7", "12", "40"])
def test_zeta_against_mpmath(cfg, sigma):
    z, dz = zeta_real(sigma, cfg), zeta_deriv_real(sigma, cfg)
    with mp.workdps(60):
        s = mpf(sigma)
        assert _encloses(z, mp.zeta(s))
        assert _encloses(dz, mp.zeta(s, derivative=1))
        assert _encloses(zeta_log_deriv(sigma, cfg), mp.zeta(s, derivative=1) / mp.zeta(s))
    assert z.radius < mpf("1e-25") * abs(z.value)


def test_zeta_domain(cfg):
    with pytest.raises(DomainError):
        zeta_log_deriv(1, cfg)


@pytest.mark.parametrize("z", [mpc("0.25", "7"), mpc("0.5", "0.1"), mpc("3.3", "-20"),
                               mpc("-2.5", "1"), mpc("1e-3", 0)])
def test_digamma_against_mpmath(cfg, z):
    out = digamma(z, cfg)
    with mp.workdps(60):
        assert abs(out.value - mp.digamma(z)) <= out.radius
    assert out.radius < mpf("1e-25") * (1 + abs(out.value))


def test_digamma_poles(cfg):
    for k in (0, -1, -7):
        with pytest.raises(DomainError):
            digamma(k, cfg)


@pytest.mark.parametrize("x,y", [("0.25", "0"), ("1", "0"), ("0.8090169943749", "0.3"),
                                 ("5", "14"), ("0.01", "2")])
def test_S_series_against_mpmath(cfg, x, y):
    out = S_series(x, y, cfg)
    with mp.workdps(60):
        xx, yy = mpf(x), mpf(y)
        if yy == 0:
            truth = mp.psi(1, xx)
        else:
            # imaginary part of psi'(x + iy) relation: sum 1/((x+n)^2+y^2) = Im psi(x+iy)/y
            truth = mp.im(mp.digamma(mpc(xx, yy))) / yy
        assert _encloses(out, truth)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.05, max_value=20), st.floats(min_value=0, max_value=5))
def test_S_series_decreasing_in_x(x, y):
    cfg = ToleranceConfig(20)
    a, b = S_series(x, y, cfg), S_series(x * 1.1, y, cfg)
    assert b.upper < a.lower


@pytest.mark.parametrize("T", [1, 2, 5, 14.13, 100, 1000])
def test_stirling_deviation_bounds(cfg, T):
    with mp.workdps(50):
        t = mpf(T)
        half = abs(mp.im(mp.loggamma(mpc("0.25", t / 2))) - t / 2 * mp.log(t / (2 * mp.e)))
        full = abs(mp.im(mp.loggamma(mpc("0.5", t))) - t * mp.log(t / mp.e))
    assert half <= stirling_deviation(T, "half-arg", cfg).lower
    assert full <= stirling_deviation(T, "full-arg", cfg).lower


def test_stirling_deviation_rejects(cfg):
    with pytest.raises(DomainError):
        stirling_deviation("0.5", cfg=cfg)
    with pytest.raises(ValueError):
        stirling_deviation(2, "other", cfg)


@pytest.mark.parametrize("fn,arg", [(zeta_real, "1.2"), (zeta_deriv_real, "2.5"),
                                    (lambda s, c: S_series(s, "0.5", c), "0.4")])
def test_containment_under_doubling(cfg, fn, arg):
    coarse, fine = fn(arg, cfg), fn(arg, cfg.doubled())
    assert fine.radius < coarse.radius
    assert coarse.contains(fine.value)
