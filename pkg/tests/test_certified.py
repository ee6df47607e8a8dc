import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from zetax.numerics import (
    CertifiedComplex,
    CertifiedReal,
    DomainError,
    ToleranceConfig,
    cexp,
    clog,
    cmax,
    cpi,
    csqrt,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
radii = st.floats(min_value=0, max_value=1e-3)
positive = st.floats(min_value=1e-3, max_value=1e6)


def test_config_defaults():
    cfg = ToleranceConfig()
    assert cfg.working_digits == 30
    assert cfg.dps == 40
    with mp.workdps(cfg.dps):
        assert abs(cfg.quadrature_target / mpf("1e-27") - 1) < mpf("1e-30")
        assert abs(cfg.root_target / mpf("1e-22") - 1) < mpf("1e-30")


@pytest.mark.parametrize("kwargs", [
    {"working_digits": 10},
    {"epsilon": 0},
    {"epsilon": 0.02},
    {"delta": 1},
    {"delta": 0},
    {"quadrature_target": -1},
])
def test_config_rejects(kwargs):
    with pytest.raises(DomainError):
        ToleranceConfig(**kwargs)


def test_doubled_tightens_targets():
    cfg = ToleranceConfig(30)
    d = cfg.doubled()
    assert d.working_digits == 60
    assert d.quadrature_target < cfg.quadrature_target
    assert d.root_target < cfg.root_target


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        CertifiedReal(mpf(1), mpf(-1))


def test_comparisons():
    x = CertifiedReal(mpf(1), mpf("0.1"))
    assert x.certainly_gt(0.8) and not x.certainly_gt(0.95)
    assert x.certainly_lt(1.2) and not x.certainly_lt(1.05)
    assert 1.05 in x and 1.2 not in x
    assert x.contains(CertifiedReal(mpf("1.05"), mpf("0.01")))
    assert not x.contains(CertifiedReal(mpf("1.05"), mpf("0.1")))


@given(finite, radii, finite, radii)
def test_arithmetic_encloses_extremes(a, ra, b, rb):
    x, y = CertifiedReal(mpf(a), mpf(ra)), CertifiedReal(mpf(b), mpf(rb))
    s, d, p = x + y, x - y, x * y
    # extremes in (effectively) exact arithmetic
    with mp.workdps(80):
        for xa in (mpf(a) - mpf(ra), mpf(a) + mpf(ra)):
            for yb in (mpf(b) - mpf(rb), mpf(b) + mpf(rb)):
                assert s.lower <= xa + yb <= s.upper
                assert d.lower <= xa - yb <= d.upper
                assert p.lower <= xa * yb <= p.upper


@given(finite, radii, positive)
def test_division_encloses(a, ra, b):
    x = CertifiedReal(mpf(a), mpf(ra))
    y = CertifiedReal(mpf(b), mpf(b) * mpf("1e-4"))
    q = x / y
    with mp.workdps(80):
        for xa in (mpf(a) - mpf(ra), mpf(a) + mpf(ra)):
            for yb in (y.value - y.radius, y.value + y.radius):
                assert q.lower <= xa / yb <= q.upper


def test_division_by_interval_containing_zero():
    with pytest.raises(ZeroDivisionError):
        CertifiedReal(mpf(1)) / CertifiedReal(mpf(0), mpf("0.1"))


@given(st.floats(min_value=1e-2, max_value=1e3), st.floats(min_value=0, max_value=1e-4))
def test_monotone_helpers(v, r):
    x = CertifiedReal(mpf(v), mpf(r) * mpf(v))
    for fn, cfn in ((mp.log, clog), (mp.sqrt, csqrt), (mp.exp, lambda t: cexp(t / 1000))):
        out = cfn(x)
        for end in (x.lower, x.upper):
            arg = end / 1000 if fn is mp.exp else end
            assert out.contains(fn(arg))


def test_domain_errors():
    with pytest.raises(DomainError):
        clog(CertifiedReal(mpf(0), mpf(1)))
    with pytest.raises(DomainError):
        csqrt(-1)


def test_pow_and_abs():
    x = CertifiedReal(mpf(-2), mpf("0.5"))
    assert (x ** 2).contains(mpf("6.25")) and (x ** 2).contains(mpf("2.25"))
    assert abs(CertifiedReal(mpf("0.1"), mpf("0.5"))).lower == 0


def test_cmax_and_pi():
    a = CertifiedReal(mpf(1), mpf("0.1"))
    b = CertifiedReal(mpf("1.05"), mpf("0.01"))
    m = cmax(a, b)
    assert m.contains(b.lower) and m.contains(a.upper)
    assert m.lower >= a.lower and m.upper - a.upper < mpf("1e-12")
    assert cpi().contains(mp.pi)


def test_complex_pair():
    z = CertifiedComplex.from_value(mp.mpc(1, 2), mpf("1e-10"))
    assert z.radius == mpf("2e-10")
    assert z.contains(CertifiedComplex.from_value(mp.mpc(1, 2), mpf("1e-12")))


def test_to_dict_round_numbers():
    d = CertifiedReal(mpf("0.5"), mpf("1e-20")).to_dict()
    assert set(d) == {"value", "radius"}
