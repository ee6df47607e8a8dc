import pytest
from mpmath import mp, mpf

from zetax.laplace import hb_pair, triangular_pair
from zetax.numerics import DomainError, NoRootError, ToleranceConfig, is_unimodal
from zetax.repulsion import (
    PRINTED_MAX_X0,
    PRINTED_TABLE1,
    RepulsionConfig,
    global_coefficient,
    h_eval,
    lambda_prime_scan,
    max_x0,
    optimize_lambda,
    small_lambda_case,
    solve_for_pair,
    solve_lambda_prime,
    table1_diff,
    truncate4,
)
from zetax.stechkin import phi_constant


@pytest.fixture(scope="module")
def pair(cfg):
    return hb_pair("0.477", cfg)[1]


def test_truncate4():
    assert truncate4("1.23459") == mpf("1.2345")
    assert truncate4("-1.23459") == mpf("-1.2345")


def test_h_at_zero_lambda1(cfg, pair):
    phi = phi_constant(cfg)
    for lp in ("0", "2.5", "9"):
        h = h_eval(pair, 0, lp, cfg=cfg)
        with cfg.workdps():
            expected = -pair.F_zero() + 2 * phi.value * pair.f0
        assert abs(h.value - expected) <= h.radius + mpf("1e-30")


def test_h_matches_quadrature_path(cfg, pair):
    from dataclasses import replace
    quad_pair = replace(pair, transform=None)
    for l1, lp in (("0.01", "3.8"), ("0.05", "2.1"), ("1e-6", "12")):
        a = h_eval(pair, l1, lp, cfg=cfg)
        b = h_eval(quad_pair, l1, lp, cfg=cfg)
        assert abs(a.value - b.value) <= a.radius + b.radius


@pytest.mark.parametrize("lam", ["0.413", "0.543"])
def test_h_monotone_on_grid(fast_cfg, lam):
    _, p = hb_pair(lam, fast_cfg)
    l1s = [mpf(k) / 200 for k in range(1, 21)]
    lps = [mpf(k) * 12 / 19 for k in range(20)]
    grid = [[h_eval(p, l1, lp, cfg=fast_cfg).value for lp in lps] for l1 in l1s]
    for row in grid:
        assert all(b > a for a, b in zip(row, row[1:]))
    # F decreases, so -2 F(lambda1 - lambda') grows with lambda1
    for j in range(len(lps)):
        col = [grid[i][j] for i in range(len(l1s))]
        assert all(b > a for a, b in zip(col, col[1:]))


def test_table_reproduced(table_rows):
    diffs = table1_diff(table_rows)
    assert len(diffs) == 3 * len(PRINTED_TABLE1)
    bad = [d for d in diffs if not d.ok]
    assert not bad, bad


def test_bracket_certified(table_rows, cfg):
    # the printed lambda' sits within 0.01 of the certified root, and h changes sign across it
    phi = phi_constant(cfg)
    for row, printed in zip(table_rows, PRINTED_TABLE1):
        lp = mpf(printed[2])
        assert abs(row.lambda_prime.value - lp) < mpf("0.01")
        _, p = hb_pair(row.lambda_b, cfg)
        assert h_eval(p, row.b, lp - mpf("0.01"), phi, cfg).certainly_lt(0)
        assert h_eval(p, row.b, lp + mpf("0.01"), phi, cfg).certainly_gt(0)


def test_monotone_consequence(cfg, pair):
    # smaller lambda1 needs a larger lambda' before h turns positive
    roots = [solve_for_pair(pair, b, cfg).value for b in ("0.001", "0.01", "0.05")]
    assert roots[0] > roots[1] > roots[2]


def test_max_x0(table_rows):
    m = max_x0(table_rows)
    assert abs(m.value - mpf("1.89218194792391")) < mpf("1e-13")
    assert m.upper <= PRINTED_MAX_X0


def test_domain_checks(cfg):
    with pytest.raises(DomainError):
        solve_lambda_prime("0.1", "0.4", cfg)
    with pytest.raises(DomainError):
        solve_lambda_prime(0, "0.4", cfg)
    with pytest.raises(DomainError):
        h_eval(triangular_pair(1, cfg), -1, 1, cfg=cfg)
    with pytest.raises(DomainError):
        RepulsionConfig(R=0)
    assert solve_lambda_prime(1 / mpf("12.74"), "0.413", cfg).value > 0


def test_no_root():
    # a lambda far from the useful range leaves no sign change on [0, 20]
    with pytest.raises(NoRootError):
        solve_lambda_prime("1e-6", "20", ToleranceConfig(15))


def test_optimize_small_b():
    lam, lp = optimize_lambda("1e-6")
    assert abs(lam - mpf("0.543")) < mpf("0.02")
    assert lp.value >= mpf("12.3982") - mpf("1e-3")


def test_optimize_example():
    lam, lp = optimize_lambda("0.01")
    assert abs(lam - mpf("0.477381")) < mpf("1e-4")
    assert abs(lp.value - mpf("3.81823847")) < mpf("1e-6")


def test_unimodality_witness():
    lams = [mpf("0.40") + mpf("0.01") * k for k in range(16)]
    vals = lambda_prime_scan("0.01", lams)
    assert all(v is not None for v in vals)
    assert is_unimodal([-v for v in vals])


def test_small_lambda_case(cfg):
    s = small_lambda_case(cfg=cfg)
    assert abs(s.coefficient.value - mpf("0.9045068609")) < mpf("1e-10")
    assert float(s.coefficient_truncated) == 0.9045
    assert abs(s.lambda1_threshold.value - mpf("6.0156458760e-6")) < mpf("1e-15")
    assert abs(s.x0_cap.value - mpf("13.8455748")) < mpf("1e-7")
    with pytest.raises(DomainError):
        small_lambda_case(eps="1e-5", cfg=cfg)


def test_global_coefficient(table_rows, cfg):
    g = global_coefficient(table_rows, cfg)
    assert abs(g.global_min.value - mpf("0.652332571945")) < mpf("1e-11")
    assert tuple(map(float, g.argmin)) == (0.077, 0.078)
    assert g.direction == "below"
    assert g.handoff_ok
    assert truncate4(g.intervals[-1].right.value) == mpf("0.6546")
    assert len(g.intervals) == len(table_rows) - 1


def test_global_coefficient_stable_under_precision(table_rows, cfg):
    coarse = global_coefficient(table_rows, cfg)
    from zetax.repulsion import table1
    fine_rows = table1(cfg.doubled())
    fine = global_coefficient(fine_rows, cfg.doubled())
    assert coarse.global_min.contains(fine.global_min.value)
    assert tuple(map(float, coarse.argmin)) == tuple(map(float, fine.argmin))


def test_global_coefficient_rejects_unsorted(table_rows, cfg):
    rows = list(table_rows)
    rows[3], rows[4] = rows[4], rows[3]
    with pytest.raises(DomainError):
        global_coefficient(rows, cfg)
