"""One check per acceptance criterion; each prints a single PASS/FAIL line."""

import time

import pytest
from mpmath import mp, mpf

from zetax import claims, laplace, repulsion, stechkin, zerocount
from zetax.laplace import GridSpec, condition_check, default_z_grid, hb_pair, triangular_pair
from zetax.numerics import ToleranceConfig, cmax, stirling_deviation
from zetax.report import DISCREPANT
from zetax.zerodata import BUNDLED, load_fixture, verify_window


@pytest.fixture
def verdict(capsys):
    def report(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail
    return report


def _constants(cfg):
    budget = stechkin.theorem2_budget(mpf("0.01"), cfg)
    gm = stechkin.g_min(cfg)
    return {
        "phi": stechkin.phi_constant(cfg),
        "beta_root": gm.beta_root,
        "g_min": gm.min_value,
        "f0(1,1)": budget.f0_11,
        "f1(1,1)": budget.f1_11,
        "C0(0.01)": budget.C0_eps,
        "C1(0.01)": budget.C1_eps,
        "Ca(0.15)": cmax(stechkin.C_a(0, mpf("0.15"), cfg), stechkin.C_a(1, mpf("0.15"), cfg)),
        "gamma_diff": budget.gamma_diff,
        "zeta_term": budget.zeta_term,
        "nk_coefficient": budget.nk_coeff,
        "b1": zerocount.b1_constant(cfg),
        "b2": zerocount.b2_constant(cfg),
        "b3": zerocount.b3_constant(cfg),
        "g_cap": zerocount.g_cap(cfg),
        "stirling_half": stirling_deviation(1, "half-arg", cfg),
        "stirling_full": stirling_deviation(1, "full-arg", cfg),
        "theta": laplace.hb_theta(cfg),
        "small_coefficient": repulsion.small_lambda_case(cfg=cfg).coefficient,
        "small_threshold": repulsion.small_lambda_case(cfg=cfg).lambda1_threshold,
        "x0_cap": repulsion.small_lambda_case(cfg=cfg).x0_cap,
    }


# (name, relation, printed value, tolerance)
CONSTANT_TARGETS = [
    ("phi", "approx", "0.276393", "1e-5"),
    ("beta_root", "approx", "0.672016", "1e-5"),
    ("g_min", "approx", "-0.121585", "1e-5"),
    ("f0(1,1)", "approx", "-0.312948", "1e-5"),
    ("f1(1,1)", "approx", "-0.158361", "1e-5"),
    ("C0(0.01)", "le", "-0.303931", "0"),
    ("C1(0.01)", "le", "-0.153758", "0"),
    ("Ca(0.15)", "le", "-0.088955", "0"),
    ("gamma_diff", "lt", "-0.545240", "0"),
    ("zeta_term", "le", "0.509786", "0"),
    ("nk_coefficient", "le", "-0.035454", "0"),
    ("b1", "approx", "4.692582", "1e-6"),
    ("b2", "approx", "0.267481", "1e-6"),
    ("b3", "approx", "0.268089", "1e-6"),
    ("g_cap", "approx", "7.622699", "1e-6"),
    ("stirling_half", "le", "0.630716", "0"),
    ("stirling_full", "le", "0.260643", "0"),
    ("theta", "approx", "1.272979", "1e-6"),
]


def _holds(relation, x, printed, tol):
    p, tol = mpf(printed), mpf(tol)
    if relation == "approx":
        return abs(x.value - p) + x.radius <= tol
    if relation == "le":
        return x.upper <= p + tol
    return x.upper < p


def test_criterion_1_constants(cfg, verdict):
    values = _constants(cfg)
    failed = [name for name, rel, printed, tol in CONSTANT_TARGETS
              if not _holds(rel, values[name], printed, tol)]
    section = claims.constants_section(cfg)
    failed += [c.id for c in section.claims if c.status != "CONFIRMED"]
    verdict(1, not failed, f"{len(CONSTANT_TARGETS)} constants"
            + (f", failing: {failed}" if failed else ""))


def test_criterion_2_table(table_rows, verdict):
    diffs = repulsion.table1_diff(table_rows)
    bad = [(d.label, d.column) for d in diffs if d.column != "log_inv_b" and not d.ok]
    top = repulsion.max_x0(table_rows)
    ok = not bad and len(table_rows) == len(repulsion.PRINTED_TABLE1) and top.upper <= mpf("1.8922")
    verdict(2, ok, f"{len(table_rows)} printed rows reproduced, max x0 "
            f"{mp.nstr(top.value, 8)} <= 1.8922" + (f", failing: {bad}" if bad else ""))


def test_criterion_3_small_case(cfg, verdict):
    s = repulsion.small_lambda_case(mpf("1e-6"), "12.74", cfg)
    ok = (s.coefficient.lower >= mpf("0.9045")
          and abs(s.lambda1_threshold.value - mpf("6.015645e-6")) + s.lambda1_threshold.radius
          <= mpf("1e-11")
          and abs(s.x0_cap.value - mpf("13.8456")) + s.x0_cap.radius <= mpf("1e-4"))
    verdict(3, ok, f"coefficient {mp.nstr(s.coefficient.value, 10)}, threshold "
            f"{mp.nstr(s.lambda1_threshold.value, 10)}, cap {mp.nstr(s.x0_cap.value, 8)}")


def _audit(rows, cfg):
    sec = claims.repulsion_section(rows, cfg)
    by_id = {c.id: c for c in sec.claims}
    return repulsion.global_coefficient(rows, cfg), by_id["global.chain_last_interval"]


def test_criterion_4_global_audit(cfg, table_rows, verdict):
    g, claim = _audit(table_rows, cfg)
    fine_cfg = cfg.doubled()
    g2, claim2 = _audit(repulsion.table1(fine_cfg), fine_cfg)
    certified = all(iv.left.radius < mpf("1e-10") for iv in g.intervals)
    chain = g.last_chain
    ok = (certified
          and abs(chain.value - mpf("0.6530")) < mpf("1e-4")
          and claim.status == DISCREPANT and claim.audit and claim.note
          and claim2.status == claim.status
          and chain.contains(g2.last_chain.value)
          and g.direction == g2.direction == "below"
          and [float(x) for x in g.argmin] == [float(x) for x in g2.argmin])
    verdict(4, ok, f"chain on [0.078, 1/12.74] gives {mp.nstr(chain.value, 6)} vs printed 0.6546, "
            f"reported {claim.status} (audit), stable at {fine_cfg.working_digits} digits")


def test_criterion_5_window(cfg, verdict):
    start = time.perf_counter()
    margins = {}
    for name in BUNDLED:
        ds = load_fixture(name)
        report = verify_window(ds, "auto", cfg=cfg)
        assert len(report.rows) == int(min(30, ds.completeness_height))
        margins[name] = report.min_margin
    elapsed = time.perf_counter() - start
    ok = all(m > 0 for m in margins.values()) and elapsed < 60
    shown = ", ".join(f"{k} {mp.nstr(v, 4)}" for k, v in margins.items())
    verdict(5, ok, f"min margins {shown}; {elapsed:.1f} s")


def test_criterion_6_properties(cfg, verdict):
    problems = []
    grid = GridSpec(200, default_z_grid(1000))
    _, hb = hb_pair("0.543", cfg)
    for pair in (triangular_pair(2, cfg), hb, hb_pair("0.413", cfg)[1]):
        rep = condition_check(pair, grid, cfg)
        problems += [f"{pair.name}: {c.name}" for c in rep.checks if not c.passed]

    params = hb_pair("0.543", cfg)[0]
    with mp.workdps(25):
        th, zeta, d = params.theta.value, params.zeta_param, params.half_support
        A = params.lam * (1 + mp.tan(th) ** 2)

        def g(t):
            return A * (mp.cos(zeta * t) - mp.cos(th)) if abs(t) <= d else mpf(0)

        worst = max(abs(mp.quad(lambda u: g(u) * g(t - u), [t - d, d]) - hb.kernel(t))
                    for t in (2 * d * mpf(k) / 20 for k in range(20)))
    if worst >= mpf("1e-8"):
        problems.append(f"self-convolution error {mp.nstr(worst, 3)}")

    fast = ToleranceConfig(15)
    _, p = hb_pair("0.543", fast)
    l1s = [mpf(k) / 200 for k in range(1, 21)]
    lps = [mpf(k) * 12 / 19 for k in range(20)]
    h = [[repulsion.h_eval(p, a, b, cfg=fast).value for b in lps] for a in l1s]
    rows_up = all(all(y > x for x, y in zip(r, r[1:])) for r in h)
    cols_up = all(all(h[i + 1][j] > h[i][j] for i in range(19)) for j in range(20))
    if not (rows_up and cols_up):
        problems.append("h not monotone on the 20x20 grid")

    coarse, fine = _constants(cfg), _constants(cfg.doubled())
    problems += [f"doubling: {k}" for k in coarse
                 if not (coarse[k].contains(fine[k].value) and fine[k].radius <= coarse[k].radius)]
    verdict(6, not problems, "Re F, F0 bound, self-convolution, h monotonicity, doubling"
            + (f"; failing: {problems}" if problems else ""))
