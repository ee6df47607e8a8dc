"""Assemble report sections from the computations in each module."""

from __future__ import annotations

from mpmath import mp, mpf

from . import laplace, repulsion, stechkin, zerocount
from .numerics import CertifiedReal, ToleranceConfig, cmax, stirling_deviation
from .report import ReportDocument, Section, make_claim, open_claim
from .zerodata import ZeroDataset, verify_window


def _nstr(x, n=12):
    if isinstance(x, CertifiedReal):
        return f"{mp.nstr(x.value, n)} +- {mp.nstr(x.radius, 2)}"
    return mp.nstr(mpf(x), n)


def constants_section(cfg: ToleranceConfig) -> Section:
    with cfg.workdps():
        sec = Section("constants")
        add = sec.claims.append
        phi = stechkin.phi_constant(cfg)
        gm = stechkin.g_min(cfg)
        budget = stechkin.theorem2_budget(mpf("0.01"), cfg)
        ca15 = cmax(stechkin.C_a(0, mpf("0.15"), cfg), stechkin.C_a(1, mpf("0.15"), cfg))
        theta = laplace.hb_theta(cfg)
        add(make_claim("phi", "coefficient of log d_K", "0.276393", phi))
        add(make_claim("g.beta_root", "critical point of g", "0.672016", gm.beta_root, tol="1e-6"))
        add(make_claim("g.min", "minimum of g", "-0.121585", gm.min_value, tol="1e-6"))
        add(make_claim("g.additive", "additive constant (rounded up)", "0.121586", budget.additive,
                       "le", tol="0"))
        add(make_claim("g.perturbation_margin", "perturbation bound coefficient", "5",
                       stechkin.g_perturb_margin(mpf("0.01"), cfg), "lt"))
        add(make_claim("f0(1,1)", "digamma difference, a=0", "-0.312948", budget.f0_11))
        add(make_claim("f1(1,1)", "digamma difference, a=1", "-0.158361", budget.f1_11))
        add(make_claim("C0(0.01)", "upper bound for f_0 near sigma=1", "-0.303931",
                       budget.C0_eps, "le", tol="0"))
        add(make_claim("C1(0.01)", "upper bound for f_1 near sigma=1", "-0.153758",
                       budget.C1_eps, "le", tol="0"))
        add(make_claim("Ca(0.15)", "upper bound for f_a at eps=0.15", "-0.088955", ca15,
                       "le", tol="0"))
        add(make_claim("gamma_diff", "gamma-factor coefficient", "-0.545240", budget.gamma_diff,
                       "lt"))
        add(make_claim("zeta_term", "-(1/sqrt5) zeta'/zeta at the golden ratio", "0.509786",
                       budget.zeta_term, "le", tol="0"))
        add(make_claim("nk_coefficient", "n_K coefficient", "-0.035454", budget.nk_coeff,
                       "le", tol="0"))
        add(make_claim("b1", "zero-counting constant b1", "4.692582",
                       zerocount.b1_constant(cfg), tol="1e-6"))
        add(make_claim("b2", "zero-counting constant b2", "0.267481",
                       zerocount.b2_constant(cfg), tol="1e-6"))
        add(make_claim("b3", "zero-counting constant b3", "0.268089",
                       zerocount.b3_constant(cfg), tol="1e-6"))
        add(make_claim("g_cap", "zero-counting additive constant", "7.622699",
                       zerocount.g_cap(cfg), tol="1e-6"))
        add(make_claim("stirling.half_arg(1)", "Stirling deviation, half argument", "0.630716",
                       stirling_deviation(1, "half-arg", cfg), "le", tol="0"))
        add(make_claim("stirling.full_arg(1)", "Stirling deviation, full argument", "0.260643",
                       stirling_deviation(1, "full-arg", cfg), "le", tol="0"))
        add(make_claim("theta", "test-function angle", "1.272979", theta, tol="1e-6"))
        safe = "rounded statement constant lies on the safe side of the proof value"
        add(make_claim("statement.b2", "rounded b2 in the theorem", "0.2675",
                       zerocount.b2_constant(cfg), "le", tol="0", note=safe))
        add(make_claim("statement.b3", "rounded b3 in the theorem", "0.2680",
                       zerocount.b3_constant(cfg), "ge", tol="0", note=safe))
        add(make_claim("statement.g_cap", "rounded additive constant in the theorem", "7.6227",
                       zerocount.g_cap(cfg), "le", tol="0", note=safe))
        add(make_claim("statement.additive", "rounded additive constant", "0.1216",
                       budget.additive, "le", tol="0", note=safe))
        add(make_claim("statement.nk_coefficient", "rounded n_K coefficient", "-0.0354",
                       budget.nk_coeff, "le", tol="0", note=safe))
        mk = zerocount.minkowski_scan(1000, cfg)
        sec.values["minkowski_sup"] = f"{_nstr(mk['sup'])} at n_K={mk['argmax']}"
        return sec


def table1_section(cfg: ToleranceConfig, epsilon=0) -> tuple[Section, list]:
    with cfg.workdps():
        sec = Section("table1")
        rows = repulsion.table1(cfg, epsilon)
        diffs = {(d.label, d.column): d for d in repulsion.table1_diff(rows)}
        for row, printed in zip(rows, repulsion.PRINTED_TABLE1):
            b_text = printed[0]
            for col, pv, cv in (("lambda_prime", printed[2], row.lambda_prime),
                                ("log_inv_b", printed[3], row.log_inv_b),
                                ("x0", printed[4], row.x0_b)):
                sec.claims.append(make_claim(f"table1.b={b_text}.{col}", f"repulsion table, b={b_text}",
                                             pv, cv, "trunc4", tol="1e-4"))
            ok = all(diffs[(row.label, c)].ok for c in ("lambda_prime", "log_inv_b", "x0"))
            sec.table.append({
                "b": b_text,
                "lambda_b": printed[1],
                "lambda_prime": mp.nstr(row.lambda_prime.value, 10),
                "lambda_prime_printed": printed[2],
                "log_inv_b": mp.nstr(row.log_inv_b.value, 10),
                "log_inv_b_printed": printed[3],
                "x0": mp.nstr(row.x0_b.value, 10),
                "x0_printed": printed[4],
                "status": "CONFIRMED" if ok else "DISCREPANT",
            })
        sec.claims.append(make_claim("table1.max_x0", "support bound over the table", "1.8922",
                                     repulsion.max_x0(rows), "le", tol="0"))
        if epsilon:
            sec.values["epsilon"] = str(epsilon)
        return sec, rows


def optimized_section(rows, cfg: ToleranceConfig) -> Section:
    sec = Section("table1-optimized")
    for row, printed in zip(rows, repulsion.PRINTED_TABLE1):
        lam, lp = repulsion.optimize_lambda(row.b, cfg)
        sec.claims.append(make_claim(f"optimized.b={printed[0]}", f"repulsion table, b={printed[0]}",
                                     printed[2], lp, "ge", tol="1e-4",
                                     note=f"lambda*={mp.nstr(lam, 6)}"))
        sec.table.append({"b": printed[0], "lambda_printed": printed[1],
                          "lambda_opt": mp.nstr(lam, 6),
                          "lambda_prime_opt": mp.nstr(lp.value, 10),
                          "lambda_prime_printed": printed[2]})
    return sec


def repulsion_section(rows, cfg: ToleranceConfig) -> Section:
    with cfg.workdps():
        sec = Section("repulsion")
        small = repulsion.small_lambda_case(mpf("1e-6"), repulsion.R_DEFAULT, cfg)
        sec.claims.append(make_claim("small.coefficient", "small lambda_1 case", "0.9045",
                                     small.coefficient, "ge", tol="0"))
        sec.claims.append(make_claim("small.threshold", "small lambda_1 threshold",
                                     "6.015645e-6", small.lambda1_threshold, tol="1e-11"))
        sec.claims.append(make_claim("small.x0_cap", "triangle support cap", "13.8456",
                                     small.x0_cap, tol="1e-4",
                                     note="uses 1/lambda' <= R, so the cap is 4 phi + R + 2 eps"))
        g = repulsion.global_coefficient(rows, cfg)
        lo, hi = (mp.nstr(x, 4) for x in g.argmin)
        sec.claims.append(make_claim(
            "global.chain_last_interval", "chain on [0.078, 1/12.74]", "0.6546", g.last_chain,
            "ge", tol="0", audit=True,
            note="lambda'(1/12.74)/log(1/0.078) is below the printed coefficient"))
        sec.claims.append(make_claim(
            "global.min_left_endpoint", "log coefficient over all subintervals", "0.6546",
            g.global_min, "ge", tol="0", audit=True,
            note=f"minimum on [{lo}, {hi}]; " + "; ".join(g.notes)))
        last = g.intervals[-1].right
        sec.claims.append(make_claim(
            "global.right_endpoint_last", "printed coefficient convention", "0.6546", last,
            "trunc4", tol="1e-4",
            note="printed value matches lambda'(1/12.74)/log(12.74)"))
        sec.claims.append(make_claim(
            "global.handoff", "small case covers lambda_1 below the table", "1e-6",
            small.lambda1_threshold, "ge", tol="0",
            note=f"0.9045 exceeds every medium-range ratio: {g.handoff_ok}"))
        sec.values["global_min_left"] = _nstr(g.global_min)
        sec.values["global_min_right"] = _nstr(g.global_min_right)
        return sec


def repulsion_point_section(b, lam, cfg: ToleranceConfig) -> Section:
    with cfg.workdps():
        sec = Section("repulsion-point")
        b = mpf(b)
        printed = None
        for row in repulsion.PRINTED_TABLE1:
            if abs(repulsion._parse_b(row[0]) - b) <= b * mpf("1e-12"):
                printed = row
        if lam is None:
            if printed is not None:
                lam = mpf(printed[1])
            else:
                lam, _ = repulsion.optimize_lambda(b, cfg)
        lp = repulsion.solve_lambda_prime(b, lam, cfg)
        sec.values["b"] = mp.nstr(b, 12)
        sec.values["lambda"] = mp.nstr(mpf(lam), 8)
        sec.values["lambda_prime"] = _nstr(lp, 16)
        sec.values["x0"] = _nstr(laplace.hb_support(lam, cfg), 16)
        if printed is not None and abs(mpf(lam) - mpf(printed[1])) < mpf("1e-12"):
            sec.claims.append(make_claim(f"table1.b={printed[0]}.lambda_prime",
                                         f"repulsion table, b={printed[0]}", printed[2], lp,
                                         "trunc4", tol="1e-4"))
        return sec


def zerocount_section(field: zerocount.FieldParams, T, eta, cfg: ToleranceConfig) -> Section:
    with cfg.workdps():
        sec = Section("zerocount")
        if eta == "auto":
            e, win = zerocount.optimize_eta(field, T, cfg)
        else:
            e = mpf(eta)
            win = zerocount.count_window(field, T, e, cfg)
        stmt = (zerocount.c1_of_eta(e, cfg) * (field.certified_log_disc(cfg)
                                                + field.n_K * mp.log(mpf(T)))
                + zerocount.c2_of_eta(e, cfg, statement_constants=True) * field.n_K
                + mpf(zerocount.STATEMENT_G_CAP))
        sec.values.update({
            "error_bound_statement_constants": _nstr(stmt, 15),
            "n_K": field.n_K, "r1": field.r1, "r2": field.r2,
            "log_disc": mp.nstr(field.certified_log_disc(cfg).value, 15),
            "T": mp.nstr(mpf(T), 10), "eta": mp.nstr(e, 10),
            "main_term": _nstr(win.main_term, 15), "error_bound": _nstr(win.error_bound, 15),
            "window": f"[{mp.nstr(win.lower, 10)}, {mp.nstr(win.upper, 10)}]",
        })
        return sec


def verify_section(ds: ZeroDataset, tmax, eta, cfg: ToleranceConfig) -> Section:
    tmax = min(float(tmax), ds.completeness_height)
    grid = list(range(1, int(tmax) + 1))
    rep = verify_window(ds, eta, grid, cfg)
    sec = Section(f"verify-zeros:{ds.label}")
    for r in rep.rows:
        sec.claims.append(make_claim(
            f"window.{ds.label}.T={int(r.T)}", "zero-counting window", "0",
            CertifiedReal(r.margin, 0), "gt",
            note=f"N={r.count}, main={mp.nstr(r.window.main_term.value, 8)}, "
                 f"bound={mp.nstr(r.window.error_bound.value, 8)}, eta={mp.nstr(r.eta, 6)}"))
        sec.table.append({"T": int(r.T), "count": r.count,
                          "main": mp.nstr(r.window.main_term.value, 10),
                          "bound": mp.nstr(r.window.error_bound.value, 10),
                          "eta": mp.nstr(r.eta, 6), "margin": mp.nstr(r.margin, 8),
                          "pass": r.passed})
    sec.values["source"] = ds.source
    sec.values["completeness_height"] = ds.completeness_height
    sec.values["completeness"] = "declared by the dataset, not independently verified"
    return sec


def headline_section() -> Section:
    sec = Section("theorems")
    note = "statement about every number field; not checkable by finite computation"
    sec.claims.append(open_claim("theorem.zero_count", "zero-counting theorem",
                                 "window holds for all K and T >= 1", note))
    sec.claims.append(open_claim("theorem.zero_density", "zero-density theorem",
                                 "explicit density estimate for all K", note))
    sec.claims.append(open_claim("theorem.repulsion", "zero-repulsion lemmas",
                                 "lambda' >= 0.6546 log(1/lambda_1) for all K", note))
    return sec


def full_report(cfg: ToleranceConfig, datasets, optimize: bool = False) -> ReportDocument:
    doc = ReportDocument(meta={"digits": cfg.working_digits})
    doc.sections.append(constants_section(cfg))
    t1, rows = table1_section(cfg)
    doc.sections.append(t1)
    if optimize:
        doc.sections.append(optimized_section(rows, cfg))
    doc.sections.append(repulsion_section(rows, cfg))
    for ds in datasets:
        doc.sections.append(verify_section(ds, 30, "auto", cfg))
    doc.sections.append(headline_section())
    doc.sort()
    doc.validate()
    return doc
