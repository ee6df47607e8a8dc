"""Zero repulsion: the functional h, its roots lambda'_b, and the log coefficient.

For a test function f with transform F,

    h(lam1, lam') = 2 F(-lam') - 2 F(lam1 - lam') - F(0) + 2 phi f(0)
                  = 2 int f(t) e^(lam' t) (1 - e^(-lam1 t)) dt - F(0) + 2 phi f(0).

h increases in both arguments. For each b the root lambda'_b of h(b, .)
bounds the distance of a second zero from 1 whenever lam1 <= b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from mpmath import mp, mpf

from .laplace import LaplacePair, hb_pair, hb_support
from .numerics import (
    CertifiedReal,
    DomainError,
    NoRootError,
    ToleranceConfig,
    bisect_secant,
    certified_integral,
    cexp,
    clog,
    golden_section_min,
)
from .stechkin import phi_constant

DEFAULT_CONFIG = ToleranceConfig()
R_DEFAULT = "12.74"
BRACKET_CEILING = 20
LAMBDA_RANGE = (mpf("0.3"), mpf("0.7"))
PRINTED_GLOBAL_COEFFICIENT = mpf("0.6546")
PRINTED_SMALL_COEFFICIENT = mpf("0.9045")
LOWER_B = mpf("1e-6")

# b, lambda_b, lambda'_b, log(1/b), x0(b) as printed (truncated to 4 decimals)
PRINTED_TABLE1 = (
    ("1e-6", "0.543", "12.3982", "13.8155", "1.4391"),
    ("1e-5", "0.537", "10.3716", "11.5129", "1.4552"),
    ("1e-4", "0.526", "8.2848", "9.2103", "1.4856"),
    ("1e-3", "0.509", "6.1120", "6.9077", "1.5353"),
    ("0.005", "0.490", "4.5233", "5.2983", "1.5948"),
    ("0.01", "0.477", "3.8182", "4.6051", "1.6383"),
    ("0.02", "0.462", "3.1007", "3.9120", "1.6914"),
    ("0.03", "0.450", "2.6764", "3.5065", "1.7366"),
    ("0.04", "0.441", "2.3740", "3.2188", "1.7720"),
    ("0.05", "0.433", "2.1391", "2.9957", "1.8047"),
    ("0.055", "0.429", "2.0389", "2.9004", "1.8216"),
    ("0.06", "0.426", "1.9474", "2.8134", "1.8344"),
    ("0.065", "0.422", "1.8634", "2.7333", "1.8518"),
    ("0.07", "0.419", "1.7857", "2.6592", "1.8650"),
    ("0.071", "0.418", "1.7708", "2.6450", "1.8695"),
    ("0.072", "0.418", "1.7562", "2.6310", "1.8695"),
    ("0.073", "0.417", "1.7418", "2.6172", "1.8740"),
    ("0.074", "0.416", "1.7275", "2.6036", "1.8785"),
    ("0.075", "0.416", "1.7135", "2.5902", "1.8785"),
    ("0.076", "0.415", "1.6996", "2.5770", "1.8830"),
    ("0.077", "0.415", "1.6860", "2.5639", "1.8830"),
    ("0.078", "0.414", "1.6725", "2.5510", "1.8876"),
    ("1/12.74", "0.413", "1.6659", "2.5447", "1.8921"),
)
PRINTED_MAX_X0 = mpf("1.8922")


def _parse_b(text: str) -> mpf:
    if text.startswith("1/"):
        return 1 / mpf(text[2:])
    return mpf(text)


def truncate4(x) -> mpf:
    """Truncate toward zero at the 4th decimal."""
    x = mpf(x)
    return mp.sign(x) * mp.floor(abs(x) * 10000) / 10000


@dataclass(frozen=True)
class RepulsionConfig:
    R: str | float = R_DEFAULT
    epsilon: mpf = mpf("1e-6")
    delta: mpf = mpf("1e-6")

    def __post_init__(self):
        if mpf(self.R) <= 0:
            raise DomainError("R must be positive")

    def phi(self, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
        return phi_constant(cfg)


@dataclass(frozen=True)
class RepulsionRow:
    b: mpf
    lambda_b: mpf
    lambda_prime: CertifiedReal
    log_inv_b: CertifiedReal
    x0_b: CertifiedReal
    label: str = ""


@dataclass(frozen=True)
class RowDiff:
    label: str
    column: str
    printed: mpf
    computed: mpf
    truncated: mpf

    @property
    def ok(self) -> bool:
        return abs(self.truncated - self.printed) <= mpf("1e-4") * (1 + mpf("1e-9"))


def h_eval(pair: LaplacePair, lambda1, lambda_prime, phi: Optional[CertifiedReal] = None,
           cfg: ToleranceConfig = DEFAULT_CONFIG, epsilon=0) -> CertifiedReal:
    """Certified h(lambda1, lambda') + epsilon f(0).

    With a closed-form transform the two F terms are evaluated directly;
    otherwise their difference is integrated as one non-negative integrand.
    """
    with cfg.workdps():
        l1, lp = mpf(lambda1), mpf(lambda_prime)
        if l1 < 0 or lp < 0:
            raise DomainError("lambda1 and lambda' must be non-negative")
        phi = phi_constant(cfg) if phi is None else phi
        if pair.transform is not None:
            a = pair.F_certified(-lp)
            b = pair.F_certified(l1 - lp)
            diff = a.real - b.real
        else:
            integral = certified_integral(
                lambda t: pair.kernel(t) * mp.exp(lp * t) * (1 - mp.exp(-l1 * t)),
                0, pair.support_x0, cfg)
            diff = integral.real
        f0 = CertifiedReal(pair.f0, cfg.rounding_floor(pair.f0))
        F0 = CertifiedReal(pair.F_zero(), cfg.rounding_floor(pair.F_zero()))
        return 2 * diff - F0 + 2 * phi * f0 + mpf(epsilon) * f0


def _check_b(b):
    b = mpf(b)
    # b often arrives as a float or a short decimal, so allow 1e-12 relative slack
    if not 0 < b <= (1 / mpf("12.74")) * (1 + mpf("1e-12")):
        raise DomainError(f"b must lie in (0, 1/12.74], got {b}")
    return b


def solve_for_pair(pair: LaplacePair, b, cfg: ToleranceConfig = DEFAULT_CONFIG,
                   epsilon=0) -> CertifiedReal:
    """Root of h(b, .) on [0, 20] for a given test function."""
    with cfg.workdps():
        b = mpf(b)
        phi = phi_constant(cfg)

        def h(lp):
            return h_eval(pair, b, lp, phi, cfg, epsilon).value

        root = bisect_secant(h, 0, BRACKET_CEILING, cfg.root_target / 1000)
        # the radius must beat the uncertainty of h itself divided by its slope
        at_root = h_eval(pair, b, root, phi, cfg, epsilon)
        step = mpf(10) ** -(cfg.working_digits // 3)
        slope = (h(root + step) - h(root - step)) / (2 * step)
        rad = max(cfg.root_target, 10 * (at_root.radius + abs(at_root.value)) / abs(slope))
        lo = h_eval(pair, b, root - rad, phi, cfg, epsilon)
        hi = h_eval(pair, b, root + rad, phi, cfg, epsilon)
        if not (lo.certainly_lt(0) and hi.certainly_gt(0)):
            raise ArithmeticError(f"could not certify the root near {mp.nstr(root, 10)}")
        return CertifiedReal(root, rad)


def solve_lambda_prime(b, lambda_b, cfg: ToleranceConfig = DEFAULT_CONFIG,
                       epsilon=0) -> CertifiedReal:
    """Certified lambda'_b solving h(b, lambda') = 0 for f = f_{lambda_b}.

    h is increasing in lambda', so a sign change on [0, 20] gives the unique
    root. Raises NoRootError when no sign change exists.
    """
    with cfg.workdps():
        b = _check_b(b)
        _, pair = hb_pair(lambda_b, cfg)
        return solve_for_pair(pair, b, cfg, epsilon)


def _row(label, b, lam, cfg, epsilon=0) -> RepulsionRow:
    with cfg.workdps():
        lp = solve_lambda_prime(b, lam, cfg, epsilon)
        return RepulsionRow(b=b, lambda_b=mpf(lam), lambda_prime=lp,
                            log_inv_b=-clog(b), x0_b=hb_support(lam, cfg), label=label)


def table1(cfg: ToleranceConfig = DEFAULT_CONFIG, epsilon=0) -> list[RepulsionRow]:
    """Recompute every row of the repulsion table from its printed lambda_b."""
    rows = []
    with cfg.workdps():
        for b_text, lam, *_ in PRINTED_TABLE1:
            rows.append(_row(b_text, _parse_b(b_text), mpf(lam), cfg, epsilon))
    return rows


def table1_diff(rows: list[RepulsionRow]) -> list[RowDiff]:
    """Compare each recomputed column with the printed table after truncation."""
    printed = {r[0]: r for r in PRINTED_TABLE1}
    out = []
    for row in rows:
        _, _, lp, logb, x0 = printed[row.label]
        for col, pv, cv in (("lambda_prime", lp, row.lambda_prime.value),
                            ("log_inv_b", logb, row.log_inv_b.value),
                            ("x0", x0, row.x0_b.value)):
            out.append(RowDiff(row.label, col, mpf(pv), cv, truncate4(cv)))
    return out


def optimize_lambda(b, cfg: ToleranceConfig = DEFAULT_CONFIG,
                    search_cfg: Optional[ToleranceConfig] = None):
    """Maximise lambda'_b over lambda in [0.3, 0.7] by golden-section search.

    The search runs at ``search_cfg`` (15 digits by default); the optimum is
    then re-solved at ``cfg``.
    """
    b = _check_b(b)
    search_cfg = search_cfg or ToleranceConfig(15)

    def neg(lam):
        try:
            return -solve_lambda_prime(b, lam, search_cfg).value
        except NoRootError:
            return mpf(0)

    with search_cfg.workdps():
        lam, _ = golden_section_min(neg, *LAMBDA_RANGE, mpf("1e-4"))
    lam = mpf(round(float(lam), 6))
    return lam, solve_lambda_prime(b, lam, cfg)


@dataclass(frozen=True)
class SmallLambdaCase:
    coefficient: CertifiedReal
    coefficient_truncated: mpf
    lambda_prime_floor: CertifiedReal
    lambda1_threshold: CertifiedReal
    x0_cap: CertifiedReal


def small_lambda_case(eps=mpf("1e-6"), R=R_DEFAULT,
                      cfg: ToleranceConfig = DEFAULT_CONFIG) -> SmallLambdaCase:
    """Constants of the triangular test function for tiny lam1.

    x0 = 4 phi + 1/lam' + 2 eps with 1/lam' <= R from the zero-free region,
    so the support is capped by 4 phi + R + 2 eps.
    """
    with cfg.workdps():
        eps, R = mpf(eps), mpf(R)
        if not 0 < eps <= mpf("1e-6"):
            raise DomainError(f"eps must lie in (0, 1e-6], got {eps}")
        if R <= 0:
            raise DomainError("R must be positive")
        phi = phi_constant(cfg)
        coeff = 1 / (4 * phi + 2 * eps)
        trunc = mp.floor(coeff.lower * 10000) / 10000
        e = cexp(mpf(1))
        return SmallLambdaCase(
            coefficient=coeff,
            coefficient_truncated=trunc,
            lambda_prime_floor=4 * e,
            lambda1_threshold=cexp(-4 * e / trunc),
            x0_cap=4 * phi + R + 2 * eps,
        )


@dataclass(frozen=True)
class IntervalRatio:
    lo: mpf
    hi: mpf
    lambda_prime_hi: CertifiedReal
    left: CertifiedReal  # lambda'_{b_(i+1)} / log(1/b_i)
    right: CertifiedReal  # lambda'_{b_(i+1)} / log(1/b_(i+1))


@dataclass(frozen=True)
class GlobalCoefficient:
    intervals: list
    global_min: CertifiedReal
    argmin: tuple
    global_min_right: CertifiedReal
    last_chain: CertifiedReal
    printed_claim: mpf
    direction: str
    small_case_coefficient: mpf
    small_case_threshold: CertifiedReal
    handoff_ok: bool
    notes: list = field(default_factory=list)


def global_coefficient(rows: list[RepulsionRow],
                       cfg: ToleranceConfig = DEFAULT_CONFIG) -> GlobalCoefficient:
    """Worst ratio lambda'/log(1/lam1) over the tabulated subintervals.

    On [b_i, b_(i+1)] one has lambda' >= lambda'_{b_(i+1)} and
    log(1/lam1) <= log(1/b_i), which gives the left-endpoint ratio. The
    right-endpoint ratio is reported for comparison with the printed claim.
    """
    bs = [r.b for r in rows]
    if any(b2 <= b1 for b1, b2 in zip(bs, bs[1:])):
        raise DomainError("rows must be sorted by strictly increasing b")
    with cfg.workdps():
        intervals = []
        for r1, r2 in zip(rows, rows[1:]):
            intervals.append(IntervalRatio(
                lo=r1.b, hi=r2.b, lambda_prime_hi=r2.lambda_prime,
                left=r2.lambda_prime / r1.log_inv_b,
                right=r2.lambda_prime / r2.log_inv_b,
            ))
        worst = min(intervals, key=lambda iv: iv.left.value)
        worst_right = min(intervals, key=lambda iv: iv.right.value)
        last = intervals[-1].left
        small = small_lambda_case(cfg=cfg)
        gmin = worst.left
        if gmin.certainly_lt(PRINTED_GLOBAL_COEFFICIENT):
            direction = "below"
        elif gmin.certainly_ge(PRINTED_GLOBAL_COEFFICIENT):
            direction = "at-or-above"
        else:
            direction = "undecided"
        notes = []
        if direction == "below":
            notes.append(
                f"left-endpoint minimum {mp.nstr(gmin.value, 6)} on "
                f"[{mp.nstr(worst.lo, 4)}, {mp.nstr(worst.hi, 4)}] is below "
                f"{mp.nstr(PRINTED_GLOBAL_COEFFICIENT, 4)}; the printed value equals "
                f"lambda'/log(1/b) with b = 1/12.74 (right endpoint, "
                f"{mp.nstr(intervals[-1].right.value, 6)})")
        handoff = (small.lambda1_threshold.certainly_ge(LOWER_B)
                   and small.coefficient_truncated > gmin.upper)
        return GlobalCoefficient(
            intervals=intervals,
            global_min=gmin,
            argmin=(worst.lo, worst.hi),
            global_min_right=worst_right.right,
            last_chain=last,
            printed_claim=PRINTED_GLOBAL_COEFFICIENT,
            direction=direction,
            small_case_coefficient=small.coefficient_truncated,
            small_case_threshold=small.lambda1_threshold,
            handoff_ok=handoff,
            notes=notes,
        )


def max_x0(rows: list[RepulsionRow]) -> CertifiedReal:
    return max((r.x0_b for r in rows), key=lambda x: x.value)


def lambda_prime_scan(b, lams, cfg: Optional[ToleranceConfig] = None) -> list:
    """lambda'_b at each lambda in ``lams`` (no-root entries are None)."""
    cfg = cfg or ToleranceConfig(15)
    out = []
    for lam in lams:
        try:
            out.append(solve_lambda_prime(b, lam, cfg).value)
        except NoRootError:
            out.append(None)
    return out
