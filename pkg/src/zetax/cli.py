"""Command-line front end.

Examples
--------
    zetax constants
    zetax table1 --format csv
    zetax zerocount --nk 2 --r1 2 --r2 0 --logdisc 1.6094379 --T 10 --eta auto
    zetax verify-zeros --fixture riemann --tmax 30
    zetax repulsion --b 0.01
    zetax report --allow-open

Exit status: 0 when every claim is confirmed (audited errata and, with
--allow-open, open claims do not count), 1 on a discrepancy, 2 on bad
arguments, 3 on a numeric or data failure.
"""

from __future__ import annotations

import sys

import click
from mpmath import mpf

from . import claims
from .numerics import DomainError, ToleranceConfig
from .report import ReportDocument, table_csv, to_csv, to_json, to_text
from .zerocount import FieldParams
from .zerodata import BUNDLED, FetchError, LoadError, fetch_remote, load_fixture

EXIT_NUMERIC = 3


def _common(fn):
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]),
                      default="text", show_default=True)(fn)
    fn = click.option("--digits", type=click.IntRange(15, 200), default=30, show_default=True,
                      help="Working precision in decimal digits.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write the report here instead of stdout.")(fn)
    fn = click.option("--allow-open", is_flag=True,
                      help="Do not fail on UNVERIFIED claims.")(fn)
    return fn


def _emit(doc: ReportDocument, fmt: str, out, allow_open: bool, table_section=None):
    doc.sort()
    doc.validate()
    if fmt == "json":
        text = to_json(doc)
    elif fmt == "csv":
        text = table_csv(table_section) if table_section is not None else to_csv(doc)
    else:
        text = to_text(doc)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    sys.exit(doc.exit_code(allow_open))


def _run(build):
    """Run a report builder, mapping numeric and data failures to exit 3."""
    try:
        return build()
    except (ArithmeticError, DomainError, LoadError, FetchError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact")
def cli():
    """Recompute and cross-check explicit constants for Dedekind zeta zeros."""


@cli.command()
@_common
def constants(fmt, digits, out, allow_open):
    """Constants of the differenced explicit formula and the zero-counting bound."""
    cfg = ToleranceConfig(digits)
    doc = _run(lambda: ReportDocument([claims.constants_section(cfg)], {"digits": digits}))
    _emit(doc, fmt, out, allow_open)


@cli.command()
@_common
@click.option("--optimize-lambda", is_flag=True, help="Also search lambda_b for each row.")
@click.option("--epsilon", type=float, default=0.0, show_default=True,
              help="Add epsilon f(0) to h (sensitivity check).")
def table1(fmt, digits, out, allow_open, optimize_lambda, epsilon):
    """Recompute the repulsion table from its printed lambda_b column."""
    cfg = ToleranceConfig(digits)

    def build():
        sec, rows = claims.table1_section(cfg, epsilon)
        doc = ReportDocument([sec], {"digits": digits})
        if optimize_lambda:
            doc.sections.append(claims.optimized_section(rows, cfg))
        return doc

    doc = _run(build)
    _emit(doc, fmt, out, allow_open, table_section=doc.sections[0] if fmt == "csv" else None)


@cli.command()
@_common
@click.option("--nk", type=click.IntRange(1), required=True)
@click.option("--r1", type=click.IntRange(0), required=True)
@click.option("--r2", type=click.IntRange(0), required=True)
@click.option("--logdisc", type=float, default=None, help="log d_K")
@click.option("--disc", type=int, default=None, help="d_K (exact, preferred over --logdisc)")
@click.option("--T", "T", type=click.FloatRange(min=1), required=True)
@click.option("--eta", default="auto", show_default=True, help="eta in (0, 1/2] or 'auto'")
def zerocount(fmt, digits, out, allow_open, nk, r1, r2, logdisc, disc, T, eta):
    """Window for N_K(T) given the field's degree, signature and discriminant."""
    if (logdisc is None) == (disc is None):
        raise click.UsageError("give exactly one of --logdisc or --disc")
    if eta != "auto":
        try:
            eta = mpf(eta)
        except ValueError:
            raise click.BadParameter("eta must be a number or 'auto'", param_hint="--eta")
    cfg = ToleranceConfig(digits)

    def build():
        if disc is not None:
            field = FieldParams.from_discriminant(nk, r1, r2, disc)
        else:
            field = FieldParams(nk, r1, r2, logdisc)
        return ReportDocument([claims.zerocount_section(field, T, eta, cfg)], {"digits": digits})

    _emit(_run(build), fmt, out, allow_open)


@cli.command("verify-zeros")
@_common
@click.option("--fixture", default=None,
              help=f"Fixture path or bundled name ({', '.join(BUNDLED)}).")
@click.option("--label", default=None, help="Remote dataset label, e.g. 2.2.5.1.")
@click.option("--allow-network", is_flag=True, help="Permit fetching uncached labels.")
@click.option("--endpoint", default=None, help="Remote base URL (or $ZETAX_ENDPOINT).")
@click.option("--tmax", type=click.FloatRange(min=1), default=30, show_default=True)
@click.option("--eta", default="auto", show_default=True)
def verify_zeros(fmt, digits, out, allow_open, fixture, label, allow_network, endpoint, tmax,
                 eta):
    """Check the counting window against zero ordinates for every integer T <= tmax."""
    if (fixture is None) == (label is None):
        raise click.UsageError("give exactly one of --fixture or --label")
    cfg = ToleranceConfig(digits)

    def build():
        if fixture is not None:
            ds = load_fixture(fixture)
        else:
            ds = fetch_remote(label, endpoint, allow_network)
        e = eta if eta == "auto" else mpf(eta)
        return ReportDocument([claims.verify_section(ds, tmax, e, cfg)], {"digits": digits})

    _emit(_run(build), fmt, out, allow_open)


@cli.command()
@_common
@click.option("--b", "b", type=float, required=True, help="Upper bound for lambda_1.")
@click.option("--lambda", "lam", type=float, default=None,
              help="Test-function parameter (default: printed value, else optimised).")
def repulsion(fmt, digits, out, allow_open, b, lam):
    """Solve h(b, lambda') = 0 for one b."""
    cfg = ToleranceConfig(digits)
    doc = _run(lambda: ReportDocument([claims.repulsion_point_section(b, lam, cfg)],
                                      {"digits": digits}))
    _emit(doc, fmt, out, allow_open)


@cli.command()
@_common
@click.option("--optimize-lambda", is_flag=True)
def report(fmt, digits, out, allow_open, optimize_lambda):
    """Everything: constants, table, repulsion audit, bundled zero data, open theorems."""
    cfg = ToleranceConfig(digits)

    def build():
        datasets = [load_fixture(name) for name in BUNDLED]
        return claims.full_report(cfg, datasets, optimize_lambda)

    _emit(_run(build), fmt, out, allow_open)


def main(argv=None):
    cli.main(args=argv, prog_name="zetax")


if __name__ == "__main__":
    main()
