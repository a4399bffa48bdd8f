"""Command-line frontend: family listings, zero sets, verification sweeps,
asymptotic studies, quadrature dumps, and file emission (JSON, CSV, SVG, PNG).

Exit codes: 0 ok, 2 configuration error, 3 internal-consistency failure,
4 root non-convergence, 5 verification failure.  Scalars parse and print as
're,im' pairs; a bare 're' means a real value.  All numbers are serialized
with 17 significant digits.
"""

from __future__ import annotations

import csv as csv_module
import math
import sys

import click

from . import __version__
from .exceptions import (
    ConsistencyError,
    ConvergenceError,
    DegreeBoundError,
    MultiplicityViolationError,
    RegionError,
    SegmentBranchError,
)
from .geometry import exterior_sqrt, joukowski_phi, pole_geometry
from .legendre import (
    gauss_rule,
    legendre_coeffs,
    legendre_coeffs_float,
    legendre_value_and_derivative,
)
from .polar import (
    polar_eval,
    polar_family_list,
    primitive_poly,
)
from .roots import RootFindConfig, find_polar_roots
from .scalars import (
    format_float,
    imag_part,
    is_exact,
    parse_complex_pair,
    parse_exact_pair,
    real_part,
    to_complex,
)
from .verify import (
    CheckRecord,
    VerificationReport,
    check_equilibrium,
    check_nth_root_asymptotic,
    check_recurrence,
    check_theorem1,
    check_theorem5,
    check_theorem6,
    run_standard_suite,
)

EXIT_CONSISTENCY = 3
EXIT_CONVERGENCE = 4
EXIT_VERIFICATION = 5


def _fail(message: str, code: int):
    click.echo(message, err=True)
    raise SystemExit(code)


def _pole_complex(text: str) -> complex:
    try:
        return parse_complex_pair(text)
    except ValueError:
        pass
    try:
        return to_complex(parse_exact_pair(text))
    except Exception as exc:
        raise click.UsageError(f"cannot parse pole {text!r}: {exc}")


def _pole_for_mode(text: str, mode: str):
    if mode == "exact":
        try:
            return parse_exact_pair(text)
        except Exception as exc:
            raise click.UsageError(
                f"exact mode needs a rational pole as 're,im' (e.g. 7/5,0): {exc}"
            )
    return _pole_complex(text)


def _parse_nlist(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise click.UsageError(f"cannot parse --nlist {text!r}: {exc}")
    if not values or any(v < 1 for v in values):
        raise click.UsageError("--nlist needs positive integers")
    return sorted(set(values))


def _cell(x) -> str:
    """Scalar as a CSV/JSON cell: bare real, or 're,im' when imaginary."""
    if is_exact(x):
        re, im = real_part(x), imag_part(x)
        return str(re) if im == 0 else f"{re},{im}"
    z = to_complex(x)
    if z.imag == 0.0:
        return format_float(z.real)
    return f"{format_float(z.real)},{format_float(z.imag)}"


def _write_rows(stream, rows, header=None):
    writer = csv_module.writer(stream, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    writer.writerows(rows)


def _emit_rows(rows, header, csv_path):
    if csv_path:
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            _write_rows(fh, rows, header)
    else:
        _write_rows(sys.stdout, rows, header)


def dumps17(obj, indent: int = 2) -> str:
    """JSON with floats at 17 significant digits (hand-rolled writer)."""
    import json as _json

    def emit(node, depth):
        pad = " " * (indent * depth)
        inner = " " * (indent * (depth + 1))
        if isinstance(node, dict):
            if not node:
                return "{}"
            items = (f"{inner}{_json.dumps(str(k))}: {emit(v, depth + 1)}" for k, v in node.items())
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(node, (list, tuple)):
            if not node:
                return "[]"
            items = (f"{inner}{emit(v, depth + 1)}" for v in node)
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        if node is None:
            return "null"
        if isinstance(node, bool):
            return "true" if node else "false"
        if isinstance(node, int):
            return str(node)
        if isinstance(node, float):
            if not math.isfinite(node):
                raise ValueError(f"non-finite value {node!r} not serializable")
            return format(node, ".17g")
        if isinstance(node, str):
            return _json.dumps(node)
        return _json.dumps(str(node))

    return emit(obj, 0)


@click.group()
@click.version_option(version=__version__, prog_name="polarlegendre")
def main():
    """Polar Legendre polynomials: construction, zeros, verification."""


@main.command()
@click.option("--pole", required=True, help="Pole as 're,im'; exact mode accepts rationals (7/5,0).")
@click.option("--n", "n", type=int, required=True, help="Largest degree to emit.")
@click.option("--mode", type=click.Choice(["exact", "float"]), default="float", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv", show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Write the listing to a file instead of stdout.")
@click.option("--primitives", is_flag=True, help="Include the antiderivative family Pi.")
@click.option("--legendre", is_flag=True, help="Include the monic Legendre family L.")
def family(pole, n, mode, fmt, csv_path, primitives, legendre):
    """Monic coefficients of P_0..P_n, ascending powers."""
    if n < 0:
        raise click.UsageError("--n must be >= 0")
    pole_s = _pole_for_mode(pole, mode)
    try:
        polys = [("P", k, q) for k, q in enumerate(polar_family_list(n, pole_s, mode))]
        if primitives:
            polys += [("Pi", k + 1, primitive_poly(k, pole_s, mode)) for k in range(n + 1)]
        if legendre:
            mk = legendre_coeffs if mode == "exact" else legendre_coeffs_float
            polys += [("L", k, mk(k)) for k in range(n + 1)]
    except DegreeBoundError as exc:
        raise click.UsageError(str(exc))
    except ConsistencyError as exc:
        _fail(f"consistency failure: {exc}", EXIT_CONSISTENCY)

    if fmt == "json":
        doc = {
            "version": __version__,
            "config": {"pole": pole, "n": n, "mode": mode},
            "polys": [
                {"label": label, "n": k, "coeffs": [_cell(c) for c in q.coeffs]}
                for label, k, q in polys
            ],
        }
        text = dumps17(doc)
        if csv_path:
            with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text + "\n")
        else:
            click.echo(text)
    else:
        rows = [[label, k] + [_cell(c) for c in q.coeffs] for label, k, q in polys]
        _emit_rows(rows, None, csv_path)


@main.command()
@click.option("--pole", required=True, help="Pole as 're,im'.")
@click.option("--n", "n", type=int, required=True, help="Degree whose zeros to compute.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), default=None,
              help="Scatter with segment, disk and accumulation ellipse overlays.")
@click.option("--fig", "fig_path", type=click.Path(dir_okay=False), default=None,
              help="Same scatter rendered through matplotlib (PNG and friends).")
@click.option("--max-iter", type=int, default=None, help="Iteration cap for the solver.")
@click.option("--tol", type=float, default=None, help="Per-root relative step tolerance.")
def zeros(pole, n, csv_path, svg_path, fig_path, max_iter, tol):
    """Zeros of P_n with multiplicities and residuals (CSV: re,im,multiplicity,residual,converged)."""
    if n < 1:
        raise click.UsageError("--n must be >= 1")
    zeta = _pole_complex(pole)
    config = None
    if max_iter is not None or tol is not None:
        config = RootFindConfig(radius=pole_geometry(zeta).big_delta + 1.0)
        if max_iter is not None:
            config.max_iterations = max_iter
        if tol is not None:
            config.step_tolerance = tol
    try:
        rs = find_polar_roots(n, zeta, config)
    except MultiplicityViolationError as exc:
        _fail(f"consistency failure: {exc}", EXIT_CONSISTENCY)

    header = ["re", "im", "multiplicity", "residual", "converged"]
    rows = [
        [format_float(r.real), format_float(r.imag), int(m), format_float(float(res)),
         "true" if rs.converged else "false"]
        for r, m, res in zip(rs.roots, rs.multiplicities, rs.residuals)
    ]
    _emit_rows(rows, header, csv_path)
    if svg_path:
        from .svg import write_zero_plot

        write_zero_plot(svg_path, rs, zeta)
    if fig_path:
        from .plots import save_zeros_figure

        save_zeros_figure(fig_path, rs, zeta, title=f"n = {n}, pole = {pole}")
    if not rs.converged:
        _fail(f"zeros did not converge within {rs.iterations} iterations", EXIT_CONVERGENCE)


@main.command()
@click.option("--pole", required=True, help="Pole as 're,im'.")
@click.option("--nmax", type=int, default=10, show_default=True)
@click.option("--mode", type=click.Choice(["exact", "float"]), default="float", show_default=True)
@click.option("--tol", type=float, default=None, help="Override the per-check float tolerance.")
@click.option("--theorem", type=click.Choice(["1", "5", "6", "recurrence", "equilibrium", "nthroot"]),
              default=None, help="Run a single check family instead of the full suite.")
@click.option("--z", "z_text", default=None, help="Evaluation point 're,im' for asymptotic checks.")
@click.option("--nlist", default="25,50,100,200", show_default=True,
              help="Degrees for asymptotic checks.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report here instead of stdout.")
def verify(pole, nmax, mode, tol, theorem, z_text, nlist, report_path):
    """Run verification checks; exit 0 iff all non-inconclusive checks pass."""
    if nmax < 1:
        raise click.UsageError("--nmax must be >= 1")
    n_list = _parse_nlist(nlist)
    pole_s = _pole_for_mode(pole, mode)
    records: list[CheckRecord] = []
    hard_failure = False
    try:
        if theorem is None:
            records = run_standard_suite(pole_s, nmax, mode, tol).records
        elif theorem == "1":
            for n in range(1, nmax + 1):
                records += check_theorem1(n, pole_s, mode, tol)
        elif theorem == "recurrence":
            if nmax < 2:
                raise click.UsageError("--theorem recurrence needs --nmax >= 2")
            records = check_recurrence(nmax, pole_s, mode, tol)
        elif theorem == "equilibrium":
            for n in range(1, nmax + 1):
                records += check_equilibrium(n, pole_s, tol)
        elif theorem == "5":
            records = check_theorem5(pole_s, n_list)
        elif theorem == "6":
            if z_text is None:
                raise click.UsageError("--theorem 6 needs --z")
            records = check_theorem6(pole_s, _pole_complex(z_text), n_list)
        elif theorem == "nthroot":
            if z_text is None:
                raise click.UsageError("--theorem nthroot needs --z")
            records = check_nth_root_asymptotic(_pole_complex(z_text), n_list)
    except (RegionError, SegmentBranchError) as exc:
        raise click.UsageError(str(exc))
    except (ConsistencyError, MultiplicityViolationError, ConvergenceError) as exc:
        records.append(
            CheckRecord(
                "internal.failure",
                {"pole": pole, "stage": type(exc).__name__},
                residual=1.0,
                tolerance=0.0,
                passed=False,
                note=str(exc),
            )
        )
        hard_failure = True

    report = VerificationReport(records)
    config = {
        "pole": pole,
        "mode": mode,
        "n_max": nmax,
        "theorem": theorem or "suite",
        "z": z_text,
        "n_list": n_list,
        "tol": tol,
    }
    text = dumps17(report.to_document(__version__, config))
    if report_path:
        with open(report_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    summary = report.summary()
    click.echo(
        f"checks: total={summary['total']} passed={summary['passed']} "
        f"inconclusive={summary['inconclusive']}",
        err=True,
    )
    for record in report.sorted_records():
        if not record.passed and not record.inconclusive:
            click.echo(
                f"FAIL {record.check_id} {record.params}: "
                f"residual={record.residual:.6e} tolerance={record.tolerance:.6e}",
                err=True,
            )
    if hard_failure or not report.all_passed:
        raise SystemExit(EXIT_VERIFICATION)


@main.command()
@click.option("--limit", type=click.Choice(["nthroot", "ratio1", "ratio2"]), required=True)
@click.option("--z", "z_text", required=True, help="Evaluation point 're,im'.")
@click.option("--pole", default=None, help="Pole as 're,im' (ratio limits only).")
@click.option("--nlist", default="25,50,100,200", show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.option("--fig", "fig_path", type=click.Path(dir_okay=False), default=None,
              help="Semilog error plot of the sequence.")
def asym(limit, z_text, pole, nlist, csv_path, fig_path):
    """Convergence table n,value,target,abs_err for one asymptotic limit."""
    z = _pole_complex(z_text)
    n_list = _parse_nlist(nlist)
    if limit == "nthroot":
        try:
            target = abs(joukowski_phi(z)) / 2.0
        except SegmentBranchError as exc:
            raise click.UsageError(str(exc))
        values = []
        for n in n_list:
            _, dl = legendre_value_and_derivative(n, z)
            values.append(math.exp(math.log(abs(dl)) / n))
    else:
        if pole is None:
            raise click.UsageError(f"--limit {limit} needs --pole")
        zeta = _pole_complex(pole)
        geom = pole_geometry(zeta)
        bound = geom.big_delta + 1.0
        if abs(z) <= bound:
            raise click.UsageError(
                f"|z| = {abs(z):.17g} must exceed big_delta + 1 = {bound:.17g}"
            )
        values = []
        if limit == "ratio1":
            target = (z * z - 1.0) / (z - zeta)
            for n in n_list:
                _, dl = legendre_value_and_derivative(n, z)
                values.append(n * polar_eval(n, zeta, z) / dl)
        else:
            target = exterior_sqrt(z) / (z - zeta)
            for n in n_list:
                ln, _ = legendre_value_and_derivative(n, z)
                values.append(polar_eval(n, zeta, z) / ln)
    errors = [abs(v - target) for v in values]
    rows = [
        [n, _cell(v), _cell(target), format_float(e)]
        for n, v, e in zip(n_list, values, errors)
    ]
    _emit_rows(rows, ["n", "value", "target", "abs_err"], csv_path)
    if fig_path:
        from .plots import save_convergence_figure

        save_convergence_figure(fig_path, n_list, errors, label=limit,
                                title=f"{limit} at z = {z_text}")


@main.command()
@click.option("--n", "n", type=int, required=True, help="Number of quadrature points.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv", show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
def quad(n, fmt, csv_path):
    """Dump the n-point Gauss rule on [-1, 1] (monic Christoffel weights)."""
    if n < 1:
        raise click.UsageError("--n must be >= 1")
    rule = gauss_rule(n)
    if fmt == "json":
        doc = {
            "version": __version__,
            "n": n,
            "nodes": [float(x) for x in rule.nodes],
            "weights": [float(w) for w in rule.weights],
        }
        text = dumps17(doc)
        if csv_path:
            with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text + "\n")
        else:
            click.echo(text)
    else:
        rows = [[format_float(float(x)), format_float(float(w))]
                for x, w in zip(rule.nodes, rule.weights)]
        _emit_rows(rows, ["node", "weight"], csv_path)


if __name__ == "__main__":
    main()
