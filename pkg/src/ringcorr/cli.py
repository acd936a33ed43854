"""Command line interface for ring correlation runs.

Examples:

    ringcorr info --mass 1 --radius 1 --hbar 1 --beta 2
    ringcorr scan --beta 2 --points 201 --format csv --out scan.csv
    ringcorr kms --beta 2 --points 33
    ringcorr limit --beta 1 --format json --out limit.json
    ringcorr mc --beta 1 --samples 1000000 --seed 42
    ringcorr selftest

Exit status: 0 on success, 1 when selftest fails, 2 on usage errors,
3 when a scan completed but some grid points failed.

Output is deterministic: identical flags give byte-identical files.
Numeric fields carry 17 significant digits, which round-trips doubles
exactly.  CSV starts with a '#' header comment naming the version, a
hash of the resolved configuration, the kernel backend, and the random
generator; JSON carries the same entries in a "meta" object.
"""

import hashlib
import math
import sys
from dataclasses import dataclass
from typing import Optional

import click
import numpy as np

from ringcorr import __version__
from ringcorr.classical import GENERATOR_ID, c1_classical, mc_classical
from ringcorr.errors import BracketingError, PrefactorOverflowError, TermCapError
from ringcorr.limits import classical_limit_scan, deviation_order
from ringcorr.model import ModelParams, beta_from_energy, derive_scales, mean_energy, partition_sum
from ringcorr.quantum import c1, c2, kms_residuals, scan
from ringcorr.selftest import run as run_selftest
from ringcorr.theta import Representation, SummationPolicy, backend

_LIMIT_HALVINGS = 10


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand run resolved from its flags.

    The hash of config_pairs goes into every output header, so field
    spelling here is part of the output contract.
    """

    command: str
    params: ModelParams
    policy: SummationPolicy
    fmt: str
    out: Optional[str]
    t_min: Optional[float] = None
    t_max: Optional[float] = None
    points: Optional[int] = None
    seed: Optional[int] = None
    samples: Optional[int] = None

    def config_pairs(self):
        pairs = {
            "command": self.command,
            "mass": _fmt_float(self.params.mass),
            "radius": _fmt_float(self.params.radius),
            "hbar": _fmt_float(self.params.hbar),
            "beta": _fmt_float(self.params.beta),
            "eps": _fmt_float(self.policy.eps),
            "max_terms": str(self.policy.max_terms),
            "rep": self.policy.representation.value,
            "format": self.fmt,
        }
        if self.points is not None:
            pairs.update(
                tmin=_fmt_float(self.t_min),
                tmax=_fmt_float(self.t_max),
                points=str(self.points),
            )
        if self.samples is not None:
            pairs.update(samples=str(self.samples), seed=str(self.seed))
        return pairs


def _fmt_float(x):
    x = float(x)
    if math.isnan(x):
        return "nan"
    return format(x, ".17g")


def _json_token(x):
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return _fmt_float(value)
    # keep CSV single-field: commas would shift columns
    return str(value).replace(",", ";")


def _json_scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return _json_token(value)
    text = str(value).replace('"', "'")
    return f'"{text}"'


def _config_hash(config):
    blob = ";".join(f"{k}={v}" for k, v in sorted(config.items()))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _meta(cfg, generator):
    return {
        "version": __version__,
        "command": cfg.command,
        "config": _config_hash(cfg.config_pairs()),
        "backend": backend(),
        "generator": generator,
    }


def _emit(cfg, columns, rows, generator="-", extra=None):
    meta = _meta(cfg, generator)
    fmt, out = cfg.fmt, cfg.out
    extra = extra or {}
    if fmt == "csv":
        head = " | ".join(f"{k}={v}" for k, v in meta.items())
        lines = [f"# {head}", ",".join(columns)]
        lines += [",".join(_cell(v) for v in row) for row in rows]
        lines += [f"# {k}={_cell(v)}" for k, v in extra.items()]
        text = "\n".join(lines) + "\n"
    else:
        meta_body = ", ".join(f'"{k}": {_json_scalar(v)}' for k, v in meta.items())
        row_texts = []
        for row in rows:
            body = ", ".join(
                f'"{c}": {_json_scalar(v)}' for c, v in zip(columns, row)
            )
            row_texts.append("    {" + body + "}")
        parts = [f'  "meta": {{{meta_body}}}']
        rows_block = ",\n".join(row_texts)
        parts.append('  "rows": [\n' + rows_block + "\n  ]" if rows else '  "rows": []')
        parts += [f'  "{k}": {_json_scalar(v)}' for k, v in extra.items()]
        text = "{\n" + ",\n".join(parts) + "\n}\n"
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _resolve_params(mass, radius, hbar, beta, target_energy, eps):
    if (beta is None) == (target_energy is None):
        raise click.UsageError("exactly one of --beta or --mean-energy is required")
    try:
        if beta is None:
            beta = beta_from_energy(mass, radius, hbar, target_energy, eps=eps)
        return ModelParams(mass=mass, radius=radius, hbar=hbar, beta=beta)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    except BracketingError as exc:
        raise click.ClickException(str(exc))


def _resolve_policy(eps, max_terms, rep):
    try:
        return SummationPolicy(
            eps=eps, max_terms=max_terms, representation=Representation(rep)
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _grid(t_min, t_max, points):
    if points < 1:
        raise click.UsageError(f"--points must be at least 1, got {points}")
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or t_min > t_max:
        raise click.UsageError(f"need finite --tmin <= --tmax, got {t_min}, {t_max}")
    return np.linspace(t_min, t_max, points)


def _model_options(fn):
    for option in reversed(
        [
            click.option("--mass", type=float, default=1.0, show_default=True, help="Particle mass."),
            click.option("--radius", type=float, default=1.0, show_default=True, help="Ring radius."),
            click.option("--hbar", type=float, default=1.0, show_default=True, help="Reduced Planck constant."),
            click.option("--beta", type=float, default=None, help="Inverse temperature."),
            click.option("--mean-energy", "target_energy", type=float, default=None, help="Mean energy; beta is solved for. Mutually exclusive with --beta."),
        ]
    ):
        fn = option(fn)
    return fn


def _numeric_options(fn):
    for option in reversed(
        [
            click.option("--eps", type=float, default=1e-12, show_default=True, help="Relative truncation tolerance."),
            click.option("--max-terms", type=int, default=10_000_000, show_default=True, help="Series term cap."),
            click.option("--rep", type=click.Choice(["auto", "direct", "poisson", "half"]), default="auto", show_default=True, help="Series representation."),
        ]
    ):
        fn = option(fn)
    return fn


def _output_options(fn):
    for option in reversed(
        [
            click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True, help="Output format."),
            click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Output path; stdout when omitted."),
        ]
    ):
        fn = option(fn)
    return fn


def _grid_options(default_points):
    def wrap(fn):
        for option in reversed(
            [
                click.option("--tmin", type=float, default=0.0, show_default=True, help="Grid start time."),
                click.option("--tmax", type=float, default=None, help="Grid end time; a model-derived default applies."),
                click.option("--points", type=int, default=default_points, show_default=True, help="Grid size."),
            ]
        ):
            fn = option(fn)
        return fn

    return wrap


@click.group()
@click.version_option(version=__version__, prog_name="ringcorr")
def main():
    """Thermal position correlations of a free particle on a ring."""


@main.command("info")
@_model_options
@_numeric_options
@_output_options
def cmd_info(mass, radius, hbar, beta, target_energy, eps, max_terms, rep, fmt, out):
    """Report derived time scales and thermodynamic quantities."""
    params = _resolve_params(mass, radius, hbar, beta, target_energy, eps)
    policy = _resolve_policy(eps, max_terms, rep)
    scales = derive_scales(params)
    try:
        partition = partition_sum(scales.alpha, eps=policy.eps, max_terms=policy.max_terms)
        energy = mean_energy(params, eps=policy.eps)
    except TermCapError as exc:
        raise click.ClickException(str(exc))
    cfg = RunConfig(command="info", params=params, policy=policy, fmt=fmt, out=out)
    columns = [
        "mass", "radius", "hbar", "beta",
        "tau_a", "tau_b", "alpha", "period",
        "partition_sum", "mean_energy",
    ]
    row = [
        params.mass, params.radius, params.hbar, params.beta,
        scales.tau_a, scales.tau_b, scales.alpha, scales.period,
        partition, energy,
    ]
    _emit(cfg, columns, [row])


@main.command("scan")
@_model_options
@_numeric_options
@_grid_options(201)
@_output_options
def cmd_scan(mass, radius, hbar, beta, target_energy, eps, max_terms, rep,
             tmin, tmax, points, fmt, out):
    """Tabulate both correlators and the classical curve over a time grid."""
    params = _resolve_params(mass, radius, hbar, beta, target_energy, eps)
    policy = _resolve_policy(eps, max_terms, rep)
    scales = derive_scales(params)
    if tmax is None:
        tmax = scales.period
    grid = _grid(tmin, tmax, points)
    results = scan(params, grid, policy)
    cfg = RunConfig(command="scan", params=params, policy=policy, fmt=fmt, out=out,
                    t_min=tmin, t_max=tmax, points=points)
    columns = ["t", "c1_re", "c1_im", "c2_re", "c2_im",
               "classical", "abs_dev", "tail_bound", "status"]
    rows = []
    for point in results:
        reference = c1_classical(params, float(point.time))
        deviation = abs(point.c1 - reference)
        rows.append([
            float(point.time),
            point.c1.real, point.c1.imag,
            point.c2.real, point.c2.imag,
            reference, deviation, point.tail_bound,
            point.error or "ok",
        ])
    _emit(cfg, columns, rows)
    if any(point.error for point in results):
        sys.exit(3)


@main.command("kms")
@_model_options
@_numeric_options
@_grid_options(33)
@_output_options
def cmd_kms(mass, radius, hbar, beta, target_energy, eps, max_terms, rep,
            tmin, tmax, points, fmt, out):
    """Tabulate detailed-balance residuals over a time grid."""
    params = _resolve_params(mass, radius, hbar, beta, target_energy, eps)
    policy = _resolve_policy(eps, max_terms, rep)
    scales = derive_scales(params)
    if tmax is None:
        tmax = scales.period
    grid = _grid(tmin, tmax, points)
    cfg = RunConfig(command="kms", params=params, policy=policy, fmt=fmt, out=out,
                    t_min=tmin, t_max=tmax, points=points)
    rows = []
    for t in grid:
        r_shift, r_partner = kms_residuals(params, float(t), policy)
        rows.append([float(t), r_shift, r_partner])
    extra = {
        "max_residual_shift": max(row[1] for row in rows),
        "max_residual_partner": max(row[2] for row in rows),
    }
    _emit(cfg, ["t", "residual_shift", "residual_partner"], rows, extra=extra)


@main.command("limit")
@_model_options
@_numeric_options
@_grid_options(61)
@_output_options
def cmd_limit(mass, radius, hbar, beta, target_energy, eps, max_terms, rep,
              tmin, tmax, points, fmt, out):
    """Scan the classical limit: hbar halves from --hbar, ten times."""
    params = _resolve_params(mass, radius, hbar, beta, target_energy, eps)
    policy = _resolve_policy(eps, max_terms, rep)
    if tmax is None:
        tmax = 3.0 * params.radius * math.sqrt(params.beta * params.mass)
    grid = _grid(tmin, tmax, points)
    hbars = [params.hbar * 0.5**k for k in range(_LIMIT_HALVINGS + 1)]
    rows_data = classical_limit_scan(
        params.mass, params.radius, params.beta, hbars, grid, policy
    )
    slope = deviation_order(rows_data)
    cfg = RunConfig(command="limit", params=params, policy=policy, fmt=fmt, out=out,
                    t_min=tmin, t_max=tmax, points=points)
    columns = ["hbar", "alpha", "sup_deviation", "grid_span"]
    rows = [[r.hbar, r.alpha, r.sup_deviation, r.grid_span] for r in rows_data]
    _emit(cfg, columns, rows, extra={"slope": slope})


@main.command("mc")
@_model_options
@_numeric_options
@_grid_options(21)
@_output_options
@click.option("--samples", type=int, default=100_000, show_default=True, help="Samples per grid point.")
@click.option("--seed", type=int, default=0, show_default=True, help="Root seed for the per-point substreams.")
def cmd_mc(mass, radius, hbar, beta, target_energy, eps, max_terms, rep,
           tmin, tmax, points, fmt, out, samples, seed):
    """Monte Carlo classical correlator with error bars."""
    params = _resolve_params(mass, radius, hbar, beta, target_energy, eps)
    policy = _resolve_policy(eps, max_terms, rep)
    if tmax is None:
        tmax = 4.0 * params.radius * math.sqrt(params.beta * params.mass)
    grid = _grid(tmin, tmax, points)
    if samples < 2:
        raise click.UsageError(f"--samples must be at least 2, got {samples}")
    estimates = mc_classical(params, grid, samples, seed)
    cfg = RunConfig(command="mc", params=params, policy=policy, fmt=fmt, out=out,
                    t_min=tmin, t_max=tmax, points=points,
                    seed=seed, samples=samples)
    columns = ["t", "mean", "std_error", "samples", "seed", "classical"]
    rows = [
        [float(t), est.mean, est.std_error, est.samples, est.seed,
         c1_classical(params, float(t))]
        for t, est in zip(grid, estimates)
    ]
    _emit(cfg, columns, rows, generator=GENERATOR_ID)


@main.command("selftest")
@click.option("--samples", type=int, default=200_000, show_default=True, help="Monte Carlo samples per grid point.")
@click.option("--seed", type=int, default=20260819, show_default=True, help="Root seed for the Monte Carlo check.")
def cmd_selftest(samples, seed):
    """Run the invariant suite; exit 0 only if every check passes."""
    if samples < 2:
        raise click.UsageError(f"--samples must be at least 2, got {samples}")
    results = run_selftest(samples=samples, seed=seed)
    first_failure = None
    for result in results:
        if result.passed:
            click.echo(f"PASS {result.name}")
        else:
            click.echo(f"FAIL {result.name}: {result.detail}")
            if first_failure is None:
                first_failure = result.name
    if first_failure is not None:
        click.echo(f"selftest: FAIL at {first_failure}")
        sys.exit(1)
    click.echo(f"selftest: PASS ({len(results)} checks)")


if __name__ == "__main__":
    main()
