"""Command-line interface.

Usage:
    kurepa eval 5                     # K(5) = 34 by exact summation
    kurepa eval "0.5+2i" --json       # complex argument, JSON lines
    kurepa table 1 5 1 --columns K    # K on a grid
    kurepa bounds 1 3 10 0.5          # A_k <= K/Gamma(x+1) <= B_k sweep
    kurepa verify --suite kurepa --seed 42

Exit codes: 0 ok, 1 usage, 2 domain/pole error, 3 quadrature did not
converge, 4 a property or bound failed.
"""

from __future__ import annotations

import csv
import json
import math
import re
import sys
from pathlib import Path

import click

from .bounds import sandwich_bounds
from .errors import ConvergenceError, DomainError, PoleError
from .gamma_core import gamma_real
from .kurepa_eval import (
    DEFAULT_CONFIG,
    Method,
    QuadratureConfig,
    derivative_integral,
    kurepa,
    kurepa_continuation,
    kurepa_exact,
    kurepa_integral,
    kurepa_ratio,
)
from .verification import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_FAILURE = 4

POLE = "pole"
TABLE_COLUMNS = ("K", "dK", "gamma", "ratio")
BOUNDS_COLUMNS = ("k", "x", "a_k", "b_k", "ratio", "gap", "left_ok", "right_ok",
                  "right_equality", "left_margin", "right_margin")
VERIFY_COLUMNS = ("suite", "property", "checks", "failures", "worst", "tolerance", "status")

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?P<re>[+-]?\s*{_NUM})\s*(?:(?P<sign>[+-])\s*(?P<im>{_NUM})?\s*[ij])?\s*$")


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi`` or ``a-bi`` (whitespace allowed, ``j`` accepted for ``i``)."""
    m = _COMPLEX_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse {text!r} as a number of the form a, a+bi or a-bi")
    re_part = float(m.group("re").replace(" ", ""))
    im_part = 0.0
    if m.group("sign"):
        im_part = float(m.group("im") or "1")
        if m.group("sign") == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def load_config(path: str | None) -> QuadratureConfig:
    """Read ``key = value`` lines overriding the QuadratureConfig defaults."""
    if path is None:
        return DEFAULT_CONFIG
    fields = {"split_delta": float, "tail_cutoff": float, "abs_tol": float,
              "max_subdivisions": int}
    overrides = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in fields:
            raise click.UsageError(f"{path}:{lineno}: expected one of "
                                   f"{', '.join(fields)} as 'key = value'")
        try:
            overrides[key] = fields[key](value.strip())
        except ValueError:
            raise click.UsageError(f"{path}:{lineno}: bad value {value.strip()!r} for {key}")
    try:
        return QuadratureConfig(**overrides)
    except DomainError as exc:
        raise click.UsageError(f"{path}: {exc}")


# -- output ----------------------------------------------------------------

def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    return str(value)


def _json_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isfinite(value):
            return format(value, ".17g")
        return json.dumps(fmt(value))
    if value is None:
        return "null"
    return json.dumps(str(value))


class RecordWriter:
    """Writes records with a fixed column order as CSV or JSON lines."""

    def __init__(self, columns, as_json: bool, stream=None):
        self.columns = tuple(columns)
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self._csv = None
        if not as_json:
            self._csv = csv.writer(self.stream, lineterminator="\n")
            self._csv.writerow(self.columns)

    def write(self, record: dict) -> None:
        if self.as_json:
            body = ", ".join(f"{json.dumps(c)}: {_json_value(record.get(c))}" for c in self.columns)
            self.stream.write("{" + body + "}\n")
        else:
            self._csv.writerow([fmt(record.get(c)) for c in self.columns])

    def summary(self, record: dict) -> None:
        if self.as_json:
            body = ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in record.items())
            self.stream.write('{"summary": {' + body + "}}\n")
        else:
            self.stream.write("# summary " + " ".join(f"{k}={fmt(v)}" for k, v in record.items()) + "\n")


def grid(start: float, stop: float, step: float) -> list[float]:
    for name, v in (("start", start), ("stop", stop), ("step", step)):
        if not math.isfinite(v):
            raise click.UsageError(f"{name} must be finite")
    if step <= 0:
        raise click.UsageError("step must be positive")
    if start > stop:
        raise click.UsageError("start must not exceed stop")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return [start + i * step for i in range(count)]


# -- commands --------------------------------------------------------------

_ARGS = {"ignore_unknown_options": True}  # lets "-1" through as an argument
_json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON lines instead of CSV.")
_config_option = click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                              help="File of key = value lines overriding quadrature settings.")


@click.group()
def cli():
    """Kurepa's left-factorial function K(z)."""


@cli.command("eval", context_settings=_ARGS)
@click.argument("z")
@click.option("--method", type=click.Choice(["auto"] + [m.value for m in Method], case_sensitive=False),
              default="auto", show_default=True, help="Force an evaluation strategy.")
@_json_option
@_config_option
def cmd_eval(z, method, as_json, config_path):
    """Evaluate K(Z); Z is a real literal or a+bi."""
    try:
        arg = parse_complex(z)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    cfg = load_config(config_path)
    method = method.lower()
    if method == "auto":
        result = kurepa(arg, cfg)
    elif method == Method.EXACT_SERIES.value.lower():
        result = kurepa_exact(arg)
    elif method == Method.QUADRATURE.value.lower():
        result = kurepa_integral(arg, cfg)
    else:
        result = kurepa_continuation(arg, cfg)
    out = RecordWriter(("z_re", "z_im", "value_re", "value_im", "abs_err", "method"), as_json)
    out.write({"z_re": arg.real, "z_im": arg.imag, "value_re": result.value.real,
               "value_im": result.value.imag, "abs_err": result.abs_err_estimate,
               "method": result.method.value})
    return EXIT_OK


def _table_row(x, columns, cfg):
    row = {"x": x}
    k_val = None
    if "K" in columns or "ratio" in columns:
        try:
            k_val = kurepa(x, cfg).value.real
        except PoleError:
            k_val = POLE
    if "K" in columns:
        row["K"] = k_val
    if "dK" in columns:
        row["dK"] = derivative_integral(x, cfg) if x >= 0 else None
    if "gamma" in columns:
        try:
            row["gamma"] = gamma_real(x)
        except PoleError:
            row["gamma"] = POLE
    if "ratio" in columns:
        if x > 0:
            row["ratio"] = kurepa_ratio(x)
        elif k_val == POLE:
            row["ratio"] = POLE
        else:
            try:
                row["ratio"] = k_val / gamma_real(x + 1.0)
            except PoleError:
                row["ratio"] = POLE
    return row


@cli.command("table", context_settings=_ARGS)
@click.argument("start", type=float)
@click.argument("stop", type=float)
@click.argument("step", type=float)
@click.option("--columns", default=",".join(TABLE_COLUMNS), show_default=True,
              help="Comma-separated subset of K, dK, gamma, ratio.")
@_json_option
@_config_option
def cmd_table(start, stop, step, columns, as_json, config_path):
    """Tabulate K and friends at START, START+STEP, ..., STOP.

    Cells at a pole hold the marker "pole"; dK is left empty for x < 0.
    """
    wanted = {c.strip() for c in columns.split(",") if c.strip()}
    unknown = wanted - set(TABLE_COLUMNS)
    if unknown or not wanted:
        raise click.UsageError(f"--columns must be a non-empty subset of {','.join(TABLE_COLUMNS)}")
    cfg = load_config(config_path)
    points = grid(start, stop, step)
    selected = [c for c in TABLE_COLUMNS if c in wanted]
    out = RecordWriter(["x"] + selected, as_json)
    for x in points:
        out.write(_table_row(x, selected, cfg))
    return EXIT_OK


@cli.command("bounds", context_settings=_ARGS)
@click.argument("k", type=int)
@click.argument("start", type=float)
@click.argument("stop", type=float)
@click.argument("step", type=float)
@_json_option
def cmd_bounds(k, start, stop, step, as_json):
    """Sweep A_k(x) < K(x)/Gamma(x+1) <= B_k(x) over x = START..STOP."""
    if k < 1:
        raise click.UsageError("k must be a positive integer")
    if start < k + 2:
        raise click.UsageError(f"start must be at least k + 2 = {k + 2}")
    points = grid(start, stop, step)
    out = RecordWriter(BOUNDS_COLUMNS, as_json)
    failures = 0
    left, right = [], []
    for x in points:
        rep = sandwich_bounds(k, x)
        out.write({c: getattr(rep, c) for c in BOUNDS_COLUMNS})
        failures += (not rep.left_ok) + (not rep.right_ok)
        left.append(rep.left_margin)
        right.append(rep.right_margin)
    out.summary({"rows": len(points), "failures": failures,
                 "min_left_margin": min(left), "max_left_margin": max(left),
                 "min_right_margin": min(right), "max_right_margin": max(right)})
    if failures:
        click.echo(f"{failures} inequality check(s) failed", err=True)
        return EXIT_FAILURE
    return EXIT_OK


@cli.command("verify")
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITES),
              help="Suite to run; repeat for several. Default: all.")
@click.option("--seed", type=int, default=0, show_default=True)
@_json_option
def cmd_verify(suites, seed, as_json):
    """Run the seeded property suites and report per-property results."""
    chosen = [s for s in SUITES if s in suites] if suites else list(SUITES)
    out = RecordWriter(VERIFY_COLUMNS, as_json)
    failed = False
    for suite in chosen:
        results = run_suite(suite, seed)
        for r in results:
            out.write({"suite": suite, "property": r.name, "checks": r.checks,
                       "failures": r.failures, "worst": r.worst, "tolerance": r.tolerance,
                       "status": "pass" if r.passed else "FAIL"})
        checks = sum(r.checks for r in results)
        fails = sum(r.failures for r in results)
        failed |= fails > 0
        out.write({"suite": suite, "property": "ALL", "checks": checks, "failures": fails,
                   "worst": None, "tolerance": None, "status": "pass" if fails == 0 else "FAIL"})
    return EXIT_FAILURE if failed else EXIT_OK


def run(argv=None) -> int:
    """Invoke the CLI and map exceptions onto the documented exit codes."""
    try:
        rv = cli.main(args=argv, prog_name="kurepa", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return EXIT_USAGE
    except PoleError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_CONVERGENCE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
