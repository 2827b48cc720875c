"""shannonreg console wrapper."""
import argparse
import math
import re
import sys
from fractions import Fraction

import numpy as np
import pandas as pd

from shannonreg.bounds import bound_pair, c_const, n_min
from shannonreg.config import config
from shannonreg.exceptions import (
    CertificateInvalid,
    ConfigurationError,
    DegenerateFitError,
    DomainError,
    QuadratureError,
)
from shannonreg.harness import (
    ExperimentConfig,
    display_rows,
    emit_csv,
    figure_rows,
    rate_fit,
    read_csv,
    repro_table,
)
from shannonreg.logging import logging
from shannonreg.logging.logging import LEVELS
from shannonreg.reconstruct import (
    optimal_width,
    reconstruct_gauss,
    reconstruct_shannon,
)
from shannonreg.signals import f0_samples, read_samples
from shannonreg.utils import (
    ConfigKey,
    CsvColumn,
    ExitCode,
    Operator,
    WidthRule,
)


_PI_LITERAL = re.compile(
    r"^(?P<num>[0-9.eE+-]*?)\*?pi(?:/(?P<den>[0-9.eE+-]+))?$"
)
_RANGE_SLACK = 1e-9


def parse_real(text):
    """Parse a real number, a ratio like ``1/7`` or a multiple of pi.

    Accepted forms include ``0.25``, ``1/7``, ``pi``, ``pi/4`` and
    ``3pi/8`` (``3*pi/8``). Ratios of decimals are rounded once, from the
    exact rational value.

    Args:
        text (str): the literal

    Returns:
        float

    Raises:
        ArgumentTypeError: if the literal does not parse

    """
    literal = text.strip().lower().replace(" ", "")
    try:
        match = _PI_LITERAL.match(literal)
        if match:
            num = match.group("num")
            if num in ("", "+", "-"):
                num += "1"
            num = Fraction(num)
            den = Fraction(match.group("den") or 1)
            return float(num / den) * math.pi
        if "/" in literal:
            num, den = literal.split("/")
            return float(Fraction(num) / Fraction(den))
        return float(literal)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "{!r} is not a number, a ratio or a multiple of pi".format(text)
        )


def _parse_range(text, cast):
    parts = text.split(":")
    if len(parts) == 2:
        start, stop = (cast(p) for p in parts)
        step = cast("1")
    elif len(parts) == 3:
        start, step, stop = (cast(p) for p in parts)
    else:
        raise ValueError(text)
    if step <= 0 or stop < start:
        raise ValueError(text)
    # inclusive of stop, never past it
    count = int(math.floor((stop - start) / step + _RANGE_SLACK)) + 1
    return [start + i * step for i in range(count)]


def parse_n_list(text):
    """Parse window sizes given as ``a:step:b``, ``a:b`` or ``a,b,c``.

    Ranges include both ends.

    Args:
        text (str): the list

    Returns:
        list: the integers

    Raises:
        ArgumentTypeError: if the list does not parse

    """
    try:
        if ":" in text:
            return _parse_range(text, int)
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "{!r} is not a list of integers".format(text)
        )


def parse_points(text):
    """Parse evaluation points given as ``t``, ``a,b,c`` or ``a:step:b``.

    Args:
        text (str): the points

    Returns:
        list: the floats

    Raises:
        ArgumentTypeError: if the points do not parse

    """
    try:
        if ":" in text:
            return _parse_range(text, float)
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "{!r} is not a point list".format(text)
        )


def parse_r_rule(text):
    """Parse a width rule ``opt``, ``fixed-min`` or ``fixed:<R>``.

    Args:
        text (str): the rule

    Returns:
        tuple: ``(rule, value)`` with value the fixed width or None

    Raises:
        ArgumentTypeError: if the rule does not parse

    """
    if text in (WidthRule.OPT, WidthRule.FIXED_MIN):
        return text, None
    if text.startswith(WidthRule.FIXED_PREFIX):
        value = parse_real(text[len(WidthRule.FIXED_PREFIX) :])
        if value > 0:
            return WidthRule.FIXED_PREFIX, value
    raise argparse.ArgumentTypeError(
        "{!r} is not one of opt, fixed-min, fixed:<R>".format(text)
    )


def _add_width(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--r", type=parse_real, default=None, help="Gaussian width r"
    )
    group.add_argument(
        "--opt-r",
        action="store_true",
        help="Use the optimal width sqrt((n-1)/(pi-delta)) (default)",
    )


def process_argument(args):
    """Process command line args.

    Args:
        args (list): A list of string arguments to process

    Returns:
        cargs: processed arguments from the parser

    """
    parser = argparse.ArgumentParser(
        prog="shannonreg",
        description="Reconstruct bandlimited signals with the "
        "Gaussian-regularized Shannon series and certify the error",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        choices=list(LEVELS),
        help="Diagnostics level on stderr (default from configuration)",
    )
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    table = subparsers.add_parser(
        "repro-table", help="Bounds and measured error for a set of n"
    )
    table.add_argument("--delta", type=parse_real, required=True)
    table.add_argument("--eps", type=parse_real, required=True)
    table.add_argument("--n-list", type=parse_n_list, required=True)
    table.add_argument(
        "--grid",
        type=int,
        default=None,
        help="Interior grid points on (0, 1) (default 99)",
    )
    table.add_argument("--out", default=None, help="Write CSV to this file")
    table.add_argument(
        "--log", action="store_true", help="Write natural logs"
    )
    table.add_argument(
        "--figure",
        action="store_true",
        help="Use every integer n between the ends of --n-list",
    )

    bounds = subparsers.add_parser(
        "bounds", help="Lower and upper bound at one window"
    )
    bounds.add_argument("--delta", type=parse_real, required=True)
    bounds.add_argument("--eps", type=parse_real, required=True)
    bounds.add_argument("--n", type=int, required=True)
    _add_width(bounds)

    recon = subparsers.add_parser(
        "reconstruct", help="Evaluate the truncated series"
    )
    recon.add_argument("--delta", type=parse_real, required=True)
    recon.add_argument("--n", type=int, default=None)
    _add_width(recon)
    recon.add_argument(
        "--samples", default=None, help="Sample file (default: f0 samples)"
    )
    recon.add_argument("--at", type=parse_points, required=True)
    recon.add_argument(
        "--operator",
        default=Operator.GAUSS,
        choices=[Operator.GAUSS, Operator.SHANNON],
    )

    scan = subparsers.add_parser(
        "scan-c", help="Tabulate C over a range of bandwidths"
    )
    scan.add_argument("--eps", type=parse_real, required=True)
    scan.add_argument("--delta-min", type=parse_real, required=True)
    scan.add_argument("--delta-max", type=parse_real, required=True)
    scan.add_argument("--steps", type=int, required=True)
    scan.add_argument(
        "--r-rule",
        type=parse_r_rule,
        default=(WidthRule.FIXED_MIN, None),
        help="opt (needs --n), fixed-min for r = 1/sqrt(pi-delta), or "
        "fixed:<R>",
    )
    scan.add_argument("--n", type=int, default=None)

    fit = subparsers.add_parser(
        "rate-fit", help="Slope of ln(error) against n from a table"
    )
    fit.add_argument("--csv", required=True)
    fit.add_argument("--column", required=True, choices=CsvColumn.BOUNDS)
    fit.add_argument("--n-from", type=int, default=None)
    fit.add_argument("--n-to", type=int, default=None)

    cargs = parser.parse_args(args)

    return cargs


def _write(text, out=None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fout:
            fout.write(text)
        logging.info("Wrote {}".format(out))


def _repro_table(cargs):
    grid_points = (
        config.get_value(ConfigKey.HARNESS, ConfigKey.GRID_POINTS)
        if cargs.grid is None
        else cargs.grid
    )
    cfg = ExperimentConfig(cargs.delta, cargs.eps, cargs.n_list, grid_points)
    rows = figure_rows(cfg) if cargs.figure else repro_table(cfg)
    if not cargs.log:
        rows = display_rows(rows)
    _write(emit_csv(rows, log_scale=cargs.log), cargs.out)


def _bounds(cargs):
    r = cargs.r
    if r is None:
        r = optimal_width(cargs.delta, cargs.n)
        pair = bound_pair(cargs.delta, cargs.eps, cargs.n)
    else:
        pair = bound_pair(cargs.delta, cargs.eps, cargs.n, r)
    c_value = c_const(cargs.delta, cargs.eps, r)
    _write(
        "lower {:.4e}\nupper {:.4e}\nC {:.10g}\nn_min {}\n".format(
            pair.lower,
            pair.upper,
            c_value,
            n_min(cargs.delta, cargs.eps, c_value),
        )
    )


def _reconstruct(cargs):
    if cargs.samples is not None:
        samples = read_samples(cargs.samples)
    elif cargs.n is None:
        raise DomainError("reconstruct needs --n or --samples")
    else:
        samples = f0_samples(cargs.delta, cargs.n)
    if cargs.operator == Operator.SHANNON:
        values = [reconstruct_shannon(samples, t) for t in cargs.at]
    else:
        r = cargs.r
        if r is None:
            r = optimal_width(cargs.delta, samples.n)
        values = [reconstruct_gauss(samples, r, t) for t in cargs.at]
    _write(
        "".join(
            "{!r},{:.16e}\n".format(t, v) for t, v in zip(cargs.at, values)
        )
    )


def _scan_width(delta, rule, n, fixed):
    if rule == WidthRule.OPT:
        return optimal_width(delta, n)
    if rule == WidthRule.FIXED_MIN:
        return 1.0 / math.sqrt(math.pi - delta)
    return fixed


def _scan_c(cargs):
    rule, fixed = cargs.r_rule
    if rule == WidthRule.OPT and cargs.n is None:
        raise DomainError("--r-rule opt needs --n")
    if cargs.steps < 1:
        raise DomainError("--steps must be >= 1, got {}".format(cargs.steps))
    deltas = np.linspace(cargs.delta_min, cargs.delta_max, cargs.steps)
    values = []
    for delta in deltas:
        r = _scan_width(delta, rule, cargs.n, fixed)
        values.append(c_const(delta, cargs.eps, r))
    negative = sum(v <= 0 for v in values)
    if negative:
        logging.warning("C is not positive at {} bandwidths".format(negative))
    df = pd.DataFrame({"delta": deltas, "C": values})
    _write(df.to_csv(index=False, float_format="%.10e", lineterminator="\n"))


def _rate_fit(cargs):
    rows = read_csv(cargs.csv)
    rows = [
        row
        for row in rows
        if (cargs.n_from is None or row.n >= cargs.n_from)
        and (cargs.n_to is None or row.n <= cargs.n_to)
    ]
    # the table carries 5 significant digits, enough for 4 decimals of slope
    _write("{:.4f}\n".format(rate_fit(rows, cargs.column)))


_COMMANDS = {
    "repro-table": _repro_table,
    "bounds": _bounds,
    "reconstruct": _reconstruct,
    "scan-c": _scan_c,
    "rate-fit": _rate_fit,
}


def run(args):
    """Run one console invocation.

    Args:
        args (list): A list of string arguments to process

    Returns:
        int: the exit status

    """
    cargs = process_argument(args)
    try:
        logging.set_level(
            cargs.log_level
            or config.get_value(ConfigKey.LOGGING, ConfigKey.LEVEL)
        )
        _COMMANDS[cargs.command](cargs)
    except CertificateInvalid as e:
        sys.stderr.write("error: certificate invalid: {}\n".format(e))
        return ExitCode.CERTIFICATE
    except (QuadratureError, DegenerateFitError) as e:
        sys.stderr.write("error: {}\n".format(e))
        return ExitCode.NUMERICS
    except (DomainError, ConfigurationError) as e:
        sys.stderr.write("error: {}\n".format(e))
        return ExitCode.USAGE
    except OSError as e:
        sys.stderr.write("error: {}\n".format(e))
        return ExitCode.FILE_IO
    return ExitCode.OK


def cmd():  # pragma: no cover
    """Entry point to shannonreg via console command.

    Uncovered as this function only serves to be executed manually.
    """
    sys.exit(run(sys.argv[1:]))
