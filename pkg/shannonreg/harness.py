"""Experiment driver: measured errors against the certified bounds."""

import io
import math
from collections import namedtuple

import numpy as np
import pandas as pd
from marshmallow import (
    Schema,
    ValidationError,
    fields,
    validate,
    validates_schema,
)

from shannonreg.bounds import (
    MillsEpsilon,
    certified_c_floor,
    lower_bound_opt,
    n_min,
    upper_bound_opt,
)
from shannonreg.config import config
from shannonreg.exceptions import (
    CertificateInvalid,
    DegenerateFitError,
    DomainError,
    SampleFileError,
)
from shannonreg.logging import logging
from shannonreg.reconstruct import (
    GaussWidth,
    ext_reconstruct_gauss,
    ext_reconstruct_shannon,
    optimal_width,
)
from shannonreg.signals import Bandwidth, ShiftedSincSignal, signal_samples
from shannonreg.utils import (
    ConfigKey,
    CsvColumn,
    DefaultConfig,
    Operator,
    check_window,
)


ErrorRow = namedtuple("ErrorRow", CsvColumn.ALL)


class ExperimentConfigSchema(Schema):
    """Schema of the parameters of a table run."""

    delta = fields.Float(
        required=True,
        validate=validate.Range(
            min=0, max=math.pi, min_inclusive=False, max_inclusive=False
        ),
    )
    eps = fields.Float(
        required=True,
        validate=validate.Range(
            min=0, max=1, min_inclusive=False, max_inclusive=False
        ),
    )
    n_list = fields.List(
        fields.Integer(validate=validate.Range(min=2)),
        required=True,
        validate=validate.Length(min=1),
    )
    grid_points = fields.Integer(
        load_default=DefaultConfig.GRID_POINTS, validate=validate.Range(min=1)
    )

    @validates_schema
    def validate_order(self, data, **kwargs):
        """Check that the window sizes are strictly increasing.

        Args:
            data (dict): the deserialized fields
            **kwargs: passed by marshmallow

        Raises:
            ValidationError: if n_list is not sorted

        """
        n_list = data.get("n_list", [])
        if any(a >= b for a, b in zip(n_list, n_list[1:])):
            raise ValidationError(
                "n_list must be strictly increasing", "n_list"
            )


class ExperimentConfig(object):
    """Parameters of a table run.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        n_list (list): window half-sizes, strictly increasing
        grid_points (int): interior grid points on (0, 1)

    Raises:
        DomainError: if a parameter is invalid

    """

    def __init__(
        self, delta, eps, n_list, grid_points=DefaultConfig.GRID_POINTS
    ):
        try:
            data = ExperimentConfigSchema().load(
                {
                    "delta": delta,
                    "eps": eps,
                    "n_list": list(n_list),
                    "grid_points": grid_points,
                }
            )
        except ValidationError as e:
            raise DomainError(
                "Invalid experiment configuration: {}".format(e.messages)
            )
        self.delta = Bandwidth(data["delta"])
        self.eps = MillsEpsilon(data["eps"])
        self.n_list = data["n_list"]
        self.grid_points = data["grid_points"]

    def __repr__(self):
        return (
            "ExperimentConfig(delta={!r}, eps={!r}, n_list={!r}, "
            "grid_points={!r})".format(
                float(self.delta),
                float(self.eps),
                self.n_list,
                self.grid_points,
            )
        )


def grid(grid_points):
    """Interior evaluation points m / (grid_points + 1).

    Args:
        grid_points (int): number of points

    Returns:
        list: the points in increasing order

    """
    grid_points = check_window(grid_points, minimum=1)
    return [m / (grid_points + 1) for m in range(1, grid_points + 1)]


def measure_error(
    delta,
    n,
    r=None,
    grid_points=DefaultConfig.GRID_POINTS,
    operator=Operator.GAUSS,
    signal=None,
):
    """Largest reconstruction error over an interior grid of (0, 1).

    Args:
        delta (float): the bandwidth of the default signal f0
        n (int): the window half-size
        r (float): the Gaussian width, ignored by the plain Shannon series;
            defaults to the optimal width
        grid_points (int): number of grid points
        operator (str): ``gauss`` or ``shannon``
        signal (PWSignal): the signal to reconstruct, f0 by default

    Returns:
        float: max over the grid of |f(t) - S f(t)|

    Raises:
        DomainError: on an unknown operator

    """
    delta = Bandwidth(delta)
    n = check_window(n)
    points = grid(grid_points)
    if signal is None:
        signal = ShiftedSincSignal(delta)
    samples = signal_samples(signal, n)
    if operator == Operator.GAUSS:
        r = optimal_width(delta, n) if r is None else GaussWidth(r)

        def series(t):
            return ext_reconstruct_gauss(samples, r, t)

    elif operator == Operator.SHANNON:

        def series(t):
            return ext_reconstruct_shannon(samples, t)

    else:
        raise DomainError("unknown operator {!r}".format(operator))
    return max(
        float(abs(signal.ext_evaluate(t) - series(t))) for t in points
    )


def _table_floor(cfg):
    harness = config.get_config()[ConfigKey.HARNESS]
    floor = certified_c_floor(
        cfg.delta,
        cfg.eps,
        cfg.n_list[0],
        max(cfg.n_list[-1], harness[ConfigKey.C_SCAN_N_MAX]),
        digits=harness[ConfigKey.C_FLOOR_DIGITS],
    )
    smallest = n_min(cfg.delta, cfg.eps, floor)
    logging.info("C floor {} admits n >= {}".format(floor, smallest))
    if cfg.n_list[0] < smallest:
        raise CertificateInvalid(
            "n = {} is below the admissible minimum {}".format(
                cfg.n_list[0], smallest
            )
        )
    return floor


def _rows(cfg, n_values):
    floor = _table_floor(cfg)
    rows = []
    for n in n_values:
        rows.append(
            ErrorRow(
                n=n,
                lower=lower_bound_opt(cfg.delta, cfg.eps, n, c_value=floor),
                measured=measure_error(
                    cfg.delta, n, optimal_width(cfg.delta, n), cfg.grid_points
                ),
                upper=upper_bound_opt(cfg.delta, n),
            )
        )
        logging.debug("Row {}".format(rows[-1]))
    return rows


def repro_table(cfg):
    """Bounds and measured error for every window size of the run.

    The lower column uses the certified floor of C over the run, so every
    row shares one constant.

    Args:
        cfg (ExperimentConfig): the run

    Returns:
        list: one ErrorRow per n, in increasing n

    """
    return _rows(cfg, cfg.n_list)


def figure_rows(cfg):
    """Rows for every integer n between the first and last of the run.

    Args:
        cfg (ExperimentConfig): the run

    Returns:
        list: one ErrorRow per n

    """
    return _rows(cfg, range(cfg.n_list[0], cfg.n_list[-1] + 1))


def rate_fit(rows, column):
    """Least-squares slope of ln(column) against n.

    Args:
        rows (list): ErrorRow records
        column (str): ``lower``, ``measured`` or ``upper``

    Returns:
        float: the slope

    Raises:
        DomainError: on an unknown column
        DegenerateFitError: with fewer than 3 rows, non-positive values or
            constant data

    """
    if column not in CsvColumn.BOUNDS:
        raise DomainError("unknown column {!r}".format(column))
    if len(rows) < 3:
        raise DegenerateFitError(
            "a rate fit needs at least 3 rows, got {}".format(len(rows))
        )
    n = np.array([row.n for row in rows], dtype=float)
    values = np.array([getattr(row, column) for row in rows], dtype=float)
    if not np.all(values > 0) or not np.all(np.isfinite(values)):
        raise DegenerateFitError(
            "column {} has non-positive values".format(column)
        )
    logs = np.log(values)
    if np.ptp(n) == 0 or np.ptp(logs) == 0:
        raise DegenerateFitError("column {} is constant".format(column))
    slope, _ = np.polyfit(n, logs, 1)
    return float(slope)


def _frame(rows):
    return pd.DataFrame(
        [list(row) for row in rows], columns=CsvColumn.ALL
    ).astype({CsvColumn.N: int})


def emit_csv(rows, log_scale=False):
    """Serialize rows as CSV text.

    Args:
        rows (list): ErrorRow records
        log_scale (bool): write natural logs with 6 decimals instead of
            5 significant digits

    Returns:
        str: ``n,lower,measured,upper`` followed by one line per row

    """
    df = _frame(rows)
    if log_scale:
        with np.errstate(invalid="ignore", divide="ignore"):
            for column in CsvColumn.BOUNDS:
                df[column] = np.log(df[column].astype(float))
        return df.to_csv(
            index=False, float_format="%.6f", na_rep="nan", lineterminator="\n"
        )
    return df.to_csv(index=False, float_format="%.4e", lineterminator="\n")


def read_csv(source):
    """Read rows written by :func:`emit_csv` without log scaling.

    Args:
        source (str): a file path, or CSV text containing a newline

    Returns:
        list: ErrorRow records

    Raises:
        SampleFileError: if the columns are missing or do not parse

    """
    buffer = io.StringIO(source) if "\n" in source else source
    try:
        df = pd.read_csv(buffer)
        missing = [c for c in CsvColumn.ALL if c not in df.columns]
        if missing:
            raise SampleFileError(
                "missing columns: {}".format(", ".join(missing))
            )
        df = df[CsvColumn.ALL].astype(
            {
                CsvColumn.N: int,
                CsvColumn.LOWER: float,
                CsvColumn.MEASURED: float,
                CsvColumn.UPPER: float,
            }
        )
    except (ValueError, pd.errors.ParserError) as e:
        raise SampleFileError("could not read the table: {}".format(e))
    return [
        ErrorRow(int(n), float(lower), float(measured), float(upper))
        for n, lower, measured, upper in df.itertuples(index=False)
    ]


def display_rows(rows):
    """Rows fit for display, with negative lower bounds clamped to 0.

    Args:
        rows (list): ErrorRow records

    Returns:
        list: new ErrorRow records; the input is left untouched

    """
    shown = []
    for row in rows:
        if row.lower < 0:
            logging.warning(
                "Lower bound {} at n = {} carries no information; showing "
                "0".format(row.lower, row.n)
            )
            row = row._replace(lower=0.0)
        shown.append(row)
    return shown
