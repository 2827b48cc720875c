"""Classes that hold constants in shannonreg."""

import math


class ConfigKey:
    """Constants of configuration keys in shannonreg."""

    SPECIAL = "special"
    ERFC_CROSSOVER = "erfc_crossover"
    TAIL_CUTOFF = "tail_cutoff"
    QUADRATURE = "quadrature"
    EPSABS = "epsabs"
    EPSREL = "epsrel"
    LIMIT = "limit"
    HARNESS = "harness"
    GRID_POINTS = "grid_points"
    C_SCAN_N_MAX = "c_scan_n_max"
    C_FLOOR_DIGITS = "c_floor_digits"
    NORM = "norm"
    HALF_WIDTH = "half_width"
    STEP = "step"
    LOGGING = "logging"
    LEVEL = "level"


class DefaultConfig:
    """Constants for default configurations."""

    ERFC_CROSSOVER = 2.0
    TAIL_CUTOFF = 40.0
    EPSABS = 1e-18
    EPSREL = 1e-12
    LIMIT = 10 ** 6
    GRID_POINTS = 99
    C_SCAN_N_MAX = 200
    C_FLOOR_DIGITS = 6
    HALF_WIDTH = 1e4
    STEP = 0.01
    LOG_LEVEL = "warning"


class CsvColumn:
    """Column names of the error table."""

    N = "n"
    LOWER = "lower"
    MEASURED = "measured"
    UPPER = "upper"
    BOUNDS = [LOWER, MEASURED, UPPER]
    ALL = [N, LOWER, MEASURED, UPPER]


class Operator:
    """Reconstruction operators."""

    GAUSS = "gauss"
    SHANNON = "shannon"


class WidthRule:
    """Rules selecting the Gaussian width r for a C scan."""

    OPT = "opt"
    FIXED_MIN = "fixed-min"
    FIXED_PREFIX = "fixed:"


class ExitCode:
    """Process exit statuses of the console."""

    OK = 0
    USAGE = 2
    CERTIFICATE = 3
    FILE_IO = 4
    NUMERICS = 5


class ReferenceRun:
    """The reference experiment: bandwidth pi/4, eps 1/7, odd n in 7..25."""

    DELTA = math.pi / 4
    EPS = 1 / 7
    N_LIST = list(range(7, 26, 2))
    FIGURE_N_LIST = list(range(7, 26))
    C_FLOOR = 0.0666687
    SCAN_EPS = 1 / 20
    SCAN_DELTA_MIN = math.pi / 200
    SCAN_DELTA_MAX = 49 * math.pi / 100
