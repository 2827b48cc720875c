"""Common shannonreg utilities."""

from shannonreg.utils.common import get_config_path
from shannonreg.utils.constants import (
    ConfigKey,
    CsvColumn,
    DefaultConfig,
    ExitCode,
    Operator,
    ReferenceRun,
    WidthRule,
)
from shannonreg.utils.testing import get_file_path
from shannonreg.utils.validation import (
    check_finite,
    check_positive,
    check_window,
)


__all__ = [
    "get_config_path",
    "get_file_path",
    "check_finite",
    "check_positive",
    "check_window",
    "ConfigKey",
    "CsvColumn",
    "DefaultConfig",
    "ExitCode",
    "Operator",
    "ReferenceRun",
    "WidthRule",
]
