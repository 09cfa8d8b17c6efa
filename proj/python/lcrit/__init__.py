"""Exact evaluation of the twisted-sum vanishing criterion for quadratic twists."""

from pathlib import Path

from . import _core
from ._core import (
    DataError,
    Error,
    OverflowError,
    PreconditionError,
    congruent_verdict,
    cubes_verdict,
    enumerate_forms,
    f_sum,
    genus_character,
    is_fundamental_discriminant,
    is_prime,
    isqrt,
    kronecker,
    level_data,
    levels,
    parity_test,
    scan,
    table_condition,
    vanishing_verdict,
)

# Wheels ship the curve and table data next to the extension; builds from a
# source tree fall back to the data directory compiled into the library.
_PACKAGED_DATA = Path(__file__).with_name("data")
DATA_DIR = _PACKAGED_DATA if _PACKAGED_DATA.is_dir() else None


def _data_dir(data_dir):
    # An empty path selects LCRIT_DATA_DIR or the compiled-in default.
    if data_dir is not None:
        return str(data_dir)
    return str(DATA_DIR) if DATA_DIR is not None else ""


def coefficients(level, max_n, data_dir=None):
    """Newform coefficients a_1 .. a_max_n for a registered level."""
    return _core.coefficients(level, max_n, _data_dir(data_dir))


def twisted_l_value(level, d, terms=None, data_dir=None):
    """Truncated central value of the twist by D with its verdict."""
    return _core.twisted_l_value(level, d, terms, _data_dir(data_dir))


def reproduce_table(name, max_abs_d=None, workers=0, data_dir=None):
    """Recompute one reference table; the report carries the rendered text."""
    return _core.reproduce_table(name, max_abs_d, workers, _data_dir(data_dir))


__all__ = [
    "DATA_DIR",
    "DataError",
    "Error",
    "OverflowError",
    "PreconditionError",
    "coefficients",
    "congruent_verdict",
    "cubes_verdict",
    "enumerate_forms",
    "f_sum",
    "genus_character",
    "is_fundamental_discriminant",
    "is_prime",
    "isqrt",
    "kronecker",
    "level_data",
    "levels",
    "parity_test",
    "reproduce_table",
    "scan",
    "table_condition",
    "twisted_l_value",
    "vanishing_verdict",
]
