"""Summary tables: exact-vs-approximate drift profiles and the calibration
sweep, with deterministic CSV/JSON emission.

Cell values are float, None (undefined: a raw power with a negative base
and non-integer exponent), or the string "ERR" (a per-row calibration
failure).  Table mode formats floats to four decimals with round-half-even
so identical inputs always produce identical bytes.
"""

import json
from dataclasses import dataclass

from ._backend import kernels
from .calibrate import optimize_exponent_sub
from .errors import CalibrationError
from .oracle import exact_drift_profile
from .profiles import _mu_value, _power_cell, front_correction

# eta grids of the two drift tables: dense to 1.0, quarter steps to 3.25,
# then quarter steps again from 3.75 (no 3.5 row)
DRIFT_HALF_ETA = (
    0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0,
    1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0, 3.25,
    3.75, 4.0, 4.25, 4.5, 4.75, 5.0, 5.25, 5.5, 6.0,
)
DRIFT_THIRD_ETA = DRIFT_HALF_ETA[:-2]

DRIFT_HALF_EXPONENTS = (1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5)
DRIFT_THIRD_EXPONENTS = DRIFT_HALF_EXPONENTS[:-1]

CALIBRATION_ORDERS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)

ERROR_MARKER = "ERR"


@dataclass(frozen=True)
class TableData:
    """A rectangular table: header plus rows of float/None/"ERR" cells."""

    header: tuple
    rows: tuple

    def __post_init__(self):
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(
                    f"row width {len(row)} does not match header width {width}"
                )

    def to_csv(self, *, full_precision=False):
        fmt = _format_cell_full if full_precision else _format_cell
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(",".join(fmt(cell) for cell in row))
        return "\n".join(lines) + "\n"

    def to_json(self):
        payload = {"header": list(self.header), "rows": [list(r) for r in self.rows]}
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _format_cell(cell):
    if cell is None:
        return ""
    if cell == ERROR_MARKER:
        return ERROR_MARKER
    # round-half-even at four decimals, the table's printed precision
    return f"{cell:.4f}"


def _format_cell_full(cell):
    if cell is None:
        return ""
    if cell == ERROR_MARKER:
        return ERROR_MARKER
    return repr(cell)


def _parse_cell(text):
    if text == "":
        return None
    if text == ERROR_MARKER:
        return ERROR_MARKER
    return float(text)


def read_table_csv(text):
    """Parse a table the CSV emitter produced; inverse of to_csv at printed
    precision."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty table text")
    header = tuple(lines[0].split(","))
    rows = tuple(
        tuple(_parse_cell(cell) for cell in line.split(","))
        for line in lines[1:]
        if line != ""
    )
    return TableData(header=header, rows=rows)


def read_table_json(text):
    payload = json.loads(text)
    return TableData(
        header=tuple(payload["header"]),
        rows=tuple(tuple(row) for row in payload["rows"]),
    )


def _exponent_label(n):
    return f"n={n:g}"


def drift_profile_table(
    mu, eta_grid=None, exponents=None, *, mode="raw", front_gamma=None
):
    """Exact drift solution next to the raw profile for each exponent.

    front_gamma overrides the Gamma(2-mu) factor inside the front position
    (lam = n(n+1)*front_gamma); the default None uses Gamma(2-mu) itself.
    The override exists as a diagnostic: it exposes how sensitive the
    columns are to rounding mu before taking the Gamma value.
    """
    mu = _mu_value(mu)
    if eta_grid is None:
        eta_grid = DRIFT_HALF_ETA if abs(mu - 0.5) <= 1e-12 else DRIFT_THIRD_ETA
    if exponents is None:
        exponents = (
            DRIFT_HALF_EXPONENTS if abs(mu - 0.5) <= 1e-12 else DRIFT_THIRD_EXPONENTS
        )
    if mode not in ("raw", "clamped"):
        raise ValueError(f"mode must be 'raw' or 'clamped', got {mode!r}")
    gamma_factor = kernels.gamma_pos(2.0 - mu) if front_gamma is None else front_gamma
    if gamma_factor <= 0.0:
        raise ValueError(f"front gamma factor must be positive, got {gamma_factor}")
    header = ("eta", "exact") + tuple(_exponent_label(n) for n in exponents)
    lams = [n * (n + 1.0) * gamma_factor for n in exponents]
    rows = []
    for eta in eta_grid:
        row = [float(eta), exact_drift_profile(mu, eta)]
        for n, lam in zip(exponents, lams):
            row.append(_power_cell(1.0 - eta / lam, n, mode))
        rows.append(tuple(row))
    return TableData(header=header, rows=tuple(rows))


def calibration_table(orders=CALIBRATION_ORDERS, **optimize_kwargs):
    """Optimal subdiffusion exponent and front correction per order.

    Runs the full exponent optimization for every order; rows whose
    objective has no interior minimum carry the "ERR" marker instead of an
    exponent.  This is the expensive table: seconds per row.
    """
    header = ("mu", "optimal_n", "front_correction")
    rows = []
    for mu in orders:
        mu = _mu_value(mu)
        try:
            optimal = optimize_exponent_sub(mu, **optimize_kwargs).optimal_n
        except CalibrationError:
            optimal = ERROR_MARKER
        rows.append((mu, optimal, front_correction(mu)))
    return TableData(header=header, rows=tuple(rows))
