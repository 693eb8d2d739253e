"""Command-line front end: tables, profile curves, calibration reports, and
direct M-Wright evaluation.

Exit codes: 0 success, 2 configuration error (bad flags, bad config file,
bad grids, unwritable output), 3 numeric failure (quadrature, series, or
calibration errors surfacing from the library).
"""

import argparse
import json
import sys

from .calibrate import best_fixed_exponent_drift, optimize_exponent_sub, variable_order_report
from .errors import CalibrationError, FthbiError
from .profiles import (
    FixedExponent,
    HyperbolicExponent,
    InverseExponentialExponent,
    ProblemKind,
    ProblemSpec,
    SimilarityProfile,
    eval_profile,
    similarity_eta,
)
from .specfun import mwright
from .tables import (
    CALIBRATION_ORDERS,
    TableData,
    calibration_table,
    drift_profile_table,
)


class _ConfigError(Exception):
    pass


_RULES = {
    "hyperbolic": HyperbolicExponent,
    "invexp": InverseExponentialExponent,
}

# config-file keys each command accepts (mirrors the flag names)
_COMMON_KEYS = {"format", "out"}
_CONFIG_KEYS = {
    "table": _COMMON_KEYS
    | {"mu", "exponent", "eta_min", "eta_max", "eta_step", "front_gamma", "mode"},
    "profile": _COMMON_KEYS
    | {
        "problem", "mu", "exponent", "exponent_rule", "n0", "sweep",
        "eta_min", "eta_max", "eta_step", "x", "time", "coeff", "mode",
    },
    "calibrate": _COMMON_KEYS
    | {
        "problem", "mu", "exponent_rule", "n0", "metric",
        "eta_min", "eta_max", "eta_step",
    },
    "mwright": _COMMON_KEYS | {"nu", "z"},
}


def _add_output_flags(parser):
    parser.add_argument("--format", choices=["csv", "json"], default=None)
    parser.add_argument("--out", default=None, metavar="PATH")
    parser.add_argument("--config", default=None, metavar="PATH",
                        help="JSON file of defaults; explicit flags override it")


def _add_grid_flags(parser):
    parser.add_argument("--eta-min", type=float, default=None)
    parser.add_argument("--eta-max", type=float, default=None)
    parser.add_argument("--eta-step", type=float, default=None)


def _add_mode_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--raw", dest="mode", action="store_const", const="raw")
    group.add_argument("--clamp", dest="mode", action="store_const", const="clamped")
    parser.set_defaults(mode=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fthbi",
        description="Integral-balance solutions of time-fractional "
        "subdiffusion and drift equations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a summary table")
    table.add_argument("which", choices=["1", "2", "3"],
                       help="1: calibration sweep; 2: drift mu=1/2; 3: drift mu=1/3")
    table.add_argument("--mu", type=float, action="append", default=None)
    table.add_argument("--exponent", type=float, action="append", default=None)
    table.add_argument("--front-gamma", type=float, default=None,
                       help="override the Gamma(2-mu) factor in the front position")
    _add_grid_flags(table)
    _add_mode_flags(table)
    _add_output_flags(table)

    profile = sub.add_parser("profile", help="emit profile curves")
    profile.add_argument("--problem", choices=["sub", "drift"], default=None)
    profile.add_argument("--mu", type=float, action="append", default=None)
    profile.add_argument("--exponent", type=float, action="append", default=None)
    profile.add_argument("--exponent-rule", choices=sorted(_RULES), default=None)
    profile.add_argument("--n0", type=float, default=None)
    profile.add_argument("--sweep", choices=["eta", "x", "t"], default=None,
                         help="sweep variable; x and t sweeps reuse the "
                         "--eta-* flags as their grid")
    profile.add_argument("--x", type=float, default=None,
                         help="fixed position for a t sweep")
    profile.add_argument("--time", type=float, default=None,
                         help="fixed time for an x sweep")
    profile.add_argument("--coeff", type=float, default=None)
    _add_grid_flags(profile)
    _add_mode_flags(profile)
    _add_output_flags(profile)

    calibrate = sub.add_parser("calibrate", help="run calibrations (JSON report)")
    calibrate.add_argument("--problem", choices=["sub", "drift"], default=None)
    calibrate.add_argument("--mu", type=float, action="append", default=None)
    calibrate.add_argument("--exponent-rule", choices=sorted(_RULES), default=None)
    calibrate.add_argument("--n0", type=float, default=None)
    calibrate.add_argument("--metric", choices=["max_abs", "rms"], default=None)
    _add_grid_flags(calibrate)
    _add_output_flags(calibrate)

    mw = sub.add_parser("mwright", help="evaluate the M-Wright function")
    mw.add_argument("--nu", type=float, default=None)
    mw.add_argument("--z", type=float, action="append", default=None)
    _add_output_flags(mw)

    return parser


def _load_config(args):
    path = getattr(args, "config", None)
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _ConfigError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise _ConfigError(f"config file {path} must hold a JSON object")
    allowed = _CONFIG_KEYS[args.command]
    unknown = sorted(set(config) - allowed)
    if unknown:
        raise _ConfigError(
            f"config keys not recognized for '{args.command}': {', '.join(unknown)}"
        )
    return config


def _resolve(args, config, key, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config and config[key] is not None:
        return config[key]
    return default


def _resolve_list(args, config, key):
    value = getattr(args, key, None)
    if value is not None:
        return list(value)
    raw = config.get(key)
    if raw is None:
        return None
    return list(raw) if isinstance(raw, (list, tuple)) else [raw]


def _grid(args, config, default_min, default_max, default_step, name="eta"):
    lo = float(_resolve(args, config, "eta_min", default_min))
    hi = float(_resolve(args, config, "eta_max", default_max))
    step = float(_resolve(args, config, "eta_step", default_step))
    if not lo < hi:
        raise _ConfigError(f"{name} grid needs min < max, got [{lo}, {hi}]")
    if step <= 0.0:
        raise _ConfigError(f"{name} grid step must be positive, got {step}")
    count = int((hi - lo) / step + 1e-9) + 1
    return [lo + i * step for i in range(count)]


def _emit_table(table, fmt, full_precision=False):
    if fmt == "json":
        return table.to_json()
    return table.to_csv(full_precision=full_precision)


def _cmd_table(args, config):
    fmt = _resolve(args, config, "format", "csv")
    if args.which == "1":
        orders = _resolve_list(args, config, "mu") or list(CALIBRATION_ORDERS)
        return _emit_table(calibration_table(orders), fmt)
    default_mu = 0.5 if args.which == "2" else 1.0 / 3.0
    mus = _resolve_list(args, config, "mu")
    if mus is not None and len(mus) != 1:
        raise _ConfigError("tables 2 and 3 take a single --mu")
    mu = mus[0] if mus else default_mu
    grid = None
    if any(_resolve(args, config, k) is not None
           for k in ("eta_min", "eta_max", "eta_step")):
        grid = _grid(args, config, 0.1, 6.0, 0.1)
    exponents = _resolve_list(args, config, "exponent")
    mode = _resolve(args, config, "mode", "raw")
    table = drift_profile_table(
        mu,
        eta_grid=grid,
        exponents=tuple(exponents) if exponents else None,
        mode=mode,
        front_gamma=_resolve(args, config, "front_gamma"),
    )
    return _emit_table(table, fmt)


def _curve_value(spec, profile, sweep, point, fixed_x, fixed_t, mode):
    if sweep == "x":
        eta = similarity_eta(spec, point, fixed_t)
    elif sweep == "t":
        if point == 0.0:
            # initial state: the front has zero reach, only x = 0 is wetted
            return 1.0 if fixed_x == 0.0 else 0.0
        eta = similarity_eta(spec, fixed_x, point)
    else:
        eta = point
    try:
        return eval_profile(profile, eta, mode)
    except ValueError:
        return None  # hyperbolic rule pole at eta = 0: undefined cell


def _cmd_profile(args, config):
    fmt = _resolve(args, config, "format", "csv")
    problem = _resolve(args, config, "problem", "sub")
    kind = ProblemKind.SUBDIFFUSION if problem == "sub" else ProblemKind.DRIFT
    mus = _resolve_list(args, config, "mu")
    if not mus:
        raise _ConfigError("profile needs at least one --mu")
    coeff = float(_resolve(args, config, "coeff", 1.0))
    mode = _resolve(args, config, "mode", "clamped")
    sweep = _resolve(args, config, "sweep", "eta")
    rule_name = _resolve(args, config, "exponent_rule")
    exponents = _resolve_list(args, config, "exponent")
    if rule_name is not None and exponents:
        raise _ConfigError("give either --exponent or --exponent-rule, not both")
    if rule_name is None and not exponents:
        raise _ConfigError("profile needs --exponent (repeatable) or --exponent-rule")
    if rule_name is not None and kind is not ProblemKind.DRIFT:
        raise _ConfigError("variable exponent rules apply to the drift problem only")

    fixed_x = _resolve(args, config, "x")
    fixed_t = _resolve(args, config, "time")
    if sweep == "x":
        if fixed_t is None or fixed_t <= 0.0:
            raise _ConfigError("an x sweep needs --time > 0")
        grid = _grid(args, config, 0.0, 2.0, 0.05, name="x")
    elif sweep == "t":
        if fixed_x is None or fixed_x < 0.0:
            raise _ConfigError("a t sweep needs --x >= 0")
        grid = _grid(args, config, 0.0, 4.0, 0.1, name="t")
    else:
        grid = _grid(args, config, 0.0, 6.0, 0.1)

    curves = []
    for mu in mus:
        if rule_name is not None:
            n0 = float(_resolve(args, config, "n0", 1.0))
            exponent_specs = [(f"{rule_name} n0={n0:g}", _RULES[rule_name](n0))]
        else:
            exponent_specs = [(f"n={n:g}", FixedExponent(n)) for n in exponents]
        for label, exponent in exponent_specs:
            full = f"mu={mu:g} {label}" if len(mus) > 1 else label
            spec = ProblemSpec(kind, mu, coeff)
            profile = SimilarityProfile(kind, mu, exponent)
            curves.append((full, spec, profile))

    header = (sweep,) + tuple(label for label, _, _ in curves)
    rows = []
    for point in grid:
        row = [point]
        for _, spec, profile in curves:
            row.append(_curve_value(spec, profile, sweep, point, fixed_x, fixed_t, mode))
        rows.append(tuple(row))
    table = TableData(header=header, rows=tuple(rows))
    return _emit_table(table, fmt, full_precision=True)


def _cmd_calibrate(args, config):
    fmt = _resolve(args, config, "format", "json")
    if fmt != "json":
        raise _ConfigError("calibrate reports are JSON; --format csv is not supported")
    problem = _resolve(args, config, "problem", "sub")
    mus = _resolve_list(args, config, "mu") or []
    if problem == "sub":
        results = []
        for mu in mus:
            try:
                r = optimize_exponent_sub(mu)
                results.append(
                    {
                        "mu": mu,
                        "optimal_n": r.optimal_n,
                        "objective_value": r.objective_value,
                        "bracket": list(r.bracket),
                        "iterations": r.iterations,
                    }
                )
            except CalibrationError as exc:
                results.append({"mu": mu, "error": str(exc)})
        report = {"problem": "subdiffusion", "results": results}
        return json.dumps(report, indent=2) + "\n"

    rule_name = _resolve(args, config, "exponent_rule")
    results = []
    if rule_name is not None:
        n0 = float(_resolve(args, config, "n0", 1.0))
        grid = _grid(args, config, 0.1, 5.0, 0.1)
        for mu in mus:
            rep = variable_order_report(mu, _RULES[rule_name](n0), grid)
            results.append(
                {
                    "mu": mu,
                    "rule": rule_name,
                    "n0": n0,
                    "max_abs": rep.max_abs,
                    "mean_abs": rep.mean_abs,
                    "rms": rep.rms,
                    "max_abs_percent": rep.max_abs_percent,
                    "dropped": [list(d) for d in rep.dropped],
                }
            )
        report = {"problem": "drift", "results": results}
        return json.dumps(report, indent=2) + "\n"

    lo = _resolve(args, config, "eta_min")
    hi = _resolve(args, config, "eta_max")
    if lo is None or hi is None:
        raise _ConfigError("a drift best-exponent search needs --eta-min and --eta-max")
    metric = _resolve(args, config, "metric", "max_abs")
    for mu in mus:
        n_best = best_fixed_exponent_drift(mu, float(lo), float(hi), metric)
        results.append(
            {"mu": mu, "window": [float(lo), float(hi)], "metric": metric,
             "best_n": n_best}
        )
    report = {"problem": "drift", "results": results}
    return json.dumps(report, indent=2) + "\n"


def _cmd_mwright(args, config):
    fmt = _resolve(args, config, "format", "csv")
    nu = _resolve(args, config, "nu")
    if nu is None:
        raise _ConfigError("mwright needs --nu")
    zs = _resolve_list(args, config, "z")
    if not zs:
        raise _ConfigError("mwright needs at least one --z")
    values = [(float(z), mwright(float(nu), float(z))) for z in zs]
    if fmt == "json":
        payload = {"nu": float(nu),
                   "values": [{"z": z, "value": v} for z, v in values]}
        return json.dumps(payload, indent=2) + "\n"
    lines = ["z,value"] + [f"{z!r},{v!r}" for z, v in values]
    return "\n".join(lines) + "\n"


_COMMANDS = {
    "table": _cmd_table,
    "profile": _cmd_profile,
    "calibrate": _cmd_calibrate,
    "mwright": _cmd_mwright,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args)
        text = _COMMANDS[args.command](args, config)
    except _ConfigError as exc:
        print(f"fthbi: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"fthbi: {exc}", file=sys.stderr)
        return 2
    except FthbiError as exc:
        print(f"fthbi: {exc}", file=sys.stderr)
        return 3
    out = _resolve(args, config, "out")
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"fthbi: cannot write {out}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
