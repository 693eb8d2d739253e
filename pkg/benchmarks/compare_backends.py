"""Time the compiled kernels against the pure-Python fallback.

Runs the same workloads through both backends, reports per-call timings
and the speedup, and cross-checks every returned float for bit equality
(the two implementations share constants and summation order, so any
difference at all is a bug).  Exits nonzero if parity is broken.

Usage:  python3 benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import math
import sys
import time

import fthbi._kernels_py as pure

try:
    import fthbi._kernels as compiled
except ImportError:
    compiled = None

ABS_TOL = 1e-12
REL_TOL = 1e-10


def lam_sub(mu, n):
    return math.sqrt(2.0 * n * (n + 1.0)) * math.sqrt(
        math.gamma(2.0 - mu) / (2.0 - mu)
    )


def lam_drift(mu, n):
    return n * (n + 1.0) * math.gamma(2.0 - mu)


def workload_g_pair(k):
    out = []
    for kind, mu, n, lam in (
        (k.SUB, 0.5, 1.472, lam_sub(0.5, 1.472)),
        (k.DRIFT, 1.0 / 3.0, 2.25, lam_drift(1.0 / 3.0, 2.25)),
    ):
        for i in range(40):
            eta = lam * i / 40.0
            out.extend(k.g_pair(kind, mu, n, lam, eta, ABS_TOL, REL_TOL))
    return out


def workload_d_value(k):
    out = []
    for kind, mu, n, lam in (
        (k.SUB, 0.7, 1.465, lam_sub(0.7, 1.465)),
        (k.DRIFT, 0.5, 1.75, lam_drift(0.5, 1.75)),
    ):
        for i in range(40):
            eta = lam * i / 40.0
            out.extend(k.d_value(kind, mu, n, lam, eta, ABS_TOL, REL_TOL))
    return out


def workload_error_functional(k):
    n, lam = 1.472, lam_sub(0.5, 1.472)
    return list(k.error_functional_sub_value(0.5, n, lam, 1e-12, 1e-7, 256))


def workload_mwright(k):
    out = []
    for nu in (1.0 / 3.0, 0.5, 0.75):
        for i in range(41):
            out.extend(k.mwright(nu, 0.1 * i))
    return out


def workload_rl_power(k):
    out = []
    for mu in (0.25, 0.5, 0.75):
        for beta in (0.5, 1.0, 2.5):
            for t in (0.5, 1.0, 2.0):
                out.extend(k.rl_power_value(mu, beta, t, ABS_TOL, REL_TOL))
    return out


WORKLOADS = (
    ("g_pair, 80 evals", workload_g_pair),
    ("d_value, 80 evals", workload_d_value),
    ("error functional, 1 eval", workload_error_functional),
    ("mwright, 123 evals", workload_mwright),
    ("rl_power, 27 evals", workload_rl_power),
)


def best_time(fn, arg, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def same(a, b):
    return a == b or (isinstance(a, float) and math.isnan(a) and math.isnan(b))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=7, help="timing repeats")
    args = parser.parse_args(argv)

    if compiled is None:
        print("compiled backend not built; nothing to compare against")
        return 1

    print(f"{'workload':<26} {'pure':>10} {'compiled':>10} {'speedup':>8}  parity")
    mismatches = 0
    for label, fn in WORKLOADS:
        ref = fn(pure)
        got = fn(compiled)
        ok = len(ref) == len(got) and all(same(a, b) for a, b in zip(ref, got))
        mismatches += not ok
        t_pure = best_time(fn, pure, args.repeat)
        t_comp = best_time(fn, compiled, args.repeat)
        print(
            f"{label:<26} {t_pure * 1e3:>8.2f}ms {t_comp * 1e3:>8.2f}ms"
            f" {t_pure / t_comp:>7.1f}x  {'bit-identical' if ok else 'MISMATCH'}"
        )
    if mismatches:
        print(f"\n{mismatches} workload(s) disagree between backends", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
