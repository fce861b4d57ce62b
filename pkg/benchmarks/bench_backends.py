"""Timing comparison of the compiled and pure-Python E1 kernels.

Two views:

* kernel microbenchmark: both modules imported side by side in one
  process, same argument stream, best-of-N wall time per call;
* end-to-end scan: the CLI run in a subprocess with BWDECAY_BACKEND
  forcing each backend in turn, which includes import, grid and
  formatting overhead.

Usage:
    python benchmarks/bench_backends.py [--calls 20000] [--points 4000]
"""

from __future__ import annotations

import argparse
import math
import os
import subprocess
import sys
import time

from bwdecay import _kernels_py

try:
    from bwdecay import _kernels
except ImportError:
    _kernels = None


def _argument_stream(n: int) -> list:
    # Same z mix the amplitude path produces: fourth and third quadrant
    # points over a few decades of tau at a physical-ish beta spread.
    zs = []
    for i in range(n):
        beta = 0.5 + (i % 7) * 1.5
        tau = 0.05 * math.exp((i % 97) / 97.0 * 8.0)
        sign = 1.0 if i % 2 else -1.0
        zs.append(complex(sign * 0.5 * tau, -beta * tau))
    return zs


def _time_kernel(mod, zs, repeats: int = 3) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for z in zs:
            mod.e1_scaled(z)
        best = min(best, time.perf_counter() - t0)
    return best


def _time_scan(backend: str, points: int) -> float:
    env = dict(os.environ, BWDECAY_BACKEND=backend)
    cmd = [
        sys.executable, "-m", "bwdecay", "scan",
        "--beta", "10", "--tau-min", "0.01", "--tau-max", "40",
        "--points", str(points), "--grid", "log", "--no-meta",
    ]
    t0 = time.perf_counter()
    subprocess.run(cmd, env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--calls", type=int, default=20000,
                    help="kernel calls per timing pass (default 20000)")
    ap.add_argument("--points", type=int, default=4000,
                    help="grid size of the end-to-end scan (default 4000)")
    args = ap.parse_args()

    zs = _argument_stream(args.calls)
    t_py = _time_kernel(_kernels_py, zs)
    print("kernel e1_scaled, {} calls".format(args.calls))
    print("  python : {:8.1f} ms  ({:.2f} us/call)".format(
        1e3 * t_py, 1e6 * t_py / args.calls))
    if _kernels is not None:
        t_cy = _time_kernel(_kernels, zs)
        print("  cython : {:8.1f} ms  ({:.2f} us/call)  speedup x{:.1f}".format(
            1e3 * t_cy, 1e6 * t_cy / args.calls, t_py / t_cy))
    else:
        print("  cython : extension not built")

    print("end-to-end exact scan, {} points (subprocess, includes startup)".format(
        args.points))
    t_scan_py = _time_scan("python", args.points)
    print("  python : {:8.1f} ms".format(1e3 * t_scan_py))
    if _kernels is not None:
        t_scan_cy = _time_scan("cython", args.points)
        print("  cython : {:8.1f} ms  speedup x{:.1f}".format(
            1e3 * t_scan_cy, t_scan_py / t_scan_cy))
    return 0


if __name__ == "__main__":
    sys.exit(main())
