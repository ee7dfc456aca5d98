"""Compiled vs pure-Python kernels.

Micro-benchmarks call both kernel modules directly on the same inputs; the
end-to-end workloads run in subprocesses with and without HOPFOID_PURE=1 so
that the import-time selection is exercised as users see it.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json out.json]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from hopfoid._kernels import _pykernels as pyk

try:
    from hopfoid._kernels import _ckernels as ck
except ImportError:  # pragma: no cover
    ck = None


def _poly(rng, n, bits=60):
    p = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]
    p[-1] = p[-1] or 1
    return p


def micro(repeat):
    rng = random.Random(0)
    a, b = _poly(rng, 60), _poly(rng, 40)
    M = [[_poly(rng, 8) for _ in range(6)] for _ in range(6)]
    v = [_poly(rng, 8) for _ in range(6)]
    cases = {
        "mul 60x40": lambda K: K.mul(a, b),
        "lincomb 60/40": lambda K: K.lincomb(a, 7, b, -3),
        "deriv 60": lambda K: K.deriv(a),
        "content 60": lambda K: K.content(a),
        "pseudo_divmod 60/40": lambda K: K.pseudo_divmod(a, b),
        "matvec 6x6 deg 7": lambda K: K.matvec(M, v),
    }
    rows = []
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(pyk), number=200, repeat=repeat)) / 200
        tc = min(timeit.repeat(lambda: fn(ck), number=200, repeat=repeat)) / 200 if ck else None
        if ck:
            assert fn(pyk) == fn(ck), name
        rows.append((name, tp, tc))
    return rows


WORKLOADS = {
    "criterion 7 (cofactor + Laplace)": "from hopfoid.suite import run_criterion; run_criterion(7)",
    "criterion 8 (equality vs brute force)": "from hopfoid.suite import run_criterion; run_criterion(8)",
    "jet axioms H_8": "from hopfoid.jet import JetAlgebra, axiom_suite; axiom_suite(JetAlgebra(8), 6)",
}


def end_to_end(repeat):
    rows = []
    for name, stmt in WORKLOADS.items():
        times = {}
        for backend, env in (("python", {"HOPFOID_PURE": "1"}), ("cython", {"HOPFOID_PURE": "0"})):
            code = (f"import time, hopfoid._kernels as k; t = time.perf_counter(); {stmt}; "
                    f"print(k.BACKEND, time.perf_counter() - t)")
            best = None
            for _ in range(repeat):
                out = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env},
                                     capture_output=True, text=True, check=True).stdout.split()
                best = float(out[1]) if best is None else min(best, float(out[1]))
                times[out[0]] = best
        rows.append((name, times.get("python"), times.get("cython")))
    return rows


def show(title, rows, unit, scale):
    print(f"\n{title}")
    print(f"  {'case':40s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, tp, tc in rows:
        sp = f"{tp / tc:7.2f}x" if tc else "     n/a"
        tcs = f"{tc * scale:10.2f}{unit}" if tc else "         n/a"
        print(f"  {name:40s} {tp * scale:10.2f}{unit} {tcs} {sp}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args()
    if ck is None:
        print("compiled kernels not built; only the pure-Python timings are meaningful")
    mic = micro(args.repeat)
    e2e = end_to_end(args.repeat)
    show("kernel micro-benchmarks (per call)", mic, "us", 1e6)
    show("end-to-end workloads", e2e, "s ", 1)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"micro": mic, "end_to_end": e2e}, fh, indent=2)


if __name__ == "__main__":
    main()
