"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from mobilehook import _pykernels
from mobilehook.mobile import MobilePoset

try:
    from mobilehook import _kernels
except ImportError:
    _kernels = None

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "mobilehook" / "fixtures"


PP_DEGREE = 24


def load(name):
    return MobilePoset.from_json(json.loads((FIXTURES / f"{name}.json").read_text())).to_poset()


def cases():
    for name in ("example_inversion", "example_major"):
        P = load(name)
        yield f"extensions {name} (n={P.n})", "ext", P
    yield f"p-partitions example_inversion N={PP_DEGREE}", "pp", load("example_inversion")


def run(mod, kind, P, N=PP_DEGREE):
    if kind == "ext":
        return mod.extension_histograms(P.below_masks(), list(P.labels), -1)
    order = list(reversed(P.topological_order()))
    return mod.ppartition_counts(order, P.upper_covers(), list(P.labels), N, -1)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':45s} {'python [s]':>11s} {'compiled [s]':>13s} {'speedup':>8s}")
    for label, kind, P in cases():
        t_py, out_py = best_of(lambda: run(_pykernels, kind, P), args.repeat)
        if _kernels is None:
            print(f"{label:45s} {t_py:11.4f} {'n/a':>13s} {'n/a':>8s}")
            continue
        t_c, out_c = best_of(lambda: run(_kernels, kind, P), args.repeat)
        flag = "" if out_py == out_c else "  MISMATCH"
        print(f"{label:45s} {t_py:11.4f} {t_c:13.5f} {t_py / t_c:7.0f}x{flag}")


if __name__ == "__main__":
    main()
