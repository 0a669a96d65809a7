"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on both backends, checks that the results are bit-for-bit
equal, and prints one row per case with the speedup.
"""

import argparse
import importlib
import math
import os
import subprocess
import sys
import timeit

from kurepa import _kernels_py


def _cases(k):
    logc = math.log(0.75)
    return {
        "lanczos_gamma x1000": lambda: [k.lanczos_gamma(0.5 + 0.03 * i, 0.01 * i) for i in range(1000)],
        "gk15 panel x200": lambda: [k.gk15(k.KIND_K, 3.7, 1.2, 0.75, logc, 1.25, 11.25) for _ in range(200)],
        "adaptive K(7.3+2i), [1.25, 60]": lambda: k.adaptive_gk(k.KIND_K, 7.3, 2.0, 0.75, 1.25, 60.0,
                                                                1e-13 * 5000.0, 2000, 6),
        "adaptive series piece": lambda: k.adaptive_gk(k.KIND_K_SERIES, 7.3, 2.0, 0.75, 0.75, 1.25,
                                                       1e-13 * 5000.0, 2000, 1),
        "adaptive near-zero piece": lambda: k.adaptive_gk(k.KIND_K_ZERO, 0.3, -4.0, 0.75, 0.0, 50.0,
                                                          1e-13, 2000, 1),
        "ratio_forward 1e5 steps": lambda: k.ratio_forward(0.4, 0.5, 100000),
    }


def _full_evaluation(pure):
    # a fresh interpreter picks the backend at import time
    env = dict(os.environ)
    env.pop("KUREPA_PURE_PYTHON", None)
    if pure:
        env["KUREPA_PURE_PYTHON"] = "1"
    code = ("import timeit, kurepa;"
            "zs=[complex(0.1+0.37*i, 0.2*i-2) for i in range(40)];"
            "print(min(timeit.repeat(lambda: [kurepa.kurepa(z) for z in zs], number=1, repeat=3)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    try:
        ck = importlib.import_module("kurepa._ckernels")
    except ImportError:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return 1

    py_cases, c_cases = _cases(_kernels_py), _cases(ck)
    print(f"{'case':34s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}  identical")
    for name in py_cases:
        t_py = min(timeit.repeat(py_cases[name], number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(c_cases[name], number=1, repeat=args.repeat))
        same = py_cases[name]() == c_cases[name]()
        print(f"{name:34s} {t_py * 1e3:12.3f} {t_c * 1e3:12.3f} {t_py / t_c:8.1f}  {same}")

    t_py = _full_evaluation(pure=True)
    t_c = _full_evaluation(pure=False)
    print(f"{'kurepa() at 40 complex points':34s} {t_py * 1e3:12.3f} {t_c * 1e3:12.3f} {t_py / t_c:8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
