"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--sweep]

Per-kernel timings use timeit on fixed inputs. ``--sweep`` also times a
congruence sweep end to end under each backend (the backend is chosen at
import, so each run is a subprocess).
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from fubini import _pykernels

try:
    from fubini import _ckernels
except ImportError:
    _ckernels = None

P = 2**31 - 1


def _inputs(size, seed=0):
    rng = random.Random(seed)
    big_a = [rng.randint(-(10**40), 10**40) for _ in range(size)]
    big_b = [rng.randint(-(10**40), 10**40) for _ in range(size)]
    mod_a = [rng.randrange(P) for _ in range(size)]
    mod_b = [rng.randrange(P) for _ in range(size)]
    return big_a, big_b, mod_a, mod_b


def _cases(impl, size):
    big_a, big_b, mod_a, mod_b = _inputs(size)
    acc = [0] * size
    return {
        "convolve (big ints)": lambda: impl.convolve(big_a, big_b),
        "convolve_mod": lambda: impl.convolve_mod(mod_a, mod_b, P),
        "axpy (big ints)": lambda: impl.axpy(acc, 7, big_b),
        "horner_mod": lambda: impl.horner_mod(mod_a, 12345, P),
    }


def bench_kernels(sizes, repeat):
    print(f"{'kernel':<22}{'size':>6}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for size in sizes:
        py = _cases(_pykernels, size)
        cy = _cases(_ckernels, size) if _ckernels else {}
        number = max(1, 2000 // size)
        for name, fn in py.items():
            t_py = min(timeit.repeat(fn, number=number, repeat=repeat)) / number * 1e3
            if name in cy:
                t_cy = min(timeit.repeat(cy[name], number=number, repeat=repeat)) / number * 1e3
                speed = f"{t_py / t_cy:>9.1f}x"
                cy_txt = f"{t_cy:>14.4f}"
            else:
                cy_txt, speed = f"{'n/a':>14}", f"{'':>10}"
            print(f"{name:<22}{size:>6}{t_py:>14.4f}{cy_txt}{speed}")


def bench_sweep():
    args = [
        sys.executable, "-m", "fubini", "verify", "--checks", "C3,Fermat-prod,T1,T2,T3",
        "--primes", "5,7,11,13",
    ]
    for label, env_extra in (("python", {"FUBINI_PURE_PYTHON": "1"}), ("cython", {})):
        env = dict(os.environ, **env_extra)
        start = time.perf_counter()
        proc = subprocess.run(args, env=env, capture_output=True, check=False)
        elapsed = time.perf_counter() - start
        print(f"sweep [{label}]: {elapsed:.2f}s exit={proc.returncode} bytes={len(proc.stdout)}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sizes", default="8,32,128")
    parser.add_argument("--sweep", action="store_true")
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; timing the pure-Python backend only")
    bench_kernels([int(s) for s in args.sizes.split(",")], args.repeat)
    if args.sweep:
        bench_sweep()


if __name__ == "__main__":
    main()
