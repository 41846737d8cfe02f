"""Time the numba and numpy path-walk backends on every family.

    python benchmarks/bench_kernels.py [--repeat 3]

The first numba call per process includes JIT loading and is reported
separately.
"""
import argparse
import time

from humplab import _kernels
from humplab.paths import DEFAULT_CAPS, PathFamily


def bench(fam, backend, repeat):
    args = (fam.length, fam.kind.allows_flat, fam.kind.is_super, fam.checkpoint)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = _kernels.walk(*args, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()

    if _kernels.HAVE_NUMBA:
        t0 = time.perf_counter()
        _kernels.walk(2, True, False, -1, backend="numba")
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.3f}s")

    print(f"{'family':>13} {'n':>3} {'paths':>10} {'numba s':>9} {'numpy s':>9} {'ratio':>7}")
    for kind, n in DEFAULT_CAPS.items():
        fam = PathFamily(kind, n)
        row = {}
        for backend in _kernels.BACKENDS:
            if backend == "numba" and not _kernels.HAVE_NUMBA:
                continue
            row[backend] = bench(fam, backend, opts.repeat)
        if len({r for r, _ in row.values()}) != 1:
            raise SystemExit(f"backends disagree on {kind.value} {n}: {row}")
        (count, _), t_np = row["numpy"]
        t_nb = row["numba"][1] if "numba" in row else float("nan")
        print(f"{kind.value:>13} {n:>3} {count:>10} {t_nb:>9.4f} {t_np:>9.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
