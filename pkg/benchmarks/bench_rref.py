#!/usr/bin/env python3
"""Compare the compiled elimination kernel against the pure-Python one.

Workloads: dense random rational matrices, the assembled degree-2
differential operator of the matrix-algebra fixture (the realistic hot
case), and random prime-field matrices. Outputs are checked identical
before timing; the echelon form is unique so the kernels must agree
exactly.

Run:  python3 benchmarks/bench_rref.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

from moddef import _kernel_py

try:
    from moddef import _kernel_c
except ImportError:
    _kernel_c = None


def random_rational_rows(rng, nrows, ncols, scale=9):
    return [
        [Fraction(rng.randint(-scale, scale), rng.choice((1, 1, 2, 3))) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def random_mod_rows(rng, nrows, ncols, p):
    return [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]


def fixture_differential_rows():
    from moddef.cochain import differential_matrix
    from moddef.fixtures import fixture_b

    _, mod = fixture_b()
    return [row[:] for row in differential_matrix(mod, 2).data]


def best_of(repeat, fn):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None or dt < best else best
    return best, out


def bench(name, rows, ncols, repeat, mod_p=None):
    def run(kernel):
        if mod_p is None:
            return lambda: kernel.rref_rational([r[:] for r in rows], ncols)
        return lambda: kernel.rref_mod([r[:] for r in rows], ncols, mod_p)

    t_py, out_py = best_of(repeat, run(_kernel_py))
    line = f"{name:<34} python {t_py * 1e3:9.2f} ms"
    if _kernel_c is not None:
        t_c, out_c = best_of(repeat, run(_kernel_c))
        assert out_c == out_py, f"kernel outputs differ on {name}"
        line += f"   compiled {t_c * 1e3:9.2f} ms   speedup {t_py / t_c:6.2f}x"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best kept)")
    args = parser.parse_args()

    if _kernel_c is None:
        print("compiled kernel not built; timing the pure kernel only\n")

    rng = random.Random(12345)
    for n in (20, 40, 60):
        rows = random_rational_rows(rng, n, n + n // 2)
        bench(f"rational dense {n}x{n + n // 2}", rows, n + n // 2, args.repeat)

    rows = fixture_differential_rows()
    bench(f"degree-2 operator {len(rows)}x{len(rows[0])}", rows, len(rows[0]), args.repeat)

    p = 10007
    for n in (60, 120):
        rows = random_mod_rows(rng, n, n + 20, p)
        bench(f"mod {p} dense {n}x{n + 20}", rows, n + 20, args.repeat, mod_p=p)

    big = 2**61 - 1
    rows = random_mod_rows(rng, 40, 50, big)
    bench("mod 2^61-1 dense 40x50", rows, 50, args.repeat, mod_p=big)


if __name__ == "__main__":
    main()
