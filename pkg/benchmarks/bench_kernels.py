"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qcbounds import _pykernels

try:
    from qcbounds import _kernels
except ImportError:
    _kernels = None


def bench(label, fn_py, fn_c, repeat):
    t_py = min(timeit.repeat(fn_py, number=1, repeat=repeat))
    line = f"{label:<38} python {t_py * 1e3:9.2f} ms"
    if fn_c is not None:
        t_c = min(timeit.repeat(fn_c, number=1, repeat=repeat))
        line += f"   compiled {t_c * 1e3:9.2f} ms   x{t_py / t_c:6.1f}"
    print(line)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)

    for dim, nbits in ((14, 48), (18, 48), (20, 96), (20, 400)):
        # heavy random vectors keep the early exit at weight 1 from triggering
        basis = [rng.getrandbits(nbits) | 1 << (nbits - 1) for _ in range(dim)]
        bench(
            f"gray sweep dim={dim} N={nbits}",
            lambda: _pykernels.gray_min_weight(basis, nbits),
            (lambda: _kernels.gray_min_weight(basis, nbits)) if _kernels else None,
            args.repeat,
        )

    for s in (16, 64, 256):
        pairs = [(rng.getrandbits(s), rng.getrandbits(s)) for _ in range(20000)]

        def run(mul, pairs=pairs, s=s):
            for a, b in pairs:
                mul(a, b, s)

        bench(
            f"cyclic_mul x20000 s={s}",
            lambda: run(_pykernels.cyclic_mul),
            (lambda: run(_kernels.cyclic_mul)) if _kernels else None,
            args.repeat,
        )

    # whole pipeline: exact distance plus all bounds, backend chosen at import
    script = (
        "import random, time\n"
        "from qcbounds import BACKEND\n"
        "from qcbounds.bounds import summarize\n"
        "from qcbounds.code import expand, random_exponent_matrix\n"
        "from qcbounds.oracle import min_distance_exhaustive\n"
        "rng = random.Random(5)\n"
        "ems = [random_exponent_matrix(rng, 3, 6, 6) for _ in range(5)]\n"
        "t0 = time.perf_counter()\n"
        "for em in ems:\n"
        "    min_distance_exhaustive(expand(em)); summarize(em)\n"
        "print(BACKEND, time.perf_counter() - t0)\n"
    )
    for pure in (True, False):
        env = dict(os.environ)
        env.pop("QCBOUNDS_PURE_PYTHON", None)
        if pure:
            env["QCBOUNDS_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True)
        backend, secs = out.stdout.split()
        print(f"{'pipeline 5 codes m=3 n=6 s=6':<38} {backend:<8} {float(secs) * 1e3:9.2f} ms")


if __name__ == "__main__":
    main()
