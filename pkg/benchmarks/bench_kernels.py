"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from detalign import _kernels
from detalign.analysis import EXHAUSTIVE, codec_channel, verify_zero_error
from detalign.analysis.bounds import check_theorem1
from detalign.codecs import model1_derive
from detalign.polynomial import eval_grid, is_functionally_zero, parse_poly

H = parse_poly("X1^3 + X2^2*X3^2", 3)


def _grid():
    eval_grid(parse_poly("3*X1^5 + X1*X2^2*X3 + 7*X3^4", 3), 97)


def _primes():
    return sum(_kernels.is_prime_u64(n) for n in range(10**12, 10**12 + 20000))


def _verify():
    codec = model1_derive(1, 3, H, mode="repaired")
    verify_zero_error(codec_channel(codec, "mod_q"), codec, EXHAUSTIVE)


def _fzero():
    is_functionally_zero(parse_poly("X1^97*X2 - X1*X2^97 + X3^2", 3), 97)


def _cond2():
    check_theorem1(parse_poly("X1 + X2^2 + X3^3 + X4", 4), 4, 13)


CASES = {
    "eval_grid q=97 K=3": _grid,
    "is_prime 20k near 1e12": _primes,
    "verify Model I d=3 mod_q": _verify,
    "functional zero q=97": _fzero,
    "condition 2 K=4 probe 13": _cond2,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timing repeats per case (best is reported)")
    args = ap.parse_args()
    backends = _kernels.available_backends()
    print(f"{'case':28s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in CASES.items():
        times = []
        for b in backends:
            prev = _kernels.use_backend(b)
            try:
                times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
            finally:
                _kernels.use_backend(prev)
        line = f"{name:28s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) > 1:
            line += f"{times[-1] / times[0]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
