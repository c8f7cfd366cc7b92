"""Compiled vs pure-Python bracket kernels.

    python3 benchmarks/bench_bracket.py [--max-crossings 24] [--repeat 3]

Times the tangle DP compiled and in pure Python on the same braid closures,
with compiled full state enumeration alongside while it stays affordable.
Results of all kernels are compared before a row is printed.
"""
import argparse
import random
import sys
import timeit

from knotiu import bracket
from knotiu.braids import braid_closure

STATES_MAX = 18


def cases(max_c: int):
    rng = random.Random(0)
    for c in range(4, max_c + 1, 4):
        yield f"T(2,{c})", braid_closure([1] * c)
        word = [rng.choice([1, -1]) * rng.randint(1, 3) for _ in range(c)]
        yield f"4-braid, c={c}", braid_closure(word, 4)
        word = [rng.choice([1, -1]) * rng.randint(1, 5) for _ in range(c)]
        yield f"6-braid, c={c}", braid_closure(word, 6)


def best_ms(fn, d, repeat: int) -> float:
    return 1e3 * min(timeit.repeat(lambda: fn(d), number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=24)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    compiled = bracket.BACKEND == "cython"
    if not compiled:
        print("compiled kernel not built; timing the pure-Python DP only", file=sys.stderr)
    print(f"backend picked at import: {bracket.BACKEND}")
    print(f"{'diagram':<18}{'c':>4}{'dp cython':>12}{'dp python':>12}{'speedup':>9}{'states cython':>15}")
    for name, d in cases(min(args.max_crossings, bracket.EXT_MAX_CROSSINGS)):
        ref = bracket.bracket_dp(d)
        t_py = best_ms(bracket.bracket_dp, d, args.repeat)
        if not compiled:
            print(f"{name:<18}{d.c:>4}{'-':>12}{t_py:>12.2f}{'-':>9}{'-':>15}")
            continue
        if bracket.bracket_dp_ext(d) != ref:
            print(f"{name}: compiled DP disagrees", file=sys.stderr)
            return 1
        t_cy = best_ms(bracket.bracket_dp_ext, d, args.repeat)
        states = "-"
        if d.c <= STATES_MAX:
            if bracket.bracket_states(d) != ref:
                print(f"{name}: state enumeration disagrees", file=sys.stderr)
                return 1
            states = f"{best_ms(bracket.bracket_states, d, args.repeat):.2f}"
        print(f"{name:<18}{d.c:>4}{t_cy:>12.2f}{t_py:>12.2f}{t_py / t_cy:>9.1f}{states:>15}")
    print("times in ms, best of --repeat runs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
