"""Compare the compiled kernels with the pure-Python twin.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel call over a full exhaustive scope and checks that
both backends return identical results.
"""

import argparse
import time

from roughring import _kernels, ring_zmod
from roughring.lawcheck import _map_rows, count_maps

buf = _kernels.as_buffer


def cases():
    flat3 = buf([v for row in _map_rows(3, 3, True) for v in row])
    n3 = count_maps(3, 3, True)
    flat2 = buf([v for row in _map_rows(2, 3, True) for v in row])
    n2 = count_maps(2, 3, True)
    R = ring_zmod(24)
    add, mul = buf(R._flat_add), buf(R._flat_mul)
    blocks = buf([x % 4 for x in range(24)])
    return [
        ("scan_single P21-4, |X|=|Y|=3", "scan_single", (flat3, n3, 3, 8, _kernels.P21_4)),
        ("scan_pair T21-1, |X|=|Y|=3", "scan_pair", (flat3, n3, 3, 8, _kernels.T21_1, True)),
        ("scan_pair T21-2, |X|=2 |Y|=3", "scan_pair", (flat2, n2, 2, 8, _kernels.T21_2, True)),
        ("approx_tables, |X|=|Y|=3", "approx_tables", (flat3, n3, 3, 8)),
        ("ring_violation Z24", "ring_violation", (add, mul, 24, 0)),
        ("congruence_violation Z24 mod 4", "congruence_violation", (add, mul, 24, blocks)),
    ]


def best_of(fn, args, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = _kernels.get_backend("python")
    try:
        cy = _kernels.get_backend("cython")
    except ImportError:
        print("compiled extension not built; nothing to compare")
        return 1
    print(f"{'kernel':36s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for label, name, call_args in cases():
        tp, rp = best_of(getattr(py, name), call_args, args.repeat)
        tc, rc = best_of(getattr(cy, name), call_args, args.repeat)
        same = (list(map(list, rp)) == list(map(list, rc))) if name == "approx_tables" else rp == rc
        if not same:
            print(f"{label}: backends disagree")
            return 1
        print(f"{label:36s} {tp:10.4f} {tc:10.4f} {tp / tc:7.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
