"""Benchmark the compiled partition kernels against the pure-Python fallback.

Micro-benchmarks call both backend modules directly in one process;
the end-to-end rows run congruence enumeration in subprocesses so each
run picks its backend at import (PATHCONG_PURE=1 forces the fallback).

Run:  python3 benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import time

from pathcong import Quiver, build_semigroup
from pathcong._kernels import _pykern

try:
    from pathcong._kernels import _ckern
except ImportError:
    _ckern = None

PARALLEL5 = Quiver(["1", "2"], [(f"a{i}", "1", "2") for i in range(1, 6)])
CHAIN4 = Quiver(
    ["1", "2", "3", "4"],
    [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3"), ("d", "2", "3"), ("e", "3", "4")],
)
BRUTE = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")])


def timeit(fn, repeat):
    start = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - start) / repeat


def micro_rows():
    s = build_semigroup(CHAIN4)
    mult, n = s.table_bytes, s.n
    p = _pykern.principal_labels(mult, n, 5, 6)
    q = _pykern.principal_labels(mult, n, 7, 0)
    sb = build_semigroup(BRUTE)
    rows = [
        ("join_labels", lambda k: (lambda: k.join_labels(p, q)), 20000),
        ("meet_labels", lambda k: (lambda: k.meet_labels(p, q)), 20000),
        ("principal_labels", lambda k: (lambda: k.principal_labels(mult, n, 5, 6)), 2000),
        ("is_congruence_labels", lambda k: (lambda: k.is_congruence_labels(p, mult, n)), 5000),
        (
            "congruences_bruteforce(n=9)",
            lambda k: (lambda: k.congruences_bruteforce(sb.table_bytes, sb.n)),
            3,
        ),
    ]
    print(f"kernel micro-benchmarks (semigroup n={n})")
    header = f"{'kernel':<28}{'pure':>12}{'cython':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, make, repeat in rows:
        pure = timeit(make(_pykern), repeat)
        if _ckern is None:
            print(f"{name:<28}{pure * 1e6:>10.1f}us{'n/a':>12}{'':>10}")
            continue
        comp = timeit(make(_ckern), repeat)
        print(f"{name:<28}{pure * 1e6:>10.1f}us{comp * 1e6:>10.1f}us{pure / comp:>9.1f}x")


END_TO_END = """
import time
import pathcong as pc
q = pc.Quiver(["1", "2"], [(f"a{i}", "1", "2") for i in range(1, 6)])
s = pc.build_semigroup(q)
start = time.perf_counter()
congs = pc.enumerate_congruences(s)
brute = pc.enumerate_congruences_bruteforce(s)
assert congs == brute and len(congs) == 206
print(f"{pc.KERNEL_BACKEND}: {time.perf_counter() - start:.3f}s "
      f"({len(congs)} congruences, enumeration plus brute force)")
"""


def end_to_end():
    print()
    print("end-to-end: enumerate + brute-force all congruences, 5 parallel arrows")
    sys.stdout.flush()
    for env_extra in ({"PATHCONG_PURE": "1"}, {}):
        env = dict(os.environ)
        env.pop("PATHCONG_PURE", None)
        env.update(env_extra)
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)


if __name__ == "__main__":
    micro_rows()
    end_to_end()
