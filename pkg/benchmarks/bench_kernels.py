"""Compare the JIT-compiled kernels against the pure-Python fallback.

Runs each workload in two subprocesses, one with PCGROUPS_NO_NUMBA=1 and
one without, and prints a timing table.  Usage:

    python3 benchmarks/bench_kernels.py

The --worker flag is internal: it runs the workloads in the current
interpreter and emits JSON timings on stdout.
"""

import json
import os
import subprocess
import sys
import time

REPEATS = 3


def _workloads():
    from pcgroups import corpus
    from pcgroups.collector import Group
    from pcgroups.consistency import check_consistency
    from pcgroups.subgroup import agemo, omega, whole

    g625 = Group(corpus.example1(5))
    mat625 = g625.all_elements()

    def orders_625():
        g625.orders_log_batch(mat625)

    def powers_625():
        g625.pows_batch(mat625, 5)

    def omega_agemo_2048():
        g = Group(corpus.example2())
        omega(agemo(whole(g), 1), 2)

    def consistency_81():
        check_consistency(corpus.example1(3))

    return [
        ("element orders, 625 elements", orders_625),
        ("5th powers, 625 elements", powers_625),
        ("omega of agemo, order 2^11 group", omega_agemo_2048),
        ("overlap checks, order 3^4 group", consistency_81),
    ]


def _run_worker():
    import pcgroups

    results = {"using_numba": pcgroups.USING_NUMBA}
    for name, fn in _workloads():
        fn()  # warm caches and, on the JIT path, load compiled kernels
        best = None
        for _ in range(REPEATS):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        results[name] = best
    print(json.dumps(results))


def _spawn(no_numba: bool) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["PCGROUPS_NO_NUMBA"] = "1"
    else:
        env.pop("PCGROUPS_NO_NUMBA", None)
    res = subprocess.run([sys.executable, os.path.abspath(__file__), "--worker"],
                         capture_output=True, text=True, env=env)
    if res.returncode != 0:
        sys.stderr.write(res.stderr)
        raise SystemExit(1)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    if "--worker" in sys.argv:
        _run_worker()
        return
    jit = _spawn(no_numba=False)
    pure = _spawn(no_numba=True)
    if not jit.pop("using_numba"):
        print("warning: JIT path unavailable, both columns use the fallback")
    pure.pop("using_numba")
    print(f"{'workload':<36} {'jit':>10} {'pure':>10} {'speedup':>9}")
    for name in jit:
        a, b = jit[name], pure[name]
        ratio = b / a if a > 0 else float("inf")
        print(f"{name:<36} {a:>9.4f}s {b:>9.4f}s {ratio:>8.1f}x")


if __name__ == "__main__":
    main()
