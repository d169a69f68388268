"""Compare the JIT-compiled kernels against the plain-numpy fallback.

Each workload runs in a fresh subprocess with SUPERSIMPLE_BACKEND set,
so both variants execute exactly the same module-level code paths the
package uses in production.  JIT compilation happens inside a warm-up
call and is excluded from the timings.

Usage: python3 benchmarks/bench_backends.py [--repeat N] [--json]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from supersimple._kernels import active_backend, warm_up

warm_up()

from supersimple.designs import builtin
from supersimple.enumeration import canonical_form, count_designs, enumerate_labeled_designs

WORKLOADS = {
    "enumerate(8,3)": lambda: count_designs(8, 3),
    "enumerate(9,3)": lambda: count_designs(9, 3),
    "labeled(8,3)": lambda: len(enumerate_labeled_designs(8, 3)),
    "canonical(pg3)": lambda: canonical_form(builtin("pg3")).lines[0],
    "canonical(paper10)": lambda: canonical_form(builtin("paper10")).lines[0],
}

repeat = int(sys.argv[1])
out = {"backend": active_backend(), "timings": {}}
for name, fn in WORKLOADS.items():
    fn()  # one untimed round so caches and allocations settle
    best = min(
        (lambda t0: (fn(), time.perf_counter() - t0)[1])(time.perf_counter())
        for _ in range(repeat)
    )
    out["timings"][name] = best
print(json.dumps(out))
"""


def run_backend(backend: str, repeat: int) -> dict:
    env = dict(os.environ, SUPERSIMPLE_BACKEND=backend)
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat)],
                          env=env, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit("backend %r failed" % backend)
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed rounds per workload; best is reported")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    results = {b: run_backend(b, args.repeat) for b in ("python", "numba")}
    if args.json:
        print(json.dumps(results, indent=2))
        return 0

    names = list(results["python"]["timings"])
    width = max(len(n) for n in names)
    print("%-*s %12s %12s %9s" % (width, "workload", "python (s)", "numba (s)", "speedup"))
    for name in names:
        py = results["python"]["timings"][name]
        nb = results["numba"]["timings"][name]
        print("%-*s %12.4f %12.4f %8.1fx" % (width, name, py, nb, py / nb))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
