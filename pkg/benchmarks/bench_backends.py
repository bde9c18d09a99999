"""Compare the numba and plain numpy backends on annealing throughput.

Each backend runs in its own interpreter because the choice is fixed at
import time.  For the same seed both must make the same accept/improve
decisions at the same calls; values agree to 1e-5 (pow() differs in the last
ulp between LLVM and libm, and a wrapped heavy-tailed step amplifies that).

    python benchmarks/bench_backends.py [--calls 20000] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

CASES = [
    ("jch", 6, 1, "c1", "c6"),
    ("jch", 4, 2, "c1 c1", "c4 c4"),
    ("pam", 4, 2, "up@c1 down@c1", "up@c4 down@c4"),
]

CHILD = r"""
import json, sys, time
from qstmc._accel import BACKEND
from qstmc.anneal import AnnealConfig, make_objective, run
kind, n, n_exc, a, b, calls, repeat = json.loads(sys.argv[1])
obj = make_objective(kind, n, n_exc, [(a, b)])
cfg = AnnealConfig(max_function_calls=calls)
run(obj, AnnealConfig(max_function_calls=10), seed=0)  # compile outside the timing
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    rec = run(obj, cfg, seed=1)
    best = min(best, time.perf_counter() - t0)
print(json.dumps({"backend": BACKEND, "seconds": best, "dim": obj.basis.dim,
                  "record": rec.to_dict()}))
"""


def measure(backend, case, calls, repeat):
    env = dict(os.environ, QSTMC_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", CHILD, json.dumps([*case, calls, repeat])],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def agree(a, b):
    if a["function_calls_used"] != b["function_calls_used"]:
        return False
    if a["threshold_log"] != b["threshold_log"]:
        return False
    if [r[0] for r in a["trace"]] != [r[0] for r in b["trace"]]:
        return False
    return (abs(a["best_fidelity"] - b["best_fidelity"]) <= 1e-5
            and max(abs(x - y) for x, y in zip(a["best_params"], b["best_params"])) <= 1e-5)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--calls", type=int, default=20000)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    print(f"{'case':<22}{'dim':>5}{'numba calls/s':>16}{'numpy calls/s':>16}{'speedup':>9}  same")
    ok = True
    for case in CASES:
        nb = measure("numba", case, args.calls, args.repeat)
        npy = measure("numpy", case, args.calls, args.repeat)
        same = agree(nb["record"], npy["record"])
        ok &= same
        label = f"{case[0]} N={case[1]} n_exc={case[2]}"
        print(f"{label:<22}{nb['dim']:>5}{args.calls / nb['seconds']:>16.0f}"
              f"{args.calls / npy['seconds']:>16.0f}{npy['seconds'] / nb['seconds']:>9.1f}  {same}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
