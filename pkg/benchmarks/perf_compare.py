"""Compare the numba-compiled kernels against the pure numpy fallback.

Runs each workload twice in subprocesses: once as-is and once with
QCOREMAP_NO_NUMBA=1. Results are identical by construction (see
tests/test_kernels.py); this script measures the speed difference.

Usage: python benchmarks/perf_compare.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "hungarian_32x32_x2000": """
import numpy as np
from qcoremap import solve
rng = np.random.default_rng(0)
mats = [rng.uniform(0, 4, size=(32, 32)) for _ in range(2000)]
solve(mats[0])  # warm-up / compile
start = time.perf_counter()
total = 0.0
for m in mats:
    total += solve(m).total_cost
elapsed = time.perf_counter() - start
""",
    "fgp_qft120_on_12x10": """
from qcoremap import Architecture, count_communications, fgp_map_circuit, gen_qft
circuit = gen_qft(120)
arch = Architecture(12, 10)
fgp_map_circuit(circuit, arch)  # warm-up / compile
start = time.perf_counter()
total = count_communications(fgp_map_circuit(circuit, arch))
elapsed = time.perf_counter() - start
""",
    "hqa_qv120_on_12x10": """
from qcoremap import Architecture, count_communications, gen_quantum_volume, map_circuit
circuit = gen_quantum_volume(120, 60, 1)
arch = Architecture(12, 10)
map_circuit(circuit, arch)  # warm-up / compile
start = time.perf_counter()
total = count_communications(map_circuit(circuit, arch))
elapsed = time.perf_counter() - start
""",
}

_RUNNER = """
import json, time
{body}
print(json.dumps({{"elapsed": elapsed, "total": total}}))
"""


def run_workload(body: str, disable_numba: bool) -> dict:
    env = dict(os.environ)
    if disable_numba:
        env["QCOREMAP_NO_NUMBA"] = "1"
    else:
        env.pop("QCOREMAP_NO_NUMBA", None)
    proc = subprocess.run(
        [sys.executable, "-c", _RUNNER.format(body=body)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1, help="repetitions per cell, best kept")
    args = parser.parse_args()

    print(f"{'workload':<26} {'numba (s)':>10} {'numpy (s)':>10} {'speedup':>8}  result")
    print("-" * 72)
    for name, body in WORKLOADS.items():
        fast = min(run_workload(body, False)["elapsed"] for _ in range(args.repeat))
        slow_result = run_workload(body, True)
        slow = slow_result["elapsed"]
        for _ in range(args.repeat - 1):
            slow = min(slow, run_workload(body, True)["elapsed"])
        check = run_workload(body, False)
        match = "match" if check["total"] == slow_result["total"] else "MISMATCH"
        print(f"{name:<26} {fast:>10.3f} {slow:>10.3f} {slow / fast:>7.1f}x  {match}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
