"""Run the cross-validation suites at demo scale.

Each suite pits two independently implemented routes against each other
and reports disagreements; the CLI exposes the same suites via
`tropcheck oracle <name> --seed S --count N`.
"""

import time

from tropcheck.oracles import SUITES

for name in sorted(SUITES):
    started = time.perf_counter()
    summary = SUITES[name](seed=2024, count=50)
    elapsed = time.perf_counter() - started
    status = "ok" if not summary["failures"] else f"{len(summary['failures'])} FAILURES"
    print(f"{name:26s} {summary['instances']:4d} instances  {status}  ({elapsed:.2f}s)")
