"""Per-configuration cost of the batched reduction, with and without Horn.

Absolute numbers depend on the machine; the ratio is what to compare.

Run with ``python3 demos/benchmark.py [batch_size]``.
"""

import sys

from p4p.bench import run_bench

size = int(sys.argv[1]) if len(sys.argv) > 1 else 100000
print(run_bench(batch_size=size, repeats=5).summary())
