"""Finite data: how the width changes what gradient descent finds.

With n training points the width m sets the regime.  Narrow networks
(m around n/(d+1)) keep improving their test error after the matching
random-feature model has stalled; near m = n they behave like the
random-feature model.  This script sweeps the width with the experiment
harness, then prints test error, path norm and the phase label of each
cell, exactly as ``gdtwolayer sweep`` and ``gdtwolayer phase`` would.

Run:  python demos/04_widths_and_phases.py [output_dir]
"""

import sys
import tempfile
from pathlib import Path

from gdtwolayer.harness import config_from_dict, median_by, parse_axes, phase_table, read_summary, sweep

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="widths-"))
base = config_from_dict({
    "target": {"kind": "single"},
    "model": {"m": 10, "d": 10},
    "data": {"n": 60, "test_size": 5000, "probe_size": 1000},
    "train": {"learning_rate": 0.05, "max_iters": 40_000, "record_every": 100},
    "baselines": {"run_rfm": True},
})
sweep(base, parse_axes("m=5,15,30,60;seed=0,1"), out)
rows = read_summary(out / "summary.csv")

print(f"n=60, d=10; cells written to {out}\n")
tests = median_by(rows, "m", "final_test_loss")
norms = median_by(rows, "m", "final_path_norm")
print("   m   median test error   median path norm")
for m in tests:
    print(f"{m:4d}   {tests[m]:17.3e}   {norms[m]:16.3f}")
print("\nphase labels (n, d, m, label):")
for row in phase_table(rows):
    print("  ", *row)
