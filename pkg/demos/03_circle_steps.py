"""The circle neuron: plateaus, activations and the effective dynamics.

The circle target averages ReLU neurons over a circle in the first two
coordinates, so no finite network represents it exactly.  Gradient
descent lowers the risk in steps: a plateau while a few active neurons
fit what they can, then a drop when a background neuron grows and joins
them.  The reduced model (active neurons follow GD, background
coefficients solve their least-squares problem instantly) tracks the
full run between the drops.

At m=d=100 the first plateau is reached after about 10k iterations but
the next activation takes several hundred thousand, so this script runs
the first phase only (a couple of minutes).  To see the later steps,
point it at a finished harness run of the circle target, for example
one written by ``python tests/acceptance_runs.py c4``:

Run:  python demos/03_circle_steps.py [run_dir]
"""

import sys
from pathlib import Path

import numpy as np

from gdtwolayer import (
    Adaptive,
    CircleNeuron,
    InitSpec,
    KernelContext,
    Population,
    TrainConfig,
    build_target,
    detect_steps,
    init_params,
    run_effective,
    train_loop,
)
from gdtwolayer.harness import read_trace


def compare(full, eff):
    eff_at = dict(zip(eff.iters, eff.train_loss))
    rel = np.array([abs(eff_at[i] - r) / r for i, r in zip(full.iters, full.train_loss) if i in eff_at])
    print(f"\neffective vs full risk: median relative gap {np.median(rel):.2%}, "
          f"{np.mean(rel <= 0.15):.0%} of records within 15%")


if len(sys.argv) > 1:
    run = Path(sys.argv[1])
    trace = read_trace(run / "trace.csv")
    eff = read_trace(run / "effective_trace.csv") if (run / "effective_trace.csv").exists() else None
else:
    m = d = 100
    target = build_target(CircleNeuron(), KernelContext(d))
    p0 = init_params(m, d, InitSpec(seed=0))
    cfg = TrainConfig(learning_rate=0.005, max_iters=40_000, risk_mode=Population(target), record_every=200)
    _, trace = train_loop(p0, cfg)
    eff = run_effective(p0, target, cfg, Adaptive(200)).trace

steps = detect_steps(trace.train_loss, trace.iters)
print(f"{trace.iters[-1]} iterations; final risk {trace.train_loss[-1]:.3e}, "
      f"{trace.active_count[-1]} active neurons")
for seg in steps.segments:
    print(f"  {seg.kind:8s} {seg.start_iter:9.0f} .. {seg.end_iter:9.0f}   log-risk change {seg.log_change:+.2f}")
print(f"drops after the first plateau: {len(steps.drops_after_first_phase())}")

# active-neuron count at every change along the run
changes = [(i, k) for j, (i, k) in enumerate(zip(trace.iters, trace.active_count))
           if j == 0 or k != trace.active_count[j - 1]]
print("active count changes:", ", ".join(f"{k} at {i}" for i, k in changes[:12]))
if eff is not None:
    compare(trace, eff)
