"""Mean-field scaling is conventional scaling in slow motion.

Divide the output by m and the gradient flow changes only by a rescaling
of parameters and time: if (a, B) follows the mean-field flow from
(a0, B0), then (a, B)/sqrt(m) follows the conventional flow from
(a0, B0)/sqrt(m) at time t/m.  Discretized with a finite step both runs
pick up an O(step) error, so halving the step should roughly halve the
measured discrepancy.

Run:  python demos/05_mean_field.py
"""

import math

import numpy as np

from gdtwolayer import KernelContext, NetworkParams, ScalingMode, SingleNeuron, build_target, evaluate_network
from gdtwolayer import make_dataset, mf_correspondence

d, m, n = 10, 50, 100
target = build_target(SingleNeuron(), KernelContext(d))
data = make_dataset(target, n, seed=0)
rng = np.random.default_rng(0)
a0 = rng.standard_normal(m)
B0 = rng.standard_normal((m, d)) / math.sqrt(d)

mf = NetworkParams(a0, B0, ScalingMode.MEAN_FIELD)
conv = NetworkParams(a0 / math.sqrt(m), B0 / math.sqrt(m))
gap = np.max(np.abs(evaluate_network(mf, data.X) - evaluate_network(conv, data.X)))
print(f"t=0: largest difference between the two functions {gap:.1e}")

print("\n  step    discrepancy   ratio to next")
prev = None
for eta, iters in ((0.04, 1000), (0.02, 2000), (0.01, 4000)):
    disc = mf_correspondence(a0, B0, m, eta, iters, data, record_every=10)
    if prev is not None:
        print(f"{prev[0]:6.3f}   {prev[1]:.3e}   {prev[1] / disc:.2f}")
    prev = (eta, disc)
print(f"{prev[0]:6.3f}   {prev[1]:.3e}")
