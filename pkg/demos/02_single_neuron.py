"""Learning a single neuron: a few neurons take over.

With a = 0 at the start and the exact population risk, gradient descent
first follows the random-feature model (inner weights frozen).  The
random-feature model stalls at the best fit its fixed features allow,
while the network keeps going: a handful of neurons align with the
target direction and everything else is quenched.

The reference size is m=200, d=100 (a few minutes); the default here is
smaller so the script finishes in well under a minute.

Run:  python demos/02_single_neuron.py [m d iters]
"""

import sys

import numpy as np

from gdtwolayer import (
    InitSpec,
    KernelContext,
    Population,
    SingleNeuron,
    TrainConfig,
    active_set,
    build_target,
    init_params,
    rfm_solve_direct,
    train_loop,
)
from gdtwolayer.train import population_risk

m, d, iters = (int(v) for v in sys.argv[1:4]) if len(sys.argv) > 3 else (60, 30, 20_000)
target = build_target(SingleNeuron(), KernelContext(d))
p0 = init_params(m, d, InitSpec(seed=0))
cfg = TrainConfig(learning_rate=1e-3, max_iters=iters, risk_mode=Population(target), record_every=iters // 10)

p_nn, nn = train_loop(p0, cfg)
_, rf = train_loop(p0, TrainConfig(1e-3, iters, Population(target), record_every=iters // 10, freeze_inner=True))
rf_best = population_risk(p0.replace(a=rfm_solve_direct(p0.B, target)), target)

print(f"m={m}, d={d}; best random-feature risk {rf_best:.3e}\n")
print("    iter      network        RFM   active")
for it, r_nn, r_rf, k in zip(nn.iters, nn.train_loss, rf.train_loss, nn.active_count):
    print(f"{it:8d}   {r_nn:.3e}   {r_rf:.3e}   {k:4d}")

mags = nn.checkpoints[-1].magnitudes
top = np.argsort(mags)[::-1][:5]
print("\nlargest neuron magnitudes:", np.round(mags[top], 4))
print("active set:", active_set(mags))
cos = p_nn.B[top[0]] / np.linalg.norm(p_nn.B[top[0]])
print(f"largest neuron's direction . e_1 = {cos[0]:.4f}")
