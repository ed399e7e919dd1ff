"""The arc-cosine kernel, checked the slow way.

Everything exact in this package rests on one closed form: for ReLU
features and x uniform on the unit sphere,

    E_x[relu(b.x) relu(b'.x)] = c_d |b||b'| (sin t + (pi - t) cos t),

with t the angle between b and b' and c_d = 1/(2 pi d).  This script
compares the closed form with plain Monte Carlo over the sphere, then
does the same for the population risk of a small network.

Run:  python demos/01_kernel_and_oracle.py
"""

import math

import numpy as np

from gdtwolayer import KernelContext, NetworkParams, SingleNeuron, build_target, kernel_value
from gdtwolayer.train import population_risk, sample_sphere

rng = np.random.default_rng(0)
d = 10
ctx = KernelContext(d)
X = sample_sphere(400_000, d, rng)

print("kernel: closed form vs Monte Carlo (400k sphere points)")
for angle in (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi):
    b = np.zeros(d)
    b[0] = 1.3
    bp = np.zeros(d)
    bp[0], bp[1] = 0.7 * math.cos(angle), 0.7 * math.sin(angle)
    exact, _ = kernel_value(ctx, b, bp)
    samples = np.maximum(X @ b, 0) * np.maximum(X @ bp, 0)
    mc, se = samples.mean(), samples.std() / math.sqrt(len(samples))
    print(f"  angle {angle:5.3f}:  exact {exact:.6f}   mc {mc:.6f} +- {se:.1e}")

# Population risk of a random network against a single-neuron target.
target = build_target(SingleNeuron(), ctx)
p = NetworkParams(rng.standard_normal(8) / 4, rng.standard_normal((8, d)) / math.sqrt(d))
f = np.maximum(X @ p.B.T, 0) @ p.a
f_star = np.maximum(X[:, 0], 0)
mc = ((f - f_star) ** 2).mean()
print(f"\npopulation risk: exact {population_risk(p, target):.6f}   mc {mc:.6f}")

print("\nThe full battery (20 kernel pairs, 4 targets, finite-difference gradients):")
print("  python -m gdtwolayer oracle --seed 0")
