"""
Z1-eigenpairs four ways
=======================

(mu, x) with T x^(m-1) = mu x and ||x||_1 = 1.  The power iteration finds the
dominant positive pair; three independent routes cross-check it and reach
pairs it cannot see.
"""

import math

import numpy as np

from hilbert_tensors import (
    HilbertTensor,
    SolverConfig,
    matrix_eig_oracle,
    residual,
    simplex_grid_oracle,
    z1_newton_multistart,
    z1_power_iterate,
)

# 1. power iteration on the 2x2 Hilbert matrix; the exact answer is (4+sqrt(13))/6
t = HilbertTensor(2, 2, 1.0)
pair = z1_power_iterate(t)
print(f"power    : mu={pair.mu:.15f}  residual={pair.residual:.1e}  iters={pair.iterations}")
print(f"exact    : mu={(4 + math.sqrt(13)) / 6:.15f}")

# 2. the Jacobi matrix oracle recovers the whole spectrum for order 2
for w, v in matrix_eig_oracle(t):
    print(f"jacobi   : mu={w:.15f}  x={np.round(v, 6)}")

# 3. grid search over the l1 sphere also sees the subdominant pair
for p in simplex_grid_oracle(t, resolution=4000):
    print(f"grid     : mu={p.mu:.10f}  residual={p.residual:.1e}")

# 4. a third-order tensor: power and grid agree
t3 = HilbertTensor(3, 2, 1.0)
dom = z1_power_iterate(t3)
best = max(simplex_grid_oracle(t3, resolution=4000), key=lambda p: p.mu)
print(f"order 3  : power mu={dom.mu:.10f}  grid mu={best.mu:.10f}")

# negative shift: no positivity to lean on, so multi-start Newton (best effort)
tneg = HilbertTensor(2, 2, -2.5)
for p in z1_newton_multistart(tneg, SolverConfig(seed=1), n_starts=16):
    print(f"shift -2.5: mu={p.mu:.12f}  residual={p.residual:.1e}")

# every reported pair is certified by its defect, nothing is trusted blindly
print("recomputed residual:", residual(tneg, p.mu, p.x))
