"""
Hilbert-type inequalities as runtime checks
===========================================

The spectral bounds rest on two classical bilinear inequalities.  Both are
checked here on random vectors; the ratio LHS / (bound * ||x||_2^2) must
never exceed 1.
"""

import math

import numpy as np

from hilbert_tensors import bound_M, frazer_lhs, ingham_lhs, lab, norm2

rng = np.random.default_rng(42)

# finite-dimensional bound: sum |x_i||x_j|/(i+j+1) <= d sin(pi/d) ||x||_2^2
d = 16
x = rng.uniform(-1, 1, d)
lhs = frazer_lhs(x)
bound = d * math.sin(math.pi / d) * norm2(x) ** 2
print(f"finite (d={d}):  lhs={lhs:.6f}  bound={bound:.6f}  ratio={lhs / bound:.4f}")

# l2 bound: sum |x_i||x_j|/(i+j+a) <= M(a) ||x||_2^2, truncations included
for a in (0.1, 0.25, 0.5, 1.0, 3.0):
    x = rng.uniform(-1, 1, 300)
    lhs = ingham_lhs(x, a)
    bound = bound_M(a) * norm2(x) ** 2
    print(f"a={a:<5}: M(a)={bound_M(a):.6f}  ratio={lhs / bound:.4f}")

# the batch checker behind `hilbert-lab check-inequalities`
report, witness = lab.run_inequality_check(
    trials=200, dims=list(range(2, 33)), a_values=[0.1, 0.5, 1.0], seed=7
)
print("\nbatch check passed:", report["pass"])
print("worst frazer ratio:", round(report["frazer"]["max_ratio"], 6))
print("worst ingham ratio:", round(report["ingham"]["max_ratio"], 6))

# corrupting the bound by 10x must trip the detector (negative control)
report, witness = lab.run_inequality_check(
    trials=50, dims=[2, 3, 4], a_values=[0.5], seed=7, bound_scale=0.1
)
print("corrupted bound detected:", not report["pass"], " witness family:", witness["family"])
