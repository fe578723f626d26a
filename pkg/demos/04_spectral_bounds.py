"""
Spectral-radius bounds and the truncation study
===============================================

Every Z1-eigenvalue obeys |mu| <= C(d, shift), with C switching between a
sine bound (shift >= 1) and 1/distance-to-the-nearest-achievable-sum
(shift < 1).  In the infinite-dimensional limit with shift > 0 the bound is
M(shift), which is pi once shift > 1/2.  Truncations approach but never
breach it.
"""

import math

from hilbert_tensors import HilbertTensor, bound_report, lab

# the branch structure of C
for shift in (2.0, 1.0, 0.25, -1.5, -9.5):
    rep = bound_report(HilbertTensor(2, 4, shift))
    print(f"shift={shift:>5}: C={rep.c_value:.6f}  branch={rep.branch}  flags={list(rep.flags)}")

# the sine bound d*sin(pi/d) creeps up to pi from below
for d in (2, 10, 100, 1000):
    print(f"d={d:>5}: d*sin(pi/d) = {d * math.sin(math.pi / d):.10f}")
print(f"                  pi = {math.pi:.10f}")

# truncation study: third-order Hilbert tensor, dominant mu_d against pi
records, summary = lab.run_truncation_study(3, 1.0, [2, 4, 8, 16, 32, 64, 128, 256])
print("\n   d        mu_d      C(d,1)    gap to pi   delta_mu")
for r in records:
    delta = "" if r["delta_mu"] is None else f"{r['delta_mu']:+.2e}"
    print(
        f"{r['d']:>4}  {r['mu']:.8f}  {r['bound_C']:.6f}  {r['gap_M_minus_mu']:.6f}   {delta}"
    )
print(f"\nmax mu over the study: {summary['max_mu']:.8f}  (pi = {math.pi:.8f})")
print("note the non-monotone drift in d: reported as data, asserted nowhere")
