"""
Fast Hankel products
====================

Entries depend only on the index sum, so T x^(m-1) collapses to polynomial
powers followed by a correlation with the generating vector.  That turns
O(d^m) work into O(m S log S) and makes d in the thousands routine.
"""

import time

import numpy as np

from hilbert_tensors import (
    HilbertTensor,
    apply_fast,
    apply_naive,
    bench_apply,
    form_fast,
    form_naive,
    poly_power_coeffs,
)

# the reduction in one picture: (x0 + x1 z)^2 collects the inner sums
print("coefficients of (x0 + x1 z)^2 at x=(1,1):", poly_power_coeffs([1.0, 1.0], 2))

t = HilbertTensor(3, 2, 1.0)
print("naive:", apply_naive(t, [1.0, 1.0]))
print("fast :", apply_fast(t, [1.0, 1.0]))
print("forms:", form_naive(t, [1.0, 1.0]), form_fast(t, [1.0, 1.0]))

# agreement on something less trivial
rng = np.random.default_rng(0)
t = HilbertTensor(4, 12, 0.3)
x = rng.uniform(-1, 1, 12)
err = np.abs(apply_fast(t, x) - apply_naive(t, x)).max()
print(f"order 4, dim 12: max abs deviation fast vs naive = {err:.2e}")

# where it pays off: dim 2048 at order 3
t = HilbertTensor(3, 2048, 1.0)
x = rng.uniform(-1, 1, 2048)
start = time.perf_counter()
y = apply_fast(t, x)
print(f"fast apply at d=2048: {time.perf_counter() - start:.4f}s, ||y||_inf={np.abs(y).max():.4f}")

# and the built-in benchmark (naive is skipped past its feasibility cutoff)
for rec in bench_apply(HilbertTensor(3, 256, 1.0), trials=3):
    label = "skipped" if rec["skipped"] else f"{rec['mean_seconds'] * 1e3:.3f} ms"
    print(f"d=256 {rec['method']:>5}: {label}")
