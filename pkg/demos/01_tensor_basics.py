"""
Generalized Hilbert tensor basics
=================================

A descriptor never stores entries: everything derives from the generating
sequence h[k] = 1/(k + shift).
"""

import numpy as np

from hilbert_tensors import HilbertTensor, apply_naive, form_naive, t_operator

# the classical third-order Hilbert tensor on {0,1,2,3}^3
t = HilbertTensor(order=3, dim=4, shift=1.0)
print("order:", t.order, " dim:", t.dim, " shift:", t.shift)
print("max index sum:", t.max_sum)

# entries depend only on the index sum, so any permutation gives the same value
print("entry (1,1,2):", t.entry((1, 1, 2)))
print("entry (2,1,1):", t.entry((2, 1, 1)))

# the whole tensor, compactly
print("generating vector:", t.generating_vector)

# brute-force products: apply enumerates every index tuple
x = np.array([1.0, 0.5, -0.25, 0.125])
print("T x^2      :", apply_naive(t, x))
print("T x^3      :", form_naive(t, x))
print("<x, T x^2> :", x @ apply_naive(t, x))  # equals the form

# the degree-1 homogeneous operator used for eigenvalue work
print("||x||_1^(2-m) T x^2:", t_operator(t, x))

# a negative non-integer shift is fine; entries change sign across the pole
neg = HilbertTensor(2, 3, -2.5)
print("shift -2.5 matrix row 0:", [neg.entry((0, j)) for j in range(3)])
