"""Structure-exploiting fast products for generalized Hilbert tensors.

Entries depend only on the index sum, so the inner sums of T x^(m-1) collapse
by total degree: with c = coefficients of (sum_j x_j z^j)^(m-1),

    (T x^(m-1))[i] = sum_s c[s] * h[i + s],

a correlation of the generating vector against polynomial-power coefficients.
The form T x^m is the analogous dot product with the m-th power coefficients.
Powers are built by repeated convolution; each convolution can run either
directly (O(L^2)) or via the FFT (O(L log L)), and the two must agree.
"""

import time

import numpy as np

from .core import (
    NAIVE_COST_LIMIT,
    InvalidParameterError,
    apply_naive,
    as_vector,
)

__all__ = [
    "convolve",
    "poly_power_coeffs",
    "hankel_correlate",
    "apply_fast",
    "form_fast",
    "bench_apply",
]

# Below this output size the direct path beats FFT setup cost.
_DIRECT_CUTOFF = 4096


def _convolve_fft(a, b):
    n = len(a) + len(b) - 1
    nfft = 1 << (n - 1).bit_length()  # zero-pad to a power of two
    out = np.fft.irfft(np.fft.rfft(a, nfft) * np.fft.rfft(b, nfft), nfft)[:n]
    if a.min() >= 0.0 and b.min() >= 0.0:
        # true convolution of non-negative sequences is non-negative; clamp
        # the FFT round-off that would otherwise leak tiny negatives
        np.maximum(out, 0.0, out=out)
    return out


def convolve(a, b, method="auto"):
    """Full linear convolution of two coefficient vectors.

    method: "direct" (exact multiply-accumulate), "fft" (transform-based),
    or "auto" (direct for small problems, fft for large).
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if method == "auto":
        method = "direct" if len(a) * len(b) <= _DIRECT_CUTOFF else "fft"
    if method == "direct":
        return np.convolve(a, b)
    if method == "fft":
        return _convolve_fft(a, b)
    raise InvalidParameterError("method", f"unknown convolution method {method!r}")


def poly_power_coeffs(x, k, method="auto"):
    """Coefficients of (x[0] + x[1] z + ... + x[d-1] z^(d-1))**k.

    Result has length k*(d-1) + 1; its coefficient sum equals (sum x)**k.
    k must be >= 1.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise InvalidParameterError("k", f"power must be an integer >= 1, got {k!r}")
    x = as_vector(x)
    if len(x) < 1:
        raise InvalidParameterError("x", "need at least one coefficient")
    c = x.copy()
    for _ in range(k - 1):
        c = convolve(c, x, method)
    return c


def hankel_correlate(h, c, n_out, method="auto"):
    """out[i] = sum_s c[s] * h[i + s] for i = 0..n_out-1.

    Requires len(h) >= n_out + len(c) - 1.  Implemented as a convolution with
    the reversed kernel so both convolution paths are available.
    """
    if len(h) < n_out + len(c) - 1:
        raise InvalidParameterError(
            "h", f"need length >= {n_out + len(c) - 1}, got {len(h)}"
        )
    r = convolve(h, c[::-1], method)
    i0 = len(c) - 1
    return r[i0 : i0 + n_out]


def apply_fast(t, x, method="auto"):
    """Fast T x^(order-1); agrees with apply_naive to relative 1e-10.

    Cost is O(order * S log S) with S = order*(dim-1) on the fft path.
    """
    x = as_vector(x, t.dim)
    c = poly_power_coeffs(x, t.order - 1, method)
    return hankel_correlate(t.generating_vector, c, t.dim, method)


def form_fast(t, x, method="auto"):
    """Fast homogeneous form T x^order: m-th power coefficients dotted with h."""
    x = as_vector(x, t.dim)
    e = poly_power_coeffs(x, t.order, method)
    return float(e @ t.generating_vector)


def bench_apply(t, trials, seed=0):
    """Mean wall time of the naive and fast apply paths on seeded random vectors.

    Returns one record per method: {m, d, lambda, method, mean_seconds,
    trials, skipped}.  The naive path is skipped (mean_seconds None) when it
    would need more than NAIVE_COST_LIMIT scalar multiplies.
    """
    if not isinstance(trials, (int, np.integer)) or isinstance(trials, bool) or trials < 1:
        raise InvalidParameterError("trials", f"must be an integer >= 1, got {trials!r}")
    rng = np.random.default_rng(seed)
    vectors = [rng.uniform(-1.0, 1.0, t.dim) for _ in range(trials)]

    records = []
    naive_feasible = float(t.dim) ** t.order <= NAIVE_COST_LIMIT
    for method, fn, run in (
        ("naive", apply_naive, naive_feasible),
        ("fast", apply_fast, True),
    ):
        if not run:
            records.append(
                {
                    "m": t.order,
                    "d": t.dim,
                    "lambda": t.shift,
                    "method": method,
                    "mean_seconds": None,
                    "trials": trials,
                    "skipped": True,
                }
            )
            continue
        fn(t, vectors[0])  # warm caches (generating vector, FFT twiddles)
        start = time.perf_counter()
        for x in vectors:
            fn(t, x)
        mean = (time.perf_counter() - start) / trials
        records.append(
            {
                "m": t.order,
                "d": t.dim,
                "lambda": t.shift,
                "method": method,
                "mean_seconds": mean,
                "trials": trials,
                "skipped": False,
            }
        )
    return records
