"""Compact representation of generalized Hilbert tensors and reference products.

An order-m, dimension-d generalized Hilbert tensor has entries

    T[i1, ..., im] = 1 / (i1 + ... + im + shift),    i_j in {0, ..., d-1},

where the real shift is not a non-positive integer.  Entries depend only on
the index sum, so the tensor is a symmetric Hankel tensor determined by the
generating sequence h[k] = 1/(k + shift), k = 0..m*(d-1), and the d**m entry
array is never materialized.

This module holds the descriptor, exact entry access, and the brute-force
(tuple-enumerating) tensor-vector products that serve as oracles for the
convolution-based paths in :mod:`hilbert_tensors.fast_hankel`.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "HilbertTensor",
    "InvalidParameterError",
    "DimensionMismatchError",
    "NotApplicableError",
    "NAIVE_COST_LIMIT",
    "as_vector",
    "norm1",
    "norm2",
    "norm_sup",
    "apply_naive",
    "form_naive",
    "t_operator",
]

# The brute-force paths refuse problems needing more than this many scalar
# multiplies (d**m for a full product); keeps oracles and benchmarks bounded.
NAIVE_COST_LIMIT = 10**9


class InvalidParameterError(ValueError):
    """A parameter violates its contract; `field` names the offender."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class DimensionMismatchError(ValueError):
    """Vector length does not match the tensor dimension."""


class NotApplicableError(ValueError):
    """The requested quantity is undefined for these parameters."""


@dataclass(frozen=True)
class HilbertTensor:
    """Descriptor of an order-`order`, dimension-`dim` generalized Hilbert tensor.

    Never stores entries; everything derives from (order, dim, shift).
    `shift` must not be a non-positive integer, which keeps every achievable
    denominator index_sum + shift away from zero.
    """

    order: int
    dim: int
    shift: float

    def __post_init__(self):
        if not isinstance(self.order, (int, np.integer)) or isinstance(self.order, bool):
            raise InvalidParameterError("order", f"must be an integer, got {self.order!r}")
        if self.order < 2:
            raise InvalidParameterError("order", f"must be >= 2, got {self.order}")
        if not isinstance(self.dim, (int, np.integer)) or isinstance(self.dim, bool):
            raise InvalidParameterError("dim", f"must be an integer, got {self.dim!r}")
        if self.dim < 1:
            raise InvalidParameterError("dim", f"must be >= 1, got {self.dim}")
        shift = float(self.shift)
        if not np.isfinite(shift):
            raise InvalidParameterError("shift", f"must be finite, got {shift!r}")
        if shift <= 0.0 and shift == int(shift):
            raise InvalidParameterError(
                "shift", f"must not be a non-positive integer, got {shift!r}"
            )
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "shift", shift)

    @property
    def max_sum(self):
        """Largest achievable index sum, order * (dim - 1)."""
        return self.order * (self.dim - 1)

    @cached_property
    def generating_vector(self):
        """h[k] = 1/(k + shift) for k = 0..max_sum, as a read-only array."""
        h = 1.0 / (np.arange(self.max_sum + 1, dtype=np.float64) + self.shift)
        h.flags.writeable = False
        return h

    def entry(self, idx):
        """Exact entry 1/(i1 + ... + im + shift) at the given index tuple.

        `idx` must have exactly `order` entries, each in [0, dim).
        """
        idx = tuple(idx)
        if len(idx) != self.order:
            raise InvalidParameterError(
                "idx", f"expected {self.order} indices, got {len(idx)}"
            )
        for i in idx:
            if not 0 <= i < self.dim:
                raise IndexError(f"index {i} out of range [0, {self.dim})")
        return 1.0 / (sum(idx) + self.shift)


def as_vector(x, dim=None):
    """Coerce to a finite 1-D float array; check length against `dim` if given."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-D vector, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise InvalidParameterError("x", "components must be finite")
    if dim is not None and x.shape[0] != dim:
        raise DimensionMismatchError(f"expected length {dim}, got {x.shape[0]}")
    return x


def norm1(x):
    return float(np.abs(x).sum())


def norm2(x):
    return float(np.sqrt(np.dot(x, x)))


def norm_sup(x):
    return float(np.abs(x).max()) if len(x) else 0.0


def _check_naive_cost(t):
    if float(t.dim) ** t.order > NAIVE_COST_LIMIT:
        raise InvalidParameterError(
            "dim", f"naive path refuses dim**order = {t.dim}**{t.order} > {NAIVE_COST_LIMIT} multiplies"
        )


def _index_sum_grid(d, k):
    """Flat array of i1+...+ik over all k-tuples from {0..d-1}, C order."""
    s = np.zeros(1, dtype=np.int64)
    for _ in range(k):
        s = np.add.outer(s, np.arange(d, dtype=np.int64)).ravel()
    return s


def _product_grid(x, k):
    """Flat array of x[i1]*...*x[ik] over all k-tuples, same order as the sums."""
    p = np.ones(1, dtype=np.float64)
    for _ in range(k):
        p = np.multiply.outer(p, x).ravel()
    return p


def apply_naive(t, x):
    """Tensor-vector product T x^(order-1) by explicit tuple enumeration.

    Component i is the sum over all (order-1)-tuples (i2..im) of
    x[i2]*...*x[im] / (i + i2 + ... + im + shift).  Costs dim**order scalar
    multiplies; this is the reference oracle for apply_fast.
    """
    x = as_vector(x, t.dim)
    _check_naive_cost(t)
    sums = _index_sum_grid(t.dim, t.order - 1)
    prods = _product_grid(x, t.order - 1)
    h = t.generating_vector
    out = np.empty(t.dim, dtype=np.float64)
    for i in range(t.dim):
        out[i] = prods @ h[i + sums]
    return out


def form_naive(t, x):
    """Homogeneous form T x^order by explicit enumeration of all order-tuples.

    Equals <x, apply_naive(t, x)> in exact arithmetic; evaluated here
    independently (full m-tuple sum) so the identity stays a real check.
    """
    x = as_vector(x, t.dim)
    _check_naive_cost(t)
    sums = _index_sum_grid(t.dim, t.order)
    prods = _product_grid(x, t.order)
    return float(prods @ t.generating_vector[sums])


def t_operator(t, x):
    """Degree-1 positively homogeneous operator ||x||_1^(2-order) * T x^(order-1).

    Maps the zero vector to the zero vector.  Reference (naive-backed) path.
    """
    x = as_vector(x, t.dim)
    n1 = norm1(x)
    if n1 == 0.0:
        return np.zeros(t.dim, dtype=np.float64)
    return n1 ** (2 - t.order) * apply_naive(t, x)
