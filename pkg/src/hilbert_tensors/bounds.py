"""Closed-form spectral bounds and the Hilbert-type inequality left-hand sides.

For an order-m, dimension-d generalized Hilbert tensor with shift t, every
Z1-eigenvalue mu satisfies |mu| <= C(d, t):

    C(d, t) = d * sin(pi/d)            t >= 1 (needs d >= 2, see bound_report)
            = d * N(t)                 otherwise,

with N(t) = 1 / min_s |s + t| over achievable index sums s in {0..S},
S = m*(d-1).  In the infinite-dimensional limit with t > 0 the bound becomes

    M(t) = pi / sin(pi*t)   for 0 < t <= 1/2,
         = pi                for t > 1/2.

`n_lambda_direct` computes the minimum by brute force and is normative;
`n_lambda_piecewise` mirrors the closed-form case analysis and exists to
cross-check it.  `frazer_lhs` / `ingham_lhs` evaluate the bilinear sums the
bounds rest on, for use as runtime inequality checks.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import InvalidParameterError, NotApplicableError, as_vector

__all__ = [
    "BoundReport",
    "BoundViolationError",
    "n_lambda_direct",
    "n_lambda_piecewise",
    "bound_C",
    "bound_M",
    "bound_report",
    "frazer_lhs",
    "ingham_lhs",
]


class BoundViolationError(ArithmeticError):
    """A certified quantity exceeded a bound that should hold mathematically."""


@dataclass(frozen=True)
class BoundReport:
    """C/N/M values for one descriptor plus which case produced C."""

    m: int
    d: int
    shift: float
    n_value: float | None
    c_value: float
    m_value: float | None
    branch: str
    flags: tuple = ()

    def to_json(self):
        return {
            "m": self.m,
            "d": self.d,
            "lambda": self.shift,
            "N": self.n_value,
            "C": self.c_value,
            "M": self.m_value,
            "branch": self.branch,
            "flags": list(self.flags),
        }


def n_lambda_direct(t):
    """1 / min over achievable sums s of |s + shift|, by brute enumeration.

    Defined for shift < 1 only (the closed-form case split lives there).
    """
    if t.shift >= 1.0:
        raise NotApplicableError("N(lambda) applies to shift < 1 only")
    s = np.arange(t.max_sum + 1, dtype=np.float64)
    return float(1.0 / np.abs(s + t.shift).min())


def n_lambda_piecewise(t):
    """Closed-form N(lambda): the case analysis `n_lambda_direct` cross-checks.

    1/lambda on (0,1); 1/min(lambda-floor, 1+floor-lambda) on (-S, 0);
    1/(-S-lambda) below -S, with S the maximum achievable index sum.
    """
    lam = t.shift
    if lam >= 1.0:
        raise NotApplicableError("N(lambda) applies to shift < 1 only")
    s_max = t.max_sum
    if 0.0 < lam < 1.0:
        return 1.0 / lam
    if lam < -s_max:
        return 1.0 / (-s_max - lam)
    # -S < lam < 0 (lam is never a non-positive integer)
    fl = math.floor(lam)
    return 1.0 / min(lam - fl, 1.0 + fl - lam)


def bound_M(lam):
    """Infinite-dimensional Z1 bound: pi/sin(lam*pi) on (0, 1/2], else pi."""
    if lam <= 0.0:
        raise NotApplicableError("M(lambda) requires lambda > 0")
    if lam <= 0.5:
        return math.pi / math.sin(lam * math.pi)
    return math.pi


def bound_report(t):
    """Full BoundReport for a descriptor: N, C, M, branch tag, and flags.

    For shift >= 1 the sine bound d*sin(pi/d) applies, except at d = 1 where
    it degenerates to 0 (falsely excluding the actual eigenvalue 1/shift);
    there the always-valid 1/shift is substituted and flagged.
    """
    lam = t.shift
    d = t.dim
    flags = []
    if lam >= 1.0:
        branch = "lambda>=1"
        if d == 1:
            n_value = 1.0 / lam
            c_value = d * n_value
            flags.append("degenerate-dim")
        else:
            n_value = None
            c_value = d * math.sin(math.pi / d)
    else:
        n_value = n_lambda_direct(t)
        c_value = d * n_value
        if 0.0 < lam < 1.0:
            branch = "0<lambda<1"
        elif lam < -t.max_sum:
            branch = "lambda<-S"
        else:
            branch = "-S<lambda<0"
    m_value = bound_M(lam) if lam > 0.0 else None
    return BoundReport(
        m=t.order,
        d=d,
        shift=lam,
        n_value=n_value,
        c_value=c_value,
        m_value=m_value,
        branch=branch,
        flags=tuple(flags),
    )


def bound_C(t):
    """Upper bound C(d, lambda) on |mu| for every Z1-eigenvalue of `t`."""
    return bound_report(t).c_value


def _bilinear_abs_sum(x, denom_offset):
    # sum_ij |x_i||x_j| / (i + j + offset), direct O(d^2) evaluation
    a = np.abs(as_vector(x))
    d = len(a)
    if d == 0:
        return 0.0
    k = np.arange(2 * d - 1, dtype=np.float64)
    hk = 1.0 / (k + denom_offset)
    idx = np.add.outer(np.arange(d), np.arange(d))
    return float(a @ hk[idx] @ a)


def frazer_lhs(x):
    """sum_ij |x_i||x_j| / (i+j+1), the LHS of the finite Hilbert bound.

    Needs d >= 2: the companion bound d*sin(pi/d)*||x||_2^2 degenerates at
    d = 1.
    """
    x = as_vector(x)
    if len(x) < 2:
        raise NotApplicableError("the d*sin(pi/d) bound degenerates below d = 2")
    return _bilinear_abs_sum(x, 1.0)


def ingham_lhs(x, a):
    """sum_ij |x_i||x_j| / (i+j+a) over the available indices, a > 0.

    Monotone nondecreasing under zero-padded extension, so finite
    evaluations lower-bound the l2 quantity that M(a) dominates.
    """
    if a <= 0.0:
        raise InvalidParameterError("a", f"must be > 0, got {a!r}")
    return _bilinear_abs_sum(x, float(a))
