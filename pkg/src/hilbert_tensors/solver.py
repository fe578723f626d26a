"""Z1-eigenpair computation for generalized Hilbert tensors.

A Z1-eigenpair of an order-m tensor T is (mu, x) with

    T x^(m-1) = mu * x,   ||x||_1 = 1,

equivalently a fixed direction of the degree-1 homogeneous operator
||x||_1^(2-m) T x^(m-1).  Four routes are provided:

* `z1_power_iterate` -- l1-normalized fixed-point iteration for the dominant
  positive pair of a positive tensor (shift > 0).  Convergence is never
  assumed: every output carries its residual and is certified a posteriori.
* `matrix_eig_oracle` -- for order 2 the problem reduces to the ordinary
  symmetric eigenproblem; a cyclic Jacobi rotation eigensolver recovers all
  pairs independently of the iteration above.
* `simplex_grid_oracle` -- brute-force defect minimization over sign patterns
  and a grid on the l1 unit sphere, for dim <= 3; catches non-dominant pairs.
* `z1_newton_refine` -- Newton iteration on the full eigen-system over a
  fixed orthant; polishes approximate pairs and is the best-effort route for
  negative shifts, where no positivity structure helps.

Every converged eigenvalue is checked against the closed-form spectral bound;
a breach raises BoundViolationError, since it would contradict the theory.
"""

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .bounds import BoundViolationError, bound_C
from .core import (
    InvalidParameterError,
    NotApplicableError,
    as_vector,
    norm1,
)
from .fast_hankel import apply_fast, hankel_correlate, poly_power_coeffs

__all__ = [
    "SolverConfig",
    "Z1Pair",
    "z1_power_iterate",
    "residual",
    "matrix_eig_oracle",
    "simplex_grid_oracle",
    "z1_newton_refine",
    "z1_newton_multistart",
]


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and iteration limits shared by the solvers.

    `seed` only affects randomized multi-starts; the power iteration itself
    is deterministic.  `damping` in [0, 1) blends the new iterate with the
    old one; 0 means plain fixed-point steps.
    """

    tol: float = 1e-12
    max_iterations: int = 10_000
    seed: int = 0
    damping: float = 0.0

    def __post_init__(self):
        if not self.tol > 0.0:
            raise InvalidParameterError("tol", f"must be > 0, got {self.tol!r}")
        if self.max_iterations < 1:
            raise InvalidParameterError(
                "max_iterations", f"must be >= 1, got {self.max_iterations!r}"
            )
        if not 0.0 <= self.damping < 1.0:
            raise InvalidParameterError(
                "damping", f"must lie in [0, 1), got {self.damping!r}"
            )


@dataclass
class Z1Pair:
    """An eigenvalue, its l1-normalized eigenvector, and certification data.

    `residual` is ||T x^(m-1) - mu x||_inf evaluated at the l1-normalized x;
    converged means residual <= tol * max(1, |mu|) was reached.
    """

    mu: float
    x: np.ndarray
    residual: float
    iterations: int
    converged: bool
    method: str = "power"
    diagnostic: str | None = None

    def to_json(self):
        rec = {
            "mu": float(self.mu),
            "x": [float(v) for v in self.x],
            "residual": float(self.residual),
            "iterations": int(self.iterations),
            "converged": bool(self.converged),
            "method": self.method,
        }
        if self.diagnostic is not None:
            rec["diagnostic"] = self.diagnostic
        return rec


def _canonical_sign(mu, x, order):
    # flip so the first nonzero component is positive; x -> -x maps
    # mu -> (-1)**order * mu
    for v in x:
        if v != 0.0:
            if v < 0.0:
                return (mu if order % 2 == 0 else -mu), -x
            break
    return mu, x


def _check_bound(t, mu):
    c = bound_C(t)
    if abs(mu) > c * (1.0 + 1e-10):
        raise BoundViolationError(
            f"converged Z1-eigenvalue {mu!r} breaches |mu| <= C = {c!r} "
            f"for order={t.order}, dim={t.dim}, shift={t.shift}"
        )


def residual(t, mu, x):
    """Eigen-equation defect ||T xh^(m-1) - mu xh||_inf at xh = x/||x||_1.

    Zero exactly when (mu, x-direction) is a Z1-eigenpair; invariant under
    positive rescaling of x.
    """
    x = as_vector(x, t.dim)
    n1 = norm1(x)
    if n1 == 0.0:
        raise InvalidParameterError("x", "zero vector has no eigen-direction")
    xh = x / n1
    y = apply_fast(t, xh)
    return float(np.abs(y - mu * xh).max())


def _is_period2(deltas):
    # update sizes stalled in an a,b,a,b pattern rather than decaying
    d1, d2, d3, d4 = deltas[-1], deltas[-2], deltas[-3], deltas[-4]
    close = lambda a, b: abs(a - b) <= 1e-2 * max(a, b, 1e-300)
    return close(d1, d3) and close(d2, d4) and not close(d1, d2)


def z1_power_iterate(t, cfg=None):
    """Dominant positive Z1-eigenpair of a positive tensor (shift > 0).

    Iterates x <- T x^(m-1) / ||T x^(m-1)||_1 from the uniform start
    (1/d, ..., 1/d), blending in the previous iterate when damping is active.
    mu is reported as ||T x^(m-1)||_1.  Damping switches itself on (0.5)
    if the update sizes lock into a period-2 oscillation.

    Convergence requires both residual <= tol * max(1, |mu|) and an l1
    update step <= tol; otherwise the best iterate is returned with
    converged=False and the caller decides.
    """
    cfg = cfg or SolverConfig()
    if t.shift <= 0.0:
        raise InvalidParameterError(
            "shift",
            "power iteration requires shift > 0 (positive tensor); "
            "use z1_newton_refine / z1_newton_multistart for negative shifts",
        )
    d = t.dim
    x = np.full(d, 1.0 / d)
    beta = cfg.damping
    deltas = []
    mu = 0.0
    res = math.inf
    iterations = 0
    converged = False
    for iterations in range(1, cfg.max_iterations + 1):
        y = apply_fast(t, x)
        mu = float(np.abs(y).sum())
        res = float(np.abs(y - mu * x).max())
        xn = y / mu
        if beta > 0.0:
            xn = (1.0 - beta) * xn + beta * x
        delta = float(np.abs(xn - x).sum())
        if res <= cfg.tol * max(1.0, abs(mu)) and delta <= cfg.tol:
            converged = True
            break
        deltas.append(delta)
        if beta == 0.0 and len(deltas) >= 4 and delta > cfg.tol and _is_period2(deltas):
            beta = 0.5
        x = xn
    pair = Z1Pair(
        mu=mu,
        x=x,
        residual=res,
        iterations=iterations,
        converged=converged,
        method="power",
    )
    if converged:
        _check_bound(t, mu)
    return pair


# ---------------------------------------------------------------------------
# order-2 oracle: cyclic Jacobi rotations


_jacobi_kernel = None


def _get_jacobi_kernel():
    global _jacobi_kernel
    if _jacobi_kernel is None:
        from numba import njit

        @njit(cache=True)
        def kernel(A, V, off_tol, max_sweeps):
            n = A.shape[0]
            sweeps = 0
            while sweeps < max_sweeps:
                off = 0.0
                for i in range(n - 1):
                    for j in range(i + 1, n):
                        off += A[i, j] * A[i, j]
                off = math.sqrt(2.0 * off)
                if off <= off_tol:
                    return sweeps, off
                for p in range(n - 1):
                    for q in range(p + 1, n):
                        apq = A[p, q]
                        if apq == 0.0:
                            continue
                        theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                        if theta >= 0.0:
                            tt = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                        else:
                            tt = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                        c = 1.0 / math.sqrt(1.0 + tt * tt)
                        s = tt * c
                        app = A[p, p]
                        aqq = A[q, q]
                        for i in range(n):
                            if i != p and i != q:
                                aip = A[i, p]
                                aiq = A[i, q]
                                A[i, p] = aip * c - aiq * s
                                A[p, i] = A[i, p]
                                A[i, q] = aiq * c + aip * s
                                A[q, i] = A[i, q]
                        A[p, p] = app - tt * apq
                        A[q, q] = aqq + tt * apq
                        A[p, q] = 0.0
                        A[q, p] = 0.0
                        for i in range(n):
                            vip = V[i, p]
                            viq = V[i, q]
                            V[i, p] = vip * c - viq * s
                            V[i, q] = viq * c + vip * s
                sweeps += 1
            off = 0.0
            for i in range(n - 1):
                for j in range(i + 1, n):
                    off += A[i, j] * A[i, j]
            return sweeps, math.sqrt(2.0 * off)

        _jacobi_kernel = kernel
    return _jacobi_kernel


def matrix_eig_oracle(t, off_tol=1e-13):
    """All Z1-eigenpairs for order 2 via a cyclic Jacobi eigensolver.

    For order 2 the defining system is the ordinary symmetric eigenproblem,
    so every (eigenvalue, l1-normalized eigenvector) of the dense matrix is a
    Z1-eigenpair.  Sweeps run until the off-diagonal Frobenius norm drops
    below `off_tol`.  Returns pairs sorted by descending eigenvalue.
    """
    if t.order != 2:
        raise NotApplicableError("matrix oracle applies to order 2 only")
    d = t.dim
    h = t.generating_vector
    if d == 1:
        return [(float(h[0]), np.array([1.0]))]
    A = h[np.add.outer(np.arange(d), np.arange(d))].copy()
    V = np.eye(d)
    sweeps, off = _get_jacobi_kernel()(A, V, off_tol, 100)
    if off > off_tol:
        raise RuntimeError(f"Jacobi failed to reach off-norm {off_tol} (got {off})")
    order = np.argsort(np.diag(A))[::-1]
    pairs = []
    for j in order:
        w = float(A[j, j])
        v = V[:, j]
        v = v / np.abs(v).sum()
        w, v = _canonical_sign(w, v, t.order)
        pairs.append((w, v))
    return pairs


# ---------------------------------------------------------------------------
# brute-force grid oracle on the l1 unit sphere (dim <= 3)


def _sphere_point(u, sigma):
    # barycentric free coordinates -> l1-unit point in the sigma orthant
    d = len(sigma)
    if d == 1:
        p = np.array([1.0])
    elif d == 2:
        p = np.array([u[0], 1.0 - u[0]])
    else:
        p = np.array([u[0], u[1], 1.0 - u[0] - u[1]])
    p = np.clip(p, 0.0, 1.0)
    p /= p.sum()
    return sigma * p


def _feasible(u):
    return all(v >= 0.0 for v in u) and sum(u) <= 1.0


def simplex_grid_oracle(t, resolution=10_000):
    """Approximate Z1-eigenpairs by defect search over the l1 unit sphere.

    Enumerates all sign patterns and a barycentric grid with `resolution`
    steps per edge, minimizing the alignment defect

        defect(x) = || T x^(m-1) - mu*(x) x ||_inf,   mu*(x) = <x,y>/<x,x>,

    then refines each grid-local minimum by step-halving pattern search.
    Refined minima that fail to reach a small defect are discarded as
    non-eigen artifacts.  Intended for dim <= 3 (refused above, for cost)
    as an independent catch-all for pairs the power iteration misses.
    """
    if t.dim > 3:
        raise InvalidParameterError("dim", "grid oracle refused above dim 3 (cost)")
    if not isinstance(resolution, (int, np.integer)) or resolution < 10:
        raise InvalidParameterError(
            "resolution", f"must be an integer >= 10, got {resolution!r}"
        )
    d = t.dim
    n_points = resolution + 1 if d < 3 else (resolution + 1) * (resolution + 2) // 2
    if (2**d) * n_points > 10**7:
        raise InvalidParameterError(
            "resolution", f"grid of {(2**d) * n_points} points exceeds the cost cutoff"
        )

    def defect_at(u, sigma):
        x = _sphere_point(u, sigma)
        y = apply_fast(t, x)
        mu = float(x @ y / (x @ x))
        return float(np.abs(y - mu * x).max()), mu, x

    if d == 1:
        grid = [()]
    elif d == 2:
        grid = [(j / resolution,) for j in range(resolution + 1)]
    else:
        grid = [
            (i / resolution, j / resolution)
            for i in range(resolution + 1)
            for j in range(resolution + 1 - i)
        ]

    if d == 2:
        neighbor_steps = [(1,), (-1,)]
    else:
        neighbor_steps = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]

    found = []
    for sigma in product((1.0, -1.0), repeat=d):
        sigma = np.array(sigma)
        values = {u: defect_at(u, sigma)[0] for u in grid}
        if d == 1:
            minima = grid
        else:
            step = 1.0 / resolution
            minima = []
            for u in grid:
                fu = values[u]
                is_min = True
                for dv in neighbor_steps:
                    v = tuple(round((ui + si * step) * resolution) / resolution
                              for ui, si in zip(u, dv))
                    if v in values and values[v] < fu:
                        is_min = False
                        break
                if is_min:
                    minima.append(u)

        for u0 in minima:
            u = u0
            f, mu, x = defect_at(u, sigma)
            evals = 1
            delta = 1.0 / resolution
            while delta > 1e-15 and evals < 4000:
                moved = False
                for dv in neighbor_steps if d > 1 else []:
                    v = tuple(ui + si * delta for ui, si in zip(u, dv))
                    if not _feasible(v):
                        continue
                    fv, muv, xv = defect_at(v, sigma)
                    evals += 1
                    if fv < f:
                        u, f, mu, x = v, fv, muv, xv
                        moved = True
                        break
                if not moved:
                    delta /= 2.0
                if d == 1:
                    break
            if f <= 1e-6 * max(1.0, abs(mu)):
                mu_c, x_c = _canonical_sign(mu, x, t.order)
                found.append(
                    Z1Pair(
                        mu=mu_c,
                        x=x_c,
                        residual=f,
                        iterations=evals,
                        converged=f <= 1e-10 * max(1.0, abs(mu)),
                        method="grid",
                    )
                )
    return _dedupe_pairs(found)


def _dedupe_pairs(pairs):
    kept = []
    for p in sorted(pairs, key=lambda p: p.residual):
        duplicate = False
        for q in kept:
            if (
                abs(p.mu - q.mu) <= 1e-6 * max(1.0, abs(q.mu))
                and np.abs(p.x - q.x).max() <= 1e-5
            ):
                duplicate = True
                break
        if not duplicate:
            kept.append(p)
    kept.sort(key=lambda p: (-p.mu, tuple(p.x)))
    return kept


# ---------------------------------------------------------------------------
# Newton refinement on a fixed orthant


def _parse_start(start):
    if isinstance(start, Z1Pair):
        return float(start.mu), start.x
    mu, x = start
    return float(mu), x


def z1_newton_refine(t, start, cfg=None):
    """Newton iteration on the Z1 system over the start's sign orthant.

    Solves F(x, mu) = 0 with

        F = ( n1^(2-m) * T x^(m-1) - mu x,  n1 - 1 ),   n1 = sum_i sigma_i x_i,

    where sigma is the (fixed) sign pattern of the start vector; n1 equals
    ||x||_1 as long as the iterates stay in that orthant, where the l1 norm
    is smooth.  The tensor-term Jacobian is assembled from the Hankel
    structure: d(T x^(m-1))_i / dx_j = (m-1) * G[i+j] with G the correlation
    of the generating vector against the (m-2) power coefficients.

    Quadratically convergent near a regular pair.  Returns converged=False
    (with a diagnostic) on singular Jacobians, divergence, or when the final
    iterate fails the independent residual check.
    """
    cfg = cfg or SolverConfig()
    mu, x0 = _parse_start(start)
    x = as_vector(x0, t.dim).copy()
    if np.any(x == 0.0):
        raise InvalidParameterError(
            "start", "start vector must have no zero components (fixed orthant)"
        )
    sigma = np.sign(x)
    m, d = t.order, t.dim
    h = t.generating_vector
    ij = np.add.outer(np.arange(d), np.arange(d))
    diagnostic = None
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        n1 = float(sigma @ x)
        if n1 <= 0.0:
            diagnostic = "iterate collapsed out of the starting orthant"
            break
        w = apply_fast(t, x)
        scale = n1 ** (2 - m)
        F = np.empty(d + 1)
        F[:d] = scale * w - mu * x
        F[d] = n1 - 1.0
        fnorm = float(np.abs(F).max())
        if not np.isfinite(fnorm) or fnorm > 1e12:
            diagnostic = "diverged"
            break
        if fnorm <= cfg.tol * max(1.0, abs(mu)):
            break
        if m == 2:
            c2 = np.ones(1)
        else:
            c2 = poly_power_coeffs(x, m - 2)
        g = hankel_correlate(h, c2, 2 * d - 1)
        J = np.empty((d + 1, d + 1))
        J[:d, :d] = scale * (m - 1) * g[ij]
        if m != 2:
            J[:d, :d] += (2 - m) * n1 ** (1 - m) * np.outer(w, sigma)
        J[:d, :d][np.diag_indices(d)] -= mu
        J[:d, d] = -x
        J[d, :d] = sigma
        J[d, d] = 0.0
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            diagnostic = "singular Jacobian"
            break
        x = x + step[:d]
        mu = float(mu + step[d])
    else:
        diagnostic = "max iterations reached"

    n1_true = norm1(x)
    if n1_true == 0.0 or not np.all(np.isfinite(x)):
        return Z1Pair(
            mu=mu,
            x=x,
            residual=math.inf,
            iterations=iterations,
            converged=False,
            method="newton",
            diagnostic=diagnostic or "degenerate iterate",
        )
    if diagnostic is None and np.any(np.sign(x) != sigma):
        diagnostic = "converged outside the starting orthant"
    xh = x / n1_true
    res = residual(t, mu, xh)
    converged = diagnostic is None and res <= cfg.tol * max(1.0, abs(mu))
    mu_c, x_c = _canonical_sign(mu, xh, m)
    pair = Z1Pair(
        mu=mu_c,
        x=x_c,
        residual=res,
        iterations=iterations,
        converged=converged,
        method="newton",
        diagnostic=diagnostic,
    )
    if converged:
        _check_bound(t, mu_c)
    return pair


def z1_newton_multistart(t, cfg=None, n_starts=24, jobs=1):
    """Seeded multi-start Newton; the best-effort route for negative shifts.

    Starts are random interior points of random orthants (plus the uniform
    positive start when shift > 0).  Converged pairs are deduplicated and
    returned sorted by descending eigenvalue, then lexicographic
    eigenvector, so the aggregation is deterministic for a fixed seed.
    """
    cfg = cfg or SolverConfig()
    rng = np.random.default_rng(cfg.seed)
    d = t.dim
    starts = []
    if t.shift > 0.0:
        starts.append(np.full(d, 1.0 / d))
    for _ in range(n_starts):
        p = rng.dirichlet(np.ones(d))
        p = 0.9 * p + 0.1 / d  # stay clear of the orthant walls
        signs = rng.choice(np.array([-1.0, 1.0]), size=d)
        starts.append(signs * p)

    def run(x0):
        y = apply_fast(t, x0)
        mu0 = float(x0 @ y / (x0 @ x0))
        return z1_newton_refine(t, (mu0, x0), cfg)

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(x0) for x0 in starts]
    return _dedupe_pairs([p for p in results if p.converged])
