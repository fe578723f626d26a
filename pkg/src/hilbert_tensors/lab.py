"""Experiment harness behind the CLI: sweeps, truncation studies, checks.

Produces plain lists of dicts (one per row) plus a summary dict, and emits
them as RFC-4180 CSV or as one JSON object {"records": [...], "summary":
{...}}.  Numeric cells are written with shortest round-trip precision so CSV
and JSON carry identical values and reruns with the same config and seed are
byte-identical.  Wall-clock columns are opt-in (`timings`) for that reason.
"""

import csv
import io
import math
import time
from itertools import product

import numpy as np

from .bounds import (
    BoundViolationError,
    bound_M,
    bound_report,
    frazer_lhs,
    ingham_lhs,
)
from .core import HilbertTensor, InvalidParameterError, NotApplicableError
from .fast_hankel import bench_apply
from .solver import (
    SolverConfig,
    z1_newton_multistart,
    z1_newton_refine,
    z1_power_iterate,
)

__all__ = [
    "expand_dims",
    "expand_lambdas",
    "solver_config_from_dict",
    "run_sweep",
    "run_truncation_study",
    "run_inequality_check",
    "run_bench",
    "SWEEP_COLUMNS",
    "TRUNCATION_COLUMNS",
    "BENCH_COLUMNS",
    "records_to_csv",
]

SWEEP_COLUMNS = [
    "m", "d", "lambda", "method", "mu", "bound_C", "bound_M",
    "slack", "residual", "iterations", "converged", "error",
]
TRUNCATION_COLUMNS = [
    "d", "mu", "bound_C", "bound_M", "gap_M_minus_mu", "delta_mu",
    "residual", "iterations", "converged", "error",
]
BENCH_COLUMNS = ["m", "d", "method", "mean_seconds"]

# lambda grids silently drop values this close to a non-positive integer
_LAMBDA_EXCLUSION = 1e-9


def expand_dims(raw):
    """Dimension list from an int list or {"from","to","spacing"[,"step","count"]}."""
    if isinstance(raw, (list, tuple)):
        dims = [int(v) for v in raw]
    elif isinstance(raw, dict):
        lo, hi = int(raw["from"]), int(raw["to"])
        spacing = raw.get("spacing", "linear")
        if spacing == "linear":
            step = int(raw.get("step", 1))
            if step < 1:
                raise InvalidParameterError("dims.step", "must be >= 1")
            dims = list(range(lo, hi + 1, step))
        elif spacing == "log":
            count = int(raw.get("count", 16))
            pts = np.geomspace(max(lo, 1), max(hi, 1), count)
            dims = sorted({int(round(v)) for v in pts})
        else:
            raise InvalidParameterError("dims.spacing", f"unknown spacing {spacing!r}")
    else:
        raise InvalidParameterError("dims", f"expected list or range object, got {raw!r}")
    if not dims:
        raise InvalidParameterError("dims", "empty dimension range")
    for d in dims:
        if d < 1:
            raise InvalidParameterError("dims", f"dimension {d} < 1")
    return dims


def expand_lambdas(raw):
    """Shift list from a float list or {"from","to"[,"step","count","spacing"]}.

    Values within 1e-9 of a non-positive integer are silently dropped
    (the descriptor rejects them).
    """
    if isinstance(raw, (list, tuple)):
        values = [float(v) for v in raw]
    elif isinstance(raw, dict):
        lo, hi = float(raw["from"]), float(raw["to"])
        spacing = raw.get("spacing", "linear")
        if "step" in raw:
            step = float(raw["step"])
            if step <= 0:
                raise InvalidParameterError("lambdas.step", "must be > 0")
            n = int(round((hi - lo) / step)) + 1
            values = [lo + k * step for k in range(max(n, 1))]
        else:
            count = int(raw.get("count", 16))
            if spacing == "log":
                values = [float(v) for v in np.geomspace(lo, hi, count)]
            else:
                values = [float(v) for v in np.linspace(lo, hi, count)]
    else:
        raise InvalidParameterError("lambdas", f"expected list or range object, got {raw!r}")
    kept = []
    for lam in values:
        nearest = round(lam)
        if nearest <= 0 and abs(lam - nearest) <= _LAMBDA_EXCLUSION:
            continue
        kept.append(lam)
    if not kept:
        raise InvalidParameterError("lambdas", "no admissible shift values in range")
    return kept


def solver_config_from_dict(d):
    d = d or {}
    return SolverConfig(
        tol=float(d.get("tol", 1e-12)),
        max_iterations=int(d.get("max_iter", 10_000)),
        seed=int(d.get("seed", 0)),
        damping=float(d.get("damping", 0.0)),
    )


def _solve_dominant(t, cfg, jobs=1):
    """Dominant-pair solve: power iteration for shift > 0, Newton multistart else."""
    if t.shift > 0.0:
        return z1_power_iterate(t, cfg), "power"
    pairs = z1_newton_multistart(t, cfg, jobs=jobs)
    if pairs:
        best = max(pairs, key=lambda p: (abs(p.mu), p.mu))
        return best, "newton"
    # nothing certified; return the best-effort attempt so the row records it
    x0 = np.full(t.dim, 1.0 / t.dim)
    return z1_newton_refine(t, (0.0, x0), cfg), "newton"


def run_sweep(ms, dims, lambdas, cfg=None, jobs=1, timings=False):
    """One dominant-pair record per (m, d, lambda), in config order.

    Returns (records, summary).  Per-row failures are recorded in the row's
    `error` field and counted in the summary; converged bound breaches are
    flagged as violations rather than raised.
    """
    cfg = cfg or SolverConfig()
    params = [(m, d, lam) for m, d, lam in product(ms, dims, lambdas)]

    def run_row(p):
        m, d, lam = p
        row = {c: None for c in SWEEP_COLUMNS}
        row.update({"m": int(m), "d": int(d), "lambda": float(lam)})
        start = time.perf_counter()
        try:
            t = HilbertTensor(m, d, lam)
            rep = bound_report(t)
            row["bound_C"] = rep.c_value
            row["bound_M"] = rep.m_value
            pair, method = _solve_dominant(t, cfg)
            row["method"] = method
            row["mu"] = float(pair.mu)
            row["slack"] = rep.c_value - abs(pair.mu)
            row["residual"] = float(pair.residual)
            row["iterations"] = int(pair.iterations)
            row["converged"] = bool(pair.converged)
        except BoundViolationError as exc:
            row["converged"] = True
            row["error"] = f"bound violation: {exc}"
        except Exception as exc:
            row["converged"] = False
            row["error"] = f"{type(exc).__name__}: {exc}"
        if timings:
            row["wall_seconds"] = time.perf_counter() - start
        return row

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_row, params))
    else:
        records = [run_row(p) for p in params]

    slacks = [r["slack"] for r in records if r["converged"] and r["slack"] is not None]
    violations = sum(
        1
        for r in records
        if (r["error"] or "").startswith("bound violation")
        or (
            r["converged"]
            and r["slack"] is not None
            and r["slack"] < -1e-10 * r["bound_C"]
        )
    )
    errors = sum(1 for r in records if r["error"] and not r["error"].startswith("bound violation"))
    summary = {
        "rows": len(records),
        "converged": sum(1 for r in records if r["converged"] and not r["error"]),
        "errors": errors,
        "violations": violations,
        "min_slack": min(slacks) if slacks else None,
        "median_slack": float(np.median(slacks)) if slacks else None,
    }
    return records, summary


def run_truncation_study(m, lam, dims, cfg=None):
    """Dominant eigenvalue against M(lambda) at increasing dimension.

    Requires lambda > 0 (the infinite-dimensional bound exists there).  The
    `delta_mu` column reports the change against the previous dimension as
    an observation; nothing is asserted about monotonicity.
    """
    if lam <= 0.0:
        raise InvalidParameterError("lambda", "truncation study requires lambda > 0")
    cfg = cfg or SolverConfig()
    m_val = bound_M(lam)
    records = []
    prev_mu = None
    failures = 0
    for d in dims:
        t = HilbertTensor(m, d, lam)
        rep = bound_report(t)
        row = {c: None for c in TRUNCATION_COLUMNS}
        row.update({"d": int(d), "bound_C": rep.c_value, "bound_M": m_val})
        try:
            pair = z1_power_iterate(t, cfg)
            row["mu"] = float(pair.mu)
            row["gap_M_minus_mu"] = m_val - pair.mu
            row["delta_mu"] = None if prev_mu is None else float(pair.mu) - prev_mu
            row["residual"] = float(pair.residual)
            row["iterations"] = int(pair.iterations)
            row["converged"] = bool(pair.converged)
            if pair.converged:
                prev_mu = float(pair.mu)
            else:
                failures += 1
        except Exception as exc:  # record and continue with the next dimension
            row["converged"] = False
            row["error"] = f"{type(exc).__name__}: {exc}"
            failures += 1
        records.append(row)
    mus = [r["mu"] for r in records if r["converged"]]
    summary = {
        "m": int(m),
        "lambda": float(lam),
        "M": m_val,
        "rows": len(records),
        "non_converged": failures,
        "max_mu": max(mus) if mus else None,
        "min_gap": min(m_val - v for v in mus) if mus else None,
    }
    return records, summary


def run_inequality_check(
    trials,
    dims,
    a_values,
    seed=0,
    bound_scale=1.0,
    ingham_max_len=512,
):
    """Random-vector verification of the two Hilbert-type inequalities.

    For each dimension d in `dims` draws `trials` vectors with entries
    uniform in [-1, 1] and checks the bilinear sum against
    bound_scale * d*sin(pi/d) * ||x||_2^2; likewise for each a in `a_values`
    with random lengths up to `ingham_max_len` against bound_scale * M(a).
    `bound_scale` < 1 deliberately corrupts the bound (negative control for
    the witness path).  Returns (report, witness) with witness None unless a
    violation occurred.
    """
    if trials < 1:
        raise InvalidParameterError("trials", f"must be >= 1, got {trials!r}")
    for d in dims:
        if d < 2:
            raise NotApplicableError("frazer check needs dimensions >= 2")
    rng = np.random.default_rng(seed)
    witness = None

    frazer_max = 0.0
    frazer_viol = 0
    for d in dims:
        bound_const = bound_scale * d * math.sin(math.pi / d)
        for _ in range(trials):
            x = rng.uniform(-1.0, 1.0, d)
            nx2 = float(x @ x)
            if nx2 == 0.0:
                continue
            lhs = frazer_lhs(x)
            ratio = lhs / (bound_const * nx2)
            if ratio > frazer_max:
                frazer_max = ratio
            if ratio > 1.0:
                frazer_viol += 1
                if witness is None:
                    witness = {
                        "family": "frazer",
                        "d": int(d),
                        "x": [float(v) for v in x],
                        "lhs": lhs,
                        "bound": bound_const * nx2,
                        "ratio": ratio,
                    }

    ingham_max = 0.0
    ingham_viol = 0
    for a in a_values:
        m_const = bound_scale * bound_M(a)
        for _ in range(trials):
            length = int(rng.integers(1, ingham_max_len + 1))
            x = rng.uniform(-1.0, 1.0, length)
            nx2 = float(x @ x)
            if nx2 == 0.0:
                continue
            lhs = ingham_lhs(x, a)
            ratio = lhs / (m_const * nx2)
            if ratio > ingham_max:
                ingham_max = ratio
            if ratio > 1.0:
                ingham_viol += 1
                if witness is None:
                    witness = {
                        "family": "ingham",
                        "a": float(a),
                        "x": [float(v) for v in x],
                        "lhs": lhs,
                        "bound": m_const * nx2,
                        "ratio": ratio,
                    }

    report = {
        "frazer": {
            "dims": [int(d) for d in dims],
            "trials": int(trials),
            "max_ratio": frazer_max,
            "violations": frazer_viol,
        },
        "ingham": {
            "a_values": [float(a) for a in a_values],
            "trials": int(trials),
            "max_len": int(ingham_max_len),
            "max_ratio": ingham_max,
            "violations": ingham_viol,
        },
        "bound_scale": float(bound_scale),
        "pass": frazer_viol == 0 and ingham_viol == 0,
    }
    return report, witness


def run_bench(m, dims, lam=1.0, trials=3, seed=0):
    """bench_apply over a dimension list; one record per (d, method)."""
    records = []
    for d in dims:
        t = HilbertTensor(m, d, lam)
        records.extend(bench_apply(t, trials, seed=seed))
    return records


def _format_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def records_to_csv(records, columns):
    """RFC-4180 CSV text (UTF-8 friendly, LF line endings, header row)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([_format_cell(rec.get(c)) for c in columns])
    return buf.getvalue()
