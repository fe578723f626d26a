"""Command-line front end: hilbert-lab <command> [flags].

Commands: entry, apply, form, bounds, solve, sweep, truncation-study,
check-inequalities, bench.  Exit codes: 0 success, 1 usage/validation,
2 numeric violation detected, 3 internal error.
"""

import argparse
import json
import sys

import numpy as np

from . import lab
from .bounds import BoundViolationError, bound_report
from .core import (
    DimensionMismatchError,
    HilbertTensor,
    InvalidParameterError,
    NotApplicableError,
    apply_naive,
    as_vector,
    form_naive,
    norm_sup,
)
from .fast_hankel import apply_fast, form_fast
from .lab import (
    BENCH_COLUMNS,
    SWEEP_COLUMNS,
    TRUNCATION_COLUMNS,
    records_to_csv,
)
from .solver import (
    SolverConfig,
    simplex_grid_oracle,
    z1_newton_multistart,
    z1_newton_refine,
    z1_power_iterate,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_int_list(text):
    out = []
    for atom in text.split(","):
        atom = atom.strip()
        if ":" in atom:
            parts = [int(p) for p in atom.split(":")]
            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1
            out.extend(range(lo, hi + 1, step))
        elif atom:
            out.append(int(atom))
    if not out:
        raise InvalidParameterError("list", f"empty integer list {text!r}")
    return out


def _parse_float_list(text):
    out = []
    for atom in text.split(","):
        atom = atom.strip()
        if ":" in atom:
            parts = [float(p) for p in atom.split(":")]
            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1.0
            n = int(round((hi - lo) / step)) + 1
            out.extend(lo + k * step for k in range(max(n, 1)))
        elif atom:
            out.append(float(atom))
    if not out:
        raise InvalidParameterError("list", f"empty float list {text!r}")
    return out


def _parse_vector(text):
    data = json.loads(text)
    if not isinstance(data, list):
        raise InvalidParameterError("input", "expected a JSON array of numbers")
    return as_vector(data)


def _dump_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def _write(args, text, summary_lines=()):
    """Records to --out (or stdout); human summary to stdout (or stderr)."""
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        for line in summary_lines:
            print(line)
    else:
        sys.stdout.write(text)
        for line in summary_lines:
            print(line, file=sys.stderr)


def _emit_table(args, records, columns, summary, default_format="csv"):
    fmt = args.format or default_format
    if fmt == "json":
        text = _dump_json({"records": records, "summary": summary})
    else:
        text = records_to_csv(records, columns)
    lines = [
        "summary: " + ", ".join(f"{k}={_human(v)}" for k, v in summary.items())
    ]
    _write(args, text, lines)


def _human(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _descriptor(args):
    return HilbertTensor(args.m, args.dim, args.lam)


def cmd_entry(args):
    t = _descriptor(args)
    idx = _parse_int_list(args.index)
    val = t.entry(idx)
    _write(args, repr(float(val)) + "\n")
    return EXIT_OK


def _relative_diff(a, b):
    scale = max(1.0, norm_sup(np.atleast_1d(b)))
    return float(np.abs(np.atleast_1d(a) - np.atleast_1d(b)).max()) / scale


def cmd_apply(args):
    t = _descriptor(args)
    x = _parse_vector(args.input)
    if args.method == "both":
        naive = apply_naive(t, x)
        fast = apply_fast(t, x)
        out = {
            "naive": [float(v) for v in naive],
            "fast": [float(v) for v in fast],
            "max_rel_diff": _relative_diff(fast, naive),
        }
        _write(args, _dump_json(out))
    else:
        fn = apply_naive if args.method == "naive" else apply_fast
        _write(args, _dump_json([float(v) for v in fn(t, x)]))
    return EXIT_OK


def cmd_form(args):
    t = _descriptor(args)
    x = _parse_vector(args.input)
    if args.method == "both":
        naive = form_naive(t, x)
        fast = form_fast(t, x)
        out = {
            "naive": naive,
            "fast": fast,
            "max_rel_diff": abs(fast - naive) / max(1.0, abs(naive)),
        }
        _write(args, _dump_json(out))
    else:
        fn = form_naive if args.method == "naive" else form_fast
        _write(args, repr(float(fn(t, x))) + "\n")
    return EXIT_OK


def cmd_bounds(args):
    t = _descriptor(args)
    _write(args, _dump_json(bound_report(t).to_json()))
    return EXIT_OK


def cmd_solve(args):
    t = _descriptor(args)
    cfg = SolverConfig(
        tol=args.tol,
        max_iterations=args.max_iter,
        seed=args.seed,
        damping=args.damping,
    )
    if args.method == "power":
        pair = z1_power_iterate(t, cfg)
    elif args.method == "grid":
        resolution = args.resolution or (10_000 if t.dim <= 2 else 160)
        pairs = simplex_grid_oracle(t, resolution)
        if not pairs:
            print("error: grid oracle found no eigenpairs", file=sys.stderr)
            return EXIT_INTERNAL
        pair = max(pairs, key=lambda p: (abs(p.mu), p.mu))
    else:
        pairs = z1_newton_multistart(t, cfg, n_starts=args.starts, jobs=args.jobs)
        if pairs:
            pair = max(pairs, key=lambda p: (abs(p.mu), p.mu))
        else:
            x0 = np.full(t.dim, 1.0 / t.dim)
            pair = z1_newton_refine(t, (0.0, x0), cfg)

    rep = bound_report(t)
    rec = pair.to_json()
    rec["bound_C"] = rep.c_value
    rec["bound_M"] = rep.m_value
    rec["slack"] = rep.c_value - abs(pair.mu)
    rec["within_bound"] = abs(pair.mu) <= rep.c_value * (1.0 + 1e-10)
    _write(args, _dump_json(rec))
    return EXIT_OK


def _load_sweep_config(args):
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
        if args.m_list or args.dims or args.lambdas:
            raise InvalidParameterError(
                "config", "--config conflicts with --m-list/--dims/--lambdas"
            )
        ms = [int(v) for v in raw["m"]]
        dims = lab.expand_dims(raw["dims"])
        lambdas = lab.expand_lambdas(raw["lambdas"])
        cfg = lab.solver_config_from_dict(raw.get("solver"))
    else:
        if not (args.m_list and args.dims and args.lambdas):
            raise InvalidParameterError(
                "config", "need --config or all of --m-list/--dims/--lambdas"
            )
        ms = _parse_int_list(args.m_list)
        dims = lab.expand_dims(_parse_int_list(args.dims))
        lambdas = lab.expand_lambdas(_parse_float_list(args.lambdas))
        cfg = SolverConfig(
            tol=args.tol,
            max_iterations=args.max_iter,
            seed=args.seed,
            damping=args.damping,
        )
    return ms, dims, lambdas, cfg


def cmd_sweep(args):
    ms, dims, lambdas, cfg = _load_sweep_config(args)
    records, summary = lab.run_sweep(
        ms, dims, lambdas, cfg, jobs=args.jobs, timings=args.timings
    )
    columns = SWEEP_COLUMNS + (["wall_seconds"] if args.timings else [])
    _emit_table(args, records, columns, summary)
    if summary["violations"]:
        return EXIT_VIOLATION
    if summary["errors"]:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_truncation_study(args):
    cfg = SolverConfig(tol=args.tol, max_iterations=args.max_iter, seed=args.seed)
    dims = _parse_int_list(args.dims)
    records, summary = lab.run_truncation_study(args.m, args.lam, dims, cfg)
    _emit_table(args, records, TRUNCATION_COLUMNS, summary)
    return EXIT_OK


def cmd_check_inequalities(args):
    dims = _parse_int_list(args.dims)
    a_values = _parse_float_list(args.a_list)
    report, witness = lab.run_inequality_check(
        args.trials,
        dims,
        a_values,
        seed=args.seed,
        bound_scale=args.bound_scale,
        ingham_max_len=args.ingham_max_len,
    )
    _write(args, _dump_json(report))
    if witness is not None:
        path = args.witness_out
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(witness))
        print(f"violation witness written to {path}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_bench(args):
    dims = _parse_int_list(args.dims)
    records = lab.run_bench(args.m, dims, lam=args.lam, trials=args.trials, seed=args.seed)
    fmt = args.format or "csv"
    if fmt == "json":
        _write(args, _dump_json({"records": records, "summary": {}}))
    else:
        rows = []
        for rec in records:
            rows.append(
                {
                    "m": rec["m"],
                    "d": rec["d"],
                    "method": rec["method"],
                    "mean_seconds": "skipped" if rec["skipped"] else rec["mean_seconds"],
                }
            )
        _write(args, records_to_csv(rows, BENCH_COLUMNS))
    return EXIT_OK


def _add_descriptor_flags(p, dim_required=True):
    p.add_argument("--m", type=int, required=True, help="tensor order (>= 2)")
    if dim_required:
        p.add_argument("--dim", type=int, required=True, help="dimension (>= 1)")
    p.add_argument(
        "--lambda", dest="lam", type=float, required=True,
        help="shift; any real except non-positive integers",
    )


def _add_solver_flags(p):
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", dest="max_iter", type=int, default=10_000)
    p.add_argument("--damping", type=float, default=0.0)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(
        prog="hilbert-lab",
        description="Generalized Hilbert tensor laboratory: products, "
        "Z1-eigenpairs, spectral bounds, and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entry", parents=[common], help="one exact tensor entry")
    _add_descriptor_flags(p)
    p.add_argument("--index", required=True, help="comma-separated indices, e.g. 1,1,2")
    p.set_defaults(func=cmd_entry)

    p = sub.add_parser("apply", parents=[common], help="tensor-vector product T x^(m-1)")
    _add_descriptor_flags(p)
    p.add_argument("--input", required=True, help="JSON array, e.g. \"[1,1]\"")
    p.add_argument("--method", choices=("naive", "fast", "both"), default="fast")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("form", parents=[common], help="homogeneous form T x^m")
    _add_descriptor_flags(p)
    p.add_argument("--input", required=True, help="JSON array, e.g. \"[1,1]\"")
    p.add_argument("--method", choices=("naive", "fast", "both"), default="fast")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("bounds", parents=[common], help="C/N/M bound report")
    _add_descriptor_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", parents=[common], help="dominant Z1-eigenpair")
    _add_descriptor_flags(p)
    _add_solver_flags(p)
    p.add_argument("--method", choices=("power", "newton", "grid"), default="power")
    p.add_argument("--resolution", type=int, default=None, help="grid steps per edge")
    p.add_argument("--starts", type=int, default=24, help="Newton multistart count")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", parents=[common], help="(m, d, lambda) eigenvalue sweep")
    p.add_argument("--config", default=None, help="JSON sweep config file")
    p.add_argument("--m-list", dest="m_list", default=None, help="e.g. 2,3,4")
    p.add_argument("--dims", default=None, help="e.g. 2:50 or 2,4,8")
    p.add_argument("--lambdas", default=None, help="e.g. 0.1:5.0:0.1 or 0.5,1")
    _add_solver_flags(p)
    p.add_argument("--timings", action="store_true", help="include wall_seconds column")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser(
        "truncation-study", parents=[common],
        help="dominant eigenvalue vs the infinite-dimensional bound M(lambda)",
    )
    _add_descriptor_flags(p, dim_required=False)
    p.add_argument("--dims", required=True, help="e.g. 2,4,8,16 or 2:256:2")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_truncation_study)

    p = sub.add_parser(
        "check-inequalities", parents=[common],
        help="random-vector verification of the Hilbert-type inequalities",
    )
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--dims", default="2:64")
    p.add_argument("--a-list", dest="a_list", default="0.1,0.25,0.5,1,3")
    p.add_argument("--ingham-max-len", dest="ingham_max_len", type=int, default=512)
    p.add_argument(
        "--bound-scale", dest="bound_scale", type=float, default=1.0,
        help="multiply the bounds by this factor (< 1 is a negative control)",
    )
    p.add_argument(
        "--witness-out", dest="witness_out", default="inequality_witness.json",
        help="where to dump the witness vector on violation",
    )
    p.set_defaults(func=cmd_check_inequalities)

    p = sub.add_parser("bench", parents=[common], help="naive vs fast apply timings")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dims", required=True, help="e.g. 64,256,1024,4096")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # raised by argparse for usage errors and --help
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BoundViolationError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (
        InvalidParameterError,
        DimensionMismatchError,
        NotApplicableError,
        IndexError,
        KeyError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
