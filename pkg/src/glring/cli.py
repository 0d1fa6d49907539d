"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or argument error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import series_lab as sl
from .conjecture import conjecture_report
from .errors import InvalidArgument, PaperParseError, ResourceLimitError
from .exact_linalg import IntMatrix, rank
from .lambda_ring import Mode
from .paper_tables import verify_paper_tables
from .partitions import Kind, format_partition, parse_partition
from .simple_f2 import jk_image_dim
from .symmetric_powers import expand_sym, left_null_covectors, mod2_reduce, sym_rank_profile
from .t_operator import block_decompose, build_t_matrices

FORMATS = ("paper", "json", "csv")


def _dump_json(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _grid(M: IntMatrix) -> str:
    if not M.nrows:
        return ""
    width = max(len(str(x)) for r in M.rows for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in M.rows)


def _labels(n: int, kind: Kind) -> list:
    return [list(p) for p in Mode(kind, n).basis().labels()] if (kind is Kind.M or n) else [[]]


def _matrix_out(M: IntMatrix, n: int, kind: Kind, fmt: str, name: str) -> str:
    labels = _labels(n, kind)
    if fmt == "json":
        return _dump_json({"n": n, "mode": kind.value, "basis": labels, "entries": M.tolist()})
    if fmt == "csv":
        head = [""] + [format_partition(p) for p in labels]
        return _csv(head, [[format_partition(p)] + r for p, r in zip(labels, M.rows)])
    basis = ", ".join(format_partition(p) for p in labels)
    return f"{name}, basis {{{basis}}}\n{_grid(M)}"


# -- subcommands ---------------------------------------------------------------

def cmd_sym(args) -> int:
    rows = [expand_sym(args.n, k) for k in range(args.max_k + 1)]
    if args.mod2:
        rows = [mod2_reduce(r) for r in rows]
    symbol = "sq" if args.mod2 else "s"
    mode = Mode.M(args.n)
    labels = [list(p) for p in mode.basis().labels()]
    if args.format == "json":
        print(_dump_json({"n": args.n, "mode": "M", "mod2": args.mod2, "basis": labels,
                          "rows": [r.coordinates() for r in rows]}))
    elif args.format == "csv":
        print(_csv(["k"] + [format_partition(p) for p in labels],
                   [[k] + r.coordinates() for k, r in enumerate(rows)]))
    else:
        for k, r in enumerate(rows):
            print(f"{symbol}_{k} = {r.to_paper()}")
    return 0


def cmd_tau(args) -> int:
    mats = build_t_matrices(args.n)
    kind = Kind.GL if args.n else Kind.M
    print(_matrix_out(mats.tau_printed, args.n, kind, args.format, f"tau_{args.n}"))
    return 0


def cmd_tmat(args) -> int:
    if args.n < 1:
        raise InvalidArgument("tmat needs n >= 1")
    mats = build_t_matrices(args.n)
    if not args.blocks:
        print(_matrix_out(mats.t, args.n, Kind.M, args.format, f"t_{args.n}"))
        return 0
    b = block_decompose(mats.t, args.n)
    checks = {
        "lower_left_zero": b.lower_left.is_zero(),
        "tau_equals_t_prev_plus_delta": b.tau_block == b.t_prev + b.delta,
        "tau_equals_gl_transpose": b.tau_block == mats.mult_GL.T,
    }
    if args.format == "json":
        print(_dump_json({"n": args.n, "t_prev": b.t_prev.tolist(), "delta": b.delta.tolist(),
                          "lower_left": b.lower_left.tolist(), "tau_block": b.tau_block.tolist(),
                          "checks": checks}))
    else:
        for name, M in (("t_prev", b.t_prev), ("delta", b.delta), ("lower_left", b.lower_left),
                        ("tau_block", b.tau_block)):
            print(f"{name}\n{_grid(M)}")
        for name, ok in checks.items():
            print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if all(checks.values()) else 1


def cmd_eigen(args) -> int:
    rep = conjecture_report(args.n, method=args.method, kernel_at_one=args.kernel_at_1)
    if args.format == "json":
        d = rep.to_json()
        d.pop("timings")
        print(_dump_json(d))
    else:
        spectrum = ", ".join(f"{r}^{m}" for r, m in rep.spectrum.items())
        print(f"n = {rep.n} ({rep.method}): spectrum {spectrum}")
        for c in rep.checks:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f" ({c.detail})" if c.detail else ""))
        if rep.kernel_at_one is not None:
            print("kernel of t - 1:")
            for v in rep.kernel_at_one:
                print(" ".join(map(str, v)))
    return 0 if rep.passed else 1


def cmd_rank_sym(args) -> int:
    profile = sym_rank_profile(args.n, args.max_k)
    covectors = left_null_covectors(args.n, args.max_k) if args.null_covectors else None
    if args.format == "json":
        out = {"n": args.n, "max_k": args.max_k, "basis_size": 1 << args.n, "profile": profile}
        if covectors is not None:
            out["null_covectors"] = covectors
        print(_dump_json(out))
    else:
        for k, r in enumerate(profile):
            print(f"k = {k}: rank {r}")
        print(f"rank {profile[-1]} of {1 << args.n} after k <= {args.max_k}")
        if covectors is not None:
            print(f"{len(covectors)} null covector(s)")
            for v in covectors:
                print(" ".join(map(str, v)))
    return 0


def _print_series(s: sl.PowerSeries, fmt: str) -> None:
    if fmt == "json":
        print(_dump_json({"order": s.order, "coefficients": list(s.coefficients)}))
    elif fmt == "sparse":
        print(" ".join(f"{d}:{c}" for d, c in s.sparse().items()))
    else:
        print(",".join(map(str, s.coefficients)))


def _form(args) -> sl.RationalForm:
    dens = [int(x) for x in args.den.split(",") if x.strip()] if args.den else []
    return sl.RationalForm(sl.parse_poly(args.num), dens)


def cmd_series(args) -> int:
    if args.series_cmd == "steinberg":
        form = sl.steinberg_form(args.n)
        if args.order is None:
            print(form)
        else:
            _print_series(sl.expand(form, args.order), args.format)
    elif args.series_cmd == "chi":
        _print_series(sl.chi_series(args.j, args.order), args.format)
    elif args.series_cmd == "expand":
        _print_series(sl.expand(_form(args), args.order), args.format)
    elif args.series_cmd == "pole-order":
        print(sl.pole_order_at_one(_form(args)))
    elif args.series_cmd == "connectivity":
        print(sl.connectivity(parse_partition(args.lam)))
    elif args.series_cmd == "eigen-denominator":
        print(sl.format_poly(sl.eigenvector_denominator_poly(args.n)))
    return 0


def cmd_simple_dim(args) -> int:
    dims = [int(x) for x in args.dim.split(",")]
    lams = [tuple(int(x) for x in lam.strip("()").split(",")) for lam in args.lam]
    header = ["lambda"] + [f"m={m}" for m in dims]
    rows = [[format_partition(lam)] + [jk_image_dim(lam, m, budget=args.budget) for m in dims] for lam in lams]
    if len(lams) == 1 and len(dims) == 1:
        print(rows[0][1])
    else:
        print(_csv(header, rows))
    return 0


def cmd_verify(args) -> int:
    verdicts = verify_paper_tables(args.data)
    if args.format == "json":
        print(_dump_json([{"name": v.name, "passed": v.passed, "detail": v.detail} for v in verdicts]))
    else:
        for v in verdicts:
            print(v.line())
        failed = sum(not v.passed for v in verdicts)
        print(f"{len(verdicts) - failed}/{len(verdicts)} checks passed")
    return 0 if all(v.passed for v in verdicts) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sym", help="symmetric powers in the exterior-power basis")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-k", type=int, required=True)
    s.add_argument("--mod2", action="store_true")
    s.add_argument("--format", choices=FORMATS, default="paper")
    s.set_defaults(func=cmd_sym)

    s = sub.add_parser("tau", help="printed tau_n (GL-mode operator matrix)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=FORMATS, default="paper")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("tmat", help="t_n and its block decomposition")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--blocks", action="store_true")
    s.add_argument("--format", choices=FORMATS, default="paper")
    s.set_defaults(func=cmd_tmat)

    s = sub.add_parser("eigen", help="check spectrum and diagonalizability of t_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--kernel-at-1", action="store_true")
    s.add_argument("--method", choices=("auto", "exact", "modular"), default="auto")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_eigen)

    s = sub.add_parser("rank-sym", help="rank profile of the symmetric-power span")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-k", type=int, required=True)
    s.add_argument("--null-covectors", action="store_true")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_rank_sym)

    s = sub.add_parser("series", help="power series utilities")
    ssub = s.add_subparsers(dest="series_cmd", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("list", "sparse", "json"), default="list")
    t = ssub.add_parser("steinberg", parents=[fmt])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--order", type=int)
    t = ssub.add_parser("chi", parents=[fmt])
    t.add_argument("--j", type=int, required=True)
    t.add_argument("--order", type=int, default=sl.DEFAULT_ORDER)
    t = ssub.add_parser("expand", parents=[fmt], help="numerator coefficients / prod (1-q^d)")
    t.add_argument("--num", required=True, help="coefficients, lowest degree first, e.g. 0,0,0,0,1")
    t.add_argument("--den", default="", help="denominator exponents, e.g. 1,3")
    t.add_argument("--order", type=int, default=sl.DEFAULT_ORDER)
    t = ssub.add_parser("pole-order")
    t.add_argument("--num", required=True)
    t.add_argument("--den", default="")
    t = ssub.add_parser("connectivity")
    t.add_argument("--lambda", dest="lam", required=True)
    t = ssub.add_parser("eigen-denominator")
    t.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("simple-dim", help="dimension of V^(x d) C R C over F_2")
    s.add_argument("--lambda", dest="lam", action="append", required=True)
    s.add_argument("--dim", required=True, help="m or a comma-separated list")
    s.add_argument("--budget", type=int, default=1 << 15)
    s.set_defaults(func=cmd_simple_dim)

    s = sub.add_parser("verify-paper-tables", help="recompute and compare the printed tables")
    s.add_argument("--data", default=None, help="fixture directory (default: packaged data)")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidArgument, PaperParseError, ResourceLimitError, ValueError) as exc:
        print(f"glring: error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"glring: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
