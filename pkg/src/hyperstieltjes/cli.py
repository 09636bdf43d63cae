"""Command-line front end.

    hyperstieltjes stieltjes --r 2 --m 0 --method all
    hyperstieltjes zeta --r 1 --s 2
    hyperstieltjes verify --suite misprints --format json
    hyperstieltjes table --kind sigmas --k-max 3

Exit codes: 0 success, 1 computational failure (tolerance unmet, pole,
failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from itertools import combinations

import mpmath

from .core import AccuracyError, DivergenceError, DomainError, EvalContext, HyperzetaError, PoleError, Real
from .expint import kernel_E_closed, kernel_E_integral
from .hyperzeta import POLE_RADIUS, pole_guard, zh_continued, zh_series
from .stieltjes import MAX_M, gamma_hr, gamma_star_formula, gamma_star_limit, sigma
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
R_MAX, K_MAX, P_MAX = 6, 8, 6
CSV_HEADER = ["quantity", "r", "m", "method", "value", "error", "terms"]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    precision_digits: int = 16
    tol: float = 1e-8
    terms: int = 100_000
    em_order: int = 4
    format: str = "text"

    def context(self) -> EvalContext:
        dps = max(20, self.precision_digits + 4)
        return EvalContext(tol=self.tol, n_terms=self.terms, em_order=self.em_order, dps=dps)


@dataclass
class Row:
    quantity: str
    params: dict
    method: str
    value: Real
    terms_used: int = 0

    def record(self, digits):
        return {
            "quantity": self.quantity,
            "params": self.params,
            "method": self.method,
            "value": mpmath.nstr(self.value.value, digits, strip_zeros=False),
            "error_estimate": float(self.value.err),
            "terms_used": self.terms_used,
        }


def _row(result, quantity=None):
    return Row(quantity or result.kind, dict(result.params), result.method, result.value, result.terms_used)


# ---------------------------------------------------------------- commands


def cmd_stieltjes(args, cfg):
    ctx = cfg.context()
    r, m = args.r, args.m
    if r < 0 or not 0 <= m <= MAX_M:
        raise UsageError(f"need r >= 0 and 0 <= m <= {MAX_M}")
    if args.star:
        routes = {"limit": lambda: gamma_star_limit(r, m, ctx), "formula": lambda: gamma_star_formula(r, m, ctx)}
        if r == 0:
            routes.pop("formula")
        if args.method in ("recurrence", "closed"):
            raise UsageError("the star constants have the routes 'limit' and 'formula'")
    else:
        routes = {name: (lambda name=name: gamma_hr(r, m, ctx, name)) for name in ("limit", "recurrence", "closed")}
        if r < 2:
            routes.pop("recurrence")
        if args.method == "formula":
            raise UsageError("'formula' applies to --star only")
    if args.method == "all":
        chosen = list(routes)
    elif args.method in routes:
        chosen = [args.method]
    else:
        raise UsageError(f"method {args.method!r} is not available for r={r}")
    quantity = "gamma_star_hr" if args.star else "gamma_hr"
    rows = [_row(routes[name](), quantity) for name in chosen]
    for row in rows:
        row.params = {"r": r, "m": m}
    if len(rows) > 1:
        diff = max(abs(a.value.value - b.value.value) for a, b in combinations(rows, 2))
        rows.append(Row("max_pairwise_diff", {"r": r, "m": m}, "all", Real(diff, 0.0)))
    return rows, _tol_check(rows[: len(chosen)], cfg)


def cmd_zeta(args, cfg):
    ctx = cfg.context()
    r, s, m = args.r, args.s, args.deriv_m
    if r < 0 or m < 0:
        raise UsageError("need r >= 0 and --deriv-m >= 0")
    if s > r:
        value, method = zh_series(r, s, m, ctx), "series"
    else:
        if m:
            raise UsageError("derivatives are only available in the series region s > r")
        if r == 0:
            raise UsageError("r = 0 is zeta(s+1); continuation is provided for r >= 1")
        pole_guard(r, s)
        value, method = zh_continued(r, s, args.k, ctx), "continuation"
    row = Row("zeta_hr", {"r": r, "s": s, "deriv_m": m}, method, value)
    return [row], _tol_check([row], cfg)


def cmd_verify(args, cfg):
    reports = run_suite(args.suite, cfg.context())
    return reports, EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_table(args, cfg):
    ctx = cfg.context()
    rows = []
    if args.kind == "gammas":
        if not (0 <= args.r_max <= R_MAX and 0 <= args.m_max <= MAX_M):
            raise UsageError(f"need 0 <= --r-max <= {R_MAX} and 0 <= --m-max <= {MAX_M}")
        for r in range(args.r_max + 1):
            for m in range(args.m_max + 1):
                res = gamma_hr(r, m, ctx, "closed")
                row = _row(res, "gamma_hr")
                row.params = {"r": r, "m": m}
                rows.append(row)
    elif args.kind == "sigmas":
        if not 1 <= args.k_max <= K_MAX:
            raise UsageError(f"need 1 <= --k-max <= {K_MAX}")
        for k in range(1, args.k_max + 1):
            a, b = sigma(k, ctx), sigma(k, ctx, "swapped")
            rows += [_row(a), _row(b), Row("sigma_route_diff", {"k": k}, "diff", Real(abs(a.value.value - b.value.value)))]
    else:
        if not 1 <= args.p_max <= P_MAX:
            raise UsageError(f"need 1 <= --p-max <= {P_MAX}")
        for p in range(1, args.p_max + 1):
            quad = kernel_E_integral(p, 0, ctx)
            closed = kernel_E_closed(p, ctx)
            rows.append(Row("kernel_E_integral", {"p": p, "m": 0}, "quadrature", quad.value, quad.panels))
            rows.append(Row("kernel_E_integral", {"p": p, "m": 0}, "closed", closed))
            rows.append(Row("kernel_E_route_diff", {"p": p}, "diff", Real(abs(quad.value.value - closed.value))))
    value_rows = [r for r in rows if r.method != "diff"]
    return rows, _tol_check(value_rows, cfg)


def _tol_check(rows, cfg):
    bad = [r for r in rows if r.value.err > cfg.tol]
    for r in bad:
        print(f"warning: {r.quantity} {r.params} [{r.method}] error {r.value.err:.2e} exceeds --tol {cfg.tol:g}",
              file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------- output


def emit(rows, cfg, out=sys.stdout):
    digits = cfg.precision_digits
    reports = bool(rows) and not isinstance(rows[0], Row)
    if cfg.format == "json":
        payload = [r.to_dict(digits) if reports else r.record(digits) for r in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        if reports:
            w.writerow(["id", "pass", "abs_diff", "tol", "lhs", "rhs"])
            for r in rows:
                d = r.to_dict(digits)
                w.writerow([d["id"], d["pass"], d["abs_diff"], d["tol"], d["lhs"], d["rhs"]])
        else:
            w.writerow(CSV_HEADER)
            for r in rows:
                rec = r.record(digits)
                p = r.params
                extra = {k: v for k, v in p.items() if k not in ("r", "m", "deriv_m")}
                name = r.quantity + ("[" + ",".join(f"{k}={v}" for k, v in extra.items()) + "]" if extra else "")
                w.writerow([name, p.get("r", ""), p.get("m", p.get("deriv_m", "")), r.method,
                            rec["value"], rec["error_estimate"], rec["terms_used"]])
    else:
        for r in rows:
            if reports:
                status = "PASS" if r.passed else "FAIL"
                diff = f"{r.abs_diff:.2e}" if r.abs_diff != float("inf") else "inf"
                out.write(f"{status}  {r.id}  diff={diff}  tol={r.tol:g}\n")
            else:
                args = ", ".join(f"{k}={v}" for k, v in r.params.items())
                rec = r.record(digits)
                out.write(f"{r.quantity}({args}) [{r.method}] = {rec['value']}  +/- {rec['error_estimate']:.1e}\n")
        if reports:
            n_bad = sum(not r.passed for r in rows)
            out.write(f"{len(rows) - n_bad}/{len(rows)} passed\n")


# ---------------------------------------------------------------- parser


def _digits(text):
    v = int(text)
    if v < 10:
        raise argparse.ArgumentTypeError("precision must be at least 10 digits")
    return v


def _positive(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-digits", type=_digits, default=16, help="significant digits printed (>= 10)")
    common.add_argument("--tol", type=_positive, default=1e-8, help="target absolute tolerance")
    common.add_argument("--terms", type=int, default=100_000, help="largest summation cutoff")
    common.add_argument("--em-order", type=int, default=4, help="minimum Euler-Maclaurin order")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")

    p = argparse.ArgumentParser(prog="hyperstieltjes", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    st = sub.add_parser("stieltjes", parents=[common], help="generalized Stieltjes constants")
    st.add_argument("--r", type=int, required=True)
    st.add_argument("--m", type=int, default=0)
    st.add_argument("--method", choices=["limit", "recurrence", "closed", "formula", "all"], default="closed")
    st.add_argument("--star", action="store_true", help="sum-minus-integral constants instead")
    st.set_defaults(func=cmd_stieltjes)

    z = sub.add_parser("zeta", parents=[common], help="hyperharmonic zeta function")
    z.add_argument("--r", type=int, required=True)
    z.add_argument("--s", type=float, required=True)
    z.add_argument("--deriv-m", type=int, default=0)
    z.add_argument("--k", type=int, default=2, help="Bernoulli order of the continuation")
    z.set_defaults(func=cmd_zeta)

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("--suite", choices=["all", *SUITES], default="all")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="grids of constants")
    t.add_argument("--kind", choices=["gammas", "sigmas", "integrals"], required=True)
    t.add_argument("--r-max", type=int, default=3)
    t.add_argument("--m-max", type=int, default=2)
    t.add_argument("--k-max", type=int, default=6)
    t.add_argument("--p-max", type=int, default=3)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = CliConfig(args.precision_digits, args.tol, args.terms, args.em_order, args.format)
        if cfg.em_order < 0 or cfg.terms < 10:
            raise UsageError("need --em-order >= 0 and --terms >= 10")
        rows, code = args.func(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PoleError as exc:
        print(f"error: {exc} (guard radius {POLE_RADIUS:g})", file=sys.stderr)
        return EXIT_FAIL
    except (AccuracyError, DivergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HyperzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    emit(rows, cfg, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
