"""Command-line front end.

Subcommands: `table` (q-Genocchi numbers/polynomials), `verify` (identity
suite as newline-delimited JSON reports), `padic-converge` (Riemann-sum
error valuations), `loggamma` (series vs direct values), `bernstein`
(basis polynomials and their fermionic integrals).

Exit codes: 0 success, 2 invalid configuration, 3 evaluation error (pole),
4 convergence/agreement criterion violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from . import identities as ident
from .bernstein import bernstein_basis
from .errors import DomainError, PoleError, PrecisionExhausted
from .exactq import QRational
from .genocchi import genocchi_number, genocchi_polynomial, integrate_polynomial
from .padic import (
    PadicContext,
    PadicNumber,
    loggamma_direct,
    loggamma_series,
    moment_convergence,
)


class _ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n_max: int = 0
    n: int = 0
    k: int | None = None
    prime: int = 3
    precision: int = 12
    m_max: int = 5
    q_spec: str = "symbolic"
    x_spec: str = "1/p"
    only: tuple = ()
    polynomials: bool = False
    format: str = "text"
    output_path: str | None = None
    lines: list = field(default_factory=list)

    def emit(self, line: str) -> None:
        self.lines.append(line)


def _parse_q(cfg: RunConfig, allow_symbolic: bool):
    spec = cfg.q_spec.strip()
    if spec == "symbolic":
        if not allow_symbolic:
            raise _ConfigError("this command needs a numeric q (a rational or 1+p)")
        return None
    if spec == "1+p":
        return Fraction(1 + cfg.prime)
    try:
        return Fraction(spec)
    except (ValueError, ZeroDivisionError) as e:
        raise _ConfigError(f"cannot parse q spec {spec!r}: {e}") from None


def _parse_x(cfg: RunConfig) -> Fraction:
    spec = cfg.x_spec.strip()
    if spec == "1/p":
        return Fraction(1, cfg.prime)
    try:
        return Fraction(spec)
    except (ValueError, ZeroDivisionError) as e:
        raise _ConfigError(f"cannot parse x spec {spec!r}: {e}") from None


def _check_padic_config(cfg: RunConfig) -> PadicContext:
    try:
        return PadicContext(cfg.prime, cfg.precision)
    except DomainError as e:
        raise _ConfigError(str(e)) from None


# -- table ---------------------------------------------------------------------


def run_table(cfg: RunConfig) -> int:
    if cfg.n_max < 0:
        raise _ConfigError("--nmax must be non-negative")
    q0 = _parse_q(cfg, allow_symbolic=True)
    if cfg.format == "csv" and not cfg.polynomials:
        cfg.emit("n,value")
    for n in range(cfg.n_max + 1):
        if cfg.polynomials:
            poly = genocchi_polynomial(n)
            if q0 is not None:
                poly = poly.map_coeffs(lambda c: QRational(c.evaluate(q0)))
            if cfg.format == "json":
                cfg.emit(json.dumps({"n": n, "coefficients": [c.to_text() for c in poly.coeffs]}))
            elif cfg.format == "csv":
                for k, c in enumerate(poly.coeffs):
                    cfg.emit(f"{n},{k},{c.to_text()}")
            else:
                cfg.emit(f"G~_{n}(x) = {poly.to_text()}")
        else:
            g = genocchi_number(n)
            value = g.to_text() if q0 is None else str(g.evaluate(q0))
            if cfg.format == "json":
                cfg.emit(json.dumps({"n": n, "value": value}))
            elif cfg.format == "csv":
                cfg.emit(f"{n},{value}")
            else:
                cfg.emit(f"G~_{n} = {value}")
    return 0


# -- verify ----------------------------------------------------------------------


_EXPECTED_TO_PASS = {
    "EQ6", "EQ7", "THM1", "THM2_EQ10", "THM3_EQ13", "THM4_EQ11",
    "THM5_EQ12", "PROP_EQ14", "PROP_EQ15", "THM6_EQ16",
}

_INSTANCE_SIDES = {
    "THM1": (0, ident.frobenius_link_sides),
    "THM2_EQ10": (0, ident.complement_sides),
    "THM3_EQ13": (1, ident.boundary_sides),
    "THM4_EQ11": (1, ident.reflection_sides),
    "THM5_EQ12": (0, ident.binomial_expansion_sides),
    "PROP_EQ14": (0, ident.umbral_recurrence_sides),
    "PROP_EQ15": (2, ident.shift_two_sides),
    "THM6_EQ16": (1, ident.one_minus_xi_sides),
}

_DEFAULT_NMAX = {
    "EQ6": 5, "EQ7": 5, "THM1": 20, "THM2_EQ10": 20, "THM3_EQ13": 30,
    "THM4_EQ11": 25, "THM5_EQ12": 20, "PROP_EQ14": 30, "PROP_EQ15": 20,
    "THM6_EQ16": 20, "THM7": 8, "THM8": 4,
}


def _resolve_identity_id(name: str) -> str:
    """Accept an exact identity id or a unique prefix (THM4 -> THM4_EQ11)."""
    if name in ident.IDENTITY_IDS:
        return name
    matches = [i for i in ident.IDENTITY_IDS if i.startswith(name)]
    if len(matches) == 1:
        return matches[0]
    if matches:
        raise _ConfigError(f"ambiguous identity id {name!r}: matches {matches}")
    raise _ConfigError(f"unknown identity id {name!r}; choose from {list(ident.IDENTITY_IDS)}")


def _thm7_instances(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            yield ident.verify_bernstein_single(n, k)


def _thm8_instances(max_degree: int):
    from itertools import combinations_with_replacement

    for m in (1, 2, 3):
        for degrees in combinations_with_replacement(range(1, max_degree + 1), m):
            for k in range(min(degrees) + 1):
                yield ident.verify_bernstein_product(degrees, k)


def _aggregate_reports(only: set | None, nmax_override: int | None):
    """Reports in the default (aggregate) granularity, in id order."""
    nm = dict(_DEFAULT_NMAX)
    if nmax_override is not None:
        for key in nm:
            nm[key] = nmax_override
    reports = []

    def want(name):
        return only is None or name in only

    if want("EQ6"):
        for n in range(2, max(nm["EQ6"], 2) + 1):
            reports.append(ident.verify_shift_equation(n, 6))
    if want("EQ7"):
        reports.append(ident.verify_shift_equation(1, 6))
    if want("THM1"):
        reports.append(ident.verify_frobenius_link(nm["THM1"]))
    if want("THM2_EQ10"):
        reports.append(ident.verify_complement(nm["THM2_EQ10"]))
    if want("THM3_EQ13"):
        reports.append(ident.verify_boundary(nm["THM3_EQ13"]))
    if want("THM4_EQ11"):
        reports.append(ident.verify_reflection(nm["THM4_EQ11"]))
    if want("THM5_EQ12"):
        reports.append(ident.verify_binomial_expansion(nm["THM5_EQ12"]))
    if want("PROP_EQ14"):
        reports.append(ident.verify_umbral_recurrence(nm["PROP_EQ14"]))
    if want("PROP_EQ15"):
        reports.append(ident.verify_shift_two(max(nm["PROP_EQ15"], 2)))
    if want("THM6_EQ16"):
        reports.append(ident.verify_one_minus_xi(max(nm["THM6_EQ16"], 1)))
    if want("THM7"):
        reports.extend(_thm7_instances(nm["THM7"]))
    if want("THM8"):
        reports.extend(_thm8_instances(min(nm["THM8"], 4)))
    return reports


def _instance_reports(name: str, n_max: int):
    """Per-instance reports for one range identity (the --only view)."""
    start, sides = _INSTANCE_SIDES[name]
    out = []
    if name == "PROP_EQ15":
        for n in (0, 1):
            lhs, rhs = sides(n)
            out.append(ident.IdentityReport(
                name, {"n": n}, ident.PASS if lhs == rhs else ident.FAIL,
                corrected_form="probe outside the stated range; expected",
                witness=(str(lhs), str(rhs)), is_probe=True))
    if name == "THM6_EQ16":
        lhs, rhs = sides(0)
        out.append(ident.IdentityReport(
            name, {"n": 0}, ident.PASS if lhs == rhs else ident.FAIL,
            corrected_form="probe outside the stated range; expected",
            witness=(str(lhs), str(rhs)), is_probe=True))
    for n in range(start, n_max + 1):
        lhs, rhs = sides(n)
        if lhs == rhs:
            out.append(ident.IdentityReport(name, {"n": n}, ident.PASS))
        else:
            out.append(ident.IdentityReport(name, {"n": n}, ident.FAIL, witness=(str(lhs), str(rhs))))
    return out


def run_verify(cfg: RunConfig) -> int:
    if cfg.q_spec != "symbolic":
        raise _ConfigError("verify runs symbolically; drop --q")
    if cfg.format == "csv":
        raise _ConfigError("verify emits json or text, not csv")
    only = {_resolve_identity_id(name) for name in cfg.only} if cfg.only else None
    nmax_override = cfg.n_max if cfg.n_max > 0 else None

    reports = []
    if only:
        for name in ident.IDENTITY_IDS:
            if name not in only:
                continue
            nm = nmax_override or _DEFAULT_NMAX[name]
            if name in _INSTANCE_SIDES:
                reports.extend(_instance_reports(name, nm))
            elif name == "EQ7":
                reports.append(ident.verify_shift_equation(1, 6))
            elif name == "EQ6":
                for n in range(2, max(nm, 2) + 1):
                    reports.append(ident.verify_shift_equation(n, 6))
            elif name == "THM7":
                reports.extend(_thm7_instances(nm))
            elif name == "THM8":
                reports.extend(_thm8_instances(min(nm, 4)))
    else:
        reports = _aggregate_reports(None, nmax_override)

    bad = False
    for r in reports:
        for line_report in (r, *r.probes):
            if cfg.format == "json":
                cfg.emit(line_report.to_json_line())
            else:
                extra = f"  [{line_report.corrected_form}]" if line_report.corrected_form else ""
                cfg.emit(f"{line_report.identity_id} {line_report.params}: {line_report.verdict}{extra}")
        if r.verdict == ident.FAIL and r.identity_id in _EXPECTED_TO_PASS and not r.is_probe:
            bad = True
    return 1 if bad else 0


# -- p-adic commands -------------------------------------------------------------


def _strictly_increasing(vals):
    """Error valuations must strictly increase; exact (inf) entries may
    repeat.  Returns the first offending level, or None."""
    for (m1, a), (m2, b) in zip(vals, vals[1:]):
        if a == inf and b == inf:
            continue
        if a is None or b is None or not (b > a):
            return m2
    return None


def run_padic_converge(cfg: RunConfig) -> int:
    ctx = _check_padic_config(cfg)
    q0 = _parse_q(cfg, allow_symbolic=False)
    if cfg.n < 0 or cfg.m_max < 1:
        raise _ConfigError("need --n >= 0 and --mmax >= 1")
    seq = moment_convergence(cfg.n, q0, cfg.m_max, ctx)
    rows = [(m, "exact" if v == inf else v) for m, v in seq]
    if cfg.format == "csv":
        cfg.emit("level,error_valuation")
        for m, v in rows:
            cfg.emit(f"{m},{v}")
    elif cfg.format == "text":
        for m, v in rows:
            cfg.emit(f"level {m}: error valuation {v}")
    else:
        for m, v in rows:
            cfg.emit(json.dumps({"level": m, "error_valuation": v}))
    offender = _strictly_increasing(seq)
    if offender is not None:
        print(f"convergence criterion violated at level {offender}", file=sys.stderr)
        return 4
    return 0


def run_loggamma(cfg: RunConfig) -> int:
    ctx = _check_padic_config(cfg)
    q0 = _parse_q(cfg, allow_symbolic=False)
    x = PadicNumber.from_rational(_parse_x(cfg), ctx)
    if cfg.m_max < 1:
        raise _ConfigError("need --mmax >= 1")
    try:
        series = loggamma_series(x, q0, ctx)
    except DomainError as e:
        raise _ConfigError(str(e)) from None
    rows = []
    agreements = []
    for m in range(1, cfg.m_max + 1):
        direct = loggamma_direct(x, q0, m, ctx)
        diff = series - direct
        v = diff.abs_precision if diff.is_zero else diff.valuation
        agreements.append((m, v))
        rows.append((m, direct, v))
    if cfg.format == "text":
        cfg.emit(f"series: {series}")
        for m, direct, v in rows:
            cfg.emit(f"level {m}: direct {direct}; agreement valuation {v}")
    else:
        cfg.emit(json.dumps({"kind": "series", "value": str(series),
                             "abs_precision": series.abs_precision}))
        for m, direct, v in rows:
            cfg.emit(json.dumps({"kind": "direct", "level": m, "value": str(direct),
                                 "agreement_valuation": v}))
    offender = _strictly_increasing(agreements)
    if offender is not None:
        print(f"agreement criterion violated at level {offender}", file=sys.stderr)
        return 4
    return 0


# -- bernstein --------------------------------------------------------------------


def run_bernstein(cfg: RunConfig) -> int:
    if cfg.n < 0:
        raise _ConfigError("--n must be non-negative")
    ks = list(range(cfg.n + 1)) if cfg.k is None else [cfg.k]
    if cfg.format == "csv":
        cfg.emit("k,n,polynomial,integral")
    for k in ks:
        if not 0 <= k <= cfg.n:
            raise _ConfigError(f"need 0 <= k <= n, got k={k}, n={cfg.n}")
        basis = bernstein_basis(k, cfg.n)
        integral = integrate_polynomial(basis)
        if cfg.format == "json":
            cfg.emit(json.dumps({
                "k": k, "n": cfg.n,
                "polynomial": basis.to_text(),
                "integral": integral.to_text(),
            }))
        elif cfg.format == "csv":
            cfg.emit(f'{k},{cfg.n},"{basis.to_text()}","{integral.to_text()}"')
        else:
            cfg.emit(f"B_{k},{cfg.n}(x) = {basis.to_text()}; integral = {integral.to_text()}")
    return 0


# -- argument plumbing -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgenocchi",
        description="Exact q-Genocchi data, identity verification, and p-adic experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices):
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--out", dest="output_path", default=None, metavar="PATH")

    p = sub.add_parser("table", help="emit q-Genocchi numbers or polynomial coefficients")
    p.add_argument("--nmax", dest="n_max", type=int, required=True)
    p.add_argument("--q", dest="q_spec", default="symbolic")
    p.add_argument("--polynomials", action="store_true")
    add_common(p, ("text", "json", "csv"))

    p = sub.add_parser("verify", help="run identity verifiers, one JSON report per line")
    p.add_argument("--only", default="", help="comma-separated identity ids")
    p.add_argument("--nmax", dest="n_max", type=int, default=0)
    p.add_argument("--q", dest="q_spec", default="symbolic")
    add_common(p, ("json", "text"))

    p = sub.add_parser("padic-converge", help="Riemann-sum error valuations toward a moment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--q", dest="q_spec", default="1+p")
    p.add_argument("--mmax", dest="m_max", type=int, default=5)
    p.add_argument("--precision", type=int, default=12)
    add_common(p, ("json", "csv", "text"))

    p = sub.add_parser("loggamma", help="log-gamma series vs direct Riemann sums")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--q", dest="q_spec", default="1+p")
    p.add_argument("--x", dest="x_spec", default="1/p")
    p.add_argument("--mmax", dest="m_max", type=int, default=4)
    p.add_argument("--precision", type=int, default=12)
    add_common(p, ("json", "text"))

    p = sub.add_parser("bernstein", help="Bernstein basis polynomials and their integrals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    add_common(p, ("text", "json", "csv"))

    return parser


_RUNNERS = {
    "table": run_table,
    "verify": run_verify,
    "padic-converge": run_padic_converge,
    "loggamma": run_loggamma,
    "bernstein": run_bernstein,
}


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("n_max", "n", "k", "prime", "precision", "m_max", "q_spec",
                 "x_spec", "polynomials", "format", "output_path"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "only", ""):
        cfg.only = tuple(s.strip() for s in args.only.split(",") if s.strip())
    return cfg


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        status = _RUNNERS[cfg.command](cfg)
    except (_ConfigError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (PoleError, PrecisionExhausted) as e:
        print(f"evaluation error: {e}", file=sys.stderr)
        return 3
    text = "\n".join(cfg.lines) + ("\n" if cfg.lines else "")
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
