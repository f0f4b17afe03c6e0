"""Command-line entry point.

Subcommands: gtn, xseries, bound, fs, inverse-fs, log-coeff, conv-fs, dist,
member, lemma, verify.  Every subcommand supports ``--format json|csv|table``;
machine formats print floats with 12 significant digits, tables with 6.

Flag values override an optional ``--config FILE`` (simple ``key=value``
lines), which overrides built-in defaults.  Exit codes: 0 success, 1 usage
error, 2 soundness violation in ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from gtnbounds import bounds, verify
from gtnbounds.bazilevic import ClassParams, membership_witness
from gtnbounds.caratheodory import (
    GridSpec,
    brute_force_sup,
    lemma1_bound,
    lemma3_bound,
    lemma4_bound,
)
from gtnbounds.distributions import coefficients
from gtnbounds.series import TruncatedSeries
from gtnbounds.telephone import gtn_sequence, x_series

BUILTIN_DEFAULTS = {
    "vartheta": 0.0,
    "kappa": 0.0,
    "varkappa": 1.0,
    "grid": 60,
    "format": "table",
}


class CliParser(argparse.ArgumentParser):
    """argparse parser that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _parse_complex(text: str) -> complex:
    """Parse 'RE' or 'RE,IM'."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def load_config(path: str | None) -> dict:
    if not path:
        return {}
    cfg: dict = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key in ("vartheta", "kappa", "varkappa"):
            cfg[key] = float(Fraction(value))
        elif key == "grid":
            cfg[key] = int(value)
        elif key == "format":
            cfg[key] = value
    return cfg


def _resolve(args: argparse.Namespace, cfg: dict, key: str):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    return cfg.get(key, BUILTIN_DEFAULTS[key])


def _params(args, cfg) -> ClassParams:
    return ClassParams(
        float(_resolve(args, cfg, "vartheta")),
        float(_resolve(args, cfg, "kappa")),
        float(_resolve(args, cfg, "varkappa")),
    )


# ---------------------------------------------------------------------------
# Output formatting

def _sanitize(obj, digits: int):
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, complex):
        return [float(f"{obj.real:.{digits}g}"), float(f"{obj.imag:.{digits}g}")]
    if isinstance(obj, dict):
        return {k: _sanitize(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v, digits) for v in obj]
    return obj


def _cell(v, digits: int) -> str:
    if isinstance(v, float):
        return f"{v:.{digits}g}"
    if isinstance(v, complex):
        return f"{v.real:.{digits}g}{v.imag:+.{digits}g}i"
    return str(v)


def emit_rows(rows: list[dict], fmt: str, stream=None) -> None:
    """Print a list of records as json, csv, or an aligned table."""
    stream = stream or sys.stdout
    if fmt == "json":
        payload = _sanitize(rows if len(rows) != 1 else rows[0], 12)
        stream.write(json.dumps(payload, indent=2) + "\n")
        return
    header = list(rows[0].keys())
    if fmt == "csv":
        writer = csv.writer(stream)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row[h], 12) for h in header])
        return
    cells = [[_cell(row[h], 6) for h in header] for row in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    stream.write("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)) + "\n")
    for c in cells:
        stream.write("  ".join(c[i].ljust(widths[i]) for i in range(len(header))) + "\n")


# ---------------------------------------------------------------------------
# Subcommand handlers (return process exit codes)

def cmd_gtn(args, cfg) -> int:
    vk = args.varkappa if args.varkappa is not None else Fraction(
        str(cfg.get("varkappa", BUILTIN_DEFAULTS["varkappa"]))
    )
    if vk < 1:
        print(
            "warning: the telephone-number interpretation assumes varkappa >= 1",
            file=sys.stderr,
        )
    values = gtn_sequence(vk, args.max_n)
    rows = [
        {"n": n, "value": int(v) if v.denominator == 1 else str(v)}
        for n, v in enumerate(values)
    ]
    emit_rows(rows, _resolve(args, cfg, "format"))
    return 0


def cmd_xseries(args, cfg) -> int:
    vk = float(_resolve(args, cfg, "varkappa"))
    xs = x_series(vk, args.order)
    rows = [{"n": n, "coefficient": float(c.real)} for n, c in enumerate(xs.coeffs)]
    emit_rows(rows, _resolve(args, cfg, "format"))
    return 0


def cmd_bound(args, cfg) -> int:
    p = _params(args, cfg)
    value = bounds.a2_bound(p) if args.which == "a2" else bounds.a3_bound(p)
    emit_rows(
        [{"bound": args.which, "vartheta": p.vartheta, "kappa": p.kappa,
          "varkappa": p.varkappa, "value": value}],
        _resolve(args, cfg, "format"),
    )
    return 0


def cmd_fs(args, cfg) -> int:
    p = _params(args, cfg)
    mu = args.mu
    fmt = _resolve(args, cfg, "format")
    if mu.imag == 0.0:
        verdict = bounds.fs_real(p, mu.real)
        emit_rows(
            [{
                "mu": mu.real,
                "value": verdict.value,
                "branch": verdict.branch,
                "sigma1": verdict.sigma1,
                "sigma2": verdict.sigma2,
                "aleph": verdict.aleph,
                "as_printed": verdict.as_printed,
                "printed_nonpositive": verdict.printed_nonpositive,
            }],
            fmt,
        )
    else:
        emit_rows(
            [{
                "mu": mu,
                "value": bounds.fs_complex(p, mu),
                "alternate_prefactor_value":
                    bounds.fs_complex(p, mu) * p.L * bounds.fs_complex_alternate(p),
            }],
            fmt,
        )
    return 0


def cmd_inverse_fs(args, cfg) -> int:
    p = _params(args, cfg)
    d2_stated, d2_oracle = bounds.inverse_d2_bound(p)
    d3_stated, d3_mu2 = bounds.inverse_d3_bound(p)
    emit_rows(
        [{
            "hbar": args.hbar,
            "value": bounds.inverse_fs(p, args.hbar),
            "d2_as_stated": d2_stated,
            "d2_oracle": d2_oracle,
            "d3_as_stated": d3_stated,
            "d3_mu2_value": d3_mu2,
        }],
        _resolve(args, cfg, "format"),
    )
    return 0


def cmd_log_coeff(args, cfg) -> int:
    p = _params(args, cfg)
    g1, g2 = bounds.log_coeff_bounds(p)
    emit_rows(
        [{"g1": g1, "g2_as_stated": g2, "g2_half_fs": bounds.log_gamma2_oracle(p)}],
        _resolve(args, cfg, "format"),
    )
    return 0


def _conv_weights(args) -> tuple[float, float, str]:
    if args.dist == "custom":
        return args.wp2, args.wp3, "custom"
    if args.dist_param is None:
        raise argparse.ArgumentTypeError(f"--dist {args.dist} needs --dist-param")
    d = coefficients(args.dist, args.dist_param, max_n=3, s=args.s)
    return d.wp2, d.wp3, f"{args.dist}({args.dist_param:g})"


def cmd_conv_fs(args, cfg) -> int:
    p = _params(args, cfg)
    try:
        wp2, wp3, label = _conv_weights(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    row = {
        "dist": label,
        "wp2": wp2,
        "wp3": wp3,
        "mu": args.mu,
        "value": bounds.conv_fs_complex(p, args.mu, wp2, wp3),
    }
    if args.mu.imag == 0.0:
        verdict = bounds.conv_fs_real(p, args.mu.real, wp2, wp3)
        row.update(
            branch=verdict.branch,
            sigma1=verdict.sigma1,
            sigma2=verdict.sigma2,
            piecewise_value=verdict.value,
            as_printed=verdict.as_printed,
        )
    emit_rows([row], _resolve(args, cfg, "format"))
    return 0


def cmd_dist(args, cfg) -> int:
    d = coefficients(args.kind, args.param, max_n=args.max_n, s=args.s)
    rows = [{"n": n, "coefficient": d.wp(n)} for n in range(2, args.max_n + 1)]
    emit_rows(rows, _resolve(args, cfg, "format"))
    return 0


def _read_coeffs(path: str) -> TruncatedSeries:
    text = Path(path).read_text().strip()
    if text.startswith("["):
        data = json.loads(text)
        coeffs = [complex(c[0], c[1]) if isinstance(c, list) else complex(c) for c in data]
    else:
        coeffs = [complex(float(tok), 0.0) for tok in text.replace(",", " ").split()]
    return TruncatedSeries(coeffs)


def cmd_member(args, cfg) -> int:
    p = _params(args, cfg)
    f = _read_coeffs(args.f_coeffs)
    witness, sup_norm = membership_witness(f, p)
    threshold = 1.0 - 1e-6
    emit_rows(
        [{
            "sup_norm": sup_norm,
            "threshold": threshold,
            "verdict": "member" if sup_norm < threshold else "not-member",
            "witness_order": witness.order,
        }],
        _resolve(args, cfg, "format"),
    )
    return 0


def cmd_lemma(args, cfg) -> int:
    v = args.v
    n = int(_resolve(args, cfg, "grid"))
    if args.which == "1":
        stated = lemma1_bound(v.real)
        veff = complex(v.real, 0.0)
    elif args.which == "3":
        stated = lemma3_bound(v)
        veff = v
    else:
        stated = lemma4_bound(v)
        veff = v / 2.0
    sup, witness = brute_force_sup(
        lambda c1, c2: np.abs(c2 - veff * c1**2), GridSpec.uniform(n)
    )
    emit_rows(
        [{
            "which": args.which,
            "v": v,
            "bound": stated,
            "empirical_sup": sup,
            "gap": stated - sup,
            "witness_c1": complex(witness.c1),
            "witness_c2": complex(witness.c2),
        }],
        _resolve(args, cfg, "format"),
    )
    return 0


def cmd_verify(args, cfg) -> int:
    n = int(_resolve(args, cfg, "grid"))
    vk = float(_resolve(args, cfg, "varkappa"))
    reports, summary = verify.run_suite(args.suite, varkappa=vk, grid=GridSpec.uniform(n))
    out = Path(args.out) if args.out else verify.default_report_path()
    verify.write_reports(out, reports, summary)
    print(f"wrote {len(reports)} reports to {out}")
    print(json.dumps({"summary": summary}, indent=2, default=str))
    if not summary["soundness"]:
        print("SOUNDNESS VIOLATION: empirical supremum exceeded the oracle bound",
              file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--vartheta", type=float, default=None,
                        help="class exponent parameter (>= 0)")
    common.add_argument("--kappa", type=float, default=None,
                        help="class weight parameter (>= 0)")
    common.add_argument("--varkappa", type=float, default=None,
                        help="subordination weight (>= 0)")
    common.add_argument("--format", choices=("json", "csv", "table"), default=None)

    parser = CliParser(prog="gtnbounds",
                       description="coefficient-bound verification toolkit")
    parser.add_argument("--config", default=None, help="key=value defaults file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gtn", help="generalized telephone number sequence")
    p.add_argument("--varkappa", type=_parse_rational, default=None,
                   help="weight, rational syntax allowed (e.g. 7/2)")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=("json", "csv", "table"), default=None)
    p.set_defaults(handler=cmd_gtn)

    p = sub.add_parser("xseries", parents=[common],
                       help="Taylor coefficients of exp(z + varkappa z^2/2)")
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(handler=cmd_xseries)

    p = sub.add_parser("bound", parents=[common], help="printed |a2| / |a3| bound")
    p.add_argument("which", choices=("a2", "a3"))
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("fs", parents=[common],
                       help="Fekete-Szego bound |a3 - mu a2^2|")
    p.add_argument("--mu", type=_parse_complex, default=complex(0.0))
    p.set_defaults(handler=cmd_fs)

    p = sub.add_parser("inverse-fs", parents=[common],
                       help="inverse-coefficient bound |d3 - hbar d2^2|")
    p.add_argument("--hbar", type=_parse_complex, default=complex(0.0))
    p.set_defaults(handler=cmd_inverse_fs)

    p = sub.add_parser("log-coeff", parents=[common],
                       help="logarithmic-coefficient bounds")
    p.set_defaults(handler=cmd_log_coeff)

    p = sub.add_parser("conv-fs", parents=[common],
                       help="convolution-class Fekete-Szego bound")
    p.add_argument("--dist", choices=("poisson", "borel", "pascal", "custom"),
                   default="custom")
    p.add_argument("--dist-param", type=float, default=None)
    p.add_argument("--s", type=int, default=1, help="Pascal shape parameter")
    p.add_argument("--wp2", type=float, default=1.0)
    p.add_argument("--wp3", type=float, default=1.0)
    p.add_argument("--mu", type=_parse_complex, default=complex(0.0))
    p.set_defaults(handler=cmd_conv_fs)

    p = sub.add_parser("dist", parents=[common], help="distribution coefficients")
    p.add_argument("--kind", choices=("poisson", "borel", "pascal"), required=True)
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("member", parents=[common],
                       help="membership check from a coefficient file")
    p.add_argument("--f-coeffs", required=True,
                   help="file with coefficients from z^0 (text or JSON list)")
    p.set_defaults(handler=cmd_member)

    p = sub.add_parser("lemma", parents=[common],
                       help="coefficient-body bound vs. brute-force supremum")
    p.add_argument("--which", choices=("1", "3", "4"), required=True)
    p.add_argument("--v", type=_parse_complex, required=True)
    p.add_argument("--grid", type=int, default=None)
    p.set_defaults(handler=cmd_lemma)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=("remarks", "lemmas", "full"), default="remarks")
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--out", default=None, help="JSONL output path (appended)")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args, cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
