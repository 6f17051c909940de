"""Command line front end.

Exit codes: 0 on success, 2 on bad usage or bad input values, 3 when an
internal consistency check fails (a bug, not a user error).

Scan commands accept ``--config FILE`` with flat ``key = value`` lines;
explicit command line flags override file entries.
"""

from __future__ import annotations

import argparse
import sys

from .arith import InvariantError
from .class_geodesics import class_number, reduced_forms, total_length
from .experiments import (
    ARTIN_HEADER,
    CSV_HEADER,
    DUKE_HEADER,
    ScanConfig,
    UsageError,
    artin_scan,
    artin_stats,
    artin_summary_lines,
    converge_scan,
    converge_stats,
    converge_summary_lines,
    deviation_row_values,
    duke_row_values,
    duke_scan,
    duke_stats,
    duke_summary_lines,
    emit,
    order_record_values,
    render_table,
)
from .quad_orders import (
    R_of,
    alg_norm,
    alg_value,
    disc_of_suborder,
    field_data,
    regulator_of_order,
    OrderSpec,
    unit_group_index,
)
from .surd import cf_expand, convergents, make_surd


def parse_patterns(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse "1;2;1,1" into ((1,), (2,), (1, 1))."""
    groups = [g.strip() for g in text.split(";") if g.strip()]
    if not groups:
        raise UsageError("no patterns given")
    out = []
    for g in groups:
        try:
            out.append(tuple(int(t) for t in g.split(",")))
        except ValueError:
            raise UsageError(f"bad pattern {g!r}") from None
    return tuple(out)


def load_config(path: str) -> dict[str, str]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e}") from None
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def _merge_settings(defaults: dict, args: argparse.Namespace) -> dict:
    merged = dict(defaults)
    for key, raw in load_config(args.config).items() if getattr(args, "config", None) else ():
        if key not in merged:
            raise UsageError(f"unknown config key {key!r}")
        merged[key] = _cast_like(merged[key], raw)
    for key in merged:
        if hasattr(args, key):  # flags default to SUPPRESS, so present = explicit
            merged[key] = getattr(args, key)
    return merged


def _cast_like(example, raw: str):
    if isinstance(example, bool):
        if raw.lower() in ("1", "true", "yes"):
            return True
        if raw.lower() in ("0", "false", "no"):
            return False
        raise UsageError(f"bad boolean {raw!r}")
    if isinstance(example, int):
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"bad integer {raw!r}") from None
    return raw


def _emit_summary(lines: list[str], dest: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if dest and dest != "-":
        with open(dest, "w") as fh:
            fh.write(text)
    else:
        sys.stderr.write(text)


# ---- commands ----

def cmd_expand(args) -> int:
    x = make_surd(args.p, args.r, args.d, args.q)
    e = cf_expand(x)
    print("preperiod:", " ".join(map(str, e.preperiod)))
    print("period:", " ".join(map(str, e.period)))
    print("period_length:", e.period_length)
    if args.convergents:
        pq = convergents(e.digits(args.convergents))
        print("convergents:", " ".join(f"{p}/{q}" for p, q in pq))
    return 0


_CONVERGE_DEFAULTS = dict(
    p=0, r=1, d=2, q=1, patterns="1", sequence="integers", bound=100,
    coprime_filter=0, output=None, format="csv", workers=1, summary=None,
)


def cmd_converge(args) -> int:
    st = _merge_settings(_CONVERGE_DEFAULTS, args)
    pats = st["patterns"] if isinstance(st["patterns"], tuple) else parse_patterns(st["patterns"])
    cfg = ScanConfig(
        p=st["p"], r=st["r"], d=st["d"], q=st["q"], patterns=pats,
        sequence=st["sequence"], bound=st["bound"],
        coprime_filter=st["coprime_filter"], output=st["output"],
        fmt=st["format"], workers=st["workers"], summary=st["summary"],
    )
    rows = converge_scan(cfg)
    table = render_table(CSV_HEADER, [deviation_row_values(r) for r in rows], cfg.fmt)
    emit(table, cfg.output)
    if cfg.summary is not None:
        _emit_summary(converge_summary_lines(converge_stats(rows)), cfg.summary)
    return 0


_ARTIN_DEFAULTS = dict(
    d=5, sequence="primes", bound=100, coprime_filter=0, output=None,
    format="csv", workers=1, summary=None,
)


def cmd_artin(args) -> int:
    st = _merge_settings(_ARTIN_DEFAULTS, args)
    cfg = ScanConfig(
        d=st["d"], sequence=st["sequence"], bound=st["bound"],
        coprime_filter=st["coprime_filter"], output=st["output"],
        fmt=st["format"], workers=st["workers"], summary=st["summary"],
    )
    recs = artin_scan(cfg)
    table = render_table(ARTIN_HEADER, [order_record_values(r) for r in recs], cfg.fmt)
    emit(table, cfg.output)
    if cfg.summary is not None:
        _emit_summary(artin_summary_lines(artin_stats(recs)), cfg.summary)
    return 0


_DUKE_DEFAULTS = dict(
    min=5, max=500, fundamental_only=False, output=None, format="csv", summary=None,
)


def cmd_duke(args) -> int:
    st = _merge_settings(_DUKE_DEFAULTS, args)
    if st["format"] not in ("csv", "json"):
        raise UsageError(f"unknown format {st['format']!r}")
    rows = duke_scan(st["min"], st["max"], st["fundamental_only"])
    table = render_table(DUKE_HEADER, [duke_row_values(r) for r in rows], st["format"])
    emit(table, st["output"])
    if st["summary"] is not None:
        _emit_summary(duke_summary_lines(duke_stats(rows)), st["summary"])
    return 0


def cmd_unit(args) -> int:
    f = field_data(args.d)
    print(
        f"D={f.D} eps=({f.epsD.a},{f.epsD.b}) value={float(alg_value(f, f.epsD))!r} "
        f"norm={alg_norm(f, f.epsD)} regulator={f.regD!r}"
    )
    if args.conductor > 1:
        n = args.conductor
        idx = unit_group_index(f, n)
        print(
            f"conductor={n} disc={disc_of_suborder(f, n)} unit_index={idx} "
            f"pm_index={R_of(f, n)} "
            f"order_regulator={regulator_of_order(OrderSpec(f, n))!r}"
        )
    return 0


def cmd_classno(args) -> int:
    tl = total_length(args.disc)
    h = class_number(args.disc)
    nred = len(reduced_forms(args.disc))
    print(
        f"disc={args.disc} h={h} reduced_forms={nred} reg={tl.reg!r} "
        f"total_length={tl.total!r} exponent={tl.exponent!r}"
    )
    return 0


# ---- parser ----

def _add_surd_flags(sp) -> None:
    sp.add_argument("--p", type=int, help="rational part numerator")
    sp.add_argument("--r", type=int, help="coefficient of sqrt(d)")
    sp.add_argument("--d", type=int, help="radicand (positive nonsquare)")
    sp.add_argument("--q", type=int, help="denominator")


def _add_scan_flags(sp) -> None:
    sp.add_argument("--sequence", choices=("integers", "primes"))
    sp.add_argument("--bound", type=int)
    sp.add_argument("--coprime-filter", type=int)
    sp.add_argument("--output", help="write the table here instead of stdout")
    sp.add_argument("--format", choices=("csv", "json"))
    sp.add_argument("--workers", type=int)
    sp.add_argument(
        "--summary", nargs="?", const="-",
        help="write summary statistics to this path ('-' or bare flag: stderr)",
    )
    sp.add_argument("--config", help="flat key = value settings file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcf",
        description="Continued fractions of quadratic irrationals: expansions, "
        "digit statistics along multiples, unit and matrix orders, form classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("expand", help="continued fraction of (p + r*sqrt(d))/q")
    _add_surd_flags(sp)
    sp.set_defaults(p=0, r=1, d=2, q=1)
    sp.add_argument("--convergents", type=int, default=0, metavar="K",
                    help="also print the first K convergents")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser(
        "converge",
        help="pattern frequency deviations along N*(p + r*sqrt(d))/q",
        argument_default=argparse.SUPPRESS,
    )
    _add_surd_flags(sp)
    sp.add_argument("--patterns", type=parse_patterns,
                    help="semicolon separated, digits comma separated: '1;2;1,1'")
    _add_scan_flags(sp)
    sp.set_defaults(func=cmd_converge)

    sp = sub.add_parser(
        "artin",
        help="multiplicative orders of the fundamental unit mod N",
        argument_default=argparse.SUPPRESS,
    )
    sp.add_argument("--d", type=int, help="field: squarefree m or fundamental discriminant")
    _add_scan_flags(sp)
    sp.set_defaults(func=cmd_artin)

    sp = sub.add_parser(
        "duke",
        help="class numbers and total cycle length over a discriminant range",
        argument_default=argparse.SUPPRESS,
    )
    sp.add_argument("--min", type=int, help="smallest discriminant")
    sp.add_argument("--max", type=int, help="largest discriminant")
    sp.add_argument("--fundamental-only", action="store_true")
    sp.add_argument("--output")
    sp.add_argument("--format", choices=("csv", "json"))
    sp.add_argument("--summary", nargs="?", const="-")
    sp.add_argument("--config")
    sp.set_defaults(func=cmd_duke)

    sp = sub.add_parser("unit", help="fundamental unit, regulator, suborder indices")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--conductor", type=int, default=1)
    sp.set_defaults(func=cmd_unit)

    sp = sub.add_parser("classno", help="form class number and cycle lengths")
    sp.add_argument("--disc", type=int, required=True)
    sp.set_defaults(func=cmd_classno)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except InvariantError as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
