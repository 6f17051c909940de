"""Desk-scale scan experiments: pattern-frequency deviations along N*x for
N in an arithmetic sequence, matrix-order censuses, and form-cycle length
tables. Everything is deterministic; scans may be partitioned across
worker processes and the merged output is byte-identical regardless of
worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
import statistics
import sys
from dataclasses import dataclass

from .arith import InvariantError, is_prime
from .class_geodesics import fundamental_decomposition, total_length
from .gauss_kuzmin import Pattern, c_w, pattern_frequency
from .matrix_orders import OrderRecord, _primes_up_to, _record_for
from .quad_orders import (
    FieldData,
    conductor_of_surd,
    field_data,
    phi,
    surd_coords,
    unit_group_index,
)
from .surd import Surd, cf_expand, make_surd, scale


class UsageError(ValueError):
    """Bad configuration or arguments; maps to exit code 2."""


@dataclass(frozen=True)
class ScanConfig:
    """Shared scan settings. The base surd is (p + r*sqrt(d))/q; for order
    censuses d alone names the field."""

    p: int = 0
    r: int = 1
    d: int = 2
    q: int = 1
    patterns: tuple[tuple[int, ...], ...] = ((1,),)
    sequence: str = "integers"
    bound: int = 100
    coprime_filter: int = 0  # 0 disables; else skip N with gcd(N, filter) > 1
    output: str | None = None
    fmt: str = "csv"
    workers: int = 1
    summary: str | None = None


def validate_config(cfg: ScanConfig, need_patterns: bool = True) -> None:
    if cfg.sequence not in ("integers", "primes"):
        raise UsageError(f"unknown sequence {cfg.sequence!r}")
    if cfg.bound < 2:
        raise UsageError("bound must be >= 2")
    if cfg.fmt not in ("csv", "json"):
        raise UsageError(f"unknown format {cfg.fmt!r}")
    if cfg.workers < 1:
        raise UsageError("workers must be >= 1")
    if need_patterns:
        if not cfg.patterns:
            raise UsageError("need at least one pattern")
        for w in cfg.patterns:
            if not w or any(a < 1 for a in w):
                raise UsageError(f"bad pattern {w}")


def sequence_values(cfg: ScanConfig) -> list[int]:
    ns = _primes_up_to(cfg.bound) if cfg.sequence == "primes" else list(range(2, cfg.bound + 1))
    if cfg.coprime_filter:
        ns = [n for n in ns if math.gcd(n, cfg.coprime_filter) == 1]
    return ns


# ---- deviation scan (pattern frequencies along N*x) ----

CSV_HEADER = "N,is_prime,period_length,pattern,freq_num,freq_den,c_w,deviation,disc,reg_disc_exponent"


@dataclass(frozen=True)
class DeviationRow:
    N: int
    is_prime: bool
    period_length: int
    pattern: str  # dash-joined digits
    freq_num: int
    freq_den: int
    c_w: float
    deviation: float
    reg_proxy: float  # ln(period_length); not serialized
    disc: int
    reg_disc_exponent: float


def _validate_row(row: DeviationRow) -> None:
    if math.gcd(row.freq_num, row.freq_den) != 1:
        raise InvariantError("frequency not in lowest terms")
    redone = abs(row.freq_num / row.freq_den - row.c_w)
    if abs(redone - row.deviation) > 1e-12:
        raise InvariantError("deviation does not match freq and c_w")


_CTX: dict = {}


def _init_converge(cfg: ScanConfig) -> None:
    base = make_surd(cfg.p, cfg.r, cfg.d, cfg.q)
    fdata = field_data(surd_coords(base)[0])
    pats = [(Pattern(w).label(), Pattern(w), c_w(w).as_float()) for w in cfg.patterns]
    _CTX.clear()
    _CTX.update(base=base, field=fdata, patterns=pats)


def _converge_chunk(ns: list[int]) -> list[DeviationRow]:
    base: Surd = _CTX["base"]
    fdata: FieldData = _CTX["field"]
    rows: list[DeviationRow] = []
    for n in ns:
        xn = scale(base, n)
        e = cf_expand(xn)
        L = e.period_length
        cond = conductor_of_surd(fdata, xn)
        disc = cond * cond * fdata.D
        reg = fdata.regD * unit_group_index(fdata, cond)
        rexp = math.log(reg) / math.log(math.sqrt(disc))
        nprime = is_prime(n)
        for label, pat, cw_float in _CTX["patterns"]:
            freq = pattern_frequency(e, pat)
            dev = abs(freq.numerator / freq.denominator - cw_float)
            row = DeviationRow(
                n, nprime, L, label, freq.numerator, freq.denominator,
                cw_float, dev, math.log(L), disc, rexp,
            )
            _validate_row(row)
            rows.append(row)
    return rows


def converge_scan(cfg: ScanConfig) -> list[DeviationRow]:
    validate_config(cfg)
    ns = sequence_values(cfg)
    rows = _run_partitioned(_init_converge, _converge_chunk, cfg, ns)
    order = {Pattern(w).label(): i for i, w in enumerate(cfg.patterns)}
    rows.sort(key=lambda r: (r.N, order[r.pattern]))
    return rows


def _run_partitioned(init, chunk_fn, cfg: ScanConfig, ns: list[int]) -> list:
    chunks = _split(ns, max(1, min(len(ns), cfg.workers * 4)))
    if cfg.workers == 1:
        init(cfg)
        out: list = []
        for ch in chunks:
            out.extend(chunk_fn(ch))
        return out
    with multiprocessing.Pool(cfg.workers, initializer=init, initargs=(cfg,)) as pool:
        parts = pool.map(chunk_fn, chunks)
    return [row for part in parts for row in part]


def _split(ns: list[int], k: int) -> list[list[int]]:
    size = (len(ns) + k - 1) // k
    return [ns[i : i + size] for i in range(0, len(ns), size)] if ns else []


def converge_stats(rows: list[DeviationRow]) -> dict:
    """Per-pattern dyadic medians, the log-log least-squares decay fit, and
    the fraction of N beating the half-power of the fitted rate."""
    out: dict = {}
    for label in dict.fromkeys(r.pattern for r in rows):
        rs = [r for r in rows if r.pattern == label]
        blocks: dict[int, float] = {}
        for k in sorted({r.N.bit_length() - 1 for r in rs}):
            devs = [r.deviation for r in rs if r.N.bit_length() - 1 == k]
            blocks[k] = statistics.median(devs)
        fit_rows = [r for r in rs if r.deviation > 0.0]
        zero_rows = len(rs) - len(fit_rows)
        delta_hat = c_hat = frac = float("nan")
        if len(fit_rows) >= 2:
            xs = [math.log(r.N) for r in fit_rows]
            ys = [math.log(r.deviation) for r in fit_rows]
            slope, intercept = statistics.linear_regression(xs, ys)
            delta_hat, c_hat = -slope, math.exp(intercept)
            frac = sum(
                1 for r in fit_rows if r.deviation < r.N ** (-delta_hat / 2)
            ) / len(fit_rows)
        out[label] = {
            "rows": len(rs),
            "zero_deviation_rows": zero_rows,
            "dyadic_medians": blocks,
            "delta_hat": delta_hat,
            "c_hat": c_hat,
            "frac_below_half_power": frac,
        }
    return out


def converge_summary_lines(stats: dict) -> list[str]:
    lines = []
    for label, st in stats.items():
        meds = " ".join(f"k={k}:{v:.6f}" for k, v in st["dyadic_medians"].items())
        lines.append(
            f"pattern {label}: rows={st['rows']} zero_deviation_rows={st['zero_deviation_rows']}"
        )
        lines.append(f"pattern {label}: dyadic_medians {meds}")
        lines.append(
            f"pattern {label}: delta_hat={st['delta_hat']:.6f} c_hat={st['c_hat']:.6f} "
            f"frac_below_half_power={st['frac_below_half_power']:.6f}"
        )
    return lines


# ---- order census ----

ARTIN_HEADER = "N,ord,exponent,split_type,is_max"


def _init_artin(cfg: ScanConfig) -> None:
    fdata = field_data(cfg.d)
    _CTX.clear()
    _CTX.update(field=fdata, mat=phi(fdata, fdata.epsD))


def _artin_chunk(ns: list[int]) -> list[OrderRecord]:
    fdata = _CTX["field"]
    M = _CTX["mat"]
    return [_record_for(fdata, M, n) for n in ns]


def artin_scan(cfg: ScanConfig) -> list[OrderRecord]:
    validate_config(cfg, need_patterns=False)
    ns = sequence_values(cfg)
    recs = _run_partitioned(_init_artin, _artin_chunk, cfg, ns)
    recs.sort(key=lambda r: r.N)
    return recs


def artin_stats(records: list[OrderRecord], thresholds=(0.7, 0.8, 0.9)) -> dict:
    densities = {}
    for theta in thresholds:
        hits = sum(1 for r in records if r.ord >= r.N**theta)
        densities[theta] = hits / len(records)
    primes = [r for r in records if r.split_type != "composite"]
    prime_max = (
        sum(1 for r in primes if r.is_max) / len(primes) if primes else float("nan")
    )
    exceptions = [r.N for r in records if r.ord < r.N**0.8]
    return {
        "densities": densities,
        "prime_max_density": prime_max,
        "exceptions": exceptions,
    }


def artin_summary_lines(stats: dict) -> list[str]:
    lines = [
        f"density ord>=N^{theta}: {d:.6f}" for theta, d in stats["densities"].items()
    ]
    lines.append(f"prime is_max density: {stats['prime_max_density']:.6f}")
    lines.append(
        "exceptions ord<N^0.8: " + (" ".join(map(str, stats["exceptions"])) or "none")
    )
    return lines


# ---- form-cycle census ----

DUKE_HEADER = "disc,h,reg,total_length,exponent"


@dataclass(frozen=True)
class DukeRow:
    disc: int
    h: int
    reg: float
    total: float
    exponent: float


def duke_discs(dmin: int, dmax: int, fundamental_only: bool) -> list[int]:
    if dmin > dmax:
        raise UsageError("empty discriminant range")
    out = []
    for disc in range(max(5, dmin), dmax + 1):
        if disc % 4 not in (0, 1):
            continue
        s = math.isqrt(disc)
        if s * s == disc:
            continue
        if fundamental_only and fundamental_decomposition(disc)[1] != 1:
            continue
        out.append(disc)
    if not out:
        raise UsageError("no valid discriminants in range")
    return out


def duke_scan(dmin: int, dmax: int, fundamental_only: bool = False) -> list[DukeRow]:
    rows = []
    for disc in duke_discs(dmin, dmax, fundamental_only):
        tl = total_length(disc)
        rows.append(DukeRow(disc, tl.h, tl.reg, tl.total, tl.exponent))
    return rows


def duke_stats(rows: list[DukeRow]) -> dict:
    blocks: dict[int, dict] = {}
    for k in sorted({r.disc.bit_length() - 1 for r in rows}):
        exps = [r.exponent for r in rows if r.disc.bit_length() - 1 == k]
        blocks[k] = {
            "n": len(exps),
            "mean": statistics.fmean(exps),
            "stdev": statistics.pstdev(exps),
        }
    return {
        "blocks": blocks,
        "median_exponent": statistics.median(r.exponent for r in rows),
    }


def duke_summary_lines(stats: dict) -> list[str]:
    lines = [
        f"disc block 2^{k}..2^{k+1}: n={b['n']} mean_exponent={b['mean']:.6f} "
        f"stdev={b['stdev']:.6f}"
        for k, b in stats["blocks"].items()
    ]
    lines.append(f"median_exponent: {stats['median_exponent']:.6f}")
    return lines


# ---- serialization ----

def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def deviation_row_values(r: DeviationRow) -> list:
    return [r.N, r.is_prime, r.period_length, r.pattern, r.freq_num, r.freq_den,
            r.c_w, r.deviation, r.disc, r.reg_disc_exponent]


def order_record_values(r: OrderRecord) -> list:
    return [r.N, r.ord, r.exponent, r.split_type, r.is_max]


def duke_row_values(r: DukeRow) -> list:
    return [r.disc, r.h, r.reg, r.total, r.exponent]


def render_table(header: str, rows: list[list], fmt: str) -> str:
    names = header.split(",")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(names)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        return buf.getvalue()
    return json.dumps(
        [dict(zip(names, row)) for row in rows], indent=2, allow_nan=True
    ) + "\n"


def emit(text: str, path: str | None, default_stream=None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        (default_stream or sys.stdout).write(text)
