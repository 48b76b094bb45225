"""Rendering of reports as JSON, CSV and plain-text tables.

Rationals are written as ``"num/den"`` strings; every rational field ``x``
also gets a display-only sibling ``x_decimal`` (15 significant digits).
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from fractions import Fraction

from .invariants import (
    ChainReport,
    DeformationReport,
    HKReport,
    RelativeHKReport,
    SignatureReport,
    SingularityReport,
)
from .polyfield import Polynomial

CSV_HEADER = ["task", "ring", "e", "q", "candidate",
              "length_num", "length_den", "value_num", "value_den"]


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal(x) -> float:
    return float(f"{float(Fraction(x)):.15g}")


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def _is_fraction_list(v) -> bool:
    return isinstance(v, (list, tuple)) and v and all(isinstance(a, Fraction) for a in v)


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, Polynomial):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if dataclasses.is_dataclass(obj):
        out = {}
        for f in dataclasses.fields(obj):
            v = getattr(obj, f.name)
            out[f.name] = to_jsonable(v)
            if isinstance(v, Fraction):
                out[f.name + "_decimal"] = decimal(v)
            elif _is_fraction_list(v):
                out[f.name + "_decimal"] = [decimal(a) for a in v]
        if isinstance(obj, ChainReport):
            out["passed"] = obj.passed
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def to_json(reports) -> str:
    return json.dumps(to_jsonable(reports), indent=2) + "\n"


# ---------------------------------------------------------------------------
# CSV

def _rows_hk(r: HKReport):
    for row in r.rows:
        yield ["hk", r.ring, row.e, row.q, r.ideal, row.length, 1,
               row.normalized.numerator, row.normalized.denominator]
    if r.extrapolated is not None:
        yield ["hk", r.ring, "extrapolated", "", r.ideal, "", "",
               r.extrapolated.numerator, r.extrapolated.denominator]


def _rows_relative(r: RelativeHKReport):
    for row in r.rows:
        yield ["relative_hk", r.ring, row.e, row.q, r.ideal, row.length_ideal, 1,
               row.value.numerator, row.value.denominator]
    yield ["relative_hk", r.ring, "extrapolated", "", r.ideal, "", "",
           r.extrapolated.numerator, r.extrapolated.denominator]


def _rows_signature(r: SignatureReport):
    for k, (e, q) in enumerate(zip(r.e_values, r.q_values)):
        if r.task != "fsig":
            yield [r.task, r.ring, e, q, "(" + ", ".join(r.sop) + ")", r.base_lengths[k], 1,
                   "", ""]
        for c in r.candidates:
            v = c.values[k]
            yield [r.task, r.ring, e, q, c.description, c.lengths[k], 1,
                   v.numerator, v.denominator]
        m = r.per_e_minimum[k]
        yield [r.task, r.ring, e, q, "<minimum>", "", "", m.numerator, m.denominator]
    for c in r.candidates:
        yield [r.task, r.ring, "extrapolated", "", c.description, "", "",
               c.extrapolated.numerator, c.extrapolated.denominator]
    yield [r.task, r.ring, "extrapolated", "", "<minimum>", "", "",
           r.minimum.numerator, r.minimum.denominator]


def csv_rows(report):
    if isinstance(report, (list, tuple)):
        for r in report:
            yield from csv_rows(r)
    elif isinstance(report, HKReport):
        yield from _rows_hk(report)
    elif isinstance(report, RelativeHKReport):
        yield from _rows_relative(report)
    elif isinstance(report, SignatureReport):
        yield from _rows_signature(report)
    elif isinstance(report, ChainReport):
        yield from _rows_signature(report.csig)
        yield from _rows_signature(report.rsig)
        if report.fsig is not None:
            yield from _rows_signature(report.fsig)
    elif isinstance(report, DeformationReport):
        yield from _rows_signature(report.csig_ring)
        yield from _rows_signature(report.csig_quotient)
    elif isinstance(report, SingularityReport):
        return
    else:
        raise TypeError(f"no CSV layout for {type(report).__name__}")


def to_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in csv_rows(report):
        w.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# plain text

def _fmt(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} (~{decimal(x):.6g})"


def _table_signature(r: SignatureReport) -> list[str]:
    lines = [f"[{r.task}] {r.ring}" + (f"  sop=({', '.join(r.sop)})" if r.sop else "")]
    if r.socle:
        lines.append(f"  socle basis: {', '.join(r.socle)}")
    width = max([len("candidate")] + [len(c.description) for c in r.candidates])
    head = "  " + "candidate".ljust(width) + "".join(f"  e={e:<10}" for e in r.e_values)
    lines.append(head + "  limit")
    for c in r.candidates:
        vals = "".join(f"  {str(v):<12}" for v in c.values)
        lines.append("  " + c.description.ljust(width) + vals + "  " + str(c.extrapolated))
    lines.append(f"  minimum: {_fmt(r.minimum)}  attained by {', '.join(r.minimizers)}")
    k = len(r.candidates)
    lines.append(f"  search: {r.bound_flag} ({k} candidate{'' if k == 1 else 's'})")
    for note in r.notes:
        lines.append(f"  note: {note}")
    return lines


def to_table(report) -> str:
    lines: list[str] = []
    if isinstance(report, (list, tuple)):
        return "\n".join(to_table(r) for r in report)
    if isinstance(report, HKReport):
        lines.append(f"[hk] {report.ring}  ideal={report.ideal}  d={report.d}")
        lines.append("  e     q       length      length/q^d")
        for row in report.rows:
            lines.append(f"  {row.e:<5} {row.q:<7} {row.length:<11} {row.normalized}")
        lines.append(f"  extrapolated: {_fmt(report.extrapolated)}")
        if report.truncated:
            lines.append(f"  truncated: {report.truncated}")
        lines.append(f"  model: {report.model_note}")
    elif isinstance(report, RelativeHKReport):
        lines.append(f"[relative_hk] {report.ring}  {report.sop} in {report.ideal}")
        for row in report.rows:
            lines.append(f"  e={row.e} q={row.q}  {row.length_sop} - {row.length_ideal}"
                         f"  -> {row.value}")
        lines.append(f"  extrapolated: {_fmt(report.extrapolated)}")
    elif isinstance(report, SignatureReport):
        lines.extend(_table_signature(report))
    elif isinstance(report, ChainReport):
        lines.extend(_table_signature(report.csig))
        lines.extend(_table_signature(report.rsig))
        if report.fsig is not None:
            lines.extend(_table_signature(report.fsig))
        lines.append(f"[chain] {report.ring}")
        for row in report.rows:
            lines.append(f"  e={row.e}: csig {row.csig_min} <= rsig {row.rsig_min}: "
                         f"{'ok' if row.ok else 'VIOLATED'}")
        lines.append(f"  type {report.cm_type}; rsig/type = {_fmt(report.dsig_lower_bound)} "
                     "(lower bound for the dual F-signature)")
        lines.append(f"  strict csig < rsig: {report.strict}")
        if report.coincidence_ok is not None:
            lines.append(f"  Gorenstein: |csig - fsig| <= {report.tolerance}: "
                         f"{report.coincidence_ok}")
        for f in report.findings:
            lines.append(f"  finding: {f}")
        lines.append(f"  passed: {report.passed}")
    elif isinstance(report, DeformationReport):
        lines.extend(_table_signature(report.csig_ring))
        lines.extend(_table_signature(report.csig_quotient))
        lines.append(f"[deform] csig({report.ring}) = {_fmt(report.csig_ring.minimum)} >= "
                     f"csig({report.quotient}) = {_fmt(report.csig_quotient.minimum)} "
                     f"- {report.tolerance}: {report.passed}")
    elif isinstance(report, SingularityReport):
        lines.append(f"[singularity] csig={_fmt(report.csig)} e(R)={report.multiplicity} "
                     f"d={report.d}")
        for name, th in report.thresholds.items():
            lines.append(f"  threshold {name}: {_fmt(th)}")
        lines.append(f"  flags: {', '.join(report.flags) or 'none'}")
        for w in report.warnings:
            lines.append(f"  warning: {w}")
        lines.append(f"  {report.note}")
    else:
        raise TypeError(f"no table layout for {type(report).__name__}")
    return "\n".join(lines) + "\n"


def render(report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "table":
        return to_table(report)
    raise ValueError(f"unknown output format {fmt!r}")
