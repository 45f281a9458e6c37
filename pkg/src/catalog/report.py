# report.py
"""Render a ScanReport as a text table, JSON or CSV, and read the latter two back."""
import csv
import io
import json
from typing import Dict, List, Optional, Sequence, Tuple

from linkhom_core import (
    BRIESKORN_PHAM,
    CSV_REPORT_COLUMNS,
    FORMAT_CSV,
    FORMAT_JSON,
    FORMAT_TABLE,
    ORLIK_CHAIN,
    REPORT_FORMATS,
    HomologyResult,
    PolynomialForm,
    UnknownFormatError,
    WeightVector,
    format_int_tuple,
)

from .catalog import CatalogEntry, ScanReport, ScanRow

TABLE_HEADER = "weights | deg | b | H_{n-1} | link"
CSV_SUMMARY_PREFIX = "# summary"
EMPTY = "-"


def visible_summary(report: ScanReport) -> Dict[str, int]:
    """Summary with `total` always present and every other count only when nonzero."""
    return {key: value for key, value in report.summary.items() if key == "total" or value}


# ----- Schema fragments (shared with the CLI's JSON output) -----

def form_to_dict(form: PolynomialForm, weights: Sequence[int]) -> dict:
    if form.variant == BRIESKORN_PHAM:
        return {"exponents": list(form.exponents)}
    return {"order": list(form.chained_weights(weights)), "exponents": list(form.exponents)}


def homology_to_dict(result: HomologyResult) -> dict:
    return {"betti": result.betti, "torsion": list(result.torsion), "label": result.group_label}


def row_to_dict(row: ScanRow) -> dict:
    entry = row.entry
    weights = list(entry.weights) if entry.weights is not None else None
    return {
        "id": entry.id,
        "weights": weights,
        "degree": entry.degree,
        "ke": entry.ke_flag,
        "bp": form_to_dict(row.bp, weights) if row.bp is not None else None,
        "chain": [form_to_dict(form, weights) for form in row.chain],
        "homology": homology_to_dict(row.homology) if row.homology is not None else None,
        "error": row.error,
    }


# ----- Emit -----

def _link_column(row: ScanRow) -> str:
    if row.error is not None:
        return f"error: {row.error}"
    parts = []
    if row.chain:
        text = row.chain[0].render()
        if len(row.chain) > 1:
            text += f" (+{len(row.chain) - 1} more orderings)"
        parts.append(text)
    if row.bp is not None:
        parts.append(row.bp.render())
    return " ; ".join(parts) if parts else EMPTY


def _table_line(row: ScanRow) -> str:
    entry = row.entry
    form = row.canonical_form
    if entry.weights is None:
        weights = EMPTY
    elif form is not None:
        weights = format_int_tuple(form.chained_weights(entry.weights))
    else:
        weights = str(entry.weights)
    columns = [
        weights,
        str(entry.degree) if entry.degree is not None else EMPTY,
        str(row.homology.betti) if row.homology is not None else EMPTY,
        row.homology.group_label if row.homology is not None else EMPTY,
        _link_column(row),
    ]
    return " | ".join(columns)


def _emit_table(report: ScanReport) -> str:
    lines = [TABLE_HEADER]
    lines.extend(_table_line(row) for row in report.rows)
    counts = " ".join(f"{key}={value}" for key, value in visible_summary(report).items())
    lines.append(f"# {counts}")
    return "\n".join(lines)


def _emit_json(report: ScanReport) -> str:
    payload = {
        "entries": [row_to_dict(row) for row in report.rows],
        "summary": visible_summary(report),
    }
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def _join(values: Optional[Sequence[int]]) -> str:
    return "" if values is None else " ".join(str(v) for v in values)


def _emit_csv(report: ScanReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_REPORT_COLUMNS)
    for row in report.rows:
        entry = row.entry
        chain = "|".join(
            f"{_join(form.chained_weights(entry.weights))}:{_join(form.exponents)}"
            for form in row.chain
        )
        homology = row.homology
        writer.writerow([
            entry.id or "",
            _join(entry.weights),
            "" if entry.degree is None else entry.degree,
            int(entry.ke_flag),
            _join(row.bp.exponents) if row.bp is not None else "",
            chain,
            "" if homology is None else homology.betti,
            "" if homology is None else _join(homology.torsion),
            "" if homology is None else homology.group_label,
            row.error or "",
        ])
    counts = " ".join(f"{key}={value}" for key, value in visible_summary(report).items())
    return buffer.getvalue() + f"{CSV_SUMMARY_PREFIX} {counts}"


def emit_report(report: ScanReport, output_format: str = FORMAT_TABLE) -> str:
    """
    Render a scan report.

    Args:
        report: Result of scan()
        output_format: One of table, json, csv

    Raises:
        UnknownFormatError: For any other format name
    """
    if output_format == FORMAT_TABLE:
        return _emit_table(report)
    if output_format == FORMAT_JSON:
        return _emit_json(report)
    if output_format == FORMAT_CSV:
        return _emit_csv(report)
    raise UnknownFormatError(f"unknown report format {output_format!r}, expected one of {list(REPORT_FORMATS)}")


# ----- Load -----

def _ordering_for(weights: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    """Smallest index permutation that puts `weights` into `order`."""
    used = set()
    ordering = []
    for value in order:
        index = next((i for i, w in enumerate(weights) if w == value and i not in used), None)
        if index is None:
            raise UnknownFormatError(f"chain order {list(order)} is not a permutation of {list(weights)}")
        used.add(index)
        ordering.append(index)
    return tuple(ordering)


def _bp_form(exponents: Sequence[int]) -> PolynomialForm:
    return PolynomialForm(
        variant=BRIESKORN_PHAM,
        exponents=tuple(exponents),
        ordering=tuple(range(len(exponents))),
    )


def _chain_form(weights: Sequence[int], order: Sequence[int], exponents: Sequence[int]) -> PolynomialForm:
    a = tuple(exponents)
    return PolynomialForm(
        variant=ORLIK_CHAIN,
        exponents=a,
        ordering=_ordering_for(weights, order),
        unit_exponents=tuple(i for i, ai in enumerate(a) if ai == 1),
    )


def _homology(betti: int, torsion: Sequence[int], label: str, weights: Sequence[int]) -> HomologyResult:
    return HomologyResult(betti=betti, torsion=tuple(torsion), group_label=label,
                          degree=len(weights) - 2)


def _make_row(entry_id, weights, degree, ke, bp, chain, homology, error) -> ScanRow:
    vector = WeightVector(tuple(weights)) if weights is not None else None
    entry = CatalogEntry(
        weights=vector,
        ke_flag=bool(ke),
        degree=degree,
        id=entry_id,
        error=error if vector is None else None,
    )
    return ScanRow(entry=entry, bp=bp, chain=tuple(chain), homology=homology, error=error)


def load_report_json(text: str) -> ScanReport:
    """Inverse of emit_report(report, "json")."""
    try:
        payload = json.loads(text)
        report = ScanReport(skipped=payload["summary"].get("skipped", 0))
        for item in payload["entries"]:
            weights = item["weights"]
            bp = _bp_form(item["bp"]["exponents"]) if item["bp"] is not None else None
            chain = [_chain_form(weights, form["order"], form["exponents"]) for form in item["chain"]]
            homology = None
            if item["homology"] is not None:
                h = item["homology"]
                homology = _homology(h["betti"], h["torsion"], h["label"], weights)
            report.rows.append(_make_row(item["id"], weights, item["degree"], item["ke"],
                                         bp, chain, homology, item["error"]))
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise UnknownFormatError(f"not a JSON scan report: {exc}") from None
    return report


def _ints(text: str) -> List[int]:
    return [int(item) for item in text.split()]


def load_report_csv(text: str) -> ScanReport:
    """Inverse of emit_report(report, "csv")."""
    body = []
    skipped = 0
    for line in text.splitlines():
        if line.startswith(CSV_SUMMARY_PREFIX):
            counts = dict(item.split("=", 1) for item in line[len(CSV_SUMMARY_PREFIX):].split())
            skipped = int(counts.get("skipped", 0))
        else:
            body.append(line)

    report = ScanReport(skipped=skipped)
    try:
        reader = csv.DictReader(body)
        if reader.fieldnames != CSV_REPORT_COLUMNS:
            raise UnknownFormatError(f"unexpected CSV header {reader.fieldnames}")
        for record in reader:
            weights = _ints(record["weights"]) if record["weights"] else None
            bp = _bp_form(_ints(record["bp"])) if record["bp"] else None
            chain = []
            for chunk in filter(None, record["chain"].split("|")):
                order, exponents = chunk.split(":")
                chain.append(_chain_form(weights, _ints(order), _ints(exponents)))
            homology = None
            if record["betti"]:
                homology = _homology(int(record["betti"]), _ints(record["torsion"]),
                                     record["label"], weights)
            report.rows.append(_make_row(
                record["id"] or None,
                weights,
                int(record["degree"]) if record["degree"] else None,
                record["ke"] == "1",
                bp,
                chain,
                homology,
                record["error"] or None,
            ))
    except (ValueError, TypeError) as exc:
        raise UnknownFormatError(f"not a CSV scan report: {exc}") from None
    return report
