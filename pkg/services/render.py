"""Text and JSON rendering of reports, census records and verdicts for the CLI."""

from __future__ import annotations

import json
from collections.abc import Sequence
from typing import Any

from graphs.classify import ClassificationReport
from services.census import CensusRecord
from services.theorems import TheoremVerdict, VerifySummary, summarize

_TABLE_COLUMNS = ("theorem", "inputs", "applicable", "hypothesis", "result", "detail")
_DETAIL_WIDTH = 72


def _dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True)


def render_report(report: ClassificationReport, as_json: bool = False) -> str:
    if as_json:
        return _dumps(report.to_dict()) + "\n"
    return report.to_text()


def render_records(records: Sequence[CensusRecord], as_json: bool = False) -> str:
    """One line per record: JSON lines, or ``g6  n  k  srg/edge/pseudo`` columns."""
    if as_json:
        return "".join(_dumps(record.to_dict()) + "\n" for record in records)
    lines = []
    for record in records:
        report = record.report
        srg = "-"
        if report.srg is not None:
            srg = "(" + ",".join("-" if v is None else str(v) for v in report.srg) + ")"
        lines.append(
            f"{record.g6:<12} n={record.n:<3} k={record.k:<3} edge={report.edge_regular!s:<8} "
            f"pseudo={report.pseudo!s:<8} srg={srg}"
        )
    lines.append(f"{len(records)} record(s)")
    return "\n".join(lines) + "\n"


def _outcome(verdict: TheoremVerdict) -> str:
    if not verdict.applicable:
        return "n/a"
    if verdict.excluded:
        return "excluded"
    return "agree" if verdict.agree else "DISAGREE"


def render_verdicts_jsonl(verdicts: Sequence[TheoremVerdict]) -> str:
    return "".join(_dumps(verdict.to_dict()) + "\n" for verdict in verdicts)


def render_summary(summary: VerifySummary) -> str:
    return (
        f"verdicts: {summary.total}, agree: {summary.agree}, "
        f"disagreements: {summary.disagreements}, excluded: {summary.excluded}, "
        f"not applicable: {summary.not_applicable}\n"
    )


def render_verdict_table(verdicts: Sequence[TheoremVerdict]) -> str:
    """Fixed-width table, one row per verdict, followed by the summary line."""
    rows = [_TABLE_COLUMNS]
    for verdict in verdicts:
        detail = verdict.detail
        if len(detail) > _DETAIL_WIDTH:
            detail = detail[: _DETAIL_WIDTH - 3] + "..."
        rows.append(
            (
                str(verdict.theorem),
                ",".join(verdict.inputs) or "-",
                "yes" if verdict.applicable else "no",
                "yes" if verdict.hypothesis_holds else "no",
                _outcome(verdict),
                detail,
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(_TABLE_COLUMNS) - 1)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)) + "  " + row[-1]
        for row in rows
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n" + render_summary(summarize(verdicts))
