"""
CensusCatalog: persistence for census records.

Two stores: a JSON-lines file (one record per line, the portable export) and
the SQLite catalog behind ``database.engine`` (queried by ``n`` and ``k``).
Both are keyed by canonical form, so saving a record twice keeps one copy.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

from sqlalchemy import func, select

from database.engine import session_scope
from database.models.census import CensusEntry
from graphs.classify import ClassificationReport
from services.census import CensusError, CensusRecord

logger = logging.getLogger("regtool.catalog")


# ── JSON lines ───────────────────────────────────────


def write_jsonl(path: Path, records: Iterable[CensusRecord]) -> int:
    """Write *records* one JSON object per line; returns the number written."""
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")
            count += 1
    logger.info("Wrote %d census records to %s", count, path)
    return count


def read_jsonl(path: Path) -> list[CensusRecord]:
    records = []
    with path.open(encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                records.append(CensusRecord.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                raise CensusError(f"{path}:{line_number}: bad census record: {e}") from e
    return records


# ── SQLite catalog ───────────────────────────────────


def _entry_from_record(record: CensusRecord) -> CensusEntry:
    report = record.report
    return CensusEntry(
        canonical=record.canonical.hex(),
        g6=record.g6,
        n=record.n,
        k=record.k,
        edge_regular=str(report.edge_regular.status),
        lam=report.lam,
        pseudo=str(report.pseudo.status),
        mu=report.mu,
        strongly_regular=report.srg is not None,
        deza=",".join(map(str, report.deza)) if report.deza is not None else None,
        report_json=json.dumps(report.to_dict(), sort_keys=True),
    )


def _record_from_entry(entry: CensusEntry) -> CensusRecord:
    return CensusRecord(
        canonical=bytes.fromhex(entry.canonical),
        g6=entry.g6,
        n=entry.n,
        k=entry.k,
        report=ClassificationReport.from_dict(json.loads(entry.report_json)),
    )


class CensusCatalog:
    """Upsert and query census records in the SQLite catalog."""

    @staticmethod
    async def save_records(records: Sequence[CensusRecord]) -> int:
        """Insert records not yet present; returns how many were new."""
        if not records:
            return 0
        async with session_scope() as session:
            result = await session.execute(select(CensusEntry.canonical))
            known = set(result.scalars().all())
            added = 0
            for record in records:
                key = record.canonical.hex()
                if key in known:
                    continue
                session.add(_entry_from_record(record))
                known.add(key)
                added += 1
        logger.info("Catalog: %d new of %d records", added, len(records))
        return added

    @staticmethod
    async def load_records(n: int | None = None, k: int | None = None) -> list[CensusRecord]:
        """Stored records, optionally restricted to one ``n`` and/or ``k``, in census order."""
        stmt = select(CensusEntry)
        if n is not None:
            stmt = stmt.where(CensusEntry.n == n)
        if k is not None:
            stmt = stmt.where(CensusEntry.k == k)
        async with session_scope() as session:
            result = await session.execute(stmt)
            records = [_record_from_entry(entry) for entry in result.scalars().all()]
        records.sort(key=lambda record: record.sort_key)
        return records

    @staticmethod
    async def count() -> int:
        async with session_scope() as session:
            result = await session.execute(select(func.count()).select_from(CensusEntry))
            return result.scalar_one()
