"""
regtool services layer.

Enumeration (census), theorem verification, catalog persistence and
rendering. Everything here builds on the pure ``graphs`` package.
"""

from services.catalog import CensusCatalog, read_jsonl, write_jsonl
from services.census import CensusError, CensusRecord, enumerate_regular, run_census
from services.theorems import TheoremId, TheoremVerdict, verify_all

__all__ = [
    "CensusCatalog",
    "CensusError",
    "CensusRecord",
    "TheoremId",
    "TheoremVerdict",
    "enumerate_regular",
    "read_jsonl",
    "run_census",
    "verify_all",
    "write_jsonl",
]
