"""
Census catalog model: one row per isomorphism class of regular graph.
"""

from datetime import datetime, timezone

from sqlalchemy import Boolean, DateTime, Index, Integer, String, Text
from sqlalchemy.orm import Mapped, mapped_column

from database.engine import Base


class CensusEntry(Base):
    __tablename__ = "census_entries"
    __table_args__ = (Index("ix_census_entries_n_k", "n", "k"),)

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    canonical: Mapped[str] = mapped_column(String(256), unique=True, nullable=False, index=True)
    g6: Mapped[str] = mapped_column(String(128), nullable=False)
    n: Mapped[int] = mapped_column(Integer, nullable=False)
    k: Mapped[int] = mapped_column(Integer, nullable=False)

    # Flattened classification, for SQL-side filtering
    edge_regular: Mapped[str] = mapped_column(String(8), nullable=False)
    lam: Mapped[int | None] = mapped_column(Integer, nullable=True)
    pseudo: Mapped[str] = mapped_column(String(8), nullable=False)
    mu: Mapped[int | None] = mapped_column(Integer, nullable=True)
    strongly_regular: Mapped[bool] = mapped_column(Boolean, nullable=False, default=False)
    deza: Mapped[str | None] = mapped_column(String(32), nullable=True)

    report_json: Mapped[str] = mapped_column(Text, nullable=False)
    created_at: Mapped[datetime] = mapped_column(
        DateTime, default=lambda: datetime.now(timezone.utc)
    )

    def __repr__(self) -> str:
        return f"<CensusEntry n={self.n} k={self.k} g6={self.g6!r}>"
