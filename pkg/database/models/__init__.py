"""Database models: import all models here so they register with Base.metadata."""

from database.models.census import CensusEntry

__all__ = ["CensusEntry"]
