"""Core record types shared across the ingest/normalize/graph pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class RawProfile:
    """One row of a genealogical profile dump, before any name cleaning.

    ``father_id`` / ``mother_id`` are ``None`` when the dump leaves the
    parent blank; referential existence is only checked at tree-build time.
    """

    profile_id: str
    forename: str = ""
    surname: str = ""
    father_id: str | None = None
    mother_id: str | None = None


@dataclass(frozen=True, slots=True)
class ProfileRecord:
    """A profile after name normalization.

    Either name field may be ``None`` (the raw value normalized to nothing);
    the profile is kept because the other field can still feed its graph.
    """

    profile_id: str
    forename: str | None
    surname: str | None
    father_id: str | None = None
    mother_id: str | None = None

    def name(self, view: str) -> str | None:
        if view == "forename":
            return self.forename
        if view == "surname":
            return self.surname
        raise ValueError(f"unknown name view: {view!r}")


@dataclass(frozen=True, slots=True)
class GroundTruthEntry:
    """A query name and its verified synonym set (normalized forms)."""

    query_name: str
    synonyms: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.synonyms:
            raise ValueError(f"ground truth entry {self.query_name!r} has no synonyms")
        if self.query_name in self.synonyms:
            raise ValueError(f"ground truth entry {self.query_name!r} lists itself as a synonym")
