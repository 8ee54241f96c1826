"""Parsing of profile dumps and ground-truth synonym files.

Profile files are UTF-8 TSV/CSV with a header naming the columns
``id, forename, surname, father_id, mother_id`` in any order. Ground truth
files are headerless two-column TSV of ``query<TAB>synonym`` pairs.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .normalize import NormalizationConfig, DEFAULT_CONFIG, normalize_name
from .records import GroundTruthEntry, RawProfile

PROFILE_COLUMNS = ("id", "forename", "surname", "father_id", "mother_id")


class IngestError(Exception):
    """Base class for all profile/ground-truth parse failures."""


class MalformedRow(IngestError):
    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class DuplicateId(IngestError):
    def __init__(self, key: str):
        super().__init__(f"duplicate profile id: {key!r}")
        self.key = key


class MissingColumn(IngestError):
    def __init__(self, name: str):
        super().__init__(f"missing required column: {name!r}")
        self.name = name


class EmptyFile(IngestError):
    def __init__(self, path: str):
        super().__init__(f"no usable rows in {path}")
        self.path = path


def _delimiter(fmt: str) -> str:
    if fmt == "tsv":
        return "\t"
    if fmt == "csv":
        return ","
    raise ValueError(f"unknown profile file format: {fmt!r} (expected 'tsv' or 'csv')")


def load_profiles(path: str | Path, format: str = "tsv") -> list[RawProfile]:
    """Read one RawProfile per data row; duplicate ids and bad rows raise."""
    delim = _delimiter(format)
    profiles: list[RawProfile] = []
    seen: set[str] = set()
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle, delimiter=delim)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyFile(str(path)) from None
        columns = [c.strip().lower() for c in header]
        for required in PROFILE_COLUMNS:
            if required not in columns:
                raise MissingColumn(required)
        index = {name: columns.index(name) for name in PROFILE_COLUMNS}
        width = len(columns)
        for line_number, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != width:
                raise MalformedRow(line_number, f"expected {width} fields, got {len(row)}")
            profile_id = row[index["id"]].strip()
            if not profile_id:
                raise MalformedRow(line_number, "empty profile id")
            if profile_id in seen:
                raise DuplicateId(profile_id)
            seen.add(profile_id)
            father = row[index["father_id"]].strip() or None
            mother = row[index["mother_id"]].strip() or None
            profiles.append(
                RawProfile(
                    profile_id=profile_id,
                    forename=row[index["forename"]].strip(),
                    surname=row[index["surname"]].strip(),
                    father_id=father,
                    mother_id=mother,
                )
            )
    return profiles


def write_profiles(path: str | Path, profiles: Iterable[RawProfile], format: str = "tsv") -> int:
    """Write profiles in the canonical column order; returns the row count."""
    delim = _delimiter(format)
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, delimiter=delim, lineterminator="\n")
        writer.writerow(PROFILE_COLUMNS)
        for p in profiles:
            writer.writerow([p.profile_id, p.forename, p.surname, p.father_id or "", p.mother_id or ""])
            count += 1
    return count


@dataclass(slots=True)
class GroundTruthLoad:
    entries: list[GroundTruthEntry]
    self_pairs_dropped: int
    unusable_dropped: int


def load_ground_truth(
    path: str | Path,
    config: NormalizationConfig = DEFAULT_CONFIG,
) -> GroundTruthLoad:
    """Group ``query<TAB>synonym`` pairs by query, normalizing both sides.

    Pairs whose synonym equals the query (after normalization) are dropped and
    counted; pairs where either side normalizes to nothing are dropped and
    counted separately.
    """
    grouped: dict[str, set[str]] = {}
    self_pairs = 0
    unusable = 0
    with open(path, newline="", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise MalformedRow(line_number, f"expected 2 tab-separated fields, got {len(parts)}")
            query = normalize_name(parts[0], config)
            synonym = normalize_name(parts[1], config)
            if query is None or synonym is None:
                unusable += 1
                continue
            if query == synonym:
                self_pairs += 1
                continue
            grouped.setdefault(query, set()).add(synonym)
    if not grouped and self_pairs == 0 and unusable == 0:
        raise EmptyFile(str(path))
    entries = [
        GroundTruthEntry(query_name=q, synonyms=frozenset(syns))
        for q, syns in sorted(grouped.items())
        if syns
    ]
    return GroundTruthLoad(entries=entries, self_pairs_dropped=self_pairs, unusable_dropped=unusable)


def write_ground_truth(path: str | Path, entries: Sequence[GroundTruthEntry]) -> int:
    """Write entries back to pair-per-line TSV; returns pair count."""
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as handle:
        for entry in sorted(entries, key=lambda e: e.query_name):
            for synonym in sorted(entry.synonyms):
                handle.write(f"{entry.query_name}\t{synonym}\n")
                count += 1
    return count
