"""Name cleaning: abbreviation, prepositional-prefix, and honorific removal.

Cleaning is token-wise only. A prefix such as "de" is dropped when it stands
alone as a token, never as a substring, so "Devon" survives intact.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .records import ProfileRecord, RawProfile

DEFAULT_MIN_NAME_LENGTH = 2

# Prepositions meaning "of"/"from"/"the" that genealogy dumps attach to names.
DEFAULT_PREFIXES = frozenset(
    {"van", "de", "da", "der", "la", "le", "das", "dos", "dele", "du"}
)

DEFAULT_HONORIFICS = frozenset({"mr", "mrs", "ms", "dr", "jr", "sr", "prof"})


@dataclass(frozen=True, slots=True)
class NormalizationConfig:
    min_name_length: int = DEFAULT_MIN_NAME_LENGTH
    prefix_list: frozenset[str] = DEFAULT_PREFIXES
    honorific_list: frozenset[str] = DEFAULT_HONORIFICS
    case_fold: bool = True

    def __post_init__(self) -> None:
        if self.min_name_length < 1:
            raise ValueError("min_name_length must be >= 1")
        for what, tokens in (("prefix", self.prefix_list), ("honorific", self.honorific_list)):
            for tok in tokens:
                if not tok or tok != tok.strip() or tok != tok.lower():
                    raise ValueError(f"{what} list entries must be lowercase trimmed tokens: {tok!r}")


DEFAULT_CONFIG = NormalizationConfig()


@dataclass(slots=True)
class NormalizationStats:
    honorifics_stripped: int = 0
    prefixes_stripped: int = 0
    short_tokens_dropped: int = 0
    names_dropped: int = 0

    def merge(self, other: "NormalizationStats") -> None:
        self.honorifics_stripped += other.honorifics_stripped
        self.prefixes_stripped += other.prefixes_stripped
        self.short_tokens_dropped += other.short_tokens_dropped
        self.names_dropped += other.names_dropped


def _strip_token_edges(token: str) -> str:
    """Remove punctuation from both ends of a token; interior stays ("anne-marie")."""
    start = 0
    end = len(token)
    while start < end and not token[start].isalnum():
        start += 1
    while end > start and not token[end - 1].isalnum():
        end -= 1
    return token[start:end]


def normalize_name(
    raw: str,
    config: NormalizationConfig = DEFAULT_CONFIG,
    stats: NormalizationStats | None = None,
) -> str | None:
    """Clean one raw name; returns ``None`` when nothing usable remains.

    Total function: never raises on any input string. Applies Unicode NFC so
    composed and decomposed accents compare equal downstream.
    """
    if raw is None:
        return None
    text = unicodedata.normalize("NFC", raw)
    if config.case_fold:
        text = text.lower()
    kept: list[str] = []
    for token in text.split():
        token = _strip_token_edges(token)
        probe = token if config.case_fold else token.lower()
        if not probe:
            continue
        if probe in config.honorific_list:
            if stats is not None:
                stats.honorifics_stripped += 1
            continue
        if probe in config.prefix_list:
            if stats is not None:
                stats.prefixes_stripped += 1
            continue
        if len(token) < config.min_name_length:
            if stats is not None:
                stats.short_tokens_dropped += 1
            continue
        kept.append(token)
    if not kept:
        return None
    return " ".join(kept)


def normalize_profiles(
    profiles: Iterable[RawProfile],
    config: NormalizationConfig = DEFAULT_CONFIG,
) -> tuple[list[ProfileRecord], NormalizationStats]:
    """Normalize forename and surname independently for every profile.

    Profiles are retained even when one (or both) name fields normalize to
    nothing; the record can still act as a pass-through tree vertex.
    """
    stats = NormalizationStats()
    records: list[ProfileRecord] = []
    for raw in profiles:
        forename = normalize_name(raw.forename, config, stats)
        if raw.forename and forename is None:
            stats.names_dropped += 1
        surname = normalize_name(raw.surname, config, stats)
        if raw.surname and surname is None:
            stats.names_dropped += 1
        records.append(
            ProfileRecord(
                profile_id=raw.profile_id,
                forename=forename,
                surname=surname,
                father_id=raw.father_id,
                mother_id=raw.mother_id,
            )
        )
    return records, stats


def config_with_overrides(
    base: NormalizationConfig = DEFAULT_CONFIG,
    *,
    min_name_length: int | None = None,
    prefixes: Sequence[str] | None = None,
    honorifics: Sequence[str] | None = None,
    case_fold: bool | None = None,
) -> NormalizationConfig:
    """Apply optional overrides (CLI flags / config file) onto a base config."""
    cfg = base
    if min_name_length is not None:
        cfg = replace(cfg, min_name_length=min_name_length)
    if prefixes is not None:
        cfg = replace(cfg, prefix_list=frozenset(p.strip().lower() for p in prefixes if p.strip()))
    if honorifics is not None:
        cfg = replace(cfg, honorific_list=frozenset(h.strip().lower() for h in honorifics if h.strip()))
    if case_fold is not None:
        cfg = replace(cfg, case_fold=case_fold)
    return cfg
