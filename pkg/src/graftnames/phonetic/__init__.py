"""Phonetic encoders and the code-bucket index used for sound-alike retrieval.

Five encoders: Soundex, Metaphone, Double Metaphone, NYSIIS, and the match
rating approach (MRA, encoding rules only). All operate on ASCII letters;
accented input is folded to base letters first, so the multilingual corpus
can pass through the ASCII-defined rule sets.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from typing import Iterable

from .soundex import soundex
from .metaphone import metaphone
from .dmetaphone import double_metaphone
from .nysiis import nysiis
from .mra import mra


class Unencodable(ValueError):
    """Raised when a name has no letters left to encode."""

    def __init__(self, name: str):
        super().__init__(f"name has no encodable letters: {name!r}")
        self.name = name


class PhoneticAlgorithm(enum.Enum):
    SOUNDEX = "soundex"
    METAPHONE = "metaphone"
    DOUBLE_METAPHONE = "double_metaphone"
    NYSIIS = "nysiis"
    MRA = "mra"


_ALGORITHM_ALIASES = {
    "soundex": PhoneticAlgorithm.SOUNDEX,
    "metaphone": PhoneticAlgorithm.METAPHONE,
    "double_metaphone": PhoneticAlgorithm.DOUBLE_METAPHONE,
    "dmetaphone": PhoneticAlgorithm.DOUBLE_METAPHONE,
    "dm": PhoneticAlgorithm.DOUBLE_METAPHONE,
    "nysiis": PhoneticAlgorithm.NYSIIS,
    "mra": PhoneticAlgorithm.MRA,
}


def parse_algorithm(label: str | PhoneticAlgorithm) -> PhoneticAlgorithm:
    if isinstance(label, PhoneticAlgorithm):
        return label
    try:
        return _ALGORITHM_ALIASES[label.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown phonetic algorithm: {label!r}") from None


@dataclass(frozen=True, slots=True)
class PhoneticCode:
    primary: str
    secondary: str | None = None

    def codes(self) -> tuple[str, ...]:
        if self.secondary is not None and self.secondary != self.primary:
            return (self.primary, self.secondary)
        return (self.primary,)


def fold_to_ascii_letters(name: str, keep_spaces: bool = False) -> str:
    """Uppercase ASCII letters only; accents folded to their base letter.

    With ``keep_spaces`` interior word breaks survive as single spaces
    (Double Metaphone's rules inspect word boundaries).
    """
    decomposed = unicodedata.normalize("NFKD", name)
    out: list[str] = []
    for ch in decomposed:
        if ch.isspace():
            if keep_spaces and out and out[-1] != " ":
                out.append(" ")
            continue
        ch = ch.upper()
        if "A" <= ch <= "Z":
            out.append(ch)
    return "".join(out).strip()


def encode(name: str, algorithm: PhoneticAlgorithm | str) -> PhoneticCode:
    """Deterministic phonetic code(s) for a normalized name.

    Raises :class:`Unencodable` when no letters remain after folding. A few
    degenerate inputs are all-silent under the Metaphone rule sets ("w",
    "wy"); the folded first letter stands in as the code so the primary is
    never empty.
    """
    algorithm = parse_algorithm(algorithm)
    if algorithm is PhoneticAlgorithm.DOUBLE_METAPHONE:
        folded = fold_to_ascii_letters(name, keep_spaces=True)
        if not folded:
            raise Unencodable(name)
        primary, secondary = double_metaphone(folded)
        if not primary:
            primary = secondary or folded[0]
        if not secondary:
            secondary = primary
        return PhoneticCode(primary=primary, secondary=secondary)
    folded = fold_to_ascii_letters(name)
    if not folded:
        raise Unencodable(name)
    if algorithm is PhoneticAlgorithm.SOUNDEX:
        return PhoneticCode(primary=soundex(folded))
    if algorithm is PhoneticAlgorithm.METAPHONE:
        return PhoneticCode(primary=metaphone(folded) or folded[0])
    if algorithm is PhoneticAlgorithm.NYSIIS:
        return PhoneticCode(primary=nysiis(folded))
    if algorithm is PhoneticAlgorithm.MRA:
        return PhoneticCode(primary=mra(folded))
    raise ValueError(f"unhandled algorithm: {algorithm}")


@dataclass(slots=True)
class CodeIndex:
    """Immutable-after-build map from phonetic code to the names sharing it."""

    algorithm: PhoneticAlgorithm
    buckets: dict[str, set[str]] = field(default_factory=dict)
    skipped: int = 0

    def bucket(self, code: str) -> set[str]:
        return self.buckets.get(code, set())

    def candidates_for(self, name: str) -> set[str]:
        """Union of the buckets reachable from ``name``'s code(s)."""
        code = encode(name, self.algorithm)
        found: set[str] = set()
        for c in code.codes():
            found |= self.buckets.get(c, set())
        return found


def build_code_index(names: Iterable[str], algorithm: PhoneticAlgorithm | str) -> CodeIndex:
    """Index every encodable name under its code(s); Double Metaphone names
    appear under both primary and secondary codes."""
    algorithm = parse_algorithm(algorithm)
    index = CodeIndex(algorithm=algorithm)
    for name in names:
        try:
            code = encode(name, algorithm)
        except Unencodable:
            index.skipped += 1
            continue
        for c in code.codes():
            index.buckets.setdefault(c, set()).add(name)
    return index


__all__ = [
    "CodeIndex",
    "PhoneticAlgorithm",
    "PhoneticCode",
    "Unencodable",
    "build_code_index",
    "double_metaphone",
    "encode",
    "fold_to_ascii_letters",
    "metaphone",
    "mra",
    "nysiis",
    "parse_algorithm",
    "soundex",
]
