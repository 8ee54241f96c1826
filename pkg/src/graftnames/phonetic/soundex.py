"""American Soundex.

Full rule set: first letter kept verbatim, consonants coded 1-6, vowels
(and Y) reset the run so a repeated consonant class separated by a vowel is
coded again, while H and W are transparent separators that do not break a
run. Output is always one letter plus exactly three digits.
"""

from __future__ import annotations

_CODES = {
    "B": "1", "F": "1", "P": "1", "V": "1",
    "C": "2", "G": "2", "J": "2", "K": "2", "Q": "2", "S": "2", "X": "2", "Z": "2",
    "D": "3", "T": "3",
    "L": "4",
    "M": "5", "N": "5",
    "R": "6",
}


def soundex(word: str) -> str:
    """Encode an uppercase, letters-only word. Example: ROBERT -> R163."""
    if not word:
        raise ValueError("soundex requires a non-empty letters-only word")
    first = word[0]
    digits: list[str] = []
    previous = _CODES.get(first)
    for ch in word[1:]:
        if ch in "HW":
            continue
        code = _CODES.get(ch)
        if code is None:
            previous = None
            continue
        if code != previous:
            digits.append(code)
            previous = code
        if len(digits) >= 3:
            break
    return (first + "".join(digits) + "000")[:4]
