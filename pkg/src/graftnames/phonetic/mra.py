"""Match rating approach codex (encoding rules only).

Keep the first letter, drop every other vowel, drop the second letter of
doubled letters, and squeeze codes longer than six characters to the first
three plus the last three. The MRA comparison/rating rules are not needed
for bucket retrieval and are not implemented.
"""

from __future__ import annotations

_VOWELS = "AEIOU"


def mra(word: str) -> str:
    """Encode an uppercase, letters-only word. Example: ROBERT -> RBRT."""
    if not word:
        raise ValueError("mra requires a non-empty letters-only word")
    out = [word[0]]
    previous = word[0]
    for ch in word[1:]:
        if ch not in _VOWELS and ch != previous:
            out.append(ch)
        previous = ch
    code = "".join(out)
    if len(code) > 6:
        code = code[:3] + code[-3:]
    return code
