"""New York State Identification and Intelligence System phonetic code.

Original rule set: leading/trailing digraph transcodes, a left-to-right scan
that rewrites vowels to A (EV to AF), Q to G, Z to S, M to N, KN to N, K to C,
SCH to SSS, PH to FF, and collapses H/W against their neighbors, followed by
duplicate squeezing and the trailing S / AY / A cleanups.
"""

from __future__ import annotations

_VOWELS = "AEIOU"


def nysiis(word: str) -> str:
    """Encode an uppercase, letters-only word. Example: ROBERT -> RABAD."""
    if not word:
        raise ValueError("nysiis requires a non-empty letters-only word")

    if word.startswith("MAC"):
        word = "MCC" + word[3:]
    elif word.startswith("KN"):
        word = "NN" + word[2:]
    elif word.startswith("K"):
        word = "C" + word[1:]
    elif word.startswith(("PH", "PF")):
        word = "FF" + word[2:]
    elif word.startswith("SCH"):
        word = "SSS" + word[3:]

    if word.endswith(("EE", "IE")):
        word = word[:-2] + "Y"
    elif word.endswith(("DT", "RT", "RD", "NT", "ND")):
        word = word[:-2] + "D"

    # Left-to-right transcode over a working list so later context reads the
    # rewritten neighbors (e.g. W after an already-rewritten vowel).
    chars = list(word)
    i = 1
    while i < len(chars):
        ch = chars[i]
        nxt = chars[i + 1] if i + 1 < len(chars) else ""
        if ch in _VOWELS:
            if ch == "E" and nxt == "V":
                chars[i : i + 2] = ["A", "F"]
                i += 2
                continue
            chars[i] = "A"
        elif ch == "Q":
            chars[i] = "G"
        elif ch == "Z":
            chars[i] = "S"
        elif ch == "M":
            chars[i] = "N"
        elif ch == "K":
            if nxt == "N":
                chars[i : i + 2] = ["N"]
            else:
                chars[i] = "C"
        elif chars[i : i + 3] == ["S", "C", "H"]:
            chars[i : i + 3] = ["S", "S", "S"]
            i += 3
            continue
        elif ch == "P" and nxt == "H":
            chars[i : i + 2] = ["F", "F"]
            i += 2
            continue
        elif ch == "H":
            prev = chars[i - 1]
            if prev not in _VOWELS or (nxt != "" and nxt not in _VOWELS) or nxt == "":
                chars[i] = prev
        elif ch == "W":
            if chars[i - 1] in _VOWELS:
                chars[i] = chars[i - 1]
        i += 1

    key = [chars[0]]
    for ch in chars[1:]:
        if ch != key[-1]:
            key.append(ch)

    if len(key) > 1 and key[-1] == "S":
        key.pop()
    if len(key) > 2 and key[-2] == "A" and key[-1] == "Y":
        del key[-2]
    if len(key) > 1 and key[-1] == "A":
        key.pop()
    return "".join(key)
