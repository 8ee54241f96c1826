"""Double Metaphone (Philips, 2000).

Faithful transcription of the published rule tables: produces a primary and
a secondary code so that Anglicized, Germanic, Slavic, and Romance
pronunciations of the same spelling can meet in one bucket. Codes are capped
at four characters (the published default). Input must be uppercase ASCII
letters, optionally with single interior spaces (word boundaries take part
in a few rules, e.g. SAN J-).
"""

from __future__ import annotations

_VOWELS = "AEIOUY"


def _slavo_germanic(word: str) -> bool:
    return "W" in word or "K" in word or "CZ" in word or "WITZ" in word


def double_metaphone(word: str, max_length: int = 4) -> tuple[str, str]:
    """Return (primary, secondary) codes. Example: JEAN -> ("JN", "AN")."""
    if not word:
        raise ValueError("double metaphone requires a non-empty letters-only word")
    length = len(word)
    last = length - 1
    # Trailing pad so lookahead slices and end-of-word boundary checks are
    # plain string comparisons.
    s = word + "      "
    slavo = _slavo_germanic(word)

    primary: list[str] = []
    secondary: list[str] = []

    def add(p: str, alt: str | None = None) -> None:
        primary.append(p)
        secondary.append(p if alt is None else alt)

    def at(start: int, patterns: tuple[str, ...] | str) -> bool:
        if start < 0:
            return False
        if isinstance(patterns, str):
            patterns = (patterns,)
        return any(s[start : start + len(p)] == p for p in patterns)

    def vowel(index: int) -> bool:
        return 0 <= index < length and s[index] in _VOWELS

    i = 0
    if s[:2] in ("GN", "KN", "PN", "WR", "PS"):
        i = 1
    elif s[0] == "X":
        add("S")
        i = 1

    while i < length and (len("".join(primary)) < max_length or len("".join(secondary)) < max_length):
        ch = s[i]

        if ch in _VOWELS:
            if i == 0:
                add("A")
            i += 1

        elif ch == "B":
            add("P")
            i += 2 if s[i + 1] == "B" else 1

        elif ch == "C":
            # Germanic -ACH- as in "bacher", "macher"
            if (
                i > 1
                and not vowel(i - 2)
                and at(i - 1, "ACH")
                and s[i + 2] != "I"
                and (s[i + 2] != "E" or at(i - 2, ("BACHER", "MACHER")))
            ):
                add("K")
                i += 2
            elif i == 0 and at(i, "CAESAR"):
                add("S")
                i += 2
            elif at(i, "CHIA"):
                add("K")
                i += 2
            elif at(i, "CH"):
                if i > 0 and at(i, "CHAE"):
                    add("K", "X")
                elif (
                    i == 0
                    and (at(i + 1, ("HARAC", "HARIS")) or at(i + 1, ("HOR", "HYM", "HIA", "HEM")))
                    and not at(0, "CHORE")
                ):
                    add("K")
                elif (
                    at(0, ("VAN ", "VON "))
                    or at(0, "SCH")
                    or at(i - 2, ("ORCHES", "ARCHIT", "ORCHID"))
                    or at(i + 2, ("T", "S"))
                    or (
                        (at(i - 1, ("A", "O", "U", "E")) or i == 0)
                        and at(i + 2, ("L", "R", "N", "M", "B", "H", "F", "V", "W", " "))
                    )
                ):
                    add("K")
                else:
                    if i > 0:
                        if at(0, "MC"):
                            add("K")
                        else:
                            add("X", "K")
                    else:
                        add("X")
                i += 2
            elif at(i, "CZ") and not at(i - 2, "WICZ"):
                add("S", "X")
                i += 2
            elif at(i + 1, "CIA"):
                add("X")
                i += 3
            elif at(i, "CC") and not (i == 1 and s[0] == "M"):
                if at(i + 2, ("I", "E", "H")) and not at(i + 2, "HU"):
                    if (i == 1 and s[i - 1] == "A") or at(i - 1, ("UCCEE", "UCCES")):
                        add("KS")
                    else:
                        add("X")
                    i += 3
                else:
                    add("K")
                    i += 2
            elif at(i, ("CK", "CG", "CQ")):
                add("K")
                i += 2
            elif at(i, ("CI", "CE", "CY")):
                if at(i, ("CIO", "CIE", "CIA")):
                    add("S", "X")
                else:
                    add("S")
                i += 2
            else:
                add("K")
                if at(i + 1, (" C", " Q", " G")):
                    i += 3
                elif at(i + 1, ("C", "K", "Q")) and not at(i + 1, ("CE", "CI")):
                    i += 2
                else:
                    i += 1

        elif ch == "D":
            if at(i, "DG"):
                if at(i + 2, ("I", "E", "Y")):
                    add("J")
                    i += 3
                else:
                    add("TK")
                    i += 2
            elif at(i, ("DT", "DD")):
                add("T")
                i += 2
            else:
                add("T")
                i += 1

        elif ch == "F":
            add("F")
            i += 2 if s[i + 1] == "F" else 1

        elif ch == "G":
            if s[i + 1] == "H":
                if i > 0 and not vowel(i - 1):
                    add("K")
                    i += 2
                elif i == 0:
                    if s[i + 2] == "I":
                        add("J")
                    else:
                        add("K")
                    i += 2
                elif (
                    (i > 1 and at(i - 2, ("B", "H", "D")))
                    or (i > 2 and at(i - 3, ("B", "H", "D")))
                    or (i > 3 and at(i - 4, ("B", "H")))
                ):
                    i += 2  # silent as in "hugh", "bough"
                else:
                    if i > 2 and s[i - 1] == "U" and at(i - 3, ("C", "G", "L", "R", "T")):
                        add("F")  # "laugh", "cough"
                    elif i > 0 and s[i - 1] != "I":
                        add("K")
                    i += 2
            elif s[i + 1] == "N":
                if i == 1 and vowel(0) and not slavo:
                    add("KN", "N")
                elif not at(i + 2, "EY") and s[i + 1 : i + 2] != "Y" and not slavo:
                    add("N", "KN")
                else:
                    add("KN")
                i += 2
            elif at(i + 1, "LI") and not slavo:
                add("KL", "L")
                i += 2
            elif i == 0 and (
                s[i + 1] == "Y"
                or at(i + 1, ("ES", "EP", "EB", "EL", "EY", "IB", "IL", "IN", "IE", "EI", "ER"))
            ):
                add("K", "J")
                i += 2
            elif (
                (at(i + 1, "ER") or s[i + 1] == "Y")
                and not at(0, ("DANGER", "RANGER", "MANGER"))
                and not at(i - 1, ("E", "I"))
                and not at(i - 1, ("RGY", "OGY"))
            ):
                add("K", "J")
                i += 2
            elif at(i + 1, ("E", "I", "Y")) or at(i - 1, ("AGGI", "OGGI")):
                if at(0, ("VAN ", "VON ")) or at(0, "SCH") or at(i + 1, "ET"):
                    add("K")
                elif at(i + 1, "IER "):
                    add("J")
                else:
                    add("J", "K")
                i += 2
            else:
                add("K")
                i += 2 if s[i + 1] == "G" else 1

        elif ch == "H":
            if (i == 0 or vowel(i - 1)) and vowel(i + 1):
                add("H")
                i += 2
            else:
                i += 1

        elif ch == "J":
            if at(i, "JOSE") or at(0, "SAN "):
                if (i == 0 and s[i + 4] == " ") or at(0, "SAN "):
                    add("H")
                else:
                    add("J", "H")
                i += 1
            else:
                if i == 0:
                    add("J", "A")
                elif vowel(i - 1) and not slavo and (s[i + 1] == "A" or s[i + 1] == "O"):
                    add("J", "H")
                elif i == last:
                    add("J", "")
                elif not at(i + 1, ("L", "T", "K", "S", "N", "M", "B", "Z")) and not at(
                    i - 1, ("S", "K", "L")
                ):
                    add("J")
                i += 2 if s[i + 1] == "J" else 1

        elif ch == "K":
            add("K")
            i += 2 if s[i + 1] == "K" else 1

        elif ch == "L":
            if s[i + 1] == "L":
                # Spanish -illo/-illa/-alle
                if (
                    i == length - 3 and at(i - 1, ("ILLO", "ILLA", "ALLE"))
                ) or (
                    (at(last - 1, ("AS", "OS")) or at(last, ("A", "O"))) and at(i - 1, "ALLE")
                ):
                    add("L", "")
                else:
                    add("L")
                i += 2
            else:
                add("L")
                i += 1

        elif ch == "M":
            add("M")
            if (at(i - 1, "UMB") and (i + 1 == last or at(i + 2, "ER"))) or s[i + 1] == "M":
                i += 2
            else:
                i += 1

        elif ch == "N":
            add("N")
            i += 2 if s[i + 1] == "N" else 1

        elif ch == "P":
            if s[i + 1] == "H":
                add("F")
                i += 2
            else:
                add("P")
                i += 2 if at(i + 1, ("P", "B")) else 1

        elif ch == "Q":
            add("K")
            i += 2 if s[i + 1] == "Q" else 1

        elif ch == "R":
            # French terminal -ier
            if i == last and not slavo and at(i - 2, "IE") and not at(i - 4, ("ME", "MA")):
                add("", "R")
            else:
                add("R")
            i += 2 if s[i + 1] == "R" else 1

        elif ch == "S":
            if at(i - 1, ("ISL", "YSL")):
                i += 1  # silent as in "isle", "carlysle"
            elif i == 0 and at(i, "SUGAR"):
                add("X", "S")
                i += 1
            elif at(i, "SH"):
                if at(i + 1, ("HEIM", "HOEK", "HOLM", "HOLZ")):
                    add("S")
                else:
                    add("X")
                i += 2
            elif at(i, ("SIO", "SIA")) or at(i, "SIAN"):
                if not slavo:
                    add("S", "X")
                else:
                    add("S")
                i += 3
            elif (i == 0 and at(i + 1, ("M", "N", "L", "W"))) or at(i + 1, "Z"):
                add("S", "X")
                i += 2 if at(i + 1, "Z") else 1
            elif at(i, "SC"):
                if s[i + 2] == "H":
                    if at(i + 3, ("OO", "ER", "EN", "UY", "ED", "EM")):
                        if at(i + 3, ("ER", "EN")):
                            add("X", "SK")
                        else:
                            add("SK")
                    else:
                        if i == 0 and not vowel(3) and s[3] != "W":
                            add("X", "S")
                        else:
                            add("X")
                    i += 3
                elif at(i + 2, ("I", "E", "Y")):
                    add("S")
                    i += 3
                else:
                    add("SK")
                    i += 3
            else:
                if i == last and at(i - 2, ("AI", "OI")):
                    add("", "S")  # French terminal silent S
                else:
                    add("S")
                i += 2 if at(i + 1, ("S", "Z")) else 1

        elif ch == "T":
            if at(i, "TION"):
                add("X")
                i += 3
            elif at(i, ("TIA", "TCH")):
                add("X")
                i += 3
            elif at(i, "TH") or at(i, "TTH"):
                if at(i + 2, ("OM", "AM")) or at(0, ("VAN ", "VON ")) or at(0, "SCH"):
                    add("T")  # Germanic "thomas", "thames"
                else:
                    add("0", "T")
                i += 2
            else:
                add("T")
                i += 2 if at(i + 1, ("T", "D")) else 1

        elif ch == "V":
            add("F")
            i += 2 if s[i + 1] == "V" else 1

        elif ch == "W":
            if at(i, "WR"):
                add("R")
                i += 2
            elif i == 0 and (vowel(i + 1) or at(i, "WH")):
                if vowel(i + 1):
                    add("A", "F")
                else:
                    add("A")
                i += 1
            elif (i == last and vowel(i - 1)) or at(i - 1, ("EWSKI", "EWSKY", "OWSKI", "OWSKY")) or at(0, "SCH"):
                add("", "F")
                i += 1
            elif at(i, ("WICZ", "WITZ")):
                add("TS", "FX")
                i += 4
            else:
                i += 1

        elif ch == "X":
            if not (i == last and (at(i - 3, ("IAU", "EAU")) or at(i - 2, ("AU", "OU")))):
                add("KS")
            i += 2 if at(i + 1, ("C", "X")) else 1

        elif ch == "Z":
            if s[i + 1] == "H":
                add("J")
                i += 2
            else:
                if at(i + 1, ("ZO", "ZI", "ZA")) or (slavo and i > 0 and s[i - 1] != "T"):
                    add("S", "TS")
                else:
                    add("S")
                i += 2 if s[i + 1] == "Z" else 1

        else:
            i += 1

    return "".join(primary)[:max_length], "".join(secondary)[:max_length]
