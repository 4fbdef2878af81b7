"""Cleaning of raw name strings into the canonical matching form.

A cleaned name contains only Arabic-block letters and, for compound names
such as عبد الله, single internal spaces.  Everything else is dropped:

1. digits (both ASCII and Arabic-Indic forms),
2. punctuation and symbols,
3. Latin and other non-Arabic letters,
4. the tatweel filler (U+0640),
5. short-vowel diacritics and related marks (U+064B..U+0652),
6. surplus whitespace (runs collapse to one space, ends are stripped).

Input is composed to NFC first so a hamza carrier typed as letter plus
combining mark arrives as one scalar.  The carriers themselves (أ إ آ ؤ ئ)
are kept as written: folding them onto bare letters would erase exactly
the variant evidence the matching rules look for.
"""

from __future__ import annotations

import re
import unicodedata

__all__ = ["EmptyAfterCleaning", "clean", "is_clean", "is_compound"]


class EmptyAfterCleaning(ValueError):
    """Raised when nothing of the input survives cleaning."""


_SPACE_RUN = re.compile(r" {2,}")


def _is_arabic_letter(ch: str) -> bool:
    # Arabic block only; category Lo excludes the tatweel (Lm), digits (Nd)
    # and combining diacritics (Mn) in one test.
    return "؀" <= ch <= "ۿ" and unicodedata.category(ch) == "Lo"


def clean(raw: str) -> str:
    """Normalize ``raw`` to the form every other module works with.

    Raises EmptyAfterCleaning when no Arabic letter survives.
    """
    composed = unicodedata.normalize("NFC", raw)
    kept = []
    for ch in composed:
        if _is_arabic_letter(ch):
            kept.append(ch)
        elif ch.isspace():
            kept.append(" ")
    text = _SPACE_RUN.sub(" ", "".join(kept)).strip()
    if not text:
        raise EmptyAfterCleaning(f"no Arabic letters left after cleaning {raw!r}")
    return text


def is_clean(name: str) -> bool:
    """True when ``name`` is already canonical, i.e. a clean() fixed point."""
    if not name or name != name.strip(" ") or "  " in name:
        return False
    return all(ch == " " or _is_arabic_letter(ch) for ch in name)


def is_compound(name: str) -> bool:
    """True for multi-word names (at least one internal space)."""
    return " " in name
