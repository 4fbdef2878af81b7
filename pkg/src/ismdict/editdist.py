"""Levenshtein distance over Unicode scalars plus single-edit classification.

Strings are compared per code point; spaces inside compound names count as
characters.  Reported positions are 1-based, with 0 reserved to mean
"absent".
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Identical",
    "Substitution",
    "InsertDel",
    "Other",
    "EditClass",
    "levenshtein",
    "within",
    "classify_single_edit",
]


@dataclass(frozen=True)
class Identical:
    """The two strings are equal."""


@dataclass(frozen=True)
class Substitution:
    """Equal lengths, exactly one differing letter."""

    position: int  # 1-based index of the differing letter
    char_a: str
    char_b: str


@dataclass(frozen=True)
class InsertDel:
    """Lengths differ by one; the longer side carries one extra letter."""

    position: int  # 1-based index of the extra letter in the longer string
    char: str
    longer: str  # "a" or "b": which argument is the longer one


@dataclass(frozen=True)
class Other:
    """More than one edit apart."""


EditClass = Identical | Substitution | InsertDel | Other


def levenshtein(a: str, b: str) -> int:
    """Minimum number of insertions, deletions and substitutions."""
    if a == b:
        return 0
    # shared prefix and suffix contribute nothing
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    j = 0
    while j < len(a) - i and j < len(b) - i and a[len(a) - 1 - j] == b[len(b) - 1 - j]:
        j += 1
    a, b = a[i : len(a) - j], b[i : len(b) - j]
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) > len(b):
        a, b = b, a
    prev = list(range(len(a) + 1))
    for row, cb in enumerate(b, 1):
        cur = [row] + [0] * len(a)
        for col, ca in enumerate(a, 1):
            cur[col] = min(
                prev[col] + 1,
                cur[col - 1] + 1,
                prev[col - 1] + (ca != cb),
            )
        prev = cur
    return prev[-1]


def within(a: str, b: str, t: int) -> bool:
    """Equivalent to ``levenshtein(a, b) <= t`` without full computation.

    Short-circuits on the length gap, then walks a band of width 2t+1 and
    abandons the scan once every cell in the current row exceeds t.
    """
    if t < 0:
        raise ValueError("threshold must be >= 0")
    if abs(len(a) - len(b)) > t:
        return False
    if a == b:
        return True
    if t == 0:
        return False
    if len(a) > len(b):
        a, b = b, a
    la = len(a)
    cap = t + 1  # any value above t is equivalent to this sentinel
    prev = [min(c, cap) for c in range(la + 1)]
    for row in range(1, len(b) + 1):
        lo = max(1, row - t)
        hi = min(la, row + t)
        cur = [cap] * (la + 1)
        if lo == 1:
            cur[0] = min(row, cap)
        cb = b[row - 1]
        best = cur[0]
        for col in range(lo, hi + 1):
            cost = min(
                prev[col] + 1,
                cur[col - 1] + 1,
                prev[col - 1] + (a[col - 1] != cb),
            )
            if cost > cap:
                cost = cap
            cur[col] = cost
            if cost < best:
                best = cost
        if best > t:
            return False
        prev = cur
    return prev[la] <= t


def classify_single_edit(a: str, b: str) -> EditClass:
    """Describe the relation between two strings at most one edit apart."""
    if a == b:
        return Identical()
    la, lb = len(a), len(b)
    if la == lb:
        diff = [i for i in range(la) if a[i] != b[i]]
        if len(diff) == 1:
            i = diff[0]
            return Substitution(i + 1, a[i], b[i])
        return Other()
    if abs(la - lb) == 1:
        longer, shorter, side = (a, b, "a") if la > lb else (b, a, "b")
        i = 0
        while i < len(shorter) and longer[i] == shorter[i]:
            i += 1
        # leftmost divergence; the extra letter sits there if anything does
        if longer[i + 1 :] == shorter[i:]:
            return InsertDel(i + 1, longer[i], side)
        return Other()
    return Other()
