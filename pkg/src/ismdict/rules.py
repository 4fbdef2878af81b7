"""Symmetric variant rules over cleaned Arabic name pairs.

Two written forms count as alternatives of one another when they are a
single edit apart and that edit matches one of the rules below, or when
one form is exactly the other with the definite article ال glued to the
front (the only case two edits apart).

id    edit shape                 letters
R1    substitute anywhere        س ↔ ص
R2    last letters               ي ↔ ى
R3    substitute anywhere        ض ↔ ظ
R4    substitute anywhere        ج ↔ ش   (accent shift; ج ↔ ث selectable)
R5_6  last letters               ا ↔ ه   (ا ↔ و selectable)
R7    substitute anywhere        ق ↔ ج
R8a   substitute anywhere        ذ ↔ د
R8b   substitute anywhere        ذ ↔ ض
R9    hamza: insert or delete ء أ إ آ ؤ ئ at any position, or substitute
      one of them for ا / و / ي (covers the legacy keyboard fold أحمد↔احمد)
R10   the definite article ال added or removed at the front
R11   last letters               ة ↔ ت
R12   last letters               ة ↔ ه
R13a  insert or delete ا at position >= 2 of the longer form
R13b  insert or delete و at position >= 2
R13c  insert or delete ي at position >= 2
R14   final اء ↔ final ا (trailing ء dropped or added after ا)
R15   last letters               ا ↔ ى

"Last letters" rules fire on any single-edit pair whose final letters are
the two given ones.  That covers the plain final substitution (رولا/رولى)
and also pairs like يحيى/يحي where the shorter form simply drops its last
letter.  The position guard on R13 keeps leading-letter noise out: a bare
ا added in front (احمد/حمد) never fires, while the hamza rule R9 has no
guard because carriers genuinely come and go at the front (إبراهيم/براهيم).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .editdist import InsertDel, Other, Substitution, classify_single_edit
from .textprep import is_clean

__all__ = [
    "RuleId",
    "RuleTable",
    "DEFAULT_TABLE",
    "HAMZA_FAMILY",
    "HAMZA_SWAP",
    "ARTICLE",
    "match_rules",
    "expand",
]


class RuleId(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5_6 = "R5_6"
    R7 = "R7"
    R8A = "R8a"
    R8B = "R8b"
    R9 = "R9"
    R10 = "R10"
    R11 = "R11"
    R12 = "R12"
    R13A = "R13a"
    R13B = "R13b"
    R13C = "R13c"
    R14 = "R14"
    R15 = "R15"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


# hamza itself plus the letters that carry it
HAMZA_FAMILY = frozenset("ءأإآؤئ")  # ء أ إ آ ؤ ئ
# what a hamza letter is commonly re-written as (or written instead of)
HAMZA_SWAP = frozenset("اوي")  # ا و ي
ARTICLE = "ال"  # ال

_SUBST_PAIRS = {
    RuleId.R1: ("س", "ص"),  # س ص
    RuleId.R3: ("ض", "ظ"),  # ض ظ
    RuleId.R4: ("ج", "ش"),  # ج ش
    RuleId.R7: ("ق", "ج"),  # ق ج
    RuleId.R8A: ("ذ", "د"),  # ذ د
    RuleId.R8B: ("ذ", "ض"),  # ذ ض
}
_SUBST_R4_PRINTED = ("ج", "ث")  # ج ث

_LAST_PAIRS = {
    RuleId.R2: ("ي", "ى"),  # ي ى
    RuleId.R5_6: ("ا", "ه"),  # ا ه
    RuleId.R11: ("ة", "ت"),  # ة ت
    RuleId.R12: ("ة", "ه"),  # ة ه
    RuleId.R15: ("ا", "ى"),  # ا ى
}
_LAST_R5_6_PRINTED = ("ا", "و")  # ا و

_INSERT_LETTERS = {
    RuleId.R13A: "ا",  # ا
    RuleId.R13B: "و",  # و
    RuleId.R13C: "ي",  # ي
}


@dataclass(frozen=True)
class RuleTable:
    """The active rule set.

    ``disabled`` switches individual rules off.  The two ``printed_*``
    flags swap in the alternative letter readings of R4 and R5_6 so the
    two published variants of those rules can be compared side by side.
    """

    disabled: frozenset = field(default_factory=frozenset)
    printed_r4: bool = False
    printed_r5_6: bool = False

    def enabled(self, rule: RuleId) -> bool:
        return rule not in self.disabled

    def substitution_pairs(self) -> dict:
        pairs = dict(_SUBST_PAIRS)
        if self.printed_r4:
            pairs[RuleId.R4] = _SUBST_R4_PRINTED
        return {r: frozenset(p) for r, p in pairs.items() if self.enabled(r)}

    def last_letter_pairs(self) -> dict:
        pairs = dict(_LAST_PAIRS)
        if self.printed_r5_6:
            pairs[RuleId.R5_6] = _LAST_R5_6_PRINTED
        return {r: frozenset(p) for r, p in pairs.items() if self.enabled(r)}

    def insertion_letters(self) -> dict:
        return {r: ch for r, ch in _INSERT_LETTERS.items() if self.enabled(r)}

    def alphabet(self) -> frozenset:
        """Every letter that can take part in an enabled rule."""
        chars: set = set()
        for pair in self.substitution_pairs().values():
            chars |= pair
        for pair in self.last_letter_pairs().values():
            chars |= pair
        chars.update(self.insertion_letters().values())
        if self.enabled(RuleId.R9):
            chars |= HAMZA_FAMILY | HAMZA_SWAP
        if self.enabled(RuleId.R14):
            chars.add("ء")  # ء
        if self.enabled(RuleId.R10):
            chars |= set(ARTICLE)
        return frozenset(chars)

    def rows(self) -> list:
        """One descriptive row per rule id, in fixed order, for dumps."""
        subst = dict(_SUBST_PAIRS)
        if self.printed_r4:
            subst[RuleId.R4] = _SUBST_R4_PRINTED
        last = dict(_LAST_PAIRS)
        if self.printed_r5_6:
            last[RuleId.R5_6] = _LAST_R5_6_PRINTED
        out = []
        for rule in RuleId:
            state = "on" if self.enabled(rule) else "off"
            if rule in subst:
                x, y = subst[rule]
                out.append((rule.value, "substitute", f"{x}↔{y}", "anywhere", state))
            elif rule in last:
                x, y = last[rule]
                out.append((rule.value, "last-letter", f"{x}↔{y}", "final", state))
            elif rule in _INSERT_LETTERS:
                out.append((rule.value, "insert-delete", _INSERT_LETTERS[rule], "position>=2", state))
            elif rule is RuleId.R9:
                fam = "".join(sorted(HAMZA_FAMILY))
                swap = "".join(sorted(HAMZA_SWAP))
                out.append((rule.value, "hamza", f"{fam}↔{swap}", "anywhere", state))
            elif rule is RuleId.R10:
                out.append((rule.value, "article", ARTICLE, "leading", state))
            elif rule is RuleId.R14:
                out.append((rule.value, "final-hamza", "اء↔ا", "final", state))
        return out


DEFAULT_TABLE = RuleTable()


def match_rules(a: str, b: str, table: RuleTable = DEFAULT_TABLE) -> frozenset:
    """All rule ids linking ``a`` and ``b``; empty set when unrelated.

    Symmetric in its arguments.  Nonempty results imply the pair is one
    edit apart, except R10 which is always exactly two edits.
    """
    if a == b:
        raise ValueError("match_rules needs two distinct names")
    hits: set = set()
    gap = len(a) - len(b)
    if abs(gap) == 2:
        longer, shorter = (a, b) if gap > 0 else (b, a)
        if longer == ARTICLE + shorter and table.enabled(RuleId.R10):
            hits.add(RuleId.R10)
        return frozenset(hits)
    if abs(gap) > 2:
        return frozenset()
    edit = classify_single_edit(a, b)
    if isinstance(edit, Other):
        return frozenset()
    # exactly one edit apart from here on
    last_pair = frozenset((a[-1], b[-1]))
    if len(last_pair) == 2:
        for rule, pair in table.last_letter_pairs().items():
            if last_pair == pair:
                hits.add(rule)
    if isinstance(edit, Substitution):
        pair = frozenset((edit.char_a, edit.char_b))
        for rule, wanted in table.substitution_pairs().items():
            if pair == wanted:
                hits.add(rule)
        if table.enabled(RuleId.R9):
            if (edit.char_a in HAMZA_FAMILY and edit.char_b in HAMZA_SWAP) or (
                edit.char_b in HAMZA_FAMILY and edit.char_a in HAMZA_SWAP
            ):
                hits.add(RuleId.R9)
    elif isinstance(edit, InsertDel):
        if edit.char in HAMZA_FAMILY and table.enabled(RuleId.R9):
            hits.add(RuleId.R9)
        if edit.position >= 2:
            for rule, letter in table.insertion_letters().items():
                if edit.char == letter:
                    hits.add(rule)
        longer = a if edit.longer == "a" else b
        if (
            table.enabled(RuleId.R14)
            and edit.char == "ء"  # ء
            and edit.position == len(longer)
            and longer.endswith("اء")  # اء
        ):
            hits.add(RuleId.R14)
    return frozenset(hits)


def expand(name: str, table: RuleTable = DEFAULT_TABLE) -> set:
    """Every distinct cleaned form one enabled rule away from ``name``.

    Candidates are brute single edits over the rule alphabet plus the
    article prefix in both directions, filtered through match_rules, so
    membership is exactly "match_rules(name, v) is nonempty".
    """
    letters = table.alphabet()
    candidates: set = set()
    n = len(name)
    for i in range(n):
        candidates.add(name[:i] + name[i + 1 :])  # deletion
        for ch in letters:
            if ch != name[i]:
                candidates.add(name[:i] + ch + name[i + 1 :])  # substitution
    for i in range(n + 1):
        for ch in letters:
            candidates.add(name[:i] + ch + name[i:])  # insertion
    candidates.add(ARTICLE + name)
    if name.startswith(ARTICLE) and len(name) > 2:
        candidates.add(name[2:])
    out: set = set()
    for cand in candidates:
        if cand == name or not is_clean(cand):
            continue
        if match_rules(name, cand, table):
            out.add(cand)
    return out
