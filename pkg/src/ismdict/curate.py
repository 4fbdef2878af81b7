"""Manual amendment of a built dictionary, and the before/after accounting.

A patch is an ordered list of operations:

    REJECT	<a>	<b>       drop a pairing the rules accepted wrongly
    ACCEPT	<a>	<b>       add a pairing the rules missed
    STANDARD	<name>	<std>     pin the standard form of <name>'s group

Operations apply in file order; components and standard forms are
recomputed once all of them ran.  Pinned standards stick: they are stored
with the dictionary and survive later recomputations as long as the pinned
form stays inside the target's component.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

from .builder import select_standard
from .store import (
    ORIGIN_AUTO,
    ORIGIN_CURATED,
    Alternative,
    DictEntry,
    Dictionary,
    InvariantViolation,
    ParseError,
)
from .textprep import EmptyAfterCleaning, clean
from .unionfind import DisjointSet

__all__ = [
    "Reject",
    "Accept",
    "SetStandard",
    "Patch",
    "UnknownName",
    "UniverseMismatch",
    "RedundantOp",
    "apply_patch",
    "alt_histogram",
    "histogram_change",
    "BucketRow",
    "CurationStats",
    "stats",
]


@dataclass(frozen=True)
class Reject:
    a: str
    b: str


@dataclass(frozen=True)
class Accept:
    a: str
    b: str


@dataclass(frozen=True)
class SetStandard:
    name: str
    std: str


class UnknownName(KeyError):
    """A patch operation referenced a name the dictionary does not hold."""


class UniverseMismatch(ValueError):
    """stats() was handed dictionaries over different name sets."""


class RedundantOp(UserWarning):
    """Rejecting an absent pair or accepting a present one."""


_OP_WORDS = {"REJECT", "ACCEPT", "STANDARD"}


@dataclass(frozen=True)
class Patch:
    """An ordered, parsed list of curation operations."""

    ops: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "Patch":
        ops = []
        for line_no, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ParseError(line_no, f"expected 3 fields, got {len(fields)}")
            word, x_raw, y_raw = fields
            if word not in _OP_WORDS:
                raise ParseError(line_no, f"unknown operation {word!r}")
            try:
                x, y = clean(x_raw), clean(y_raw)
            except EmptyAfterCleaning as exc:
                raise ParseError(line_no, str(exc)) from None
            if word == "REJECT":
                ops.append(Reject(x, y))
            elif word == "ACCEPT":
                ops.append(Accept(x, y))
            else:
                ops.append(SetStandard(x, y))
        return cls(tuple(ops))

    @classmethod
    def load(cls, path) -> "Patch":
        return cls.parse(Path(path).read_text(encoding="utf-8"))


def _pair_key(a: str, b: str):
    return (a, b) if a < b else (b, a)


def apply_patch(d: Dictionary, patch: Patch) -> Dictionary:
    """Return a new dictionary with ``patch`` applied.

    Unknown names abort with UnknownName; operations that change nothing
    only warn (RedundantOp) and are skipped.
    """
    counts = d.counts()
    pairs = dict(d.pairs())
    overrides = dict(d.std_overrides)
    fresh_targets = set()
    for op in patch.ops:
        if isinstance(op, (Reject, Accept)):
            for name in (op.a, op.b):
                if name not in counts:
                    raise UnknownName(name)
            if op.a == op.b:
                raise InvariantViolation(f"cannot pair {op.a!r} with itself")
            key = _pair_key(op.a, op.b)
            if isinstance(op, Reject):
                if key in pairs:
                    del pairs[key]
                else:
                    warnings.warn(f"pair {key} was not present", RedundantOp)
            else:
                if key in pairs:
                    warnings.warn(f"pair {key} already present", RedundantOp)
                else:
                    pairs[key] = ORIGIN_CURATED
        else:
            for name in (op.name, op.std):
                if name not in counts:
                    raise UnknownName(name)
            overrides[op.name] = op.std
            fresh_targets.add(op.name)

    ds = DisjointSet(counts)
    for a, b in pairs:
        ds.union(a, b)
    # pinned standards: fresh pins must be valid now, stale old pins drop out
    standard_by_root: dict = {}
    stale = []
    for target, std in overrides.items():
        if ds.find(target) != ds.find(std):
            if target in fresh_targets:
                raise InvariantViolation(
                    f"standard {std!r} is outside the group of {target!r}"
                )
            stale.append(target)
            continue
        standard_by_root[ds.find(target)] = std
    for target in stale:
        warnings.warn(
            f"dropping pinned standard for {target!r}: no longer in one group",
            RedundantOp,
        )
        del overrides[target]

    neighbors: dict = {name: [] for name in counts}
    origin_of: dict = {}
    for (a, b), origin in pairs.items():
        neighbors[a].append(b)
        neighbors[b].append(a)
        origin_of[(a, b)] = origin
    standard: dict = {}
    for root, members in ds.groups().items():
        std = standard_by_root.get(root)
        if std is None:
            std = select_standard(members, counts)
        for member in members:
            standard[member] = std
    entries = []
    for name in sorted(counts):
        alts = tuple(
            Alternative(other, counts[other], origin_of[_pair_key(name, other)])
            for other in sorted(neighbors[name], key=lambda n: (-counts[n], n))
        )
        entries.append(DictEntry(name, counts[name], standard[name], alts))
    return Dictionary(entries, overrides)


def alt_histogram(d: Dictionary) -> dict:
    """Bucket names by how many alternatives they list (1 and up)."""
    hist: dict = {}
    for entry in d:
        n = len(entry.alternatives)
        if n:
            hist[n] = hist.get(n, 0) + 1
    return hist


@dataclass(frozen=True)
class BucketRow:
    alternatives: int
    before: int
    after: int
    change: int


def histogram_change(before: dict, after: dict) -> tuple:
    """Rows 1..max bucket with before/after counts and their difference."""
    top = max(list(before) + list(after), default=0)
    rows = []
    for n in range(1, top + 1):
        b = before.get(n, 0)
        a = after.get(n, 0)
        rows.append(BucketRow(n, b, a, a - b))
    return tuple(rows)


@dataclass(frozen=True)
class CurationStats:
    """Pair-level diff between an auto-built and a curated dictionary."""

    auto_pairs: int
    rejected_pairs: int
    added_pairs: int
    acceptance_error_rate: float
    rejection_error_rate: float
    bucket_table: tuple

    @property
    def names_with_alts_before(self) -> int:
        return sum(row.before for row in self.bucket_table)

    @property
    def names_with_alts_after(self) -> int:
        return sum(row.after for row in self.bucket_table)


def stats(before: Dictionary, after: Dictionary) -> CurationStats:
    """Quantify what curation changed between two dictionaries.

    The error rates divide by the auto pair count: rejected/auto measures
    wrong acceptances, added/auto measures wrong rejections.
    """
    if set(before.names) != set(after.names):
        raise UniverseMismatch("dictionaries cover different name sets")
    pairs_before = set(before.pairs())
    pairs_after = set(after.pairs())
    auto = len(pairs_before)
    rejected = len(pairs_before - pairs_after)
    added = len(pairs_after - pairs_before)
    return CurationStats(
        auto_pairs=auto,
        rejected_pairs=rejected,
        added_pairs=added,
        acceptance_error_rate=rejected / auto if auto else 0.0,
        rejection_error_rate=added / auto if auto else 0.0,
        bucket_table=histogram_change(alt_histogram(before), alt_histogram(after)),
    )
