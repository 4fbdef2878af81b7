"""Build the name dictionary from a frequency-annotated corpus.

Candidate pairs come from a single-deletion index rather than brute
all-pairs scanning: two forms one edit apart always share an index key
(the shorter form itself for an insertion, both forms minus the differing
letter for a substitution), so the index surfaces every pair the
single-edit rules could accept.  Article pairs, the only two-edit case,
are found by direct prefix lookup.  Each candidate still passes the
length-gap prune and the distance gate before any rule predicate runs;
the construction is equivalent to checking all pairs, and the tests hold
it to that.
"""

from __future__ import annotations

import multiprocessing
from collections import defaultdict
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Mapping

from .editdist import within
from .rules import ARTICLE, DEFAULT_TABLE, RuleId, RuleTable, match_rules
from .store import ORIGIN_AUTO, Alternative, DictEntry, Dictionary
from .textprep import EmptyAfterCleaning, clean, is_clean
from .unionfind import DisjointSet

__all__ = [
    "NameRecord",
    "AltEdge",
    "CorpusError",
    "DuplicateName",
    "read_corpus",
    "candidate_pairs",
    "build_edges",
    "build",
    "components",
    "select_standard",
]


@dataclass(frozen=True)
class NameRecord:
    """One corpus row: a cleaned name and how often it occurred."""

    name: str
    count: int = 1


@dataclass(frozen=True)
class AltEdge:
    """An accepted pairing; ``a`` < ``b`` in code-point order."""

    a: str
    b: str
    rules: frozenset
    distance: int
    origin: str = ORIGIN_AUTO


class CorpusError(ValueError):
    """A corpus line could not be used."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateName(CorpusError):
    """The same cleaned name appeared twice."""

    def __init__(self, name: str, line_no: int = 0, first_line: int = 0):
        detail = f"duplicate name {name!r}"
        if first_line:
            detail += f" (first seen on line {first_line})"
        super().__init__(line_no, detail)
        self.name = name


def read_corpus(path, *, merge_duplicates: bool = False) -> list:
    """Parse ``name<TAB>count`` lines; the count is optional and >= 1.

    Every name passes through clean() first.  Blank lines and ``#``
    comments are skipped.  Two lines cleaning to the same name raise
    DuplicateName unless ``merge_duplicates`` sums their counts instead
    (raw survey data routinely collapses many spellings onto one cleaned
    form).
    """
    counts: dict = {}
    first_line: dict = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            name_part, _, count_part = line.partition("\t")
            count = 1
            if count_part.strip():
                try:
                    count = int(count_part.strip())
                except ValueError:
                    raise CorpusError(
                        line_no, f"count is not an integer: {count_part.strip()!r}"
                    ) from None
                if count < 1:
                    raise CorpusError(line_no, f"count must be positive: {count}")
            try:
                name = clean(name_part)
            except EmptyAfterCleaning:
                raise CorpusError(
                    line_no, f"name is empty after cleaning: {name_part!r}"
                ) from None
            if name in counts:
                if merge_duplicates:
                    counts[name] += count
                    continue
                raise DuplicateName(name, line_no, first_line[name])
            counts[name] = count
            first_line[name] = line_no
    return [NameRecord(n, c) for n, c in counts.items()]


def candidate_pairs(names) -> list:
    """Sorted unordered pairs covering every form the rules could link."""
    buckets = defaultdict(set)
    for name in names:
        buckets[name].add(name)
        for i in range(len(name)):
            buckets[name[:i] + name[i + 1 :]].add(name)
    pairs: set = set()
    for members in buckets.values():
        if len(members) < 2:
            continue
        ordered = sorted(members)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                pairs.add((a, b))
    nameset = set(names)
    for name in names:
        prefixed = ARTICLE + name
        if prefixed in nameset:
            pairs.add((name, prefixed) if name < prefixed else (prefixed, name))
    return sorted(pairs)


def _edges_for_pairs(pairs, table: RuleTable) -> list:
    out = []
    for a, b in pairs:
        if abs(len(a) - len(b)) > 2:
            continue
        if not within(a, b, 2):
            continue
        rules = match_rules(a, b, table)
        if rules:
            distance = 2 if RuleId.R10 in rules else 1
            out.append(AltEdge(a, b, rules, distance))
    return out


def build_edges(names, table: RuleTable = DEFAULT_TABLE, jobs: int = 1) -> tuple:
    """All accepted pairings among ``names``, in sorted pair order."""
    pairs = candidate_pairs(sorted(names))
    if jobs <= 1 or len(pairs) < 256:
        return tuple(_edges_for_pairs(pairs, table))
    size = (len(pairs) + jobs - 1) // jobs
    chunks = [pairs[i : i + size] for i in range(0, len(pairs), size)]
    with multiprocessing.Pool(jobs) as pool:
        parts = pool.map(partial(_edges_for_pairs, table=table), chunks)
    return tuple(edge for part in parts for edge in part)


def build(corpus: Iterable, *, table: RuleTable = DEFAULT_TABLE, jobs: int = 1) -> Dictionary:
    """Construct the dictionary for ``corpus`` (an iterable of NameRecord).

    Deterministic: input order never matters, and a parallel run yields a
    value identical to the sequential one.
    """
    counts: dict = {}
    for record in corpus:
        if not is_clean(record.name):
            raise ValueError(f"corpus name is not in cleaned form: {record.name!r}")
        if record.count < 1:
            raise ValueError(f"count must be positive for {record.name!r}")
        if record.name in counts:
            raise DuplicateName(record.name)
        counts[record.name] = record.count
    names = sorted(counts)
    edges = build_edges(names, table=table, jobs=jobs)
    neighbors = defaultdict(list)
    ds = DisjointSet(names)
    for edge in edges:
        neighbors[edge.a].append(edge.b)
        neighbors[edge.b].append(edge.a)
        ds.union(edge.a, edge.b)
    standard: dict = {}
    for members in ds.groups().values():
        std = select_standard(members, counts)
        for member in members:
            standard[member] = std
    entries = []
    for name in names:
        alts = tuple(
            Alternative(other, counts[other], ORIGIN_AUTO)
            for other in sorted(neighbors[name], key=lambda n: (-counts[n], n))
        )
        entries.append(DictEntry(name, counts[name], standard[name], alts))
    return Dictionary(entries)


def components(d: Dictionary) -> tuple:
    """Partition of the dictionary's names into variant components."""
    return d.components()


def select_standard(component, corpus) -> str:
    """The component member with the highest corpus count.

    Ties go to the code-point-smallest name so the choice is total.
    """
    members = list(component)
    if not members:
        raise ValueError("empty component")
    if isinstance(corpus, Mapping):
        counts = corpus
    else:
        counts = {r.name: r.count for r in corpus}
    return min(members, key=lambda name: (-counts[name], name))
