"""Reading-mode expansion and writing-mode standardization.

Reading mode answers "which written forms should a search also try":
the cleaned query plus its direct alternatives.  Writing mode answers
"what should actually be stored": the standard form of the query's group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .store import Dictionary, lookup, lookup_counting
from .textprep import clean

__all__ = [
    "ReadResult",
    "WriteAdvice",
    "search_read",
    "standardize_write",
    "HostNameTable",
    "ExpandedSearch",
    "search_host",
]


@dataclass(frozen=True)
class ReadResult:
    query: str
    expansion: tuple  # ((name, count), ...) by descending count, then name
    standard: str | None


@dataclass(frozen=True)
class WriteAdvice:
    entered: str
    standard: str
    is_nonstandard: bool


def search_read(d: Dictionary, raw: str, *, whole_component: bool = False) -> ReadResult:
    """Forms a search for ``raw`` should also try.

    By default the expansion is the query plus its direct alternatives;
    ``whole_component`` widens it to the entire variant group.  An unknown
    name expands to itself alone, with no standard.
    """
    name = clean(raw)
    entry = lookup(d, name)
    if entry is None:
        return ReadResult(name, ((name, 0),), None)
    if whole_component:
        comp = d.component_of(name)
        items = [(member, lookup(d, member).count) for member in comp]
    else:
        items = [(name, entry.count)]
        items.extend((alt.name, alt.count) for alt in entry.alternatives)
    expansion = tuple(sorted(items, key=lambda item: (-item[1], item[0])))
    return ReadResult(name, expansion, entry.standard)


def standardize_write(d: Dictionary, raw: str) -> WriteAdvice:
    """The form to store for ``raw``; unknown names stay as entered."""
    name = clean(raw)
    entry = lookup(d, name)
    if entry is None:
        return WriteAdvice(name, name, False)
    return WriteAdvice(name, entry.standard, entry.standard != name)


class HostNameTable:
    """Stand-in for the searched system's sorted name column.

    Counts the key comparisons its exact searches spend, so tests can hold
    the read path to one dictionary lookup plus m host probes.
    """

    def __init__(self, names):
        self._names = tuple(sorted(set(names)))
        self.comparisons = 0

    def __len__(self) -> int:
        return len(self._names)

    def search(self, name: str) -> bool:
        lo, hi = 0, len(self._names) - 1
        while lo <= hi:
            mid = (lo + hi) // 2
            self.comparisons += 1
            key = self._names[mid]
            if key == name:
                return True
            if key < name:
                lo = mid + 1
            else:
                hi = mid - 1
        return False


@dataclass(frozen=True)
class ExpandedSearch:
    hits: tuple
    expansion_size: int
    dictionary_comparisons: int
    host_comparisons: int


def search_host(d: Dictionary, host: HostNameTable, raw: str, *, whole_component: bool = False) -> ExpandedSearch:
    """Run the full read path: one dictionary lookup, m host searches."""
    name = clean(raw)
    _, dict_comparisons = lookup_counting(d, name)
    result = search_read(d, raw, whole_component=whole_component)
    before = host.comparisons
    hits = tuple(n for n, _ in result.expansion if host.search(n))
    return ExpandedSearch(
        hits=hits,
        expansion_size=len(result.expansion),
        dictionary_comparisons=dict_comparisons,
        host_comparisons=host.comparisons - before,
    )
