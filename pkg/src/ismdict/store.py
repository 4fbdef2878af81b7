"""Sorted flat-file persistence and binary-search lookup for the dictionary.

File layout (UTF-8, tab separated, one row per name, rows sorted by name
in code-point order):

    # name	standard	count	alternatives
    #override	<name>	<standard>
    <name>	<standard>	<count>	<alt>:<count>:<o>;<alt>:<count>:<o>;...

The alternatives field lists the name's direct variants and may be empty.
``o`` is the origin flag: ``a`` for rule-derived pairs, ``c`` for manually
curated ones.  Lines starting with ``#`` are comments; the ``#override``
form is the one comment the loader interprets.  It pins a curated standard
form so later re-computations keep honoring it.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .textprep import is_clean
from .unionfind import DisjointSet

__all__ = [
    "ORIGIN_AUTO",
    "ORIGIN_CURATED",
    "Alternative",
    "DictEntry",
    "Dictionary",
    "ParseError",
    "InvariantViolation",
    "IoFailure",
    "save",
    "load",
    "lookup",
    "lookup_counting",
]

ORIGIN_AUTO = "auto"
ORIGIN_CURATED = "curated"

_ORIGIN_CODE = {ORIGIN_AUTO: "a", ORIGIN_CURATED: "c"}
_CODE_ORIGIN = {code: origin for origin, code in _ORIGIN_CODE.items()}

HEADER = "# name\tstandard\tcount\talternatives"
_OVERRIDE_TAG = "#override"


class ParseError(ValueError):
    """A line of the file (or a patch file) could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class InvariantViolation(ValueError):
    """The data is well-formed but inconsistent (order, symmetry, closure)."""


IoFailure = OSError


@dataclass(frozen=True)
class Alternative:
    """One variant listed under an entry."""

    name: str
    count: int
    origin: str = ORIGIN_AUTO


@dataclass(frozen=True)
class DictEntry:
    name: str
    count: int
    standard: str
    alternatives: tuple = ()


class Dictionary:
    """Immutable sorted collection of entries plus curated standard pins.

    Entries must arrive sorted by name with no duplicates; building and
    patching always hand them over that way.
    """

    def __init__(self, entries, std_overrides=()):
        entries = tuple(entries)
        for prev, cur in zip(entries, entries[1:]):
            if prev.name >= cur.name:
                raise InvariantViolation(
                    f"entries not strictly sorted at {cur.name!r}"
                )
        self._entries = entries
        self._names = tuple(e.name for e in entries)
        self.std_overrides = dict(sorted(dict(std_overrides).items()))
        self._components = None

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __contains__(self, name: str) -> bool:
        return lookup(self, name) is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dictionary):
            return NotImplemented
        return (
            self._entries == other._entries
            and self.std_overrides == other.std_overrides
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Dictionary({len(self._entries)} entries)"

    @property
    def names(self) -> tuple:
        return self._names

    @property
    def entries(self) -> tuple:
        return self._entries

    def counts(self) -> dict:
        return {e.name: e.count for e in self._entries}

    def pairs(self) -> dict:
        """Map of unordered variant pairs (a, b), a < b, to their origin."""
        out: dict = {}
        for entry in self._entries:
            for alt in entry.alternatives:
                key = (
                    (entry.name, alt.name)
                    if entry.name < alt.name
                    else (alt.name, entry.name)
                )
                out[key] = alt.origin
        return out

    def components(self) -> tuple:
        """Partition of all names induced by the variant pairs."""
        if self._components is None:
            ds = DisjointSet(self._names)
            for a, b in self.pairs():
                ds.union(a, b)
            groups = [frozenset(g) for g in ds.groups().values()]
            self._components = tuple(sorted(groups, key=min))
        return self._components

    def component_of(self, name: str):
        for comp in self.components():
            if name in comp:
                return comp
        return None


def lookup_counting(d: Dictionary, name: str):
    """Binary search; returns (entry or None, key comparisons spent).

    Each midpoint inspection counts as one comparison, so the count is at
    most floor(log2 k) + 1 <= ceil(log2 k) + 1 for k entries.
    """
    names = d.names
    entries = d.entries
    lo, hi = 0, len(names) - 1
    comparisons = 0
    while lo <= hi:
        mid = (lo + hi) // 2
        comparisons += 1
        key = names[mid]
        if key == name:
            return entries[mid], comparisons
        if key < name:
            lo = mid + 1
        else:
            hi = mid - 1
    return None, comparisons


def lookup(d: Dictionary, name: str):
    """Exact-match retrieval; None when absent."""
    return lookup_counting(d, name)[0]


def _canonical_alts(entry: DictEntry):
    return sorted(entry.alternatives, key=lambda alt: (-alt.count, alt.name))


def save(d: Dictionary, destination) -> None:
    """Write ``d`` to ``destination`` deterministically.

    The same dictionary value always produces byte-identical output:
    rows sorted by name, alternatives by descending count then name.
    """
    lines = [HEADER]
    for name, std in sorted(d.std_overrides.items()):
        lines.append(f"{_OVERRIDE_TAG}\t{name}\t{std}")
    for entry in d:
        alts = ";".join(
            f"{alt.name}:{alt.count}:{_ORIGIN_CODE[alt.origin]}"
            for alt in _canonical_alts(entry)
        )
        lines.append(f"{entry.name}\t{entry.standard}\t{entry.count}\t{alts}")
    Path(destination).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _parse_count(raw: str, line_no: int, what: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(line_no, f"{what} is not an integer: {raw!r}") from None
    if value < 1:
        raise ParseError(line_no, f"{what} must be positive: {value}")
    return value


def load(source) -> Dictionary:
    """Read a dictionary file and check every structural invariant."""
    entries = []
    overrides = {}
    text = Path(source).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if line.startswith(_OVERRIDE_TAG + "\t"):
                parts = line.split("\t")
                if len(parts) != 3:
                    raise ParseError(line_no, "override needs name and standard")
                overrides[parts[1]] = parts[2]
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ParseError(line_no, f"expected 4 fields, got {len(fields)}")
        name, standard, count_raw, alts_raw = fields
        if not is_clean(name):
            raise ParseError(line_no, f"name is not in cleaned form: {name!r}")
        if not is_clean(standard):
            raise ParseError(line_no, f"standard is not in cleaned form: {standard!r}")
        count = _parse_count(count_raw, line_no, "count")
        alts = []
        if alts_raw:
            for chunk in alts_raw.split(";"):
                bits = chunk.rsplit(":", 2)
                if len(bits) != 3:
                    raise ParseError(line_no, f"malformed alternative: {chunk!r}")
                alt_name, alt_count_raw, code = bits
                if code not in _CODE_ORIGIN:
                    raise ParseError(line_no, f"unknown origin flag: {code!r}")
                alts.append(
                    Alternative(
                        alt_name,
                        _parse_count(alt_count_raw, line_no, "alternative count"),
                        _CODE_ORIGIN[code],
                    )
                )
        entries.append(DictEntry(name, count, standard, tuple(alts)))
    d = Dictionary(entries, overrides)  # raises InvariantViolation if unsorted
    _check_consistency(d)
    return d


def _check_consistency(d: Dictionary) -> None:
    by_name = {e.name: e for e in d}
    for entry in d:
        seen = set()
        for alt in entry.alternatives:
            if alt.name == entry.name:
                raise InvariantViolation(f"{entry.name!r} lists itself as alternative")
            if alt.name in seen:
                raise InvariantViolation(
                    f"{entry.name!r} lists {alt.name!r} twice"
                )
            seen.add(alt.name)
            other = by_name.get(alt.name)
            if other is None:
                raise InvariantViolation(
                    f"{entry.name!r} references unknown name {alt.name!r}"
                )
            if alt.count != other.count:
                raise InvariantViolation(
                    f"count for {alt.name!r} under {entry.name!r} disagrees with its entry"
                )
            back = {a.name: a for a in other.alternatives}.get(entry.name)
            if back is None:
                raise InvariantViolation(
                    f"pair {entry.name!r}/{alt.name!r} is listed asymmetrically"
                )
            if back.origin != alt.origin:
                raise InvariantViolation(
                    f"pair {entry.name!r}/{alt.name!r} has conflicting origins"
                )
        if entry.standard not in by_name:
            raise InvariantViolation(
                f"standard {entry.standard!r} of {entry.name!r} is not an entry"
            )
    for comp in d.components():
        standards = {by_name[n].standard for n in comp}
        if len(standards) != 1:
            raise InvariantViolation(
                f"component of {min(comp)!r} carries several standards"
            )
        std = standards.pop()
        if std not in comp:
            raise InvariantViolation(
                f"standard {std!r} lies outside the component of {min(comp)!r}"
            )
    for name, std in d.std_overrides.items():
        if name not in by_name:
            raise InvariantViolation(f"override target {name!r} is not an entry")
        if std not in by_name:
            raise InvariantViolation(f"override standard {std!r} is not an entry")
