"""Dictionary of alternative written forms of Arabic first names.

Build a variant dictionary from a frequency-annotated corpus, curate it
with reject/accept/standard patches, persist it as a sorted flat file,
and query it in reading mode (expand a search) or writing mode (pick the
form to store).
"""

from .builder import (
    AltEdge,
    CorpusError,
    DuplicateName,
    NameRecord,
    build,
    build_edges,
    components,
    read_corpus,
    select_standard,
)
from .curate import (
    Accept,
    BucketRow,
    CurationStats,
    Patch,
    RedundantOp,
    Reject,
    SetStandard,
    UniverseMismatch,
    UnknownName,
    alt_histogram,
    apply_patch,
    histogram_change,
    stats,
)
from .editdist import (
    EditClass,
    Identical,
    InsertDel,
    Other,
    Substitution,
    classify_single_edit,
    levenshtein,
    within,
)
from .query import (
    ExpandedSearch,
    HostNameTable,
    ReadResult,
    WriteAdvice,
    search_host,
    search_read,
    standardize_write,
)
from .rules import DEFAULT_TABLE, RuleId, RuleTable, expand, match_rules
from .store import (
    Alternative,
    DictEntry,
    Dictionary,
    InvariantViolation,
    IoFailure,
    ParseError,
    load,
    lookup,
    lookup_counting,
    save,
)
from .textprep import EmptyAfterCleaning, clean, is_clean, is_compound

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # textprep
    "EmptyAfterCleaning",
    "clean",
    "is_clean",
    "is_compound",
    # editdist
    "EditClass",
    "Identical",
    "Substitution",
    "InsertDel",
    "Other",
    "levenshtein",
    "within",
    "classify_single_edit",
    # rules
    "RuleId",
    "RuleTable",
    "DEFAULT_TABLE",
    "match_rules",
    "expand",
    # builder
    "NameRecord",
    "AltEdge",
    "CorpusError",
    "DuplicateName",
    "read_corpus",
    "build",
    "build_edges",
    "components",
    "select_standard",
    # store
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
    # curate
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
    # query
    "ReadResult",
    "WriteAdvice",
    "search_read",
    "standardize_write",
    "HostNameTable",
    "ExpandedSearch",
    "search_host",
]
