"""Corpus parsing, candidate generation, and dictionary construction."""

import random

import pytest

from ismdict import (
    Accept,
    CorpusError,
    DuplicateName,
    NameRecord,
    Patch,
    RuleId,
    RuleTable,
    apply_patch,
    build,
    build_edges,
    components,
    lookup,
    read_corpus,
    save,
    select_standard,
)
from ismdict.builder import candidate_pairs

from arabic_fixtures import ATA_GROUP, ATA_STANDARD, ROLA_NAMES
from oracles import expand_closure, naive_edges, random_name


def records(mapping):
    return [NameRecord(n, c) for n, c in mapping.items()]


FOUR_NAME_CORPUS = {"رولا": 10, "رولى": 3, "روله": 2, "احمر": 5}


def test_four_name_corpus_adjacency():
    d = build(records(FOUR_NAME_CORPUS))
    rola = lookup(d, "رولا")
    assert {a.name for a in rola.alternatives} == {"رولى", "روله"}
    assert lookup(d, "احمر").alternatives == ()
    assert rola.standard == "رولا"
    assert lookup(d, "رولى").standard == "رولا"
    comps = components(d)
    assert set(comps) == {
        frozenset({"رولا", "رولى", "روله"}),
        frozenset({"احمر"}),
    }


def test_single_name_corpus():
    d = build([NameRecord("احمد", 7)])
    entry = lookup(d, "احمد")
    assert entry.count == 7
    assert entry.alternatives == ()
    assert entry.standard == "احمد"
    assert len(d) == 1


def test_alternatives_sorted_by_count_then_name():
    d = build(records({"رولا": 2, "رولى": 9, "روله": 9, "رلا": 1}))
    entry = lookup(d, "رولا")
    assert [a.name for a in entry.alternatives] == ["روله", "رولى", "رلا"]
    # standard is the most frequent member, tie broken by code point
    assert entry.standard == "روله"


def test_counts_copied_onto_alternatives():
    d = build(records(FOUR_NAME_CORPUS))
    for entry in d:
        for alt in entry.alternatives:
            assert alt.count == lookup(d, alt.name).count


def test_candidate_pairs_cover_every_ruleable_pair():
    rng = random.Random(11)
    names = expand_closure(["رولا", "حسين", "غادة"], 60, rng)
    cands = set(candidate_pairs(sorted(names)))
    for a, b in naive_edges(names):
        assert (a, b) in cands, (a, b)


def test_build_edges_equal_naive_all_pairs():
    rng = random.Random(12)
    for seed_count in (1, 2, 4):
        seeds = [random_name(rng, 3, 6) for _ in range(seed_count)] + ["اسماء"]
        names = expand_closure(seeds, 120, rng)
        edges = build_edges(names)
        assert {(e.a, e.b) for e in edges} == naive_edges(names)
        for e in edges:
            assert e.a < e.b
            assert e.distance == (2 if e.rules == {RuleId.R10} else 1)


def test_build_deterministic_across_orderings():
    rng = random.Random(13)
    names = expand_closure(["بهجة", "داود"], 80, rng)
    recs = [NameRecord(n, rng.randint(1, 500)) for n in names]
    d1 = build(recs)
    shuffled = recs[:]
    rng.shuffle(shuffled)
    d2 = build(shuffled)
    assert d1 == d2


def test_parallel_build_identical(tmp_path):
    rng = random.Random(14)
    names = expand_closure(["اسامه", "تمارا", "زكريا"], 150, rng)
    recs = [NameRecord(n, rng.randint(1, 500)) for n in names]
    seq = build(recs, jobs=1)
    par = build(recs, jobs=2)
    assert seq == par
    f1, f2 = tmp_path / "seq.tsv", tmp_path / "par.tsv"
    save(seq, f1)
    save(par, f2)
    assert f1.read_bytes() == f2.read_bytes()


def test_pruning_length_gap():
    # no rule can bridge a length gap above two
    d = build(records({"حسن": 1, "حسيناتي": 1}))
    assert lookup(d, "حسن").alternatives == ()


def test_select_standard_most_frequent():
    assert select_standard(ATA_GROUP, ATA_GROUP) == ATA_STANDARD


def test_select_standard_tie_breaks_to_smaller_code_point():
    counts = {"بشر": 5, "بشير": 5}
    assert select_standard(set(counts), counts) == "بشر"
    assert select_standard(["احمد"], {"احمد": 1}) == "احمد"


def test_select_standard_accepts_records_and_rejects_empty():
    recs = records({"رولا": 10, "رولى": 3})
    assert select_standard({"رولا", "رولى"}, recs) == "رولا"
    with pytest.raises(ValueError):
        select_standard(set(), {})


def test_compound_space_blocks_auto_join_until_curated():
    counts = {"عطا الله": 4827, "عطاء الله": 12, "عطالله": 1284}
    d = build(records(counts))
    assert set(components(d)) == {
        frozenset({"عطا الله", "عطاء الله"}),
        frozenset({"عطالله"}),
    }
    joined = apply_patch(d, Patch((Accept("عطا الله", "عطالله"),)))
    assert len(components(joined)) == 1
    assert lookup(joined, "عطالله").standard == "عطا الله"


def test_build_rejects_duplicates_and_bad_counts():
    with pytest.raises(DuplicateName):
        build([NameRecord("احمد", 1), NameRecord("احمد", 2)])
    with pytest.raises(ValueError):
        build([NameRecord("احمد", 0)])
    with pytest.raises(ValueError):
        build([NameRecord("ahmad", 1)])


def test_disabled_rule_changes_edges():
    table = RuleTable(disabled=frozenset({RuleId.R15}))
    d = build(records({"رولا": 10, "رولى": 3}), table=table)
    assert lookup(d, "رولا").alternatives == ()


def write_corpus(tmp_path, text, name="corpus.tsv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_read_corpus_parses_counts_and_defaults(tmp_path):
    path = write_corpus(
        tmp_path,
        "# survey extract\n"
        "رولا\t10\n"
        "\n"
        "رولى\n"
        "مُحَمَّد\t4\n",
    )
    recs = {r.name: r.count for r in read_corpus(path)}
    assert recs == {"رولا": 10, "رولى": 1, "محمد": 4}


def test_read_corpus_duplicate_lines(tmp_path):
    path = write_corpus(tmp_path, "رولا\t10\nرولا\t2\n")
    with pytest.raises(DuplicateName) as exc:
        read_corpus(path)
    assert exc.value.line_no == 2
    assert "line 1" in str(exc.value)
    merged = {r.name: r.count for r in read_corpus(path, merge_duplicates=True)}
    assert merged == {"رولا": 12}


def test_read_corpus_duplicate_after_cleaning(tmp_path):
    # distinct raw spellings collapsing to one cleaned form
    path = write_corpus(tmp_path, "محمد\t1\nمُحَمَّد\t5\n")
    with pytest.raises(DuplicateName):
        read_corpus(path)
    merged = {r.name: r.count for r in read_corpus(path, merge_duplicates=True)}
    assert merged == {"محمد": 6}


def test_read_corpus_errors(tmp_path):
    bad_count = write_corpus(tmp_path, "رولا\tten\n", "a.tsv")
    with pytest.raises(CorpusError):
        read_corpus(bad_count)
    zero_count = write_corpus(tmp_path, "رولا\t0\n", "b.tsv")
    with pytest.raises(CorpusError):
        read_corpus(zero_count)
    unusable = write_corpus(tmp_path, "123\t4\n", "c.tsv")
    with pytest.raises(CorpusError) as exc:
        read_corpus(unusable)
    assert exc.value.line_no == 1


def test_variant_cluster_builds_one_component():
    rng = random.Random(21)
    counts = {n: rng.randint(1, 100) for n in ROLA_NAMES}
    d = build(records(counts))
    assert len(components(d)) == 1
    # max() keeps the first maximum, so iterating sorted names encodes the tie-break
    best = max(sorted(counts), key=lambda n: counts[n])
    assert select_standard(set(counts), counts) == best
    assert all(e.standard == best for e in d)
