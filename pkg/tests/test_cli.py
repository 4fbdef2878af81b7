"""End-to-end command-line behavior: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from ismdict import load, lookup
from ismdict.cli import main

from arabic_fixtures import DOCUMENTED_PAIRS

FOUR_NAME = "رولا\t10\nرولى\t3\nروله\t2\nاحمر\t5\n"
ROLA_FIVE = "رولا\t10\nرولى\t3\nروله\t2\nرلا\t1\nرلى\t1\n"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def built(tmp_path, capsys, corpus=FOUR_NAME, name="dict.tsv", *extra):
    corpus_path = write(tmp_path, "corpus.tsv", corpus)
    out = str(tmp_path / name)
    rc, _, err = run(capsys, "build", "--corpus", corpus_path, "--out", out, *extra)
    assert rc == 0, err
    return out


def test_build_summary_and_file(tmp_path, capsys):
    corpus = write(tmp_path, "corpus.tsv", FOUR_NAME)
    out = str(tmp_path / "dict.tsv")
    rc, stdout, stderr = run(capsys, "build", "--corpus", corpus, "--out", out)
    assert rc == 0 and stderr == ""
    assert stdout == (
        "names\t4\n"
        "names_with_alternatives\t3\n"
        "components\t2\n"
        "max_alternatives\t2\n"
    )
    assert (tmp_path / "dict.tsv").read_text(encoding="utf-8") == (
        "# name\tstandard\tcount\talternatives\n"
        "احمر\tاحمر\t5\t\n"
        "رولا\tرولا\t10\tرولى:3:a;روله:2:a\n"
        "روله\tرولا\t2\tرولا:10:a\n"
        "رولى\tرولا\t3\tرولا:10:a\n"
    )


def test_build_is_byte_deterministic(tmp_path, capsys):
    a = built(tmp_path, capsys, FOUR_NAME, "a.tsv")
    b = built(tmp_path, capsys, FOUR_NAME, "b.tsv")
    c = built(tmp_path, capsys, FOUR_NAME, "c.tsv", "--jobs", "2")
    data = (tmp_path / "a.tsv").read_bytes()
    assert (tmp_path / "b.tsv").read_bytes() == data
    assert (tmp_path / "c.tsv").read_bytes() == data


def test_build_error_paths(tmp_path, capsys):
    empty = write(tmp_path, "empty.tsv", "# nothing here\n")
    rc, _, err = run(capsys, "build", "--corpus", empty, "--out", str(tmp_path / "x"))
    assert rc == 1 and err == "error: empty corpus\n"

    dup = write(tmp_path, "dup.tsv", "رولا\t10\nرولا\t2\n")
    rc, _, err = run(capsys, "build", "--corpus", dup, "--out", str(tmp_path / "x"))
    assert rc == 1
    assert err == "error: line 2: duplicate name 'رولا' (first seen on line 1)\n"

    rc, _, err = run(
        capsys, "build", "--corpus", str(tmp_path / "nosuch"), "--out", str(tmp_path / "x")
    )
    assert rc == 1 and err.startswith("error: ")


def test_build_merge_duplicates(tmp_path, capsys):
    dup = write(tmp_path, "dup.tsv", "رولا\t10\nرُولا\t2\n")
    out = str(tmp_path / "merged.tsv")
    rc, _, _ = run(capsys, "build", "--corpus", dup, "--out", out, "--merge-duplicates")
    assert rc == 0
    assert lookup(load(out), "رولا").count == 12


def test_query_tsv_and_jsonl(tmp_path, capsys):
    d = built(tmp_path, capsys)
    rc, stdout, _ = run(capsys, "query", "--dict", d, "رولا")
    assert rc == 0
    assert stdout == "رولا\t10\tstandard\nرولى\t3\t-\nروله\t2\t-\n"

    rc, stdout, _ = run(capsys, "query", "--dict", d, "--format", "jsonl", "رولا")
    assert rc == 0
    assert stdout == (
        '{"count": 10, "name": "رولا", "standard": true}\n'
        '{"count": 3, "name": "رولى", "standard": false}\n'
        '{"count": 2, "name": "روله", "standard": false}\n'
    )
    assert [json.loads(line)["name"] for line in stdout.splitlines()] == [
        "رولا", "رولى", "روله",
    ]


def test_query_whole_component(tmp_path, capsys):
    d = built(tmp_path, capsys, ROLA_FIVE)
    rc, narrow, _ = run(capsys, "query", "--dict", d, "رولا")
    assert rc == 0 and len(narrow.splitlines()) == 4
    rc, wide, _ = run(capsys, "query", "--dict", d, "--whole-component", "رولا")
    assert rc == 0
    assert wide == (
        "رولا\t10\tstandard\n"
        "رولى\t3\t-\n"
        "روله\t2\t-\n"
        "رلا\t1\t-\n"
        "رلى\t1\t-\n"
    )


def test_query_unknown_and_unusable_names(tmp_path, capsys):
    d = built(tmp_path, capsys)
    rc, stdout, _ = run(capsys, "query", "--dict", d, "بدر")
    assert rc == 0 and stdout == "بدر\t0\t-\n"
    rc, _, err = run(capsys, "query", "--dict", d, "123")
    assert rc == 2
    assert err == "error: no Arabic letters left after cleaning '123'\n"
    rc, _, err = run(capsys, "query", "--dict", str(tmp_path / "nosuch"), "رولا")
    assert rc == 1 and err.startswith("error: ")


def test_query_applies_patches_in_order(tmp_path, capsys):
    d = built(tmp_path, capsys)
    p1 = write(tmp_path, "p1.tsv", "REJECT\tرولا\tروله\n")
    p2 = write(tmp_path, "p2.tsv", "ACCEPT\tرولا\tروله\n")
    rc, stdout, _ = run(capsys, "query", "--dict", d, "--patch", p1, "رولا")
    assert rc == 0 and stdout == "رولا\t10\tstandard\nرولى\t3\t-\n"
    rc, stdout, _ = run(
        capsys, "query", "--dict", d, "--patch", p1, "--patch", p2, "رولا"
    )
    assert rc == 0 and "روله" in stdout


def test_standardize_output(tmp_path, capsys):
    d = built(tmp_path, capsys)
    rc, stdout, _ = run(capsys, "standardize", "--dict", d, "رولى")
    assert rc == 0 and stdout == "رولى\tرولا\t1\n"
    rc, stdout, _ = run(capsys, "standardize", "--dict", d, "--format", "jsonl", "رولا")
    assert rc == 0
    assert json.loads(stdout) == {
        "entered": "رولا",
        "standard": "رولا",
        "nonstandard": False,
    }
    rc, stdout, _ = run(capsys, "standardize", "--dict", d, "بدر")
    assert rc == 0 and stdout == "بدر\tبدر\t0\n"


def test_patch_command_and_stats(tmp_path, capsys):
    d = built(tmp_path, capsys)
    p = write(tmp_path, "p.tsv", "REJECT\tرولا\tروله\n")
    curated = str(tmp_path / "curated.tsv")
    rc, stdout, _ = run(capsys, "patch", "--dict", d, "--patch", p, "--out", curated)
    assert rc == 0 and stdout == "ops_applied\t1\n"
    assert lookup(load(curated), "روله").alternatives == ()

    rc, stdout, _ = run(capsys, "stats", "--before", d, "--after", curated)
    assert rc == 0
    assert stdout == (
        "1\t2\t2\t0\n"
        "2\t1\t0\t-1\n"
        "total\t3\t2\t-1\n"
        "auto_pairs\t2\n"
        "rejected_pairs\t1\n"
        "added_pairs\t0\n"
        "acceptance_error_rate\t0.500000\n"
        "rejection_error_rate\t0.000000\n"
    )


def test_patch_error_paths_and_warnings(tmp_path, capsys):
    d = built(tmp_path, capsys)
    unknown = write(tmp_path, "u.tsv", "REJECT\tرولا\tبدر\n")
    rc, _, err = run(
        capsys, "patch", "--dict", d, "--patch", unknown, "--out", str(tmp_path / "x")
    )
    assert rc == 1 and err.startswith("error: ")

    redundant = write(tmp_path, "r.tsv", "ACCEPT\tرولا\tروله\n")
    rc, stdout, err = run(
        capsys, "patch", "--dict", d, "--patch", redundant, "--out", str(tmp_path / "y")
    )
    assert rc == 0 and stdout == "ops_applied\t1\n"
    assert err.startswith("warning: ")


def test_stats_universe_mismatch(tmp_path, capsys):
    d = built(tmp_path, capsys)
    other = built(tmp_path, capsys, "بدر\t1\n", "other.tsv")
    rc, _, err = run(capsys, "stats", "--before", d, "--after", other)
    assert rc == 1 and err.startswith("error: ")


def test_rules_listing_and_toggles(capsys):
    rc, stdout, _ = run(capsys, "rules")
    lines = stdout.splitlines()
    assert rc == 0 and len(lines) == 17
    assert lines[0] == "R1\tsubstitute\tس↔ص\tanywhere\ton"
    assert all(line.endswith("\ton") for line in lines)

    rc, stdout, _ = run(capsys, "rules", "--disable", "R15")
    lines = stdout.splitlines()
    assert lines[-1] == "R15\tlast-letter\tا↔ى\tfinal\toff"
    assert sum(line.endswith("\toff") for line in lines) == 1

    rc, stdout, _ = run(capsys, "rules", "--disable", "R15", "--enable", "R15")
    assert all(line.endswith("\ton") for line in stdout.splitlines())


def test_rules_unknown_id_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rules", "--disable", "R99"])
    assert exc.value.code == 2


def test_build_with_disabled_rule(tmp_path, capsys):
    corpus = write(tmp_path, "c.tsv", "رولا\t10\nرولى\t3\n")
    out = str(tmp_path / "off.tsv")
    rc, stdout, _ = run(
        capsys, "build", "--corpus", corpus, "--out", out, "--disable", "R15"
    )
    assert rc == 0
    assert "names_with_alternatives\t0" in stdout


def test_fig_dir_renders_histograms(tmp_path, capsys):
    d = built(tmp_path, capsys, FOUR_NAME, "dict.tsv", "--fig-dir", str(tmp_path / "figs"))
    png = tmp_path / "figs" / "alternatives_histogram.png"
    assert png.stat().st_size > 0
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    p = write(tmp_path, "p.tsv", "REJECT\tرولا\tروله\n")
    curated = str(tmp_path / "curated.tsv")
    run(capsys, "patch", "--dict", d, "--patch", p, "--out", curated)
    rc, _, _ = run(
        capsys,
        "stats", "--before", d, "--after", curated,
        "--fig-dir", str(tmp_path / "figs2"),
    )
    assert rc == 0
    png2 = tmp_path / "figs2" / "curation_histogram.png"
    assert png2.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("ismdict ")


@pytest.mark.parametrize(
    "a,b,expected",
    [(a, b, bool(rules)) for a, b, rules in DOCUMENTED_PAIRS],
    ids=[f"{a}-{b}" for a, b, _ in DOCUMENTED_PAIRS],
)
def test_build_then_query_round_trip(tmp_path, capsys, a, b, expected):
    corpus = write(tmp_path, "c.tsv", f"{a}\t2\n{b}\t1\n")
    out = str(tmp_path / "d.tsv")
    rc, _, _ = run(capsys, "build", "--corpus", corpus, "--out", out)
    assert rc == 0
    rc, stdout, _ = run(capsys, "query", "--dict", out, a)
    assert rc == 0
    found = b in {line.split("\t")[0] for line in stdout.splitlines()}
    assert found == expected


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ismdict", "rules"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 17
