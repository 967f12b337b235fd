import json

import pytest

from fsnlab.cli import cli_main
from fsnlab.corpus import render_group_spec, spec_from_group, write_corpus
from fsnlab.groupgen import alternating, symmetric


@pytest.fixture
def s3_file(tmp_path):
    path = tmp_path / "s3.json"
    path.write_text(render_group_spec(spec_from_group(symmetric(3), name="S3")))
    return path


def run(capsys, *argv):
    code = cli_main(list(argv))
    return code, capsys.readouterr()


def test_analyze_json(capsys, s3_file):
    code, out = run(capsys, "analyze", str(s3_file), "--formation", "N")
    assert code == 0
    doc = json.loads(out.out)
    assert doc["order"] == 6 and len(doc["classes"]) == 4
    order2 = [c for c in doc["classes"] if c["order"] == 2][0]
    assert order2["f_abnormal"] and not order2["f_subnormal"] and order2["class_size"] == 3


def test_analyze_table_to_file(capsys, s3_file, tmp_path):
    out_path = tmp_path / "report.txt"
    code, out = run(capsys, "analyze", str(s3_file), "--format", "table", "--out", str(out_path))
    assert code == 0 and out.out == ""
    assert "N-subnormal" in out_path.read_text()


def test_verify_theorem_on_corpus(capsys, tmp_path):
    corpus = tmp_path / "c.json"
    write_corpus(corpus, [spec_from_group(symmetric(3), "S3"), spec_from_group(symmetric(4), "S4")])
    code, out = run(capsys, "verify-theorem", "--corpus", str(corpus), "--formation", "N")
    assert code == 0
    assert json.loads(out.out)["counts"] == {"VERIFIED": 2}
    code, out = run(capsys, "verify-theorem", "--corpus", str(corpus), "--formation", "NA", "--jobs", "2")
    assert code == 1
    doc = json.loads(out.out)
    assert doc["counts"] == {"COUNTEREXAMPLE": 1, "SKIPPED_IN_F": 1}


def test_verify_corollary_and_lemmas(capsys, tmp_path):
    corpus = tmp_path / "c.json"
    write_corpus(corpus, [spec_from_group(alternating(4), "A4")])
    code, out = run(capsys, "verify-corollary", "--corpus", str(corpus), "--format", "table")
    assert code == 0 and "VERIFIED" in out.out
    code, out = run(capsys, "verify-lemmas", "--corpus", str(corpus), "--formation", "U")
    assert code == 0


def test_order_max_filters_default_corpus(capsys):
    code, out = run(capsys, "verify-theorem", "--order-max", "8")
    assert code == 0
    assert all(r["order"] <= 8 for r in json.loads(out.out)["reports"])


def test_unknown_formation_is_input_error(capsys, s3_file):
    code, out = run(capsys, "analyze", str(s3_file), "--formation", "Q")
    assert code == 2 and "unknown formation" in out.err


def test_malformed_group_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "degree": 3, "generators": ["(0 1"]}')
    code, out = run(capsys, "analyze", str(bad))
    assert code == 2 and "generator 0" in out.err


def test_bad_corpus_entry_is_reported_not_fatal(capsys, tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "a.json").write_text(render_group_spec(spec_from_group(symmetric(3), "S3")))
    (d / "b.json").write_text('{"name": "y", "degree": 3, "generators": ["(0 1)"], "expected_order": 4}')
    code, out = run(capsys, "verify-theorem", "--corpus", str(d))
    doc = json.loads(out.out)
    assert code == 0 and len(doc["errors"]) == 1 and "expected order 4" in doc["errors"][0]["error"]


def test_argparse_errors_exit_2(capsys):
    assert cli_main(["frobnicate"]) == 2
    assert cli_main([]) == 2


def test_resource_cap_exit_3(capsys, tmp_path):
    big = tmp_path / "s7.json"
    big.write_text(render_group_spec(spec_from_group(symmetric(7), "S7")))
    code, out = run(capsys, "analyze", str(big))
    assert code == 3 and "cap" in out.err
