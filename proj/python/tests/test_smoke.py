import json
import os
import pathlib

import pytest

import logdup

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURES = pathlib.Path(os.environ.get("LOGDUP_FIXTURES", ROOT / "tests" / "fixtures"))
CORPUS = FIXTURES / "corpus"


def test_version():
    assert logdup.__version__ == "1.0.0"


def test_fixture_scan_reports_every_pattern():
    report = logdup.scan(CORPUS)
    assert report["tool"]["name"] == "logdup"
    assert report["stats"]["files"] == 34
    assert report["stats"]["nods"] == 22
    for pattern in ("IC", "IE", "LM", "DP"):
        assert report["summary"][pattern] == len(report["findings"][pattern]) > 0
    assert report["clone_analysis"] is None


def test_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((ROOT / "docs" / "report.schema.json").read_text())
    jsonschema.validate(logdup.scan(CORPUS), schema)
    jsonschema.validate(logdup.scan(CORPUS, with_clone_analysis=True, include_tests=True), schema)


def test_thread_count_does_not_change_report():
    assert logdup.scan(CORPUS, threads=1) == logdup.scan(CORPUS, threads=4)


def test_pattern_selection():
    report = logdup.scan(CORPUS, patterns="dp")
    assert report["config"]["patterns"] == ["DP"]
    assert report["summary"]["IC"] == 0


def test_scan_sources_worked_example():
    source = """package s;
class AutoScaleService {
    void doScaleUp() { LOG.info("Scaling up the group: " + id); }
    void doScaleDown() { LOG.info("Scaling up the group: " + id); }
}
"""
    report = logdup.scan_sources({"s/AutoScaleService.java": source}, stop_words=0)
    (finding,) = report["findings"]["LM"]
    words = {m["method"]: m["common_words"] for m in finding["members"]}
    assert words == {"doScaleUp()": ["scale", "up"], "doScaleDown()": ["scale"]}


def test_missing_root_raises():
    with pytest.raises(logdup.ScanError):
        logdup.scan(ROOT / "no-such-directory")


def test_text_helpers():
    assert logdup.split_words("doScaleUp") == ["do", "scale", "up"]
    assert logdup.porter_stem("scaling") == "scale"
    assert logdup.block_similarity(["a"] * 7 + ["b"] * 3, ["a"] * 7 + ["c"] * 3) == 70.0
    precision, recall = logdup.score_counts(290, 35, 41)
    assert round(precision, 2) == 12.07 and round(recall, 2) == 85.37
    assert logdup.score_counts(0, 0, 0) == (None, None)
