import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acmsoliton import load_fixture, parse_manifest, run_suite
from acmsoliton.cli import main
from acmsoliton.errors import ParseError, RationalFormatError, SchemaError
from acmsoliton.manifest import fixture_text, parse_rational, read_manifest_text

EXAMPLES = Path(__file__).resolve().parent.parent / "examples"
FIXTURES = ["hyp3", "flat3", "su2"]


def doc_with(**changes):
    doc = json.loads(fixture_text("hyp3"))
    doc.update(changes)
    return json.dumps(doc)


class TestParse:
    def test_hyp3(self):
        man = load_fixture("hyp3")
        assert len(man.brackets) == 2
        assert man.metric == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert len(man.solitons) == 1
        assert list(man.solitons[0].potential) == [0, 0, 0] and man.solitons[0].lam == 1

    def test_empty_document(self):
        with pytest.raises(SchemaError, match="brackets"):
            parse_manifest("{}")

    def test_zero_denominator(self):
        bad = doc_with(solitons=[{"name": "s", "potential": ["0", "0", "0"], "lambda": "1/0"}])
        with pytest.raises(RationalFormatError):
            parse_manifest(bad)

    def test_float_literal_refused(self):
        bad = doc_with(solitons=[{"name": "s", "potential": ["0", "0", "0"], "lambda": 1.0}])
        with pytest.raises(RationalFormatError):
            parse_manifest(bad)

    def test_malformed_json_location(self):
        with pytest.raises(ParseError, match="line 2, column"):
            parse_manifest('{\n  "brackets": [,\n}')

    @pytest.mark.parametrize("change", [
        {"dimension": 4},
        {"extra": 1},
        {"acm": {"xi": ["0", "0", "1"]}},
        {"metric": [["1", "0"], ["0", "1"]]},
        {"brackets": [{"i": "1", "j": 2, "coeffs": ["0", "0", "1"]}]},
        {"solitons": [{"name": "a", "potential": ["0", "0", "0"], "lambda": "1"},
                      {"name": "a", "potential": ["0", "0", "0"], "lambda": "2"}]},
    ])
    def test_schema_errors(self, change):
        with pytest.raises(SchemaError):
            parse_manifest(doc_with(**change))

    def test_missing_optional_sections(self):
        man = parse_manifest(json.dumps({"dimension": 3, "brackets": [],
                                         "acm": {"xi": ["0", "0", "1"],
                                                 "phi": [["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]]}}))
        assert man.metric is None and man.solitons == []

    @given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
    def test_rational_grammar_round_trip(self, p, q):
        from fractions import Fraction
        assert parse_rational(f"{p}/{q}", "x") == Fraction(p, q)

    def test_shipped_examples_match_bundled(self):
        for name in FIXTURES:
            assert (EXAMPLES / f"{name}.json").read_text() == fixture_text(name)

    def test_fallback_to_bundled(self, tmp_path):
        assert read_manifest_text(str(tmp_path / "nowhere" / "su2.json")) == fixture_text("su2")
        with pytest.raises(FileNotFoundError):
            read_manifest_text(str(tmp_path / "other.json"))


class TestRunSuite:
    def test_flat3_curvature_all_zero(self):
        doc = run_suite(load_fixture("flat3"), "curvature")
        assert doc.status == "pass"
        values = doc.to_dict()["entries"]
        table = next(e for e in values if e["check_id"] == "curvature.values")
        assert all(v == ["0", "0", "0"] for v in table["details"]["curvature"].values())
        assert table["details"]["scalar"] == "0" and table["details"]["constant_curvature"] == "0"

    def test_su2_acm(self):
        doc = run_suite(load_fixture("su2"), "acm")
        d = {e.check_id: e for e in doc.entries}
        flags = d["classify.classification"].details
        assert flags["normal"] and flags["beta_sasakian"] and flags["eta_wedge_deta"] == "-1"
        assert doc.status == "pass"

    def test_hyp3_report_contents(self):
        doc = run_suite(load_fixture("hyp3"), "report")
        labels = {e.label for e in doc.entries}
        for lbl in ["a1", "a3", "a5", "a6", "a7", "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9",
                    "g1", "g7", "cc1", "cc2", "h3"]:
            assert lbl in labels
        assert doc.status == "pass"
        killing = next(e for e in doc.entries if e.check_id == "soliton.xi_killing")
        assert killing.status == "info" and killing.details["killing"] is False

    def test_build_error_becomes_failed_entry(self):
        bad = doc_with(brackets=[{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]},
                                 {"i": 1, "j": 3, "coeffs": ["1", "0", "0"]}])
        doc = run_suite(parse_manifest(bad), "report")
        assert doc.entries[0].check_id == "build" and doc.status == "fail"
        assert doc.entries[0].details["error"] == "JacobiViolation"

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite(load_fixture("hyp3"), "everything")

    def test_json_round_trip(self):
        text = run_suite(load_fixture("hyp3")).to_json()
        assert json.dumps(json.loads(text), indent=2, ensure_ascii=False) + "\n" == text


class TestCli:
    @pytest.mark.parametrize("name", FIXTURES)
    @pytest.mark.parametrize("suite", ["validate", "connection", "curvature", "acm", "classify",
                                       "identities", "soliton", "gradient", "theorems", "report"])
    def test_every_suite_passes_on_fixtures(self, name, suite, capsys):
        assert main([suite, str(EXAMPLES / f"{name}.json"), "--format", "json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["status"] == "pass" and out["suite"] == suite

    def test_text_output(self, capsys):
        assert main(["validate", str(EXAMPLES / "hyp3.json")]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and out.rstrip().endswith("overall: PASS")

    def test_quiet(self, capsys):
        assert main(["report", str(EXAMPLES / "su2.json"), "--quiet"]) == 0
        assert capsys.readouterr().out == ""

    def test_failing_check_exits_1(self, tmp_path, capsys):
        p = tmp_path / "bad_soliton.json"
        p.write_text(doc_with(solitons=[{"name": "reeb", "potential": ["0", "0", "1"], "lambda": "3"}]))
        assert main(["soliton", str(p), "--quiet"]) == 1

    def test_bad_structure_exits_1(self, tmp_path):
        p = tmp_path / "scaled.json"
        p.write_text(doc_with(acm={"xi": ["0", "0", "2"],
                                   "phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]]}))
        assert main(["validate", str(p), "--quiet"]) == 1

    @pytest.mark.parametrize("content", ["{}", "{not json", doc_with(dimension=2),
                                         doc_with(metric=[["1", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]])])
    def test_input_errors_exit_2(self, tmp_path, content, capsys):
        p = tmp_path / "broken.json"
        p.write_text(content)
        assert main(["report", str(p)]) == 2

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["report", str(tmp_path / "absent.json"), "--quiet"]) == 2

    def test_unknown_name_exits_2(self):
        assert main(["soliton", str(EXAMPLES / "hyp3.json"), "--name", "nope", "--quiet"]) == 2

    def test_name_filter(self, capsys):
        assert main(["soliton", str(EXAMPLES / "su2.json"), "--name", "reeb", "--format", "json"]) == 0
        ids = [e["check_id"] for e in json.loads(capsys.readouterr().out)["entries"]]
        assert any(i.startswith("soliton.reeb.") for i in ids)
        assert not any(i.startswith("soliton.static.") for i in ids)

    def test_module_entry_point_byte_stable(self):
        cmd = [sys.executable, "-m", "acmsoliton", "report", str(EXAMPLES / "hyp3.json"), "--format", "json"]
        a = subprocess.run(cmd, capture_output=True, check=False)
        b = subprocess.run(cmd, capture_output=True, check=False)
        assert a.returncode == 0 and a.stdout == b.stdout
