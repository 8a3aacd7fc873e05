import csv
import io
import json
import subprocess
import sys

import pytest

from cyclext import cli, oracle
from cyclext.errors import NormalizationImpossible

from conftest import action

ORDER5 = action(5, 0, [(5, 1), (5, 4), (5, 2), (5, 3)])
HEX = action(6, 0, [(2, 3), (2, 3), (3, 2), (3, 4)])


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


def test_atlas_genus2(capsys):
    code, doc, _ = run_json(capsys, "atlas", "--genus", 2)
    assert code == 0 and doc["format_version"] == 1
    assert len(doc["classes"]) == 4
    assert doc["classes"][0] == {"n": 2, "p": 1, "q": 2, "m": 1, "r": 0, "s1": 0, "s2": 3,
                                 "genus": 2}


def test_atlas_genus1_needs_cap(capsys):
    code, out, err = run(capsys, "atlas", "--genus", 1)
    assert code == 1 and out == "" and "torus" in err
    code, doc, _ = run_json(capsys, "atlas", "--genus", 1, "--max-order", 4)
    assert code == 0 and len(doc["classes"]) == 4


def test_atlas_free_only_csv(capsys):
    code, out, _ = run(capsys, "atlas", "--genus", 7, "--free-only", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# format_version: 1"
    rows = list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))
    assert [int(r["n"]) for r in rows] == [2, 3, 6]


def test_check_order5_fixture(capsys):
    code, doc, _ = run_json(capsys, "check", json.dumps(ORDER5))
    assert code == 0 and doc["summary"] == "not extendable: condition (b) fails"
    assert doc["class"] is None and doc["extendable"] is False


def test_check_from_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "hex.json"
    path.write_text(json.dumps(HEX))
    code, doc, _ = run_json(capsys, "check", path)
    assert code == 0 and doc["class"]["genus"] == 2 and doc["pairing"] == [[1, 2], [3, 4]]
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(HEX)))
    code, doc, _ = run_json(capsys, "check", "-")
    assert code == 0 and doc["extendable"] is True


def test_check_negative_residues_accepted(capsys):
    code, doc, _ = run_json(capsys, "check",
                            json.dumps(action(6, 0, [(2, 3), (2, -3), (3, 2), (3, -2)])))
    assert code == 0 and doc["action"]["singular"][1]["image"] == 3


@pytest.mark.parametrize("payload", ["{not json", "[1, 2]", '{"quotient_genus": 0}',
                                     json.dumps(action(4, 0, [(2, 2), (2, 2)]))])
def test_check_bad_input_exits_1(capsys, payload):
    code, out, err = run(capsys, "check", payload, "--format", "json")
    assert code == 1 and out == "" and err


def test_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "nope.json")
    assert code == 1 and "cannot read" in err


def test_normalize(capsys):
    code, doc, _ = run_json(capsys, "normalize", json.dumps(action(5, 1, [], [1], [0])))
    assert code == 0 and doc["script"] == []
    code, doc, _ = run_json(capsys, "normalize", json.dumps(action(5, 1, [], [2], [3])))
    assert doc["normalized"]["alpha"] == [1] and doc["normalized"]["beta"] == [0]
    assert {m["kind"] for m in doc["script"]} <= {"twist_alpha", "twist_beta"}


def test_conjugacy_generators(capsys):
    code, doc, _ = run_json(capsys, "conjugacy", json.dumps(HEX), "--generators", 5)
    assert code == 0 and doc["conjugate"] is True
    assert doc["witness"] == {"accepted_units": [1, 5], "classes": 1}
    code, _, err = run(capsys, "conjugacy", json.dumps(HEX), "--generators", 2)
    assert code == 1


def test_conjugacy_two_actions(capsys):
    code, doc, _ = run_json(capsys, "conjugacy", json.dumps(HEX), json.dumps(HEX))
    assert code == 0 and doc["conjugate"] is True and doc["method"] == "standard-form"
    other = action(5, 0, [(5, 1), (5, 1), (5, 4), (5, 4)])
    code, doc, _ = run_json(capsys, "conjugacy", json.dumps(ORDER5), json.dumps(other),
                            "--depth", 4)
    assert code == 0 and doc["method"] == "move-orbit" and doc["status"] == "unknown"
    code, _, _ = run(capsys, "conjugacy", json.dumps(HEX))
    assert code == 1


def test_lens_certificate(capsys):
    code, doc, _ = run_json(capsys, "lens", 7, 1, 2)
    assert code == 0 and doc["certificate"]["r"] == 3 and doc["certificate"]["b1"] == -21
    code, out, _ = run(capsys, "lens", 7, 1, 2, "--format", "csv")
    assert out.splitlines()[1:] == ["p,q1,q2,r,a1,b1,a2,b2,m,n", "7,1,2,3,10,-21,3,7,-2,1"]
    code, doc, _ = run_json(capsys, "lens", 5, 1, 2)
    assert code == 0 and doc["dominates"] is False


def test_lens_digraph(capsys):
    code, doc, _ = run_json(capsys, "lens", "--digraph", 7)
    assert code == 0 and ["L(7,1)", "L(7,2)"] in doc["mutual_pairs"]
    code, _, _ = run(capsys, "lens", 7, 2)
    assert code == 1
    code, _, _ = run(capsys, "lens", 6, 2, 1)
    assert code == 1


def test_oracle_pass_and_fail(capsys, monkeypatch):
    code, doc, _ = run_json(capsys, "oracle", "lens")
    assert code == 0 and doc["passed"] is True and doc["suites"][0]["checked"] > 0

    def broken():
        rep = oracle.SuiteReport("broken")
        rep.checked = 1
        rep.fail("forced")
        return rep

    monkeypatch.setitem(oracle.SUITES, "broken", broken)
    code, doc, _ = run_json(capsys, "oracle", "broken")
    assert code == 3 and doc["passed"] is False
    code, _, _ = run(capsys, "oracle", "nonexistent")
    assert code == 1


def test_internal_violation_exits_2(capsys, monkeypatch):
    def boom(*_):
        raise NormalizationImpossible("forced")

    monkeypatch.setattr(cli, "normalize", boom)
    code, out, err = run(capsys, "normalize", json.dumps(action(5, 1, [], [2], [3])))
    assert code == 2 and out == "" and "invariant" in err


def test_bad_usage_exits_1(capsys):
    assert run(capsys, "atlas")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "atlas", "--genus", 2, "--format", "xml")[0] == 1


def test_out_is_atomic_and_byte_stable(tmp_path, capsys):
    target = tmp_path / "atlas.json"
    assert run(capsys, "atlas", "--genus", 3, "--out", target)[0] == 0
    first = target.read_bytes()
    assert run(capsys, "atlas", "--genus", 3, "--out", target)[0] == 0
    assert target.read_bytes() == first
    assert json.loads(first)["format_version"] == 1
    assert [p.name for p in tmp_path.iterdir()] == ["atlas.json"]


def test_failed_run_leaves_existing_file(tmp_path, capsys):
    target = tmp_path / "keep.json"
    target.write_text("old")
    assert run(capsys, "atlas", "--genus", 1, "--out", target)[0] == 1
    assert target.read_text() == "old"


def test_meta_is_separate(capsys):
    _, plain, _ = run_json(capsys, "lens", 7, 1, 2)
    _, with_meta, _ = run_json(capsys, "lens", 7, 1, 2, "--meta")
    meta = with_meta.pop("meta")
    assert with_meta == plain and meta["tool"] == "cyclext" and "generated_at" in meta


def test_table_format(capsys):
    code, out, _ = run(capsys, "check", json.dumps(ORDER5), "--format", "table")
    assert code == 0 and out.startswith("# format_version: 1")
    assert out.rstrip().endswith("not extendable: condition (b) fails")


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclext.cli", "lens", "7", "1", "2",
                           "--format", "json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["certificate"]["a1"] == 10
