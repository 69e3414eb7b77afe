import json
import subprocess
import sys

import pytest

from hopfcyc.cli import main, run


def cli(*args):
    doc, code = run(list(args))
    return doc, code


def test_cyclic_verify_h4():
    doc, code = cli("cyclic-verify", "--object", "H4", "--pair", "eps_g", "--max-level", "4")
    assert code == 0 and doc["ok"] and all(doc["checks"].values())
    assert "t4^5 = id" in " ".join(doc["checks"])


def test_cohomology_trivial():
    doc, code = cli("cohomology", "--object", "trivial", "--max-degree", "2")
    assert code == 0 and doc["data"]["HC"] == [1, 0, 1]


def test_pair_check_negative():
    doc, code = cli("pair-check", "--object", "H4", "--pair", "eps_one")
    assert code == 1 and doc["checks"]["pair/involution"] is False


def test_guard_refusal_is_a_failed_check():
    doc, code = cli("cyclic-verify", "--object", "H4", "--pair", "eps_one")
    assert code == 1 and doc["checks"] == {"pair in involution": False}


def test_unguarded_necessity():
    doc, code = cli("cyclic-verify", "--object", "H4", "--pair", "eps_one", "--no-involution-guard",
                    "--max-level", "2")
    assert code == 1 and doc["witnesses"]["cocyclic/t1^2 = id"] == "x"


def test_level_cap_exit_3():
    doc, code = cli("cyclic-verify", "--object", "H4", "--pair", "eps_g", "--max-level", "3", "--max-space", "10")
    assert code == 3 and doc["error"]["kind"] == "resource"


@pytest.mark.parametrize("args,kind", [
    (("validate", "--object", "nope"), "reference"),
    (("frobnicate",), "usage"),
    (("pair-check", "--object", "H4"), "usage"),
    (("validate", "--object", "H4", "--field", "reals"), "field"),
])
def test_input_errors_exit_2(args, kind):
    doc, code = cli(*args)
    assert code == 2 and doc["error"]["kind"] == kind


def test_manifest_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{\n  oops\n}")
    doc, code = cli("validate", "--manifest", str(p), "--object", "H4")
    assert code == 2 and doc["error"]["kind"] == "parse" and "line 2" in doc["error"]["message"]


def test_export_and_reload(tmp_path):
    out = tmp_path / "cat.json"
    doc, code = cli("export-catalog", "--output", str(out))
    assert code == 0 and doc["checks"]["round trip"]
    doc, code = cli("validate", "--manifest", str(out), "--object", "S3")
    assert code == 0


def test_taft_lookup_without_field():
    doc, code = cli("pair-search", "--object", "Taft3")
    assert code == 0 and doc["data"]["found"] == [{"delta": "eps", "sigma": "g2"}, {"delta": "delta2", "sigma": "1"}]


@pytest.mark.parametrize("args", [
    ("validate", "--object", "H4"),
    ("dual", "--object", "H4"),
    ("drinfeld", "--object", "H4", "--rmatrix", "R1"),
    ("double-cover", "--object", "H4", "--rmatrix", "R0"),
    ("trace-space", "--module", "translation_Z3"),
    ("charmap-verify", "--module", "translation_Z3", "--trace", "haar", "--max-level", "3"),
    ("validate", "--module", "conjugation_M2"),
])
def test_passing_commands(args):
    doc, code = cli(*args)
    assert code == 0, doc


def test_charmap_negative():
    doc, code = cli("charmap-verify", "--module", "translation_Z3", "--trace", "eval_e", "--max-level", "2")
    assert code == 1 and doc["witnesses"]["charmap/cyclic t1"] == "g"


def test_double_cover_output(tmp_path):
    out = tmp_path / "cover.json"
    doc, code = cli("double-cover", "--object", "H4", "--rmatrix", "R1", "--output", str(out))
    assert code == 0 and doc["data"]["dim"] == 8
    doc, code = cli("cyclic-verify", "--manifest", str(out), "--object", "H4(theta)", "--pair", "eps_sigma",
                    "--max-level", "2")
    assert code == 0


def test_exit_code_iff_all_checks():
    for args in (("pair-check", "--object", "H4", "--pair", "eps_g"), ("pair-check", "--object", "H4", "--pair", "eps_one")):
        doc, code = cli(*args)
        assert (code == 0) == all(doc["checks"].values())


def test_deterministic_reports():
    a, _ = cli("cohomology", "--object", "H4", "--pair", "eps_g", "--max-degree", "2")
    b, _ = cli("cohomology", "--object", "H4", "--pair", "eps_g", "--max-degree", "2")
    a.pop("timings"), b.pop("timings")
    assert json.dumps(a) == json.dumps(b)


def test_subprocess_entry_point():
    p = subprocess.run([sys.executable, "-m", "hopfcyc.cli", "cohomology", "--object", "H4", "--pair", "eps_g",
                        "--max-degree", "3"], capture_output=True, text=True)
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    assert doc["schema"] == "hopfcyc-report/1"
    assert doc["data"]["HC"] == [0, 1, 0, 2]
    assert "PASS" in p.stderr


def test_main_returns_code(capsys):
    assert main(["pair-check", "--object", "H4", "--pair", "eps_one", "--quiet"]) == 1
    assert json.loads(capsys.readouterr().out)["ok"] is False
