import json

from circiso.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_t1_text_output(capsys):
    code, out, _ = run(capsys, "t1", "n=16;R=1,2,7")
    assert code == 0
    assert "1,2,7 | 3,5,6" in out


def test_t1_json_output(capsys):
    code, out, _ = run(capsys, "t1", "n=27;R=1,3,8,10", "--json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["meta", "input", "results", "assertions"]
    assert doc["meta"]["tool"] == "circiso"
    assert len(doc["results"]["members"]) == 3
    assert all(a["passed"] for a in doc["assertions"])
    assert all(w["verified"] for w in doc["results"]["witnesses"])


def test_t1_flag_style_graph(capsys):
    code, out, _ = run(capsys, "t1", "--n", "16", "--set", "1,2,7")
    assert code == 0


def test_t2_command(capsys):
    code, out, _ = run(capsys, "t2", "n=16;R=1,2,7", "--m", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    members = [tuple(m["conn"]) for m in doc["results"]["members"]]
    assert sorted(members) == [(1, 2, 7), (2, 3, 5)]
    assert doc["results"]["t_stabilizer"] == [0, 2, 4, 6]
    kinds = {c["t"]: c["kind"] for c in doc["results"]["classifications"]}
    assert kinds[0] == "identity" and kinds[2] == "type2" and kinds[1] == "not_circulant"


def test_t2_parameter_error_has_hint(capsys):
    code, out, err = run(capsys, "t2", "n=432;R=16,27,48,54,128,160,189", "--m", "5")
    assert code == 2
    assert "hint" in err
    assert "2, 3, 6" in err  # the valid m values for this graph


def test_classify_json(capsys):
    code, out, _ = run(
        capsys, "classify", "n=432;R=16,27,48,54,128,160,189", "--m", "3", "--t", "48", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["kind"] == "identity"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "t1", "n=16;R=1,,7")
    assert code == 2
    assert "byte" in err


def test_product_commands(capsys):
    code, out, _ = run(capsys, "product", "coprime", "n=16;R=1,2,7", "n=27;R=1,3,8,10", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["product"]["conn"] == [16, 27, 48, 54, 128, 160, 189]
    assert doc["results"]["witnesses"][0]["verified"]
    assert doc["results"]["witnesses"][0]["source"]["kind"] == "cartesian"

    code, out, _ = run(capsys, "product", "prism", "n=5;R=1,2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["product"]["conn"] == [2, 4, 5]
    assert doc["results"]["witnesses"][0]["source"]["kind"] == "prism"

    code, _, err = run(capsys, "product", "prism", "n=5;R=1", "n=7;R=1")
    assert code == 2


def test_verify_rebuilds_product_witnesses(tmp_path, capsys):
    f = tmp_path / "prod.json"
    code, _, _ = run(capsys, "product", "prism", "n=7;R=1,2", "--out", str(f))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 0
    assert "[PASS]" in out and "prism" in out


def test_verify_round_trip(tmp_path, capsys):
    report_file = tmp_path / "t2.json"
    code, _, _ = run(capsys, "t2", "n=16;R=1,2,7", "--m", "2", "--out", str(report_file))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(report_file))
    assert code == 0
    assert "[PASS]" in out

    # corrupt the stored bijection and expect an itemized failure
    doc = json.loads(report_file.read_text())
    doc["results"]["witnesses"][0]["bijection"][1:3] = [
        doc["results"]["witnesses"][0]["bijection"][2],
        doc["results"]["witnesses"][0]["bijection"][1],
    ]
    report_file.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(report_file))
    assert code == 1
    assert "[FAIL]" in out


def test_reports_are_byte_stable(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "t1", "n=16;R=1,2,7", "--out", str(f1))
    run(capsys, "t1", "n=16;R=1,2,7", "--out", str(f2))
    assert f1.read_bytes() == f2.read_bytes()


def test_scan_conjecture_cli(capsys):
    code, out, _ = run(capsys, "scan-conjecture", "--n1", "3", "--n2", "4",
                       "--budget", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert "experimental" in doc["results"]["header"]
    assert doc["results"]["cases"] == 2


def test_classify_bad_params_exit_code(capsys):
    code, _, err = run(capsys, "classify", "n=432;R=16,27,48", "--m", "3", "--t", "999")
    assert code == 2
    assert "t must lie" in err


def test_module_entry_point_subprocess():
    import os
    import pathlib
    import subprocess
    import sys

    import circiso

    src = pathlib.Path(circiso.__file__).resolve().parents[1]
    env = dict(os.environ, PYTHONPATH=str(src))
    res = subprocess.run(
        [sys.executable, "-m", "circiso", "classify", "n=16;R=1,2,7",
         "--m", "2", "--t", "2", "--json"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["results"]["kind"] == "type2"
    assert doc["results"]["image"]["conn"] == [2, 3, 5]


def test_reproduce_section3(capsys):
    code, out, _ = run(capsys, "reproduce", "--section", "3")
    assert code == 0
    assert "assertions passed" in out
    assert "[FAIL]" not in out


def test_reproduce_detects_corruption(capsys, monkeypatch):
    import circiso.reproduce as rep
    from circiso.catalog import load

    cat = load()
    raw = json.loads(json.dumps(cat.raw))  # deep copy
    raw["s3"]["families"]["A"][2] = [27, 32, 54, 96, 112, 176, 190]
    from circiso.catalog import Catalog

    monkeypatch.setattr(rep, "load", lambda: Catalog(raw))
    code, out, _ = run(capsys, "reproduce", "--section", "3")
    assert code == 1
    assert "[FAIL]" in out
