"""File formats, report rendering, and the command line surface."""

from __future__ import annotations

import json

import pytest

from ipckit.cli import main
from ipckit.errors import SchemaError
from ipckit.io import export_poset, import_poset, poset_from_obj, poset_to_dot, poset_to_obj
from ipckit.poset import are_isomorphic, build_poset, canonical_code
from ipckit.report import render_report
from ipckit.scenarios import run_scenario

F2 = build_poset(["r", "a", "b"], [("r", "a"), ("r", "b")], name="F2")


def test_json_roundtrip(tmp_path):
    path = tmp_path / "f2.json"
    export_poset(F2, "json", path)
    back = import_poset(path)
    assert canonical_code(back) == canonical_code(F2)
    assert back.name == "F2"


def test_dot_export():
    from ipckit.catalog import catalog_get

    dot = poset_to_dot(catalog_get("P2"))
    assert dot.count("->") == 4
    assert dot.count('"r"') >= 2  # node line plus rank group


def test_import_rejects_cycles(tmp_path):
    path = tmp_path / "cyc.json"
    path.write_text(json.dumps({
        "elements": ["a", "b"],
        "cover": [["a", "b"], ["b", "a"]],
    }))
    with pytest.raises(SchemaError) as err:
        import_poset(path)
    assert "CycleDetected" in str(err.value)


def test_import_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\"elements\": 3}")
    with pytest.raises(SchemaError):
        import_poset(path)
    path.write_text("not json")
    with pytest.raises(SchemaError):
        import_poset(path)


def test_obj_roundtrip_drops_nothing():
    obj = poset_to_obj(F2)
    assert obj["elements"] == ["r", "a", "b"]
    assert sorted(obj["cover"]) == [["r", "a"], ["r", "b"]]
    assert are_isomorphic(poset_from_obj(obj), F2)


def test_report_rendering():
    report = run_scenario("duality-counts", {"size": 2, "dual_size": 2})
    text = render_report(report, "text")
    assert "status: pass" in text
    assert "instances checked" in text
    blob = json.loads(render_report(report, "json"))
    assert blob["status"] == "pass"
    assert blob["scenario"] == "duality-counts"


def test_report_embeds_counterexamples():
    from ipckit.report import Counterexample, VerificationReport

    report = VerificationReport(
        scenario="demo", params={"size": 1}, status="fail",
        instances_checked=1,
        counterexamples=[Counterexample(F2, "synthetic failure")],
        work_units=7)
    blob = json.loads(render_report(report, "json"))
    assert blob["counterexamples"][0]["poset"]["elements"] == ["r", "a", "b"]
    assert "synthetic failure" in render_report(report, "text")
    budget = VerificationReport(
        scenario="demo", params={}, status="budget", work_units=9)
    assert "status: budget" in render_report(budget, "text")


def test_cli_check(tmp_path, capsys):
    path = tmp_path / "f2.json"
    export_poset(F2, "json", path)
    assert main(["check", str(path), "p0 | ~p0"]) == 1
    assert main(["check", str(path), "p0 -> p0"]) == 0
    assert main(["modal-check", str(path), "[]p0 -> p0"]) == 0
    capsys.readouterr()


def test_cli_jankov_subframe(tmp_path, capsys):
    host = tmp_path / "host.json"
    target = tmp_path / "target.json"
    export_poset(build_poset(["a", "b", "c", "d"],
                             [("a", "b"), ("b", "c"), ("c", "d")]), "json", host)
    export_poset(F2, "json", target)
    assert main(["jankov", str(host), str(target)]) == 0
    assert main(["subframe", str(host), str(target)]) == 0
    export_poset(F2, "json", host)
    assert main(["jankov", str(host), str(target)]) == 1
    capsys.readouterr()


def test_cli_pmorphism(tmp_path, capsys):
    src = tmp_path / "src.json"
    dst = tmp_path / "dst.json"
    export_poset(F2, "json", src)
    export_poset(build_poset(["x", "y"], [("x", "y")]), "json", dst)
    assert main(["pmorphism", str(src), str(dst), "--surjective"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out.strip())["r"] == "x"
    assert main(["pmorphism", str(dst), str(src), "--surjective"]) == 1
    capsys.readouterr()


def test_cli_enumerate_and_catalog(capsys):
    assert main(["enumerate", "--size", "3"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 2
    assert main(["catalog", "P2"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert len(blob["elements"]) == 5
    assert main(["catalog", "nosuch"]) == 2
    capsys.readouterr()


def test_cli_translate(capsys):
    assert main(["translate", "p0 -> p1"]) == 0
    assert capsys.readouterr().out.strip() == "[]([]p0 -> []p1)"


def test_cli_verify_exit_codes(capsys):
    assert main(["verify", "duality-counts", "--param", "size=2",
                 "--param", "dual_size=2"]) == 0
    capsys.readouterr()
    assert main(["verify", "sobolev-width", "--size", "4",
                 "--budget", "50", "--format", "json"]) == 3
    blob = json.loads(capsys.readouterr().out)
    assert blob["status"] == "budget"


def test_cli_usage_error():
    assert main(["verify", "not-a-scenario"]) == 2


def test_cli_enumerate_budget(capsys):
    assert main(["enumerate", "--size", "9"]) == 3
    capsys.readouterr()
