import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from importlib import resources

import jsonschema
import pytest

from tunnelrho.arcsys import Base, system_to_json, waves_from_pair
from tunnelrho.cli import Command, oracle_check, run
from tunnelrho import parse_slope


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(name):
    return json.loads(resources.files("tunnelrho.schemas").joinpath(name).read_text())


def test_every_command_has_a_subparser(capsys):
    for cmd in Command:
        with pytest.raises(SystemExit) as exc:
            run([cmd.value, "--help"])
        assert exc.value.code == 0
    capsys.readouterr()


def test_rho_torus_2_3(capsys):
    code, out, _ = call(capsys, "rho-torus", "2", "3")
    assert (code, out.strip()) == (0, "1/1 (mod 2)")


def test_rho_torus_json(capsys):
    code, out, _ = call(capsys, "rho-torus", "5", "7", "--json")
    assert code == 0 and json.loads(out) == {"m": 5, "n": 7, "rho": "1/1"}


def test_rho_torus_not_coprime(capsys):
    code, out, err = call(capsys, "rho-torus", "4", "6")
    assert code == 1 and out == ""
    assert err.startswith("NotCoprime")


def test_rho_torus_unknot(capsys):
    code, _, err = call(capsys, "rho-torus", "1", "4")
    assert code == 1 and "DegenerateTorusKnot" in err


def test_delta(capsys):
    assert call(capsys, "delta", "1/3", "0/1")[:2] == (0, "1\n")
    assert call(capsys, "delta", "-1/3", "inf")[:2] == (0, "3\n")


def test_intersect_with_oracle(capsys):
    code, out, _ = call(capsys, "intersect", "3/5", "1/3", "--oracle", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["min_intersections"] == doc["oracle"] == 6 and doc["agree"]


def test_usage_errors_exit_2(capsys):
    for argv in (["delta", "1/3"], ["delta", "x", "1/3"], ["nope"], ["rho-torus", "a", "3"],
                 ["oracle-check", "--max-p", "0"]):
        with pytest.raises(SystemExit) as exc:
            run(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = call(capsys, "waves", str(tmp_path / "absent.json"))
    assert code == 2 and err


def _write(tmp_path, doc, name="system.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


def test_waves_text(capsys, tmp_path):
    path = _write(tmp_path, system_to_json(waves_from_pair(parse_slope("7/3"), Base.MINUS)))
    code, out, _ = call(capsys, "waves", str(path))
    assert code == 0
    assert "augmented slope: 7/3 based at MinusMeridian" in out
    assert "rho: 1/3 (mod 2)" in out


def test_waves_json_round_trip(capsys, tmp_path):
    path = _write(tmp_path, system_to_json(waves_from_pair(parse_slope("3/5"), Base.PLUS)))
    code, first, _ = call(capsys, "waves", str(path), "--json")
    assert code == 0
    doc = json.loads(first)
    jsonschema.validate(doc, schema("arc_system.schema.json"))
    assert doc["analysis"]["rho"] == "3/5"
    again = _write(tmp_path, doc, "again.json")
    code, second, _ = call(capsys, "waves", str(again), "--json")
    assert code == 0 and json.loads(second) == doc


def test_waves_reports_domain_errors(capsys, tmp_path):
    path = _write(tmp_path, {"classes": [
        {"end1": "MinusLeft", "end2": "PlusRight", "slope": "1/3"},
        {"end1": "MinusRight", "end2": "PlusLeft", "slope": "1/3"}]})
    code, out, err = call(capsys, "waves", str(path), "--json")
    assert code == 1 and err.startswith("NoWaves")
    assert json.loads(out)["analysis"]["valid"]


def test_waves_bad_document(capsys, tmp_path):
    path = _write(tmp_path, {"classes": [{"end1": "Up", "end2": "Down", "slope": "1/3"}]})
    assert call(capsys, "waves", str(path))[0] == 2


def test_trace_has_both_certificates(capsys):
    code, out, _ = call(capsys, "rho-torus", "3", "5", "--trace")
    doc = json.loads(out)
    assert code == 0
    jsonschema.validate(doc, schema("trace.schema.json"))
    assert [c["corner"] for c in doc["certificates"]] == [["1", "2"], ["2", "3"]]
    assert all(len(c["diagonal_crossings"]) == 2 for c in doc["certificates"])


def _is_svg(path):
    root = ET.parse(path).getroot()
    return root.tag == "{http://www.w3.org/2000/svg}svg"


def test_rho_torus_svg(capsys, tmp_path):
    path = tmp_path / "p.svg"
    code, out, _ = call(capsys, "rho-torus", "2", "3", "--svg", str(path))
    assert code == 0 and out.strip() == "1/1 (mod 2)"
    assert _is_svg(path)


def test_render(capsys, tmp_path):
    path = tmp_path / "pair.svg"
    code, out, _ = call(capsys, "render", "1/3", "-1/1", "--svg", str(path), "--json")
    assert code == 0 and json.loads(out)["slopes"] == ["1/3", "-1/1"]
    assert _is_svg(path)


def test_render_requires_svg_path(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["render", "1/3"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_realize(capsys):
    code, out, _ = call(capsys, "realize", "1/3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["word"] == "U^1" and doc["verified"]
    assert doc["trace"] == ["1/1", "1/3"]


def test_realize_even_target(capsys):
    code, _, err = call(capsys, "realize", "2/3")
    assert code == 1 and err.startswith("EvenNumeratorTarget")


def test_realize_not_found(capsys):
    code, _, err = call(capsys, "realize", "5/7", "--max-len", "2")
    assert code == 1 and err.startswith("NotFound")


def test_realize_with_generator_file(capsys, tmp_path):
    path = _write(tmp_path, {"V": [1, 0, 4, 1]}, "gens.json")
    code, out, _ = call(capsys, "realize", "1/5", "--gens", str(path))
    assert code == 0 and "word:   V^1" in out


def test_realize_rejects_non_unimodular_file(capsys, tmp_path):
    path = _write(tmp_path, {"V": [3, 0, 0, 1]}, "gens.json")
    code, _, err = call(capsys, "realize", "1/3", "--gens", str(path))
    assert code == 1 and err.startswith("NotUnimodular")


@pytest.mark.parametrize("bound", [1, 3])
def test_oracle_check_small(capsys, bound):
    code, out, _ = call(capsys, "oracle-check", "--max-p", str(bound), "--max-q", str(bound), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["mismatches"] == []
    assert doc["pairs"] == doc["slopes"] * (doc["slopes"] - 1) // 2


def test_oracle_check_unit_grid():
    report = oracle_check(1, 1)
    assert report["slopes"] == 4  # -1/1, 0/1, 1/1, 1/0
    assert report["mismatches"] == []


def test_console_script_round_trip():
    proc = subprocess.run([sys.executable, "-m", "tunnelrho.cli", "rho-torus", "2", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/1 (mod 2)"
    proc = subprocess.run([sys.executable, "-m", "tunnelrho.cli", "rho-torus", "4", "6"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1 and "NotCoprime" in proc.stderr
