import json
import subprocess
import sys
from pathlib import Path

import pytest

from kchalex.cli import EXIT_BUDGET, EXIT_INAPPLICABLE, EXIT_INPUT, EXIT_OK, main

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_alex_dga_trefoil(capsys):
    code, doc = run_json(capsys, "alex-dga", "--input", "rh_trefoil")
    assert code == EXIT_OK
    assert doc["delta"] == "mu^2 - mu + 1"
    assert len(doc["reports"]) >= 2
    assert {r["delta"] for r in doc["reports"]} == {"mu^2 - mu + 1"}


def test_alex_dga_with_family_file(capsys):
    code, doc = run_json(capsys, "alex-dga", "--input", "builtin:rh_trefoil",
                         "--aug", str(INPUTS / "trefoil_family.json"))
    assert code == EXIT_OK and doc["delta"] == "mu^2 - mu + 1"


def test_alex_dga_unknot(capsys):
    code, doc = run_json(capsys, "alex-dga", "--input", "unknot")
    assert code == EXIT_OK and doc["delta"] == "1"


def test_corrupted_family(capsys):
    code, doc = run_json(capsys, "alex-dga", "--input", "rh_trefoil",
                         "--aug", str(INPUTS / "corrupted_family.json"))
    assert code == EXIT_INPUT
    assert doc["verification"]["passed"] is False


@pytest.mark.parametrize("name,delta", [("trefoil_aug.json", "mu^2 - mu + 1"), ("unknot_aug.json", "1")])
def test_alex_aug(capsys, name, delta):
    code, doc = run_json(capsys, "alex-aug", "--input", str(INPUTS / name))
    assert code == EXIT_OK and doc["delta"] == delta


def test_alex_aug_degenerate(capsys):
    code = main(["alex-aug", "--input", str(INPUTS / "degenerate_aug.json")])
    err = capsys.readouterr().err
    assert code == EXIT_INAPPLICABLE
    assert "branch formula inapplicable; a different branch of V_K is required" in err


def test_groebner_toy(capsys):
    code, doc = run_json(capsys, "groebner", "--input", str(INPUTS / "toy_ideal.json"))
    assert code == EXIT_OK
    assert doc["basis"] == ["x - y", "y^2 - 1/2"]


def test_groebner_elimination(capsys):
    code, doc = run_json(capsys, "groebner", "--input", str(INPUTS / "elimination_ideal.json"))
    assert code == EXIT_OK
    assert doc["basis"] == ["-x + z^2"]


def test_groebner_timeout(capsys, tmp_path):
    ideal = {"variables": ["x", "y", "z", "w"], "order": "lex",
             "generators": ["x^5 + y^4 + z^3 - 1", "x^3 + y^3 + z^2 - w", "x*y*z*w - 2", "w^3 - x - y"]}
    path = tmp_path / "hard.json"
    path.write_text(json.dumps(ideal))
    assert main(["groebner", "--input", str(path), "--timeout", "0.001"]) == EXIT_BUDGET


def test_augpoly_reference(capsys):
    code, doc = run_json(capsys, "augpoly", "--input", "rh_trefoil",
                         "--reference-aug", str(INPUTS / "trefoil_aug.json"))
    assert code == EXIT_OK
    assert doc["reference_check"]["divisible"] is True


def test_novikov(capsys):
    code, doc = run_json(capsys, "novikov", "--input", str(INPUTS / "novikov_r1s1.json"),
                         "--orbits", str(INPUTS / "orbits_geometric.json"))
    assert code == EXIT_OK
    assert doc["det"] == "-mu + 2"
    assert doc["factorization_check"] is True


def test_novikov_malformed(capsys):
    assert main(["novikov", "--input", str(INPUTS / "malformed_novikov.json")]) == EXIT_INPUT


def test_burau(capsys):
    code, doc = run_json(capsys, "burau", "--input", str(INPUTS / "trefoil_braid.json"))
    assert code == EXIT_OK and doc["delta"] == "mu^2 - mu + 1"


def test_check(capsys):
    code, doc = run_json(capsys, "check", "--knot", "rh_trefoil")
    assert code == EXIT_OK and doc["agree"] is True
    assert set(doc["deltas"]) == {"F-route", "Aug-route", "Burau"}


def test_missing_file(capsys):
    assert main(["burau", "--input", "/nonexistent.json"]) == EXIT_INPUT


@pytest.mark.parametrize("argv", [
    ["alex-dga", "--input", "rh_trefoil"],
    ["alex-aug", "--input", str(INPUTS / "trefoil_aug.json")],
    ["novikov", "--input", str(INPUTS / "novikov_r1s1.json")],
    ["augpoly", "--input", "rh_trefoil"],
])
def test_byte_identical_output(tmp_path, capsys, argv):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main([*argv, "--output", str(a)]) == EXIT_OK
    assert main([*argv, "--output", str(b)]) == EXIT_OK
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kchalex.cli", "burau", "--input",
                           str(INPUTS / "figure_eight_braid.json"), "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["delta"] == "-mu^2 + 3*mu - 1"
