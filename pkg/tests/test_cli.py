import json
import subprocess
import sys

import pytest

from ampdyn import CMEndo, EndoAction
from ampdyn.cli import main
from ampdyn.corpus import polarized_pair

H = json.dumps((polarized_pair()[0] @ polarized_pair()[1]).to_json())
TWO_I = json.dumps({"rows": 2, "cols": 2, "entries": ["2", "0", "0", "2"]})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_composition_is_not_int_amplified(capsys):
    code, out, _ = run(capsys, "classify", "--json", H)
    report = json.loads(out)
    assert code == 0 and report["int_amplified"] is False
    assert report["unit_profile"] == {"inside": 1, "on": 0, "outside": 3, "radius_sq": "1"}
    assert sum(b["multiplicity"] for b in report["root_balls"]) == 4


def test_classify_abstract_action(capsys):
    code, out, _ = run(capsys, "classify", "--json", TWO_I)
    assert code == 0 and json.loads(out)["int_amplified"] is True


@pytest.mark.parametrize("doc", [
    {"rows": 2, "cols": 2, "entries": ["1", "2", "2", "4"]},
    {"d": -1, "matrix": [[{"a": "1", "b": "1"}, {"a": "1", "b": "1"}], [{"a": "1", "b": "1"}, {"a": "1", "b": "1"}]]},
])
def test_singular_input_exits_3(capsys, doc):
    code, out, err = run(capsys, "classify", "--json", json.dumps(doc))
    assert code == 3 and not out and "singular" in err


@pytest.mark.parametrize("argv", [
    ["classify", "--json", "{not json"],
    ["classify", "--json", '{"rows": 2}'],
    ["classify", "--json", '{"d": 2, "matrix": [[{"a": "1", "b": "0"}]]}'],
    ["classify", "--json", TWO_I, "--precision", "1"],
    ["classify", "--json", TWO_I, "--precision", "5000"],
    ["classify", "--json", TWO_I, "--input", "x.json"],
    ["classify"],
    ["classify", "--input", "/nonexistent/file.json"],
    ["build-ns", "--json", TWO_I],
    ["examples", "--case", "9.9"],
    ["bogus"],
])
def test_input_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_examples_all_pass(capsys):
    code, out, _ = run(capsys, "examples")
    report = json.loads(out)
    assert code == 0 and report["all_passed"]
    assert {c["case"] for c in report["checks"]} == {"9.1", "9.2", "9.4"}


def test_examples_case_filter(capsys):
    code, out, _ = run(capsys, "examples", "--case", "9.4", "--format", "text")
    lines = out.strip().splitlines()
    assert code == 0
    assert all(" 9.4 " in line for line in lines[:-1]) and lines[-1].endswith("passed")


def test_output_is_deterministic(capsys):
    first = run(capsys, "classify", "--json", H, "--precision", "128")[1]
    second = run(capsys, "classify", "--json", H, "--precision", "128")[1]
    assert first == second


def test_build_ns_output_round_trips(capsys, tmp_path):
    e = CMEndo.from_rows([[1, -5], [1, 1]])
    code, out, _ = run(capsys, "build-ns", "--json", json.dumps(e.to_json()))
    assert code == 0
    action = EndoAction.from_json(json.loads(out))
    assert action.degree == 36
    path = tmp_path / "action.json"
    path.write_text(out)
    code, out, _ = run(capsys, "classify", "--input", str(path))
    report = json.loads(out)
    assert report["polarized_profile"] == "Yes" and report["polarized_q_sq"] == "36"


def test_compose_command(capsys):
    f, g = polarized_pair()
    code, out, _ = run(capsys, "compose", "--json", json.dumps({"f": f.to_json(), "g": g.to_json()}))
    report = json.loads(out)
    assert code == 0 and report["i_norm_bound"] == 5 and report["passing_below_bound"] == [0, 3, 4]
    code, _, err = run(capsys, "compose", "--json", json.dumps({"f": json.loads(H), "g": g.to_json()}))
    assert code == 3 and err


def test_cone_commands(capsys):
    doc = {"cone": {"dim": 2, "generators": [["1", "0"], ["0", "1"]]}, "point": ["-1", "0"],
           "phi": {"rows": 2, "cols": 2, "entries": ["2", "0", "0", "3"]}}
    code, out, _ = run(capsys, "cone-check", "--json", json.dumps(doc))
    report = json.loads(out)
    assert code == 0 and report["membership"] == {"member": False, "separator": ["1", "0"]}
    assert report["pf_lemma"]["certificate"]["h"] == ["1", "2"]
    doc["phi"] = {"rows": 2, "cols": 2, "entries": ["0", "-1", "1", "0"]}
    assert run(capsys, "cone-check", "--json", json.dumps(doc))[0] == 3
    code, out, _ = run(capsys, "orbit-witness", "--json", json.dumps({"phi": doc["phi"] | {
        "entries": ["2", "0", "0", "3"]}, "v": ["1", "1"]}))
    assert code == 0 and json.loads(out)["least_m"] == 2
    code, _, _ = run(capsys, "orbit-witness", "--json", json.dumps({"phi": doc["phi"], "v": ["1", "1"]}))
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ampdyn", "examples", "--case", "9.1", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.count("PASS") == 5
