import json
import subprocess
import sys

import pytest

from rankmetric.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field_report(capsys):
    code, out, _ = run(capsys, "field", "--p", "2", "--m", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["order"] == 4 and rep["self_dual_admissible"] is True


def test_non_prime_is_usage_error(capsys):
    code, _, err = run(capsys, "field", "--p", "4")
    assert code == 2 and "not prime" in err


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["basis"])
    assert exc.value.code == 2


def test_gabidulin_new(capsys):
    code, out, _ = run(capsys, "gabidulin", "new", "--p", "2", "--m", "2", "--k", "1", "--basis", "self-dual")
    rep = json.loads(out)
    assert code == 0
    assert rep["d_r"] == 2 and rep["lcd"]["value"] and rep["mrd"]["value"]


def test_gabidulin_check_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "gabidulin", "new", "--p", "3", "--m", "2", "--k", "1", "--basis", "almost")
    path = tmp_path / "code.json"
    path.write_text(json.dumps(json.loads(out)["code"]))
    code, out, _ = run(capsys, "gabidulin", "check", "--code", str(path))
    rep = json.loads(out)
    assert code == 0 and rep["lcd"]["value"] is False and rep["hull_dim"] == 1


def test_basis_commands(capsys):
    _, out, _ = run(capsys, "basis", "find-self-dual", "--p", "3", "--m", "2")
    assert json.loads(out)["exists"] is False
    _, out, _ = run(capsys, "basis", "find-almost", "--p", "3", "--m", "2")
    assert json.loads(out)["a"] == 2
    code, _, _ = run(capsys, "basis", "find-almost", "--p", "2", "--m", "2")
    assert code == 2
    _, out, _ = run(capsys, "basis", "dual", "--p", "2", "--m", "2")
    assert json.loads(out)["pairing"] == [[1, 0], [0, 1]]


def test_delsarte_expand_and_check(capsys, tmp_path):
    out_file = tmp_path / "exp.json"
    code, _, _ = run(capsys, "delsarte", "expand", "--p", "2", "--m", "3", "--k", "1", "--s", "2",
                     "--out", str(out_file))
    rep = json.loads(out_file.read_text())
    assert code == 0 and rep["dim"] == 6 and rep["lcd"]["value"] and rep["mrd"]["value"] is True
    code, out, _ = run(capsys, "delsarte", "check", "--code", json.dumps(rep["code"]))
    assert json.loads(out)["dim"] == 6


def test_anticode(capsys):
    _, out, _ = run(capsys, "delsarte", "anticode", "--p", "2", "--n", "2", "--m", "2", "--U", "[[1,0]]")
    rep = json.loads(out)
    assert (rep["dim"], rep["optimal"], rep["criterion"], rep["lcd"]["value"]) == (2, True, False, True)


def test_csv_report(capsys):
    _, out, _ = run(capsys, "field", "--p", "3", "--m", "2", "--format", "csv")
    assert out.splitlines()[0] == "key,value"


def test_suite_run_exit_codes(capsys, tmp_path):
    ok = json.dumps({"towers": [[2, 1, 2]], "anticode_spaces": [], "cartesian_s": [1]})
    code, out, _ = run(capsys, "suite", "run", "--config", ok)
    assert code == 0 and out.count("\n") > 5
    bad = json.dumps({"towers": [[3, 1, 2]], "anticode_spaces": [], "cartesian_s": [1]})
    target = tmp_path / "certs.ndjson"
    code, _, _ = run(capsys, "suite", "run", "--config", bad, "--out", str(target))
    assert code == 1
    lines = [json.loads(x) for x in target.read_text().splitlines()]
    assert any(c["verdict"] == "FAIL" for c in lines)
    code, _, _ = run(capsys, "suite", "run", "--config", json.dumps({"towers": [[6, 1, 2]]}))
    assert code == 2
    code, _, _ = run(capsys, "suite", "run", "--config", "not-json")
    assert code == 2


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "rankmetric.cli", "field", "--p", "5", "--m", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["order"] == 25
