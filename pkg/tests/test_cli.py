import json

import pytest

from superweyl.cli import run

ID11 = {"sign": "minus", "parity": [0, 1], "gamma": [[1, 0], [0, 1]]}
EX_B = {"sign": "minus", "parity": [1, 1], "gamma": [[1, 0], [1, -1]]}
EX_C = {"sign": "minus", "parity": [0, 1, 1], "gamma": [[1, 3, 0], [1, 0, -1], [1, -1, 1]]}
BAD = {"sign": "minus", "parity": [1], "gamma": [[2]]}


@pytest.fixture
def matrix_file(tmp_path):
    def write(data, name="matrix.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


def test_validate_exit_codes(matrix_file, capsys):
    assert run(["validate", matrix_file(ID11)]) == 0
    assert capsys.readouterr().out == "valid: yes\n"
    assert run(["validate", matrix_file(BAD)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("valid: no")


def test_validate_json(matrix_file, capsys):
    assert run(["--format", "json", "validate", matrix_file(BAD)]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "valid": False,
        "zero_columns": [],
        "clifford_violations": [[1, 1]],
        "sign_violations": [],
    }


def test_datum_golden_text(matrix_file, capsys):
    assert run(["datum", matrix_file(ID11)]) == 0
    assert capsys.readouterr().out == (
        "t[1] = u1\n"
        "t[2] = u2\n"
        "sigma[1] = tau1\n"
        "sigma[2] = tau2\n"
        "mu = +1 +1; +1 -1\n"
        "p = 0 1\n"
        "p' = 1 1\n"
    )


def test_datum_json_round_trip(matrix_file, capsys):
    assert run(["--format", "json", "datum", matrix_file(ID11)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "t": ["u1", "u2"],
        "sigma": [[1, 0], [0, 1]],
        "mu": [[1, 1], [1, -1]],
        "p": [0, 1],
        "p_prime": [1, 1],
    }


def test_support_member_exit_codes(matrix_file, capsys):
    path = matrix_file(EX_C)
    assert run(["support", "member", path, "-g", "2,1,0"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"point": [2, 1, 0], "member": False, "witness": None}
    assert run(["support", "member", path, "-g", "1,2,1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["member"] is True
    assert payload["witness"] == [[1, 1], [2, 1], [3, 1], [2, 1]]


def test_support_member_negative_vector(matrix_file, capsys):
    assert run(["support", "member", matrix_file(EX_B), "-g", "-1,-2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["point"] == [-1, -2]


def test_support_enum_golden(matrix_file, capsys):
    assert run(["support", "enum", matrix_file(EX_B), "--box", "-4:4,-4:4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    points = [tuple(json.loads(line)["point"]) for line in lines]
    assert points == sorted(points)
    assert set(points) == {
        (0, 0), (0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (-1, -1), (1, 2), (-1, -2),
    }
    assert all(json.loads(line)["member"] for line in lines)


def test_support_enum_even_lattice(matrix_file, capsys):
    assert run([
        "support", "enum", matrix_file(EX_B), "--box", "-4:4,-4:4", "--even-lattice",
    ]) == 0
    points = {tuple(json.loads(l)["point"]) for l in capsys.readouterr().out.splitlines()}
    assert points == {(0, 0), (1, 1), (-1, -1)}


def test_phi_and_eval(matrix_file, capsys):
    path = matrix_file(EX_C)
    assert run(["--format", "json", "phi", path, "-i", "1", "--kind", "X"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"column": 1, "kind": "X", "image": "x1*x2*x3"}
    assert run(["--format", "json", "eval", path, "-w", "X1,Y1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["degree"] == [0, 0, 0]
    assert payload["zero"] is False


def test_consistency_exit(matrix_file, capsys):
    assert run(["consistency", matrix_file(ID11)]) == 0
    out = capsys.readouterr().out
    assert "pair(1,2): pass" in out
    assert "all_pass: yes" in out


def test_injectivity_json(matrix_file, capsys):
    assert run([
        "--format", "json", "injectivity", matrix_file(EX_B), "--box", "-3:3,-3:3",
    ]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rank"] == 2
    assert payload["globally_injective"] is True
    assert payload["pass"] is True


def test_lie_check(matrix_file, capsys):
    assert run(["lie", "check", "gl", "1", "1"]) == 0
    out = capsys.readouterr().out
    assert "all_pass: yes" in out
    assert run(["--format", "json", "lie", "check", "osp_odd", "1", "1", "--calibrate"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["all_pass"] is True
    assert payload["calibration"]["f_scale"][-1] == "1/2"
    assert payload["calibration_source"] == "solver"


def test_usage_errors(matrix_file, capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{bad json")
    assert run(["validate", str(broken)]) == 2
    err = capsys.readouterr().err
    assert "line 1" in err and "column" in err
    # wrong vector length
    assert run(["support", "member", matrix_file(EX_B), "-g", "1,2,3"]) == 2
    capsys.readouterr()
    # cap violation
    assert run([
        "support", "enum", matrix_file(EX_B), "--box", "-4:4,-4:4", "--cap", "10",
    ]) == 2
    capsys.readouterr()
    # unknown subcommand
    assert run(["florp"]) == 2


def test_output_is_deterministic(matrix_file, capsys):
    path = matrix_file(EX_C)
    run(["--format", "json", "datum", path])
    first = capsys.readouterr().out
    run(["--format", "json", "datum", path])
    assert capsys.readouterr().out == first
