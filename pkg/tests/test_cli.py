import json
import subprocess
import sys

import pytest

from elemop import Matrix
from elemop.cli import main
from elemop.jsonio import dumps, matrix_to_obj, operator_to_obj
from elemop.operators import make_multiplication, make_v_operator

J2 = Matrix([[0, 1], [0, 0]])
I2 = Matrix.identity(2)
FAMILY_A = Matrix([[1, 2, 1], [3, 0, 1], [0, 0, 3]])
FAMILY_B = Matrix([[1, 2, 0], [3, 0, 0], [0, 0, 3]])


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def matrix_arg(m):
    return json.dumps(matrix_to_obj(m))


def operator_arg(op):
    return json.dumps(operator_to_obj(op))


def test_apply(capsys):
    op = make_v_operator(J2, Matrix([[0, 0], [1, 0]]))
    e11 = Matrix([[1, 0], [0, 0]])
    status, out, _ = run_cli(capsys, "apply", "--op", operator_arg(op), "--x", matrix_arg(e11))
    assert status == 0
    assert json.loads(out) == matrix_to_obj(Matrix([[0, 0], [0, -1]]))


def test_superop(capsys):
    op = make_multiplication(J2, I2)
    status, out, _ = run_cli(capsys, "superop", "--op", operator_arg(op))
    assert status == 0
    doc = json.loads(out)
    assert doc["rows"] == doc["cols"] == 4


def test_nilpotent_matrix_and_operator(capsys):
    status, out, _ = run_cli(capsys, "nilpotent", "--matrix", matrix_arg(J2))
    assert status == 0
    assert json.loads(out) == {
        "nilpotent": True,
        "index": 2,
        "witness": {"row": 0, "col": 1, "value": "1"},
    }
    status, out, _ = run_cli(
        capsys, "nilpotent", "--op", operator_arg(make_multiplication(J2, I2))
    )
    assert status == 0
    assert json.loads(out)["nilpotent"] is True


def test_nilpotent_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(dumps(matrix_to_obj(J2)))
    status, out, _ = run_cli(capsys, "nilpotent", "--matrix", str(path))
    assert status == 0 and json.loads(out)["index"] == 2


def test_check_theorem_21(capsys):
    status, out, _ = run_cli(
        capsys, "check", "--theorem", "2.1", "--a", matrix_arg(J2), "--b", matrix_arg(I2)
    )
    assert status == 0
    doc = json.loads(out)
    assert doc["hypotheses_hold"] and doc["conclusion"]["nilpotent"]


def test_check_theorem_22_takes_tuples(capsys):
    n = FAMILY_A - FAMILY_B
    status, out, _ = run_cli(
        capsys,
        "check", "--theorem", "2.2",
        "--a", matrix_arg(n), matrix_arg(-FAMILY_B),
        "--b", matrix_arg(FAMILY_B), matrix_arg(n),
    )
    assert status == 0
    doc = json.loads(out)
    assert doc["hypotheses_hold"] and doc["conclusion"]["nilpotent"]


def test_check_theorem_23_reports_shifts(capsys):
    status, out, _ = run_cli(
        capsys, "check", "--theorem", "2.3",
        "--a", matrix_arg(FAMILY_A), "--b", matrix_arg(FAMILY_B),
    )
    assert status == 0  # hypotheses fail but the result is consistent
    doc = json.loads(out)
    assert not doc["hypotheses_hold"]
    assert doc["conclusion"]["nilpotent"]
    assert doc["lambda"] is None and doc["mu"] is None


def test_check_rejects_tuple_arguments_for_single_criteria(capsys):
    status, _, err = run_cli(
        capsys, "check", "--theorem", "2.1",
        "--a", matrix_arg(J2), matrix_arg(J2), "--b", matrix_arg(I2),
    )
    assert status == 2 and "exactly one" in err


def test_examples_31(capsys):
    status, out, _ = run_cli(capsys, "examples", "--which", "3.1")
    assert status == 0
    doc = json.loads(out)
    assert doc["S_cubed_plus_S_zero"] is True
    assert doc["V_not_nilpotent"] is True


def test_examples_32_with_params(capsys):
    status, out, _ = run_cli(capsys, "examples", "--which", "3.2", "--params", "1,2,3,0,3")
    assert status == 0
    doc = json.loads(out)
    assert doc["V_nilpotent"] is True and doc["no_shift_A"] is True


def test_examples_32_bad_params_exit_2(capsys):
    status, _, err = run_cli(capsys, "examples", "--which", "3.2", "--params", "1,1,3,0,3")
    assert status == 2 and "violated" in err
    status, _, err = run_cli(capsys, "examples", "--which", "3.2", "--params", "1,2,3")
    assert status == 2 and "five" in err


def test_sweep_small_random(capsys):
    status, out, _ = run_cli(
        capsys, "sweep", "--theorem", "2.2", "--dim", "2", "--trials", "5", "--seed", "3"
    )
    assert status == 0
    doc = json.loads(out)
    assert doc["violations"] == [] and doc["instances_tested"] == 10


def test_sweep_identical_invocations_are_byte_identical(capsys):
    argv = ["sweep", "--theorem", "2.3", "--dim", "2", "--trials", "4", "--seed", "11"]
    status1, out1, _ = run_cli(capsys, *argv)
    status2, out2, _ = run_cli(capsys, *argv)
    assert status1 == status2 == 0
    assert out1 == out2


def test_sweep_21_requires_dim_2(capsys):
    status, _, err = run_cli(capsys, "sweep", "--theorem", "2.1", "--dim", "3")
    assert status == 2 and "--dim 2" in err


def test_search_finds_family_witnesses(capsys):
    status, out, _ = run_cli(
        capsys, "search", "--target", "2.3", "--dim", "3", "--trials", "4", "--seed", "3"
    )
    assert status == 0
    doc = json.loads(out)
    assert doc["converse_failures"]
    assert doc["violations"] == []


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    status, out, _ = run_cli(
        capsys, "nilpotent", "--matrix", matrix_arg(J2), "-o", str(out_path)
    )
    assert status == 0 and out == ""
    assert json.loads(out_path.read_text())["nilpotent"] is True


def test_emitted_documents_reparse(capsys):
    _, out, _ = run_cli(capsys, "superop", "--op", operator_arg(make_multiplication(J2, I2)))
    from elemop.jsonio import matrix_from_obj

    assert matrix_from_obj(json.loads(out)).shape == (4, 4)


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nilpotent"])  # neither --matrix nor --op
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--theorem", "7.7"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["examples", "--which", "3.1", "--frobnicate"])
    assert exc.value.code == 2


def test_parse_errors_exit_2(capsys):
    status, _, err = run_cli(capsys, "nilpotent", "--matrix", "{not json")
    assert status == 2 and "error:" in err
    status, _, err = run_cli(capsys, "nilpotent", "--matrix", "/nonexistent/m.json")
    assert status == 2
    status, _, err = run_cli(
        capsys, "nilpotent", "--matrix", '{"rows": 2, "cols": 2, "entries": [["1"]]}'
    )
    assert status == 2


def test_sweep_21_dispatches_to_exhaustive(capsys, monkeypatch):
    import elemop.cli as cli_module
    from elemop.lab import SweepReport

    calls = []

    def fake_exhaustive():
        calls.append("2.1")
        return SweepReport(theorem="2.1", mode="exhaustive", config={"dim": 2})

    monkeypatch.setattr(cli_module.lab, "sweep_thm21_exhaustive", fake_exhaustive)
    status, out, _ = run_cli(capsys, "sweep", "--theorem", "2.1", "--dim", "2")
    assert status == 0 and calls == ["2.1"]
    assert json.loads(out)["mode"] == "exhaustive"


def test_sweep_11_exhaustive_flag(capsys, monkeypatch):
    import elemop.cli as cli_module
    from elemop.lab import SweepReport

    monkeypatch.setattr(
        cli_module.lab,
        "sweep_fong_sourour_exhaustive",
        lambda: SweepReport(theorem="1.1", mode="exhaustive", config={"dim": 2}),
    )
    status, out, _ = run_cli(capsys, "sweep", "--theorem", "1.1", "--dim", "2", "--exhaustive")
    assert status == 0 and json.loads(out)["mode"] == "exhaustive"
    status, _, err = run_cli(capsys, "sweep", "--theorem", "2.2", "--exhaustive")
    assert status == 2 and "--exhaustive" in err


def test_negative_seed_exits_2(capsys):
    status, _, err = run_cli(
        capsys, "sweep", "--theorem", "2.2", "--trials", "1", "--seed", "-4"
    )
    assert status == 2 and "seed" in err


def test_checked_property_failure_exits_1(capsys, monkeypatch):
    import elemop.cli as cli_module
    from elemop.lab import SweepReport

    def fake_sweep(theorem, config, trials):
        return SweepReport(
            theorem=theorem, mode="random", config=config.to_obj(),
            instances_tested=1, violations=[{"reason": "forced"}],
        )

    monkeypatch.setattr(cli_module.lab, "sweep_thm", fake_sweep)
    status, out, _ = run_cli(capsys, "sweep", "--theorem", "2.2", "--trials", "1")
    assert status == 1
    assert json.loads(out)["passed"] is False


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "elemop.cli", "examples", "--which", "3.1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["S_cubed_plus_S_zero"] is True
