import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from grational.cli import main
from grational.gseq import g_fun_eval
from grational.hilbert import fourier_coefficients, inv_sqrt
from grational.measure import build_quadrature


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_eval_quarter_exact(capsys):
    status, out, _ = run(capsys, "eval", "--seq", "G", "--n", "6", "--z", "0.25")
    assert status == 0
    assert rows(out) == [["z", "value"], ["1/4", "7/64"]]


def test_eval_g_ones(capsys):
    status, out, _ = run(capsys, "eval", "--seq", "g", "--n", "0", "--z", "1,2,3")
    assert status == 0
    assert [float(r[1]) for r in rows(out)[1:]] == [1.0, 1.0, 1.0]


def test_eval_fibonacci(capsys):
    status, out, _ = run(capsys, "eval", "--seq", "G", "--n", "10", "--z", "-1", "--exact")
    assert status == 0 and rows(out)[1] == ["-1", "89"]


def test_eval_float_mode_round_trips(capsys):
    status, out, _ = run(capsys, "eval", "--seq", "g", "--n", "5", "--z", "0.3", "--z", "2.5", "--float")
    assert status == 0
    body = rows(out)[1:]
    for (z, v), zf in zip(body, (0.3, 2.5)):
        assert float(z) == zf and float(v) == g_fun_eval(5, zf)


def test_eval_domain_error_exits_2(capsys):
    status, out, err = run(capsys, "eval", "--seq", "g", "--n", "3", "--z", "0.1", "--float")
    assert status == 2 and out == ""
    assert "1/4" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "eval", "--seq", "G", "--n", "2", "--z", "abc")[0] == 2
    assert run(capsys, "project", "--f", "nope", "--order", "2")[0] == 2
    assert run(capsys, "project", "--f", "inv_sqrt", "--order", "2", "--grid", "0.1:0.3:5")[0] == 2
    assert run(capsys, "interpolate", "1=1", "1=2")[0] == 2
    assert run(capsys, "interpolate", "oops")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["nodes", "--N", "0"])
    assert info.value.code == 2
    capsys.readouterr()


def test_project_order_8_error(capsys):
    status, out, err = run(capsys, "project", "--f", "inv_sqrt", "--order", "8", "--emit", "errors")
    assert status == 0
    reported = float(err.split(":")[1])
    assert abs(reported - 0.013671986780782784) < 1e-9
    last = rows(out)[-1]
    assert last[0] == "8" and float(last[1]) == reported
    assert abs(float(last[2]) - 0.013671986780782784) < 1e-9


def test_project_g0_trivial(capsys):
    status, out, err = run(capsys, "project", "--f", "g0", "--order", "0", "--emit", "coeffs")
    assert status == 0
    body = rows(out)
    assert body[0] == ["n", "coefficient"] and len(body) == 2
    assert abs(float(body[1][1]) - 1) < 1e-13
    assert float(err.split(":")[1]) < 1e-7


def test_project_curves_match_direct_evaluation(capsys):
    status, out, _ = run(capsys, "project", "--f", "inv_sqrt", "--order", "11", "--grid", "0.25:0.4:200",
                         "--format", "csv")
    assert status == 0
    body = rows(out)
    assert body[0] == ["z", "f", "approx", "abs_error"] and len(body) == 201
    coeffs = fourier_coefficients(inv_sqrt, 11, build_quadrature(64)).coeffs
    for z, f, approx, err in body[1:]:
        z = float(z)
        direct = sum(c * g_fun_eval(2 * n, z) for n, c in enumerate(coeffs))
        assert abs(float(approx) - direct) < 1e-12
        assert float(f) == pytest.approx(1 / math.sqrt(z), rel=1e-15)
        assert float(err) == pytest.approx(abs(float(f) - float(approx)), abs=1e-15)
    assert float(body[1][0]) == 0.25 and float(body[-1][0]) == 0.4


def test_project_emit_all_json(capsys):
    status, out, _ = run(capsys, "--format", "json", "project", "--f", "inv_z", "--order", "3", "--emit", "all",
                         "--grid", "1:2:3")
    assert status == 0
    data = json.loads(out)
    assert [d["schema"] for d in data] == ["coeff_table", "error_table", "eval_table"]
    assert all("rows" in d for d in data)
    assert len(data[0]["rows"]) == 4 and len(data[2]["rows"]) == 3


def test_interpolate_worked_example(capsys):
    status, out, err = run(capsys, "interpolate", "1=2", "2=1", "3=1.5", "4=1")
    assert status == 0
    assert [r[1] for r in rows(out)[1:]] == ["811/6", "1097/4", "1147/6", "58"]
    assert "max residual: 0" in err


@pytest.mark.parametrize(
    "pairs, expected",
    [(["1=1", "2=1", "3=1", "4=1"], ["1", "0", "0", "0"]), (["1=1"], ["1"])],
)
def test_interpolate_trivial(capsys, pairs, expected):
    status, out, _ = run(capsys, "interpolate", *pairs)
    assert status == 0
    assert [r[1] for r in rows(out)[1:]] == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--suite", "orthonormality", "--N", "64"],
        ["check", "--suite", "identities"],
        ["check", "--suite", "parseval", "--m", "1", "--terms", "2000"],
        ["check", "--suite", "sturm_liouville"],
        ["check", "--suite", "genfun"],
    ],
)
def test_check_suites_pass(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 0
    body = rows(out)
    assert body[0] == ["check", "deviation", "tolerance", "passed"]
    assert all(r[3] == "1" for r in body[1:])
    assert "checks passed" in err


def test_orthonormality_report_size(capsys):
    _, out, _ = run(capsys, "check", "--suite", "orthonormality")
    assert len(rows(out)) - 1 >= 21 * 21


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--suite", "orthonormality", "--N", "8"],
        ["check", "--suite", "orthonormality", "--tol", "1e-30"],
        ["check", "--suite", "parseval", "--terms", "1"],
    ],
)
def test_check_failure_exits_1(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == 1
    assert any(r[3] == "0" for r in rows(out)[1:])


def test_nodes_command(capsys):
    status, out, _ = run(capsys, "nodes", "--N", "16")
    body = rows(out)
    rule = build_quadrature(16)
    assert status == 0 and body[0] == ["z", "weight"]
    assert np.array_equal([float(r[0]) for r in body[1:]], rule.nodes)
    assert np.array_equal([float(r[1]) for r in body[1:]], rule.weights)


def test_global_flags_before_or_after_subcommand(capsys):
    a = run(capsys, "--N", "12", "nodes")[1]
    b = run(capsys, "nodes", "--N", "12")[1]
    assert a == b and len(rows(a)) == 13


def test_out_file(tmp_path, capsys):
    path = tmp_path / "out.csv"
    status, out, _ = run(capsys, "eval", "--seq", "G", "--n", "4", "--z", "1/2", "--out", str(path))
    assert status == 0 and out == ""
    data = path.read_bytes()
    assert data == b"z,value\n1/2,-1/4\n"


def test_csv_is_byte_identical_across_runs(capsys):
    argv = ["project", "--f", "inv_sqrt", "--order", "6", "--emit", "all"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second and "\r" not in first


def test_table_round_trip(tmp_path, capsys):
    for N in (24, 64):
        status, out, _ = run(capsys, "project", "--f", "inv_sqrt", "--order", "9", "--grid", "nodes", "--N", str(N))
        assert status == 0
        table = tmp_path / f"table{N}.csv"
        table.write_text(out)
        ref = rows(run(capsys, "project", "--f", "inv_sqrt", "--order", "9", "--N", str(N), "--emit", "coeffs")[1])
        status, out2, _ = run(capsys, "project", "--table", str(table), "--order", "9", "--N", str(N),
                              "--emit", "coeffs")
        assert status == 0
        got = rows(out2)
        for (_, a), (_, b) in zip(ref[1:], got[1:]):
            assert abs(float(a) - float(b)) < 1e-12


def test_table_rejects_wrong_nodes(tmp_path, capsys):
    status, out, _ = run(capsys, "nodes", "--N", "8")
    table = tmp_path / "t.csv"
    table.write_text(out)
    assert run(capsys, "project", "--table", str(table), "--order", "2", "--N", "9")[0] == 2
    shifted = tmp_path / "s.csv"
    lines = out.splitlines()
    z, w = lines[1].split(",")
    lines[1] = f"{float(z) * 1.001!r},{w}"
    shifted.write_text("\n".join(lines) + "\n")
    assert run(capsys, "project", "--table", str(shifted), "--order", "2", "--N", "8")[0] == 2
    bad = tmp_path / "b.csv"
    bad.write_text("z,f\n0.3,abc\n")
    assert run(capsys, "project", "--table", str(bad), "--order", "2", "--N", "1")[0] == 2
    assert run(capsys, "project", "--table", str(tmp_path / "missing.csv"), "--order", "2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grational", "eval", "--seq", "G", "--n", "9", "--z", "1/4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "z,value\n1/4,5/256\n"
