import json

import pytest

from latticebasis.cli import main
from latticebasis.linalg import rank
from latticebasis.matfile import (format_matrix, matrix_from_json, matrix_to_json, parse_matrix)

GENS4 = "2 4\n6 1 2 4\n3 5 4 4\n"
BASIS15 = "2 2\n6 1\n3 3\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="m.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_basis_gens4_json(write, capsys):
    code, out, _ = run(capsys, "basis", write(GENS4), "--verify", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["abs_det"] == "1"
    assert rep["verification"] == "pass"
    assert rep["algorithm"] == "fast"


def test_basis_text_and_basic(write, capsys):
    code, out, _ = run(capsys, "basis", write(GENS4), "--basic", "--verify")
    assert code == 0
    assert "|det|: 1" in out and "verify: pass" in out


def test_one_dimensional(write, capsys):
    code, out, _ = run(capsys, "basis", write("1 2\n12 18\n"), "--json")
    assert json.loads(out)["basis"] in ([["6"]], [["-6"]])


def test_reduce_reports_norms(write, capsys):
    code, out, _ = run(capsys, "basis", write("3 5\n9 -4 7 1 3\n2 8 -5 6 0\n4 4 1 -7 9\n"),
                       "--reduce", "--verify", "--json")
    rep = json.loads(out)
    assert code == 0
    assert "reduced_basis" in rep
    assert int(rep["max_column_sqnorm_reduced"]) >= 1


def test_lowrank_path(write, capsys):
    code, out, _ = run(capsys, "basis", write("3 4\n4 4 2 6\n6 6 3 9\n8 8 4 12\n"),
                       "--verify", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["algorithm"] == "lowrank"
    assert rep["rank"] == 1
    assert rep["verification"] == "pass"


def test_lowrank_never_is_rank_error(write, capsys):
    code, _, err = run(capsys, "basis", write("3 2\n1 2\n2 4\n3 6\n"), "--lowrank", "never")
    assert code == 2
    assert "rank" in err


def test_parse_error(write, capsys):
    assert run(capsys, "basis", write("2 3\n1 2 3\n4 5\n"))[0] == 1
    assert run(capsys, "det", write("2 2\n1 x\n3 4\n"))[0] == 1
    assert run(capsys, "det", "/nonexistent/file")[0] == 1


def test_verify_command(write, capsys):
    A = write(GENS4)
    assert run(capsys, "verify", write("2 2\n1 0\n0 1\n", "s.txt"), A)[0] == 0
    code, out, _ = run(capsys, "verify", write("2 2\n2 0\n0 1\n", "bad.txt"), A, "--json")
    assert code == 3
    assert json.loads(out)["verification"] == "fail"


def test_membership_only(write, capsys):
    code, out, _ = run(capsys, "basis", write(GENS4), "--verify", "--minor-cap", "2", "--json")
    assert code == 0
    assert json.loads(out)["verification"] == "membership-only"


def test_det_frac_enumerate(write, capsys):
    assert run(capsys, "det", write("3 3\n1 0 0\n0 1 0\n0 0 1\n"))[1].strip() == "1"
    f = write(BASIS15)
    assert run(capsys, "frac", f, "2")[1].strip() == "5"
    assert run(capsys, "frac", f, "1")[1].strip() == "15"
    assert run(capsys, "enumerate", f)[1].strip() == "15"
    code, out, _ = run(capsys, "enumerate", f, "--points", "--json")
    assert len(json.loads(out)["points"]) == 15
    assert run(capsys, "frac", f, "3")[0] == 1
    assert run(capsys, "enumerate", f, "--cap", "3")[0] == 2


def test_singular_det_ok_but_frac_fails(write, capsys):
    f = write("2 2\n1 2\n2 4\n")
    assert run(capsys, "det", f)[1].strip() == "0"
    assert run(capsys, "frac", f, "1")[0] == 2


def test_transpose(write, capsys):
    code, out, _ = run(capsys, "basis", write("4 2\n6 3\n1 5\n2 4\n4 4\n"), "--transpose", "--json")
    assert json.loads(out)["abs_det"] == "1"


def test_gen(capsys, tmp_path):
    _, a, _ = run(capsys, "gen", "3", "5", "--seed", "4", "--max-entry", "7")
    _, b, _ = run(capsys, "gen", "3", "5", "--seed", "4", "--max-entry", "7")
    assert a == b
    M = parse_matrix(a)
    assert M.shape == (3, 5) and M.max_norm() <= 7 and rank(M) == 3
    out = tmp_path / "g.txt"
    run(capsys, "gen", "4", "6", "--rank", "2", "-o", str(out))
    assert rank(parse_matrix(out.read_text())) == 2
    assert run(capsys, "gen", "2", "3", "--rank", "5")[0] == 1


def test_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(GENS4))
    code, out, _ = run(capsys, "basis", "-", "--json")
    assert json.loads(out)["abs_det"] == "1"


def test_round_trip_and_big_json():
    text = "# comment\n2   3\n1 -2  3\n%d 0 5\n" % (2 ** 300)
    M = parse_matrix(text)
    assert parse_matrix(format_matrix(M)) == M
    assert format_matrix(parse_matrix(format_matrix(M))) == format_matrix(M)
    blob = json.dumps(matrix_to_json(M))
    assert matrix_from_json(json.loads(blob)) == M
    assert M[1, 0] == 2 ** 300


def test_big_entries_report(write, capsys):
    big = 2 ** 100 + 1
    code, out, _ = run(capsys, "basis", write("1 2\n%d %d\n" % (3 * big, 5 * big)), "--json")
    assert json.loads(out)["basis"] in ([[str(big)]], [[str(-big)]])
