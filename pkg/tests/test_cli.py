import json

import pytest

from bmwlk.cli import main, matrix_from_json, matrix_to_json, parse_l_eq
from bmwlk.lkrep import BMWWord, LKRep, eval_word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "form, n, expected",
    [
        ("r", 5, (1, 1)),
        ("-r^3", 5, (-1, 3)),
        ("1/r^(2n-3)", 5, (1, -7)),
        ("1/r^(n-3)", 5, (1, -2)),
        ("-1/r^(n-3)", 5, (-1, -2)),
        ("1/r^3", 5, (1, -3)),
        ("-1/r", 5, (-1, -1)),
        ("r^(n-3)", 5, (1, 2)),
        ("-r^(n-3)", 5, (-1, 2)),
        ("-r^(2n-3)", 5, (-1, 7)),
        ("1", 3, (1, 0)),
    ],
)
def test_l_eq_forms(form, n, expected):
    assert parse_l_eq(form, n) == expected


def test_relations_exit_codes(capsys):
    assert run(capsys, "relations", "--n", "4")[0] == 0
    code, _, err = run(capsys, "relations", "--n", "4", "--l", "2", "--r", "1")
    assert code == 2 and "violates" in err
    assert run(capsys, "relations", "--n", "1")[0] == 2


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["relations"])
    assert exc.value.code == 2
    assert run(capsys, "check", "bogus", "--n", "4")[0] == 2
    assert run(capsys, "matrix", "--n", "3", "--gen", "x1")[0] == 2
    assert run(capsys, "matrix", "--n", "3", "--gen", "c2,1")[0] == 2
    assert run(capsys, "relations", "--n", "4", "--l", "2")[0] == 2


def test_matrix_json_entry(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "3", "--gen", "g1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["basis"] == ["w_{1,2}", "w_{2,3}", "w_{1,3}"]
    assert obj["entries"][0][0] == {"num": "l^{-1}", "den": "1"}


def test_matrix_json_round_trip(capsys):
    for gen in ("g2", "e2", "c1,3"):
        _, out, _ = run(capsys, "matrix", "--n", "4", "--gen", gen, "--format", "json")
        n, g, mat = matrix_from_json(out)
        assert g == gen
        assert matrix_to_json(mat, n, g) == out


def test_matrix_c13_is_the_word(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "4", "--gen", "c1,3", "--format", "json")
    _, _, mat = matrix_from_json(out)
    assert mat == eval_word(LKRep(4), BMWWord.parse("g2 e1 g2^-1"))


def test_matrix_e2_rank_one(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "4", "--gen", "e2", "--format", "json")
    entries = json.loads(out)["entries"]
    nonzero_rows = [i for i, row in enumerate(entries) if any(e["num"] != "0" for e in row)]
    assert nonzero_rows == [1]


def test_numeric_matrix_json(capsys):
    _, out, _ = run(capsys, "matrix", "--n", "3", "--gen", "g1", "--l", "3", "--r", "2", "--format", "json")
    n, g, mat = matrix_from_json(out)
    assert json.loads(out)["entries"][0][0] == {"num": "1", "den": "3"}
    assert matrix_to_json(mat, n, g) == out


def test_scan_commands(capsys):
    assert run(capsys, "scan", "--n", "4", "--r", "2")[0] == 0
    assert run(capsys, "scan", "--n", "3", "--r", "2", "--conjugate")[0] == 0
    code, out, _ = run(capsys, "scan", "--n", "4", "--r", "2", "--extra-l", "5,7", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,l,r,k_dim,reducible,predicted,agree"
    assert lines[-2:] == ["4,5,2,0,False,False,True", "4,7,2,0,False,False,True"]
    assert run(capsys, "scan", "--n", "4", "--r", "1")[0] == 2


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3", "--r", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["passed"] and len(obj["rows"]) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "thm4", "--n", "5"],
        ["check", "indecomposable", "--n", "4", "--l-eq", "r", "--r", "2"],
        ["check", "indecomposable", "--n", "5", "--l-eq=-r^3", "--r", "2"],
        ["check", "detrec", "--n", "7"],
        ["check", "prop3", "--n", "4"],
        ["check", "prop3", "--n", "4", "--r", "2"],
        ["check", "prop4", "--n", "5"],
        ["check", "prop5", "--n", "5"],
        ["check", "hecke", "--n", "5"],
        ["check", "cijrules", "--n", "5"],
        ["check", "thm5", "--n", "5"],
    ],
)
def test_checks_pass(capsys, argv):
    assert run(capsys, *argv)[0] == 0


def test_failed_check_exits_1(capsys):
    # the printed third vector of the n = 4 case does not satisfy its relations
    code, out, _ = run(capsys, "check", "thm5", "--n", "4")
    assert code == 1 and "FAIL" in out


def test_indecomposable_needs_a_point(capsys):
    assert run(capsys, "check", "indecomposable", "--n", "4")[0] == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "rel.csv"
    assert run(capsys, "relations", "--n", "3", "--format", "csv", "--output", str(path))[0] == 0
    assert path.read_text().startswith("check,params,passed,detail")
