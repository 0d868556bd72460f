import json
import subprocess
import sys
from pathlib import Path

import pytest

from hopfaut.cli import run

GOLDEN = Path(__file__).parent / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_hopf_axioms(capsys):
    code, out, _ = call(capsys, "verify", "hopf-axioms", "--dim", "2", "--max-degree", "5")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["suite"] == "hopf-axioms"


def test_verify_failure_exit_code(capsys):
    code, out, err = call(capsys, "verify", "ef-defect")
    assert code == 3
    assert not json.loads(out)["ok"]
    assert "FAIL" in err


@pytest.mark.parametrize("suite", ["relations-outf2", "inner-trivial", "symfunc-goldens", "dims"])
def test_verify_passing_suites(capsys, suite):
    code, out, _ = call(capsys, "verify", suite)
    assert code == 0, out


def test_schur_of_L2_golden(capsys):
    code, out, _ = call(capsys, "schur", "of-L2", "--lambda", "2,1", "--format", "tsv")
    assert code == 0
    assert out == (GOLDEN / "cli_schur_of_L2_21.tsv").read_text()


def test_quotient_char_golden(capsys):
    code, out, _ = call(capsys, "quotient-char", "--lambda", "4,2", "--degree", "7", "--format", "tsv")
    assert code == 0
    assert out == (GOLDEN / "cli_quotient_char_42_7.tsv").read_text()


def test_schur_subcommands(capsys):
    code, out, _ = call(capsys, "schur", "mult", "--lambda", "1", "--mu", "1")
    assert code == 0
    assert json.loads(out)["terms"] == [{"lambda": [2], "mult": 1}, {"lambda": [1, 1], "mult": 1}]
    code, out, _ = call(capsys, "schur", "wedge2", "--lambda", "1,1")
    assert json.loads(out)["terms"] == [{"lambda": [2, 1, 1], "mult": 1}]
    code, out, _ = call(capsys, "schur", "of-sum", "--lambda", "2,1")
    assert len(json.loads(out)["triples"]) == 6


def test_h1_table_contains_cusp_entry(capsys):
    code, out, _ = call(capsys, "h1-table", "--max-degree", "12")
    assert code == 0
    entries = json.loads(out)["entries"]
    assert {"cokernel_degree": 15, "lambda": [9, 1, 1], "form_kind": "cusp", "weight": 12,
            "multiplicity": 1, "module_degree": 11} in entries


def test_h1_table_tsv_header(capsys):
    _, out, _ = call(capsys, "h1-table", "--max-degree", "6", "--format", "tsv")
    assert out.splitlines()[0] == "cokernel_degree\tlambda\tform_kind\tweight\tmultiplicity\tmodule_degree"


def test_dims(capsys):
    _, out, _ = call(capsys, "dims", "witt", "--dim", "4", "--k", "3")
    assert json.loads(out)["dim"] == 20
    _, out, _ = call(capsys, "dims", "dspace", "--dim", "4", "--s", "1", "--explicit")
    assert json.loads(out)["dim"] == 4
    _, out, _ = call(capsys, "dims", "cyclic", "--dim", "2", "--k", "3")
    assert json.loads(out)["formula"] == 4
    _, out, _ = call(capsys, "dims", "modular", "--weight", "12")
    assert (json.loads(out)["modular"], json.loads(out)["cusp"]) == (2, 1)


def test_act_and_reduce(capsys):
    code, out, _ = call(capsys, "act", "--aut", "eta", "x1 | x2")
    assert code == 0 and json.loads(out)["text"] == "-(x1 | x2) - (x2*x1 | 1)"
    code, out, _ = call(capsys, "quotient-reduce", "x1*x2 | 1")
    data = json.loads(out)
    assert data["text"] == "(x2*x1 | 1)" and not data["in_tilde"]
    code, out, _ = call(capsys, "quotient-reduce", "x1*x2 - x2*x1 | 1")
    assert json.loads(out)["in_tilde"]


def test_hopf_eval(capsys):
    _, out, _ = call(capsys, "hopf-eval", "coproduct", "x1", "--algebra", "nil2")
    assert json.loads(out)["text"] == "(1 | x1) + (x1 | 1)"
    _, out, _ = call(capsys, "hopf-eval", "counit", "3 + x1")
    assert json.loads(out)["text"] == "3"


def test_straighten(capsys):
    _, out, _ = call(capsys, "straighten", "--n", "1", "--k", "1")
    data = json.loads(out)
    assert data["c"] == ["1", "1/2"] and data["d"] == ["1", "-1/2"]


def test_ef_defect_report(capsys):
    _, out, _ = call(capsys, "ef-defect")
    data = json.loads(out)
    assert data["nonzero"] and data["expected_coefficient"] == "24"
    assert data["coefficient"] == "-3/5"


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "quotient-char", "--lambda", "2,1,1", "--degree", "4")[0] == 2
    assert call(capsys, "quotient-char", "--lambda", "2,1", "--degree", "5", "--dim", "2")[0] == 2
    assert call(capsys, "act", "--aut", "twist 1", "x1 | x2")[0] == 2
    assert call(capsys, "schur", "wedge2", "--lambda", "1,2")[0] == 2


def test_deterministic(capsys):
    a = call(capsys, "schur", "of-L2", "--lambda", "3,1")[1]
    b = call(capsys, "schur", "of-L2", "--lambda", "3,1")[1]
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hopfaut", "dims", "modular", "--weight", "4"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["modular"] == 1
