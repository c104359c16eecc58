import json

import pytest

from nabch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_monomial_text(capsys):
    code, out, _ = run(capsys, "expand", "--degree", "2", "--basis", "monomial")
    assert code == 0
    assert out.strip() == "x + y + 1/2 (xy) - 1/2 (yx)"


def test_expand_primitive_json(capsys):
    code, out, _ = run(capsys, "expand", "--degree", "3", "--basis", "primitive", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert env["version"] == "1"
    assert env["command"] == "expand"
    assert env["parameters"]["degree"] == 3
    coeffs = {t["expr"]: t["coeff"] for t in env["result"]["primitive"]}
    assert coeffs["<x; x,y>"] == "-1/3"
    assert coeffs["Phi(x; y,y)"] == "-1/2"


def test_expand_both_reports_agreement(capsys):
    code, out, _ = run(capsys, "expand", "--degree", "4", "--basis", "both", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert env["result"]["bases_agree"] is True


def test_expand_latex(capsys):
    code, out, _ = run(capsys, "expand", "--degree", "2", "--basis", "monomial", "--format", "latex")
    assert code == 0
    assert "\\frac{1}{2}" in out and "xy" in out


def test_formats_carry_identical_rationals(capsys):
    _, text, _ = run(capsys, "coeff", "--monomial", "(x(xy))")
    _, js, _ = run(capsys, "coeff", "--monomial", "(x(xy))", "--format", "json")
    assert text.strip() == "-1/4"
    assert json.loads(js)["result"]["value"] == "-1/4"


def test_determinism(capsys):
    _, out1, _ = run(capsys, "expand", "--degree", "4", "--basis", "both", "--format", "json")
    _, out2, _ = run(capsys, "expand", "--degree", "4", "--basis", "both", "--format", "json")
    assert out1 == out2


def test_coeff_golden(capsys):
    code, out, _ = run(capsys, "coeff", "--monomial", "((xy)(xy))", "--method", "both")
    assert code == 0
    assert "cuts: -5/24" in out
    assert "series: -5/24" in out
    assert "match: true" in out
    code, out, _ = run(capsys, "coeff", "--monomial", "x")
    assert code == 0 and out.strip() == "1"


def test_coeff_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "coeff", "--monomial", "(x")
    assert code == 2
    assert "position" in err


def test_degree_cap(capsys, monkeypatch):
    code, _, err = run(capsys, "expand", "--degree", "9")
    assert code == 2
    assert "cap" in err
    monkeypatch.setenv("BCH_MAX_DEGREE", "3")
    code, _, err = run(capsys, "expand", "--degree", "4")
    assert code == 2
    # the flag overrides the environment cap
    code, _, _ = run(capsys, "expand", "--degree", "4", "--max-degree", "4")
    assert code == 0
    monkeypatch.setenv("BCH_MAX_DEGREE", "not-a-number")
    code, _, err = run(capsys, "expand", "--degree", "2")
    assert code == 2 and "integer" in err


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "cuts", "--degree", "4")
    assert code == 0
    assert "all checks passed" in out
    assert "FAIL" not in out


def test_check_all_json(capsys):
    code, out, _ = run(capsys, "check", "--suite", "all", "--degree", "3", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert env["result"]["passed"] is True
    assert all(c["passed"] for c in env["result"]["checks"])


@pytest.mark.parametrize("method", ["woon", "fuchs", "nj", "recurrence"])
def test_bernoulli_methods_agree(capsys, method):
    code, out, _ = run(capsys, "bernoulli", "--k", "2", "--method", method)
    assert code == 0
    assert out.strip() == "1/12"


def test_bernoulli_woon_needs_k2(capsys):
    code, _, err = run(capsys, "bernoulli", "--k", "1", "--method", "woon")
    assert code == 2


def test_nj(capsys):
    code, out, _ = run(capsys, "nj", "--tuple", "2,1")
    assert code == 0 and out.strip() == "1/24"
    code, _, _ = run(capsys, "nj", "--tuple", "0,1")
    assert code == 2


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "--n", "2")
    assert code == 0
    assert out.strip() == "1/3 <x; x,y> + 1/6 [[y,x],x]"


def test_log_targets(capsys):
    code, out, _ = run(capsys, "log", "--series", "exp_l", "--degree", "4")
    assert code == 0 and out.strip() == "x"
    code, out, _ = run(capsys, "log", "--series", "1+x", "--degree", "3")
    assert code == 0
    assert "- 1/2 (xx)" in out
    code, out, _ = run(capsys, "log", "--series", "product", "--degree", "2", "--format", "json")
    env = json.loads(out)
    terms = {json.dumps(t["monomial"]): t["coeff"] for t in env["result"]["terms"]}
    assert terms['["x", "y"]'] == "1/2"


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--basis", "nope"])
    assert exc.value.code == 2
