"""Expression parser and command-line interface."""

import json

import pytest

from localstd import (ParseError, UndeclaredSymbolError, VarCtx, grevlex,
                      neg_grevlex, parse_poly)
from localstd.cli import main


def P(src, variables="x,y", params=""):
    ctx = VarCtx([v for v in variables.split(",") if v],
                 [p for p in params.split(",") if p])
    return parse_poly(src, ctx)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def test_parse_greuel_input():
    f = P("x^5+y^5+x^2*y^2")
    assert f.total_degree() == 5 and len(f) == 3


def test_parse_empty_is_error():
    with pytest.raises(ParseError):
        P("")
    with pytest.raises(ParseError):
        P("   ")


def test_parse_rational_prefactor():
    assert P("(1/2 + 1/3*x)*x^2", "x") == P("1/2*x^2 + 1/3*x^3", "x")


def test_parse_undeclared_symbol():
    with pytest.raises(UndeclaredSymbolError):
        P("x + q")


def test_parse_rejects_negative_and_symbolic_exponents():
    with pytest.raises(ParseError):
        P("x^-2")
    with pytest.raises(ParseError):
        P("x^y")


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ParseError):
        P("2x")


def test_parse_unary_minus_binds_below_power():
    assert P("-x^2", "x") == P("0 - x^2", "x")


def test_parse_reports_column():
    with pytest.raises(ParseError) as err:
        P("x + ?")
    assert "column 5" in str(err.value)


def test_print_parse_round_trip():
    corpus = [
        ("x^5+y^5+x^2*y^2", "x,y", ""),
        ("x^3 + y^4 + x*y^2 + t*x^2", "x,y", "t"),
        ("(1 - 4*t)*y^3 + 3*y*x^2", "x,y", "t"),
        ("y^2*z + z^5 + v0*y*z + v1*y^2 + v2*z^2", "y,z", "v0,v1,v2"),
        ("-x + 1/2", "x", ""),
        ("2*t*x + y^2 + 3*x^2", "x,y", "t"),
    ]
    for src, variables, params in corpus:
        p = P(src, variables, params)
        for order in (grevlex(), neg_grevlex()):
            assert P(p.to_str(order), variables, params) == p


# ---------------------------------------------------------------------------
# CLI: results and exit codes
# ---------------------------------------------------------------------------

def test_cli_milnor_number(capsys):
    rc = main(["milnor", "--vars", "x,y", "x^5+y^5+x^2*y^2"])
    assert rc == 0
    assert "dimension: 11" in capsys.readouterr().out


def test_cli_non_isolated_exit_4(capsys):
    rc = main(["poly-milnor", "--vars", "x,y,z", "x^2*z^2+y^2*z^2+x^2*y^2"])
    assert rc == 4
    assert "non-isolated critical points" in capsys.readouterr().err


def test_cli_parametric_milnor_json(capsys):
    rc = main(["milnor", "--vars", "x,y", "--params", "t", "--json",
               "x^3+y^4+x*y^2+t*x^2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    res = doc["result"]
    assert res["dimension"] == 3
    assert set(res["genericity_assumptions"]) == {"t", "4*t - 1"}
    assert res["quotient_basis"] == ["y^2", "y", "1"]


def test_cli_order_guards_exit_3(capsys):
    assert main(["milnor", "--vars", "x,y", "--order", "grevlex", "x^2+y^2"]) == 3
    assert main(["poly-milnor", "--vars", "x,y", "--order", "neg-grevlex",
                 "x^2+y^2"]) == 3
    assert main(["poly-milnor", "--vars", "x,y", "--order",
                 "weighted:1,-1:lex", "x^2+y^2"]) == 3
    capsys.readouterr()


def test_cli_bad_order_spelling_exit_3(capsys):
    assert main(["milnor", "--vars", "x,y", "--order", "sorcery", "x^2+y^2"]) == 3
    capsys.readouterr()


def test_cli_parse_error_exit_2(capsys):
    assert main(["milnor", "--vars", "x,y", "x^5 + "]) == 2
    assert main(["milnor", "--vars", "x,y", "x + undeclared"]) == 2
    assert main(["parse", "--vars", "x,y", ""]) == 2
    capsys.readouterr()


def test_cli_budget_exit_5(capsys):
    rc = main(["milnor", "--vars", "x,y", "--step-budget", "1",
               "x^5+y^5+x^2*y^2"])
    assert rc == 5
    capsys.readouterr()


def test_cli_parse_echo(capsys):
    rc = main(["parse", "--vars", "x,y", "x^2 + -1*y + x^2"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "2*x^2 - y"


def test_cli_groebner_and_std_basis(capsys):
    rc = main(["groebner", "--vars", "x,y", "x^2 - y; x*y - 1"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "leading monomials:" in out
    rc = main(["std-basis", "--vars", "x,y", "x + x^2; y^3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "x" in out and "y^3" in out


def test_cli_default_orders_match_paper(capsys):
    rc = main(["milnor", "--vars", "x,y", "--json", "x^2+y^4"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0 and doc["result"]["order"] == "neg-grevlex"
    rc = main(["poly-milnor", "--vars", "x,y", "--json", "x^2+y^4"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0 and doc["result"]["order"] == "grevlex"


def test_cli_fused_accepts_two_orders(capsys):
    rc = main(["tyurina-fused", "--vars", "x,y", "--order", "neg-lex",
               "--order", "lex", "--json", "x^3+y^4+x*y^2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["global_part"]["dimension"] == 4
    assert doc["result"]["local_part"]["dimension"] == 4


def test_cli_json_is_deterministic(capsys):
    args = ["milnor", "--vars", "x,y", "--params", "t", "--json",
            "x^3+y^4+x*y^2+t*x^2"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second


def test_cli_classify(capsys):
    rc = main(["classify", "--vars", "y,z", "y^2*z + z^5"])
    assert rc == 0
    assert "D6" in capsys.readouterr().out


def test_cli_deform(capsys):
    rc = main(["deform", "--vars", "y,z", "--json", "y^2 + z^4"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["tyurina"] == 3
    assert doc["result"]["monomials"] == ["1", "z", "z^2"]


def test_cli_milnor_orlik(capsys):
    rc = main(["milnor-orlik", "--vars", "y,z", "y^2 + z^8"])
    assert rc == 0
    assert "mu = 7" in capsys.readouterr().out
    rc = main(["milnor-orlik", "--vars", "x,y", "x^3 + y^4 + x*y^2"])
    assert rc == 1
    capsys.readouterr()


def test_cli_strata_and_verify(capsys):
    rc = main(["strata", "D6", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    names = [s["name"] for s in doc["result"]]
    assert "W2" in names and "V0^2" in names
    rc = main(["verify-stratum", "E6", "V&V0^2", "--witness", "a=2", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["ok"] is True
    assert doc["result"]["mu"] == 5 and doc["result"]["class"] == "D5"
    rc = main(["verify-stratum", "E6", "W2", "--seed", "3", "--json"])
    assert rc == 0
    capsys.readouterr()


def test_cli_adjacency(capsys):
    rc = main(["adjacency", "a7-from-e8", "--t", "1,-1", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["target"] == "A7"
    assert all(chk["class"] == "A7" and chk["mu"] == 7
               for chk in doc["result"]["checks"])


def test_cli_file_input(tmp_path, capsys):
    path = tmp_path / "poly.txt"
    path.write_text("x^2 + y^3")
    rc = main(["milnor", "--vars", "x,y", "--file", str(path)])
    assert rc == 0
    assert "dimension: 2" in capsys.readouterr().out


def test_cli_env_budget(monkeypatch, capsys):
    monkeypatch.setenv("LOCALSTD_STEP_BUDGET", "1")
    rc = main(["milnor", "--vars", "x,y", "x^5+y^5+x^2*y^2"])
    assert rc == 5
    capsys.readouterr()
