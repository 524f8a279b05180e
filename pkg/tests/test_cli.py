import json
import subprocess
import sys

import pytest

from pcgroups import corpus
from pcgroups.cli import main
from pcgroups.presentation import render

BAD_TEXT = """
p = 3
gens a b c
orders a:3 b:3 c:9
rel [b,a] = c
"""


@pytest.fixture(scope="module")
def ex1_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "ex1.pc"
    path.write_text(render(corpus.example1(3)))
    return str(path)


@pytest.fixture(scope="module")
def ex2_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "ex2.pc"
    path.write_text(render(corpus.example2()))
    return str(path)


@pytest.fixture(scope="module")
def bad_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "bad.pc"
    path.write_text(BAD_TEXT)
    return str(path)


def test_parse_summary(ex1_file, capsys):
    assert main(["parse", ex1_file]) == 0
    out = capsys.readouterr().out
    assert "p 3" in out
    assert "generators [3] a (order 3), b (order 3), c (order 9)" in out
    assert "candidate order p^4 = 81" in out


def test_consistency_pass_and_fail(ex1_file, bad_file, capsys):
    assert main(["consistency", ex1_file]) == 0
    assert "[pass] consistency" in capsys.readouterr().out
    assert main(["consistency", bad_file]) == 1
    out = capsys.readouterr().out
    assert "[fail] consistency" in out and "witness" in out


def test_order_and_element_queries(ex1_file, capsys):
    assert main(["order", ex1_file]) == 0
    assert capsys.readouterr().out.strip() == "81"
    assert main(["nf", ex1_file, "--word", "b*a"]) == 0
    assert capsys.readouterr().out.strip() == "a^1*b^1*c^3"
    assert main(["ord", ex1_file, "--word", "c"]) == 0
    assert capsys.readouterr().out.strip() == "9"
    assert main(["ord", ex1_file, "--word", "[b,a]"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_sub_operations(ex2_file, capsys):
    assert main(["sub", ex2_file, "--gens", "a^2,b^2,c^2", "--op", "omega",
                 "--i", "2"]) == 0
    out = capsys.readouterr().out
    assert "order p^6 = 64" in out
    assert main(["sub", ex2_file, "--gens", "[a,b]"]) == 0
    assert "order p^3 = 8" in capsys.readouterr().out
    assert main(["sub", ex2_file, "--op", "exponent"]) == 0
    assert capsys.readouterr().out.strip() == "32"
    assert main(["sub", ex2_file, "--op", "order"]) == 0
    assert capsys.readouterr().out.strip() == "2048"


def test_sub_option_validation(ex2_file, capsys):
    assert main(["sub", ex2_file, "--op", "omega"]) == 2
    assert "needs --i" in capsys.readouterr().err


def test_pnclass(ex2_file, capsys):
    assert main(["pnclass", ex2_file]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["pnclass", ex2_file, "--gens", "a^2,b^2,c^2", "--op", "omega",
                 "--i", "2"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_chain(ex1_file, ex2_file, capsys):
    assert main(["chain", ex1_file, "--i", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("chain p^")
    assert "[pass] theorem3_chain" in out
    assert main(["chain", ex2_file, "--i", "2"]) == 2
    assert "odd prime" in capsys.readouterr().err


def test_verify_text(ex1_file, capsys):
    assert main(["verify", ex1_file, "--suite", "thm1"]) == 0
    out = capsys.readouterr().out
    assert "[pass] thm1" in out and "mode=exhaustive" in out


def test_verify_json_schema(ex1_file, capsys):
    assert main(["verify", ex1_file, "--format", "json", "--i-max", "2",
                 "--j-max", "2", "--k-max", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"group", "p", "order_log_p", "checks"}
    assert doc["p"] == 3 and doc["order_log_p"] == 4
    names = [c["name"] for c in doc["checks"]]
    assert names[0] == "consistency"
    assert "thm1" in names and "main_odd" in names
    for c in doc["checks"]:
        assert set(c) == {"name", "params", "status", "witnesses", "tested", "ms"}
        assert c["status"] in ("pass", "fail", "expected_fail", "skipped")


def test_verify_json_is_deterministic_modulo_ms(ex1_file, capsys):
    args = ["verify", ex1_file, "--format", "json", "--i-max", "2",
            "--j-max", "2", "--k-max", "2"]
    assert main(args) == 0
    a = json.loads(capsys.readouterr().out)
    assert main(args) == 0
    b = json.loads(capsys.readouterr().out)
    for doc in (a, b):
        for c in doc["checks"]:
            c["ms"] = 0
    assert a == b


def test_verify_inconsistent_input(bad_file, capsys):
    # the full suite reports the failure itself
    assert main(["verify", bad_file]) == 1
    assert "[fail] consistency" in capsys.readouterr().out
    # a single non-consistency suite refuses to run
    assert main(["verify", bad_file, "--suite", "thm1"]) == 2
    assert "inconsistent" in capsys.readouterr().err


def test_verify_mode_flag(ex1_file, capsys):
    assert main(["verify", ex1_file, "--suite", "thm1", "--mode", "sample:500",
                 "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "mode=sample" in out and "sample=500" in out and "seed=3" in out
    assert main(["verify", ex1_file, "--suite", "thm1", "--mode", "bogus"]) == 2


def test_corpus_list_and_emit(capsys):
    assert main(["corpus", "list"]) == 0
    names = capsys.readouterr().out.split()
    assert names == corpus.corpus_names()
    assert main(["corpus", "emit", "example2"]) == 0
    text = capsys.readouterr().out
    from pcgroups.presentation import parse

    assert parse(text) == corpus.example2()
    assert main(["corpus", "emit", "family", "--p", "3", "--alpha", "1",
                 "--beta", "1", "--gamma", "2", "--delta", "1"]) == 0
    capsys.readouterr()
    assert main(["corpus", "emit", "family", "--p", "3"]) == 2
    assert "needs --alpha" in capsys.readouterr().err


def test_missing_file_and_usage_errors(capsys):
    assert main(["order", "/no/such/file.pc"]) == 2
    capsys.readouterr()
    assert main(["bogus-command"]) == 2
    assert main([]) == 2
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_resource_exit_code(ex2_file, capsys):
    assert main(["sub", ex2_file, "--op", "exponent", "--max-elements", "100"]) == 3
    assert "exceeds the element budget" in capsys.readouterr().err


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(render(corpus.example1(3))))
    assert main(["order", "-"]) == 0
    assert capsys.readouterr().out.strip() == "81"


def test_console_script_subprocess(ex1_file):
    res = subprocess.run([sys.executable, "-m", "pcgroups.cli", "order", ex1_file],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "81"
    res = subprocess.run(["pcgroups", "nf", ex1_file, "--word", "b*a"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "a^1*b^1*c^3"
