import pytest

from blockrep import cli as cli_module
from blockrep.certify import Certification, Violation
from blockrep.semigroup import InternalInconsistency


Z2 = "2\n0 1\n1 0\n"
NULL2 = "2\n1 1\n1 1\nlabels: a 0\n"


def test_analyze_table(cli, write):
    code, out, _ = cli("analyze", "--table", write("z2.tbl", Z2), "--format", "structured")
    assert code == 0
    assert out["varieties"]["BG"] is True
    assert out["vagner_preston"]["injective"] is True
    assert out["semigroup"]["name"] == "z2"


def test_analyze_text(cli):
    code, out, _ = cli("analyze", "--example", "B2")
    assert code == 0
    assert "block-group: yes" in out
    assert "e11↦e22" in out


def test_certify_table(cli, write):
    code, out, _ = cli("certify", "--table", write("null2.tbl", NULL2), "--format", "structured")
    assert code == 0
    assert out["certified"] == out["total"] == 1
    assert out["results"][0]["ok"]


def test_certify_all_orders(cli):
    code, out, _ = cli("certify", "--all-orders", "3")
    assert code == 0
    assert "certified 122/122" in out


def test_certify_corpus(cli):
    code, out, _ = cli("certify", "--corpus", "--format", "structured")
    assert code == 0
    assert out["total"] == len(out["results"])


def test_certify_failure_exits_1(cli, monkeypatch):
    def failing(sg, settings):
        return Certification(sg.name, sg.order, True, ("fake",), (Violation("fake", "nope"),))

    monkeypatch.setattr(cli_module, "certify", failing)
    code, out, _ = cli("certify", "--example", "Z2")
    assert code == 1
    assert "FAIL Z2" in out


def test_inconsistency_exits_1(cli, monkeypatch):
    def inconsistent(sg, settings):
        raise InternalInconsistency("two computations disagree")

    monkeypatch.setattr(cli_module, "certify", inconsistent)
    code, _, err = cli("certify", "--example", "Z2")
    assert code == 1
    assert "disagree" in err


def test_check_bg(cli):
    code, out, _ = cli("check-bg", "--example", "left-zero2", "--format", "structured")
    assert code == 0
    assert out == {"semigroup": "left-zero2", "block_group": False, "witness": {"kind": "L", "e": "a", "f": "b"}}


@pytest.mark.parametrize("command", ["vp", "munn"])
def test_representation_needs_block_group(cli, command):
    code, _, err = cli(command, "--example", "T2")
    assert code == 2
    assert "block-group" in err


def test_munn(cli):
    code, out, _ = cli("munn", "--example", "B2", "--format", "structured")
    assert code == 0
    assert out["representation"]["maps"]["e12"] == "{0↦0, e11↦e22}"


def test_vp(cli):
    code, out, _ = cli("vp", "--example", "monogenic-a4=a2")
    assert code == 0
    assert "kernel: {{a,a3},{a2}}" in out


def test_congruences(cli):
    code, out, _ = cli("congruences", "--example", "monogenic-a4=a2", "--format", "structured")
    assert code == 0
    assert out["oracles"]["largest_regular_separating"]["congruence"] == "{{a,a3},{a2}}"


def test_congruences_skipped(cli):
    code, out, _ = cli("congruences", "--example", "B2", "--max-order", "2")
    assert code == 0
    assert "skipped" in out


def test_variety(cli):
    code, out, _ = cli("variety", "--example", "chain2", "--identity", "x^w = y^w", "--format", "structured")
    assert code == 0
    assert out["holds"] is False
    assert out["counterexample"]["assignment"] == {"x": "0", "y": "1"}


@pytest.mark.parametrize(
    "argv",
    [
        ["variety", "--example", "Z2", "--identity", "x y z w = w z y x"],
        ["variety", "--example", "Z2", "--identity", "x +"],
        ["analyze", "--example", "nonexistent"],
        ["analyze", "--table", "/nonexistent/table.tbl"],
    ]
)
def test_input_errors_exit_2(cli, argv):
    code, _, err = cli(*argv)
    assert code == 2
    assert err.startswith("error:")


def test_variable_cap_flag(cli):
    code, out, _ = cli("variety", "--example", "Z2", "--identity", "x y z w = w z y x", "--variable-cap", "4")
    assert code == 0
    assert "yes" in out


@pytest.mark.parametrize(
    "text",
    [
        "2\n1 0\n0 0\n",
        "2\n0 1\n",
        "2\n0 5\n1 0\n",
    ]
)
def test_bad_tables_exit_2(cli, write, text):
    code, _, _ = cli("analyze", "--table", write("bad.tbl", text))
    assert code == 2


def test_syn(cli, write):
    dfa = "states 2\nalphabet a\ninitial 0\naccepting 0\ntrans 0 a 1\ntrans 1 a 0\n"
    code, out, _ = cli("syn", "--dfa", write("even.dfa", dfa))
    assert code == 0
    assert out == "2\n0 1\n1 0\nlabels: 1 a\n"


def test_syn_builtin_report(cli):
    code, out, _ = cli("syn", "--dfa", "(ab)*", "--format", "structured")
    assert code == 0
    assert out["semigroup"]["order"] == 6
    assert out["varieties"]["inverse"] is True


def test_syn_closure_cap(cli):
    code, _, err = cli("syn", "--dfa", "(ab)*", "--closure-cap", "3")
    assert code == 2
    assert "--closure-cap" in err


def test_gen(cli, write):
    code, out, _ = cli("gen", "--maps", write("t2.maps", "points 2\nmap 1 0\nmap 0 0\n"))
    assert code == 0
    assert out.splitlines()[0] == "4"


def test_list(cli):
    code, out, _ = cli("list", "--format", "structured")
    assert code == 0
    assert out["B2"] == {"order": 5, "block_group": True}
    assert out["T2"] == {"order": 4, "block_group": False}


def test_missing_input_is_a_usage_error(cli):
    with pytest.raises(SystemExit) as exc:
        cli("analyze")
    assert exc.value.code == 2
