import io

import pytest

from minorbench.cli import main, read_graphs
from minorbench.cockade import CockadePlan
from minorbench.graph import complete, from_graph6, to_graph6
from minorbench.minors import BranchModel, check_model
from minorbench.verify import parse_report, validate_report


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_chromatic_k6():
    assert run("chromatic", to_graph6(complete(6))) == (0, "6\n")


def test_minor_k8_k9_is_none():
    assert run("minor", "complete(8)", "complete(9)") == (0, "none\n")


def test_minor_model_parses():
    code, out = run("minor", "petersen", "complete(5)")
    assert code == 0
    from minorbench.graph import petersen
    assert check_model(petersen(), complete(5), BranchModel.parse(out.strip()))


def test_verify_lemma_8_7_7():
    code, out = run("verify-lemma", "8", "7", "7")
    rep = parse_report(out)
    assert code == 0 and rep.scanned == 1 and rep.holds and validate_report(rep) == []


def test_verify_lemma_failure_exit_code(tmp_path):
    code, out = run("verify-lemma", "9", "6", "7", "--checkpoint", str(tmp_path), "--failures-only")
    assert code == 1 and not parse_report(out).holds
    again, out2 = run("verify-lemma", "9", "6", "7", "--resume", str(tmp_path), "--failures-only", "--jobs", "2")
    assert again == 1 and out2 == out


def test_gen_roundtrip(tmp_path):
    code, out = run("gen", "5", "2", "--limit", "3", "--save-cursor", str(tmp_path / "c"))
    first = out.split()
    code, out = run("gen", "5", "2", "--cursor", str(tmp_path / "c"))
    rest = out.split()
    _, full = run("gen", "5", "2")
    assert first + rest == full.split()
    assert all(from_graph6(s).min_degree() >= 2 for s in full.split())


def test_cockade_commands(tmp_path):
    code, plan_text = run("cockade", "random", "3", "--seed", "4")
    assert code == 0
    plan = CockadePlan.from_text(plan_text)
    (tmp_path / "p").write_text(plan_text)
    code, g6 = run("cockade", "build", str(tmp_path / "p"))
    g = from_graph6(g6.strip())
    assert g.edge_count() == 6 * g.n - 20 and g.n == plan.order()
    code, colors = run("cockade", "color", "@" + str(tmp_path / "p"))
    assert len(set(colors.split())) <= 8
    code, back = run("cockade", "check", g6.strip())
    assert CockadePlan.from_text(back).order() == g.n
    assert run("cockade", "check", "complete(9)") == (0, "none\n")


def test_extremal_and_two_k7():
    code, out = run("extremal", "kt_doubleminus(9)", "complete(8)")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("minor") and lines[1].startswith("minor")
    assert lines[2].startswith("cockade")
    code, out = run("two-k7", "complete(9)", "0,1,2,3,4,5,6", "2,3,4,5,6,7,8")
    assert code == 0 and out.startswith("variant 0:")


def test_small_commands():
    assert run("alpha", "cycle(5)") == (0, "2\n")
    assert run("connectivity", "complete_multipartite(2,2,2,2,2)") == (0, "8\n")
    code, out = run("k9eq", "complete_multipartite(2,2,2,2,2)")
    assert out == "none\n"
    code, out = run("profile", "cycle(5)", "3")
    assert "refutes_criticality yes" in out


def test_file_input(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(to_graph6(complete(4)) + "\n\n" + to_graph6(complete(5)) + "\n")
    assert run("chromatic", "@" + str(f)) == (0, "4\n5\n")
    assert len(read_graphs("kt_doubleminus(6)")) == 2


@pytest.mark.parametrize("argv", [["nope"], ["chromatic", "Bx!"], ["chromatic"], ["gen", "20", "0"],
                                  ["two-k7", "complete(8)", "0,1,2,3,4,5,6", "1,2,3,4,5,6,7"],
                                  ["verify-lemma", "8", "7", "7", "--jobs", "0"], ["chromatic", "@/nonexistent"]])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2
    assert "error" in capsys.readouterr().err
