import json

from treegroups.cli import run
from treegroups.terms import catalan_signature, parse_term


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_term_normalize(capsys):
    code, out, _ = invoke(capsys, "term", "normalize", "--n", "2", "(x (y z))")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "((x y) z)"
    assert lines[1] == "steps 1"
    assert lines[2] == "ranks 1 0"


def test_term_normalize_variable(capsys):
    code, out, _ = invoke(capsys, "term", "normalize", "--n", "3", "x")
    assert code == 0
    assert out.splitlines() == ["x", "steps 0", "ranks 0"]


def test_term_rank(capsys):
    code, out, _ = invoke(capsys, "term", "rank", "--n", "3", "(x1 x2 (x3 x4 x5))")
    assert code == 0
    assert out.strip() == "4"


def test_trees_count(capsys):
    code, out, _ = invoke(capsys, "trees", "count", "--n", "3", "--k", "2")
    assert code == 0
    assert out.strip() == "3 3 OK"
    code, out, _ = invoke(capsys, "trees", "count", "--n", "2", "--k", "5")
    assert out.strip() == "42 42 OK"


def test_op_compose(capsys):
    code, out, _ = invoke(
        capsys, "op", "compose", "--n", "2", "--theory", "c", "a1[-] a1[-]"
    )
    assert code == 0
    assert out.strip() == "(x1 (x2 (x3 x4))) -> (((x1 x2) x3) x4)"
    sig = catalan_signature(2)
    source_text, target_text = out.strip().split(" -> ")
    parse_term(source_text, sig)
    parse_term(target_text, sig)


def test_word_eval_json(capsys):
    code, out, _ = invoke(capsys, "word", "eval", "--n", "2", "--theory", "c", "a1[-]")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "n": 2,
        "domain": [0, [0, 0]],
        "range": [[0, 0], 0],
        "perm": [1, 2, 3],
    }


def test_word_eq_pentagon(capsys):
    code, out, _ = invoke(
        capsys,
        "word",
        "eq",
        "--n",
        "2",
        "--theory",
        "c",
        "a1[-] a1[-]",
        "--",
        "a1[2] a1[-] a1[1]",
    )
    assert code == 0
    assert out.strip() == "equal"


def test_word_eq_unequal(capsys):
    code, out, _ = invoke(
        capsys, "word", "eq", "--n", "2", "--theory", "sc", "a1[-]", "--", "s1[-]"
    )
    assert code == 1
    assert out.strip() == "unequal"


def test_word_eq_missing_separator(capsys):
    code, _, err = invoke(capsys, "word", "eq", "--n", "2", "--theory", "c", "a1[-]")
    assert code == 2
    assert "--" in err


def test_parse_error_exit_code(capsys):
    code, _, err = invoke(capsys, "term", "rank", "--n", "2", "(x y z)")
    assert code == 2
    assert "error" in err
    code, _, _ = invoke(capsys, "word", "eval", "--n", "2", "--theory", "c", "s1[-]")
    assert code == 2


def test_usage_error_exit_code(capsys):
    code, _, _ = invoke(capsys, "term", "rank", "(x y)")
    assert code == 2
    code, _, _ = invoke(capsys, "nonsense")
    assert code == 2


def test_check_moore(capsys):
    code, out, _ = invoke(capsys, "check", "moore", "--n", "3")
    assert code == 0
    assert out.strip().endswith("all-pass")
    assert "closure=6 expected=6 PASS" in out


def test_check_axioms(capsys):
    code, out, _ = invoke(
        capsys, "check", "axioms", "--n", "2", "--theory", "sc", "--max-addr", "1"
    )
    assert code == 0
    assert "pentagon n=2 i=1 base=- PASS" in out
    assert out.strip().endswith("all-pass")


def test_check_coherence(capsys):
    code, out, _ = invoke(capsys, "check", "coherence", "--n", "2", "--max-nodes", "3")
    assert code == 0
    assert out.strip().endswith("all-pass")


def test_export_dot(capsys):
    code, out, _ = invoke(
        capsys, "export", "dot", "--n", "2", "--theory", "sc", "s1[-]"
    )
    assert code == 0
    assert out.startswith("graph tree_diagram {")
    assert "style=dashed" in out


def test_round_trip_printed_term(capsys):
    code, out, _ = invoke(capsys, "term", "normalize", "--n", "3", "(x1 (x2 x3 x4) x5)")
    assert code == 0
    printed = out.splitlines()[0]
    sig = catalan_signature(3)
    assert parse_term(printed, sig) == parse_term("((x1 x2 x3) x4 x5)", sig)
