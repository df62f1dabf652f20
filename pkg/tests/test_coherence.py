import itertools
import random

import pytest

from treegroups.terms import TermError, ParseError, Var, cat, enumerate_terms, lmb
from treegroups.operators import catalan_theory, symmetric_catalan_theory
from treegroups.diagrams import identity_diagram, multiply, to_diagram, is_order_preserving
from treegroups.coherence import (
    A,
    S,
    Generator,
    adjacent_assoc,
    applicable_positive,
    apply_word_to_term,
    check_axioms,
    check_coherence,
    check_moore,
    compatibility,
    dual_hexagon,
    dual_hexagon_derivation,
    eval_diagram,
    fill_square,
    format_word,
    free_reduce,
    functoriality_instance,
    generator_rule,
    hexagon,
    invert_word,
    involution,
    naturality_instances,
    parse_word,
    pentagon,
    positive_paths,
    relation_instances,
    substitute_once,
    three_cycle,
    twist_diagram,
    word_operator,
    words_equal,
)


def v(name):
    return Var(name)


def test_word_text_round_trip():
    text = "a1[-] a1[2] S1[-] A2[2.1] s3[1.1.3]"
    word = parse_word(text)
    assert format_word(word) == text
    assert word[0] == A(1)
    assert word[2] == S(1, (), -1)
    assert word[3] == Generator("a", 2, -1, (2, 1))
    with pytest.raises(ParseError):
        parse_word("b1[-]")
    with pytest.raises(ParseError):
        parse_word("a1")
    with pytest.raises(ParseError):
        parse_word("a1[0]")


def test_generator_validation():
    c2 = catalan_theory(2)
    with pytest.raises(TermError):
        generator_rule(A(2), c2)
    with pytest.raises(TermError):
        generator_rule(S(1), c2)
    with pytest.raises(TermError):
        generator_rule(A(1, (3,)), c2)
    sc3 = symmetric_catalan_theory(3)
    assert generator_rule(S(2, (1, 3)), sc3).rule.name == "s2"


def test_pentagon_is_mac_lane_for_n2():
    inst = pentagon(2, 1)
    assert format_word(inst.lhs) == "a1[2] a1[-] a1[1]"
    assert format_word(inst.rhs) == "a1[-] a1[-]"
    assert words_equal(inst.lhs, inst.rhs, 2, "c")


def test_pentagon_n3():
    inst = pentagon(3, 1)
    assert format_word(inst.lhs) == "a2[2] a1[-] a2[1] a1[1]"
    assert format_word(inst.rhs) == "a1[-] a1[-]"
    assert words_equal(inst.lhs, inst.rhs, 3, "c")
    shifted = pentagon(3, 2, (2,))
    assert words_equal(shifted.lhs, shifted.rhs, 3, "c")
    with pytest.raises(TermError):
        pentagon(3, 3)


def test_adjacent_assoc():
    with pytest.raises(TermError):
        adjacent_assoc(2, 1)
    inst = adjacent_assoc(3, 1)
    assert format_word(inst.lhs) == "a1[-] a2[-] a1[-]"
    assert format_word(inst.rhs) == "a2[-] a1[-] a1[1]"
    assert words_equal(inst.lhs, inst.rhs, 3, "c")
    inst4 = adjacent_assoc(4, 2)
    assert words_equal(inst4.lhs, inst4.rhs, 4, "c")


def test_involution():
    inst = involution(2, 1)
    assert eval_diagram(inst.lhs, 2, "sc") == identity_diagram(2)
    assert inst.rhs == ()
    assert words_equal(inst.lhs, inst.rhs, 2, "sc")


def test_hexagon_is_mac_lane_for_n2():
    inst = hexagon(2, 1)
    assert format_word(inst.lhs) == "s1[-] a1[-] s1[1]"
    assert format_word(inst.rhs) == "A1[-] s1[2] a1[-]"
    assert words_equal(inst.lhs, inst.rhs, 2, "sc")


def test_dual_hexagon():
    inst = dual_hexagon(2, 1)
    assert format_word(inst.lhs) == "s1[-] A1[-] s1[2]"
    assert format_word(inst.rhs) == "a1[-] s1[1] A1[-]"
    for n in (2, 3):
        for i in range(1, n):
            inst = dual_hexagon(n, i)
            assert words_equal(inst.lhs, inst.rhs, n, "sc")
    inst = dual_hexagon(3, 2)
    assert words_equal(inst.lhs, inst.rhs, 3, "sc")


def test_compatibility_and_three_cycle():
    for n in (3, 4):
        for i in range(2, n + 1):
            for j in range(1, n - 1):
                inst = compatibility(n, i, j)
                assert words_equal(inst.lhs, inst.rhs, n, "sc")
        for i in range(1, n - 1):
            inst = three_cycle(n, i)
            assert words_equal(inst.lhs, inst.rhs, n, "sc")
    with pytest.raises(TermError):
        compatibility(2, 2, 1)
    with pytest.raises(TermError):
        three_cycle(2, 1)


def test_functoriality():
    inst = functoriality_instance(A(1, (1,)), A(1, (2,)), 2)
    assert words_equal(inst.lhs, inst.rhs, 2, "c")
    with pytest.raises(TermError):
        functoriality_instance(A(1), A(1, (2,)), 2)


def test_naturality_instances_linear():
    c2 = catalan_theory(2)
    instances = naturality_instances(A(1), A(1), (), (), c2)
    assert len(instances) == 3  # one per variable of the regroup rule
    # the third variable sits at 2.2 in the source and 2 in the target
    by_var = {format_word(inst.lhs): inst for inst in instances}
    assert "a1[-] a1[2]" in by_var
    inst = by_var["a1[-] a1[2]"]
    assert format_word(inst.rhs) == "a1[2.2] a1[-]"
    for inst in instances:
        assert words_equal(inst.lhs, inst.rhs, 2, "c")
    # twists under regroupings, n = 3
    sc3 = symmetric_catalan_theory(3)
    for inst in naturality_instances(A(1), S(1), (), (), sc3):
        assert words_equal(inst.lhs, inst.rhs, 3, "sc")
    for inst in naturality_instances(S(1), A(2), (2,), (), sc3):
        assert words_equal(inst.lhs, inst.rhs, 3, "sc")


def test_eval_diagram_examples():
    assert eval_diagram((), 2, "c") == identity_diagram(2)
    assert eval_diagram(parse_word("a1[-] A1[-]"), 2, "c") == identity_diagram(2)
    inst = pentagon(2, 1)
    assert eval_diagram(inst.lhs, 2, "c") == eval_diagram(inst.rhs, 2, "c")
    with pytest.raises(TermError):
        eval_diagram(parse_word("s1[-]"), 2, "c")


def test_eval_diagram_is_fold_of_multiply():
    rng = random.Random(41)
    sc3 = symmetric_catalan_theory(3)
    pool = [
        Generator(kind, idx, sign, addr)
        for kind in "as"
        for idx in (1, 2)
        for sign in (1, -1)
        for addr in [(), (1,), (3,), (2, 2)]
    ]
    for _ in range(60):
        word = tuple(rng.choice(pool) for _ in range(rng.randint(0, 4)))
        direct = eval_diagram(word, 3, "sc")
        folded = identity_diagram(3)
        for g in word:
            folded = multiply(folded, to_diagram(word_operator((g,), sc3), 3))
        assert direct == folded


def test_words_equal_examples():
    w = parse_word("a1[2] s1[-]")
    assert words_equal(w, w, 2, "sc")
    assert words_equal(parse_word("a1[-] a1[-]"), pentagon(2, 1).lhs, 2, "c")
    assert not words_equal(parse_word("a1[-]"), parse_word("s1[-]"), 2, "sc")
    assert is_order_preserving(eval_diagram(parse_word("a1[-]"), 2, "sc"))
    assert not is_order_preserving(eval_diagram(parse_word("s1[-]"), 2, "sc"))


def test_regroup_words_are_order_preserving():
    rng = random.Random(43)
    pool = [A(i, addr, sign) for i in (1, 2) for sign in (1, -1) for addr in [(), (2,), (1, 3)]]
    for _ in range(50):
        word = tuple(rng.choice(pool) for _ in range(rng.randint(0, 4)))
        assert is_order_preserving(eval_diagram(word, 3, "c"))


def test_positive_paths():
    t = lmb(list("abcd"), 2)
    assert positive_paths(t, 2) == [()]
    square = cat(cat(v("a"), v("b")), cat(v("c"), v("d")))
    paths = positive_paths(square, 2)
    expected_end = lmb(list("abcd"), 2)
    theory = catalan_theory(2)
    for path in paths:
        assert apply_word_to_term(square, path, theory) == expected_end
    comb = cat(v("a"), cat(v("b"), cat(v("c"), v("d"))))
    paths = positive_paths(comb, 2)
    assert len(paths) >= 1
    images = {eval_diagram(path, 2, "c") for path in paths}
    assert len(images) == 1


def test_fill_square_examples():
    t = cat(cat(v("a"), cat(v("b"), v("c"))), cat(v("d"), cat(v("e"), v("f"))))
    w1, w2, family = fill_square(t, 2, A(1, (1,)), A(1, (2,)))
    assert family == "functoriality"
    assert w1 == (A(1, (2,)),) and w2 == (A(1, (1,)),)

    comb4 = cat(v("a"), cat(v("b"), cat(v("c"), v("d"))))
    w1, w2, family = fill_square(comb4, 2, A(1), A(1, (2,)))
    assert family == "pentagon"
    assert (A(1),) + w1 == pentagon(2, 1).rhs
    assert (A(1, (2,)),) + w2 == pentagon(2, 1).lhs

    t3 = cat(v("x"), cat(v("y1"), v("y2"), v("y3")), cat(v("z1"), v("z2"), v("z3")))
    w1, w2, family = fill_square(t3, 3, A(1), A(2))
    assert family == "adjacent-assoc"
    theory = catalan_theory(3)
    end1 = apply_word_to_term(t3, (A(1),) + w1, theory)
    end2 = apply_word_to_term(t3, (A(2),) + w2, theory)
    assert end1 == end2 is not None


def test_fill_square_distant_indices_same_address():
    # only possible from arity 4 up: two regroupings of the same node whose
    # indices differ by at least 2 rearrange disjoint child spans
    y = [v(f"y{k}") for k in range(1, 5)]
    z = [v(f"z{k}") for k in range(1, 5)]
    t = cat(v("x1"), cat(*y), v("x3"), cat(*z))
    m1, m2 = A(1), A(3)
    w1, w2, family = fill_square(t, 4, m1, m2)
    assert family == "naturality"
    theory = catalan_theory(4)
    end1 = apply_word_to_term(t, (m1,) + w1, theory)
    end2 = apply_word_to_term(t, (m2,) + w2, theory)
    assert end1 == end2 is not None
    assert words_equal((m1,) + w1, (m2,) + w2, 4, "c")


def test_fill_square_errors():
    t = cat(v("a"), cat(v("b"), v("c")))
    with pytest.raises(TermError):
        fill_square(t, 2, A(1), A(1))
    with pytest.raises(TermError):
        fill_square(t, 2, A(1), A(1, (1,)))  # a1[1] does not apply here


def test_fill_square_closes_every_pair():
    for n, max_nodes in ((2, 4), (3, 3)):
        theory = catalan_theory(n)
        for k in range(max_nodes + 1):
            for t in enumerate_terms(n, k):
                letters = applicable_positive(t, n)
                for m1, m2 in itertools.combinations(letters, 2):
                    w1, w2, family = fill_square(t, n, m1, m2)
                    assert family in (
                        "functoriality",
                        "naturality",
                        "pentagon",
                        "adjacent-assoc",
                    )
                    end1 = apply_word_to_term(t, (m1,) + w1, theory)
                    end2 = apply_word_to_term(t, (m2,) + w2, theory)
                    assert end1 is not None and end1 == end2
                    assert words_equal((m1,) + w1, (m2,) + w2, n, "c")


def test_relation_instances_sweep():
    families = {inst.family for inst in relation_instances(3, "sc", max_addr=0)}
    assert families == {
        "pentagon",
        "adjacent-assoc",
        "involution",
        "compatibility",
        "three-cycle",
        "hexagon",
        "dual-hexagon",
    }
    c_families = {inst.family for inst in relation_instances(2, "c", max_addr=0)}
    assert c_families == {"pentagon"}  # adjacent associativity is empty at n=2


def test_check_axioms_small():
    for n in (2, 3):
        ok, lines = check_axioms(n, "sc", max_addr=1)
        assert ok
        assert all(line.endswith("PASS") for line in lines)
    ok, lines = check_axioms(2, "c", max_addr=1)
    assert ok


def test_relations_hold_in_context():
    # u . lhs . w == u . rhs . w for random surrounding words
    rng = random.Random(47)
    pool = [
        Generator(kind, idx, sign, addr)
        for kind in "as"
        for idx in (1,)
        for sign in (1, -1)
        for addr in [(), (1,), (2,), (2, 2)]
    ]
    instances = list(relation_instances(2, "sc", max_addr=1))
    for _ in range(40):
        inst = rng.choice(instances)
        u = tuple(rng.choice(pool) for _ in range(rng.randint(0, 2)))
        w = tuple(rng.choice(pool) for _ in range(rng.randint(0, 2)))
        assert words_equal(u + inst.lhs + w, u + inst.rhs + w, 2, "sc")


def test_unequal_words_reported_unequal():
    rng = random.Random(53)
    pool = [
        Generator(kind, idx, sign, addr)
        for kind in "as"
        for idx in (1,)
        for sign in (1, -1)
        for addr in [(), (1,), (2,)]
    ]
    checked = 0
    for _ in range(1000):
        w1 = tuple(rng.choice(pool) for _ in range(rng.randint(0, 4)))
        w2 = tuple(rng.choice(pool) for _ in range(rng.randint(0, 4)))
        d1 = eval_diagram(w1, 2, "sc")
        d2 = eval_diagram(w2, 2, "sc")
        if d1 != d2:
            checked += 1
            assert not words_equal(w1, w2, 2, "sc")
    assert checked > 400


def test_check_coherence_small():
    ok, lines = check_coherence(2, max_nodes=3)
    assert ok and lines


def test_free_words():
    word = parse_word("a1[-] s1[2] A1[-]")
    assert free_reduce(word) == word
    assert free_reduce(word + invert_word(word)) == ()
    assert invert_word(parse_word("a1[-] s1[2]")) == parse_word("S1[2] A1[-]")
    assert substitute_once(parse_word("a1[-] a1[-]"), parse_word("a1[-]"), ()) == parse_word("a1[-]")
    with pytest.raises(TermError):
        substitute_once(parse_word("a1[-]"), parse_word("s1[-]"), ())


def test_dual_hexagon_derivation():
    for n in (2, 3):
        for i in range(1, n):
            steps = dual_hexagon_derivation(n, i)
            assert steps[-1][1] == free_reduce(dual_hexagon(n, i).rhs)
            # every intermediate word stays equal to the dual hexagon lhs
            for _, word in steps:
                assert words_equal(word, dual_hexagon(n, i).lhs, n, "sc")


def test_twist_diagram_and_moore():
    assert twist_diagram(2, 1).perm == (2, 1)
    for n in (2, 3, 4):
        ok, lines = check_moore(n)
        assert ok
        assert any("closure" in line for line in lines)
