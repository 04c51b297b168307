import pytest
from hypothesis import given, strategies as st

from plp.core import (
    AnswerSet,
    Compound,
    Constant,
    Literal,
    OrderedProgram,
    Rule,
    Variable,
    collect_constants,
    matches,
    substitute,
)
from plp.grounder import ground_program
from plp.parser import parse_program

from helpers import corpus

X = Variable("X")
c = Constant("c")


def test_substitute_name_term():
    assert substitute(Compound("r1", (X,)), {X: Constant("tweety")}) == Compound("r1", (Constant("tweety"),))


def test_substitute_leaves_constants():
    assert substitute(Constant("tweety"), {X: Constant("opus")}) == Constant("tweety")


def test_substitute_recursive_simultaneous():
    t = Compound("f", (X, Compound("g", (X,))))
    assert substitute(t, {X: c}) == Compound("f", (c, Compound("g", (c,))))
    # simultaneous: X->Y, Y->X swaps rather than chaining
    Y = Variable("Y")
    assert substitute(Compound("h", (X, Y)), {X: Y, Y: X}) == Compound("h", (Y, X))


def test_collect_constants_birds():
    assert collect_constants(parse_program(corpus("birds"))) == {
        Constant("tweety"), Constant("opus"), Constant("scully")
    }


def test_collect_constants_empty_and_nested():
    assert collect_constants(OrderedProgram()) == set()
    p = parse_program("p(f(a, b)).")
    assert collect_constants(p) == {Constant("a"), Constant("b")}


def test_integers_are_constants():
    assert Constant(1) == Constant("1")
    assert str(Constant(42)) == "42"


@pytest.mark.parametrize("bad", ["X", "_x", "f(", ""])
def test_bad_constant(bad):
    with pytest.raises(ValueError):
        Constant(bad)


def test_bad_variable_and_compound():
    with pytest.raises(ValueError):
        Variable("x")
    with pytest.raises(ValueError):
        Compound("f", ())


def test_complement():
    lit = Literal("flies", (Constant("tweety"),))
    assert lit.complement().strong_neg
    assert lit.complement().complement() == lit
    assert str(lit.complement()) == "neg flies(tweety)"


def test_answer_set_consistency():
    lit = Literal("flies", (Constant("tweety"),))
    with pytest.raises(ValueError):
        AnswerSet(frozenset({lit, lit.complement()}))
    assert str(AnswerSet(frozenset({Literal("b"), Literal("a", (), True)}))) == "{b, neg a}"


def test_matches():
    assert matches(Compound("r", (X,)), Compound("r", (c,)))
    assert not matches(Compound("r", (X, X)), Compound("r", (c, Constant("d"))))


def test_rule_rendering():
    r = Rule(Literal("h"), (), Constant("1"))
    assert str(r) == "h :- name(1)."
    with pytest.raises(ValueError):
        Rule(None, ())


# -- properties ----------------------------------------------------------------

consts = st.sampled_from([Constant(s) for s in ("a", "b", "tweety", "7")])
varis = st.sampled_from([Variable(s) for s in ("X", "Y", "Z")])
terms = st.recursive(
    consts | varis,
    lambda inner: st.builds(lambda f, args: Compound(f, tuple(args)), st.sampled_from(["f", "g"]), st.lists(inner, min_size=1, max_size=3)),
    max_leaves=8,
)
ground_bindings = st.dictionaries(varis, consts)


@given(terms, ground_bindings)
def test_substitute_idempotent_with_ground_range(t, binding):
    once = substitute(t, binding)
    assert substitute(once, binding) == once


@given(terms)
def test_structural_equality_is_decidable(t):
    assert t == substitute(t, {})
    assert hash(t) == hash(substitute(t, {}))


def test_collect_constants_stable_under_grounding():
    for name in ("penguin", "cars"):
        p = parse_program(corpus(name))
        assert collect_constants(ground_program(p)) == collect_constants(p)
