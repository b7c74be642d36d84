from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import BUILTINS, cached_builtin
from operadpbw.corpus import builtin_text, m_dend_text
from operadpbw.free import Element
from operadpbw.parser import ParseError, dump, format_element, parse, parse_element, presentations_equal


@pytest.mark.parametrize("name", BUILTINS)
def test_dump_round_trip(name):
    p = cached_builtin(name)
    q = parse(dump(p))
    assert presentations_equal(p, q)
    assert dump(q) == dump(p)


def test_comments_blank_lines_and_equations():
    text = """
    # a comment line
    operad c2
    flavor symmetric        # trailing comment
    generator m arity 2

    action m swap 1 = m
    order revlenlex
    relation m(m(1,2),3) = m(1,m(2,3))
    """
    p = parse(text)
    assert p.name == "c2" and len(p.relations) == 1
    assert p.dim(3, 4) == 1


def test_field_and_coefficients():
    text = "operad x\nfield F5\ngenerator m arity 2\naction m swap 1 = m\norder lex\n" \
           "relation 2*m(m(1,2),3) + 3/2*m(1,m(2,3)) = 0\n"
    p = parse(text)
    assert p.field.p == 5
    (x,) = p.relations
    assert sorted(x.terms.values()) == [2, 4]


def test_rational_coefficients():
    mod = cached_builtin("com").module
    x = parse_element("1/2*m(m(1,2),3) - 3*m(m(1,3),2)", mod)
    assert sorted(x.terms.values()) == [Fraction(-3), Fraction(1, 2)]


def test_element_canonicalized_on_parse():
    lie = cached_builtin("lie").module
    x = parse_element("b(2,1)", lie)
    assert x == parse_element("b(1,2)", lie).scale(-1)
    with pytest.raises(ParseError):
        parse_element("b(1,1)", lie)
    assert parse_element("0", lie).is_zero()


@pytest.mark.parametrize("text,line,col,needle", [
    ("flavor symmetric\n", 1, 1, "missing 'operad"),
    ("operad x\ngenerator m arity two\n", 2, 11, "integers"),
    ("operad x\ngenerator m arity 2\nfoo bar\n", 3, 1, "unknown keyword"),
    ("operad x\ngenerator m arity 2\naction m swap 1 = m\norder lex\nrelation m(m(1,2),2) = 0\n",
     5, 19, "leaf 2 repeated"),
    ("operad x\ngenerator m arity 2\naction m swap 1 = m\norder lex\nrelation n(m(1,2),3) = 0\n",
     5, 10, "unknown generator"),
    ("operad x\ngenerator m arity 2\naction m swap 1 = m\norder lex\nrelation m(1,2) = 0\n",
     5, 10, "not quadratic"),
    ("operad x\ngenerator m arity 2\naction m swap 1 = m\norder deglex\n", 4, 7, "lex or revlenlex"),
    ("operad x\ngenerator m arity 2\norder lex\n", 2, 1, "missing action"),
    ("operad x\nflavor nonsymmetric\ngenerator m arity 2\naction m swap 1 = m\norder lex\n", 4, 1,
     "only allowed"),
    ("operad x\nfield F6\n", 2, 7, "prime"),
    ("operad x\ngenerator m arity 2\ngenerator m arity 2\n", 3, 11, "twice"),
])
def test_parse_errors(text, line, col, needle):
    with pytest.raises(ParseError) as info:
        parse(text, source="t.op")
    e = info.value
    assert e.line == line
    assert needle in e.message
    assert e.col == col
    assert str(e).startswith("t.op:%d:%d:" % (line, col))


def test_precedence_checks():
    base = "operad x\nflavor nonsymmetric\ngenerator a arity 2\ngenerator b arity 2\norder lex\n"
    assert parse(base + "precedence b < a\n").order.letter_key(1) < parse(base + "precedence b < a\n").order.letter_key(0)
    with pytest.raises(ParseError):
        parse(base + "precedence a\n")
    with pytest.raises(ParseError):
        parse(base + "precedence a < c\n")


def test_descending_arity_modifier():
    text = "operad x\nflavor nonsymmetric\ngenerator t arity 3\ngenerator m arity 2\n" \
           "order revlenlex descending-arity\n"
    p = parse(text)
    assert p.order.descending_arity
    assert "order revlenlex descending-arity" in dump(p)


def test_m_dend_family_text():
    assert builtin_text("m-dend(4)") == m_dend_text(4)
    p = parse(m_dend_text(4))
    assert len(p.module.names) == 4
    # 3 axioms for the extreme operations, 3 per middle one, one per middle pair
    assert len(p.relations) == 3 + 3 * 2 + 1
    with pytest.raises(ValueError):
        m_dend_text(1)
    with pytest.raises(KeyError):
        builtin_text("nope")


@pytest.mark.parametrize("name", ["lie", "poisson", "part-assoc-3", "prelie"])
@settings(max_examples=40, deadline=None)
@given(rnd=st.randoms(use_true_random=False))
def test_format_parse_round_trip(name, rnd):
    p = cached_builtin(name)
    mod = p.module
    s = rnd.randint(1, 3)
    r = rnd.choice([k for k in range(1, 8) if mod.monomials(s, k)])
    mons = mod.monomials(s, r)
    x = Element({rnd.choice(mons): Fraction(rnd.randint(-5, 5), rnd.randint(1, 3)) for _ in range(3)},
                p.field)
    assert parse_element(format_element(x, mod, p.order), mod) == x
