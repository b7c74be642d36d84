import json
import random
import warnings
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import BUILTINS
from operadpbw.free import Element
from operadpbw.orders import LT
from operadpbw.parser import parse, parse_element
from operadpbw.pbw import PBWError, QuadraticPresentation, SplitFailure, check_pbw, symmetrize
from oracles import brute_dim, sympy_rank


def fmt(p, ms):
    return sorted(p.module.format_monomial(m) for m in ms)


GOLDEN_J = {
    "assoc-ns": ["m(m(1,2),3)"],
    "com": ["m(1,m(2,3))"],
    "lie": ["b(b(1,2),3)", "b(b(1,3),2)"],
    "tot-assoc-3": ["t(t(1,2,3),4,5)"],
    "perm": ["m(m(1,2),3)", "m(mt(1,2),3)", "m(mt(1,3),2)"],
    "poisson": ["k(k(1,2),3)", "k(k(1,3),2)", "k(m(1,2),3)", "m(k(1,2),3)", "m(k(1,3),2)",
                "m(m(1,2),3)"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_J))
def test_quadratic_basis(get, name):
    p = get(name)
    assert fmt(p, p.split().quadratic_basis()) == sorted(GOLDEN_J[name])


@pytest.mark.parametrize("name", BUILTINS)
def test_split_rewrites_to_larger_basis_monomials(get, name):
    p = get(name)
    rs = p.split()
    for a, target in rs.rewrite.items():
        assert a in rs.I
        for b in target:
            assert b in rs.J
            assert p.order.compare(a, b) == LT
    for r in rs.leading:
        assert len(rs.leading[r]) == p.ideal(2, r).rank


@pytest.mark.parametrize("name", BUILTINS)
def test_ideal_matches_brute_force_up_to_weight_three(get, name):
    p = get(name)
    for s in (2, 3):
        for r in range(2, 8):
            if p.columns(s, r)[0]:
                assert p.dim(s, r) == brute_dim(p, s, r), (s, r)


def test_ideal_rank_agrees_with_sympy(get):
    p = get("prelie")
    ech = p.ideal(3, 4)
    rows = list(ech.rows.values())
    assert sympy_rank(rows, len(p.columns(3, 4)[0])) == ech.rank


@pytest.mark.parametrize("name,expected", [
    ("com", [1, 1, 1, 1]),
    ("lie", [1, 2, 6, 24]),
    ("assoc", [2, 6, 24, 120]),
    ("perm", [2, 3, 4, 5]),
    ("prelie", [2, 9, 64, 625]),
    ("assoc-ns", [1, 1, 1, 1]),
    ("m-dend(2)", [2, 5, 14, 42]),
])
def test_dimensions(get, name, expected):
    p = get(name)
    assert [p.dim(r - 1, r) for r in range(2, 6)] == expected


@pytest.mark.parametrize("name", ["assoc-ns", "assoc", "com", "lie", "perm", "prelie",
                                  "tot-assoc-3", "part-assoc-3"])
def test_check_pbw_passes(get, name):
    rep = check_pbw(get(name), 3, 7)
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("name,cell,witness", [
    ("poisson", (3, 4), "m(k(k(1,2),4),3)"),
    ("m-dend(2)", (3, 4), "d2(d2(1,2),d2(3,4))"),
])
def test_check_pbw_reports_first_failing_cell(get, name, cell, witness):
    rep = check_pbw(get(name), 3, 4)
    assert not rep.ok
    bad = rep.first_failure()
    assert (bad.s, bad.r) == cell
    assert bad.candidates > bad.dim
    assert witness in bad.witness
    assert "NOT PBW" in rep.to_text()
    lines = [json.loads(x) for x in rep.to_json_lines().splitlines()]
    assert lines[-1] == {"operad": get(name).name, "verdict": False}


def random_element(p, rnd, max_weight=3):
    cells = [(s, r) for s in range(1, max_weight + 1) for r in range(1, 8) if p.columns(s, r)[0]]
    s, r = rnd.choice(cells)
    mons = p.columns(s, r)[0]
    return Element({rnd.choice(mons): rnd.randint(-3, 3) for _ in range(rnd.randint(1, 4))}, p.field), s, r


@pytest.mark.parametrize("name", BUILTINS)
@settings(max_examples=40, deadline=None)
@given(rnd=st.randoms(use_true_random=False))
def test_normal_form_properties(name, rnd):
    from conftest import cached_builtin
    p = cached_builtin(name)
    rs = p.split()
    x, s, r = random_element(p, rnd)
    y = rs.normal_form(x, strict=True)
    assert p.ideal_contains(y - x, s, r)
    assert rs.normal_form(y) == y
    assert all(rs.is_basis_monomial(m) for m in y)


def test_normal_form_examples(get):
    com = get("com")
    x = parse_element("m(m(1,2),3)", com.module)
    assert com.module.format(com.split().normal_form(x)) == "m(1,m(2,3))"
    lie = get("lie")
    y = lie.split().normal_form(parse_element("b(1,b(2,3))", lie.module))
    assert len(y) == 2


def test_normal_form_linear(get):
    p = get("prelie")
    rs = p.split()
    rnd = random.Random(11)
    for _ in range(20):
        x, _, r = random_element(p, rnd)
        mons = p.columns(2, 3)[0]
        if r != 3:
            continue
        z = Element({rnd.choice(mons): 1}, p.field)
        assert rs.normal_form(x + z) == rs.normal_form(x) + rs.normal_form(z)


def test_symmetrize_assoc():
    p = symmetrize(parse(open_builtin("assoc-ns")))
    assert p.module.names == ["m", "m_21"]
    assert [p.dim(r - 1, r) for r in range(2, 6)] == [factorial(r) for r in range(2, 6)]
    rep = check_pbw(p, 4, 5)
    assert rep.ok, rep.to_text()


def test_symmetrize_rejects_symmetric(get):
    with pytest.raises(PBWError):
        symmetrize(get("com"))


def open_builtin(name):
    from operadpbw.corpus import builtin_text
    return builtin_text(name)


def test_split_failure_on_incomparable_leading_terms():
    base = symmetrize(parse(open_builtin("assoc-ns")))
    mod = base.module
    rel = parse_element("m(m(1,2),3) - m(m(1,3),2)", mod)
    p = QuadraticPresentation("bad", mod, [rel], base.order)
    with pytest.raises(SplitFailure):
        p.split()
    rep = check_pbw(p, 3, 4)
    assert not rep.ok and rep.failure


def test_relation_validation(get):
    mod = get("com").module
    with pytest.raises(PBWError):
        QuadraticPresentation("x", mod, [parse_element("m(1,2)", mod)], get("com").order)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = QuadraticPresentation("x", mod, [parse_element("m(m(1,2),3) - m(m(1,2),3)", mod)],
                                  get("com").order)
    assert p.relations == [] and caught


def test_free_operad_has_no_leading_terms(get):
    mod = get("com").module
    p = QuadraticPresentation("free-com", mod, [], get("com").order)
    assert p.dim(2, 3) == 3
    assert check_pbw(p, 3, 4).ok


def test_com_leading_monomials(get):
    com = get("com")
    assert fmt(com, com.split().leading_monomials()) == ["m(m(1,2),3)", "m(m(1,3),2)"]


def test_basis_monomial_membership(get):
    rs = get("com").split()
    assert rs.is_basis_monomial((0, (1, 2)))
    assert rs.is_basis_monomial((0, (1, (0, (2, (0, (3, 4)))))))
    assert not rs.is_basis_monomial((0, ((0, (1, 2)), (0, (3, 4)))))


def test_ideal_component_ranks(get):
    assert sympy_rank(get("com").ideal_component_matrix(2, 3), 3) == 2
    assert sympy_rank(get("assoc").ideal_component_matrix(2, 3), 12) == 6
    assert get("assoc").dim(2, 3) == 6


def test_lie_normal_form_of_bracket_of_brackets(get):
    lie = get("lie")
    x = parse_element("b(b(1,3),b(2,4))", lie.module)
    y = lie.split().normal_form(x, strict=True)
    assert all(lie.split().is_basis_monomial(m) for m in y)
    assert lie.ideal_contains(y - x, 3, 4)
    assert not lie.ideal_contains(x, 3, 4)


@pytest.mark.parametrize("name", ["assoc", "com", "lie", "perm", "prelie"])
def test_induced_product_is_associative(get, name):
    from operadpbw.trees import arity
    p = get(name)
    rs = p.split()
    mod = p.module
    rnd = random.Random(4)
    nf = rs.normal_form
    for _ in range(25):
        a = rnd.choice(rs.basis_monomials(rnd.randint(1, 2), 3) or rs.basis_monomials(1, 2))
        b = rnd.choice(rs.basis_monomials(1, 2))
        c = rnd.choice(rs.basis_monomials(1, 2))
        i = rnd.randint(1, arity(a))
        j = rnd.randint(i, i + 1)
        lhs = nf(mod.compose(nf(mod.compose(a, i, b)), j, c))
        rhs = nf(mod.compose(a, i, nf(mod.compose(b, j - i + 1, c))))
        assert lhs == rhs


def test_symmetrize_ternary():
    from operadpbw.corpus import builtin_text
    ns = parse(builtin_text("tot-assoc-3"))
    p = symmetrize(ns)
    assert len(p.module.names) == 6
    rep = check_pbw(p, 2, 5)
    assert rep.ok, rep.to_text()
    # one planar basis monomial per leaf permutation
    assert p.dim(2, 5) == factorial(5) * ns.dim(2, 5)


def test_symmetrize_free_unary():
    from operadpbw.free import GeneratorModule
    from operadpbw.orders import MonomialOrder
    mod = GeneratorModule(["u"], [1], flavor="nonsymmetric")
    ns = QuadraticPresentation("u", mod, [], MonomialOrder("lex", mod))
    p = symmetrize(ns)
    assert [p.dim(s, 1) for s in (1, 2, 3)] == [1, 1, 1]
    assert check_pbw(p, 3, 1).ok


def test_non_pbw_normal_forms_are_not_unique(get):
    # m-dend(3): the two bracketings can reduce to different combinations of
    # condition-2 monomials, which then differ by an element of the ideal
    from operadpbw.trees import arity, weight
    p = get("m-dend(3)")
    rs = p.split()
    mod = p.module
    nf = rs.normal_form
    rnd = random.Random(4)
    found = 0
    for _ in range(200):
        a = rnd.choice(rs.basis_monomials(2, 3))
        b, c = rnd.choice(rs.basis_monomials(1, 2)), rnd.choice(rs.basis_monomials(1, 2))
        i = rnd.randint(1, 3)
        j = rnd.randint(i, i + 1)
        lhs = nf(mod.compose(nf(mod.compose(a, i, b)), j, c))
        rhs = nf(mod.compose(a, i, nf(mod.compose(b, j - i + 1, c))))
        if lhs != rhs:
            found += 1
            m = next(iter(lhs or rhs))
            assert p.ideal_contains(lhs - rhs, weight(m), arity(m))
    assert found > 0
