import json

import pytest

from conftest import cached_builtin
from operadpbw.bar import BarComplex, BarElement, collapse, flatten, homology, outer_vertices
from operadpbw.dual import dual_presentation
from operadpbw.parser import parse
from operadpbw.pbw import QuadraticPresentation

SMALL = ["assoc-ns", "assoc", "com", "lie", "poisson", "perm", "prelie", "m-dend(2)", "m-dend(3)"]


def test_collapse_flatten_round_trip():
    p = cached_builtin("assoc")
    for beta in p.columns(3, 4)[0][:40]:
        from operadpbw.trees import internal_edges
        edges = internal_edges(beta)
        for k in range(len(edges) + 1):
            for S in [tuple(edges[:k]), tuple(edges[len(edges) - k:])]:
                t = collapse(beta, S)
                assert flatten(t) == (beta, frozenset(S))
                assert len(outer_vertices(t)) == 3 - k
                el = BarElement(t)
                assert el.degree == 3 - k and el.weight == 3


@pytest.mark.parametrize("name", SMALL)
def test_delta_squared_and_diagonal(name):
    p = cached_builtin(name)
    rep = homology(p, 3, 4)
    assert rep.square_ok
    assert rep.diagonal, rep.to_text()


@pytest.mark.parametrize("name", ["tot-assoc-3", "part-assoc-3"])
def test_ternary_with_odd_generators(name):
    rep = homology(cached_builtin(name), 3, 7)
    assert rep.square_ok and rep.diagonal


@pytest.mark.parametrize("name", SMALL)
def test_koszul_dimension_equals_dual_operad(name):
    p = cached_builtin(name)
    q = dual_presentation(p)
    bc = BarComplex(p)
    for s, r in [(2, 3), (3, 4)]:
        assert bc.koszul_dim(s, r) == q.dim(s, r)


def test_low_degree_chain_counts():
    p = cached_builtin("prelie")
    bc = BarComplex(p)
    assert len(bc.chains(2, 3, 2)) == len(p.columns(2, 3)[0])
    assert len(bc.chains(2, 3, 1)) == p.dim(2, 3)
    assert len(bc.chains(1, 2, 1)) == 2


def test_free_operad_is_acyclic_above_weight_one():
    com = cached_builtin("com")
    free = QuadraticPresentation("free", com.module, [], com.order)
    rep = homology(free, 3, 4)
    assert rep.square_ok
    for c in rep.cells:
        if c.s > 1:
            assert all(h == 0 for h in c.homology.values())


def test_euler_characteristic():
    rep = homology(cached_builtin("perm"), 3, 4)
    for c in rep.cells:
        assert c.euler_chains == c.euler_homology


@pytest.mark.parametrize("field", ["F2", "F3", "F7"])
def test_positive_characteristic(field):
    from operadpbw.corpus import builtin_text
    text = builtin_text("lie").replace("order lex", "field %s\norder lex" % field)
    p = parse(text)
    rep = homology(p, 3, 4)
    assert rep.square_ok and rep.diagonal


def test_cap_marks_cells_as_skipped():
    rep = homology(cached_builtin("assoc"), 3, 4, cap=10)
    assert not rep.complete
    assert "skipped" in rep.to_text()
    assert "incomplete" in rep.to_text()


def test_json_records():
    rep = homology(cached_builtin("com"), 2, 3)
    lines = [json.loads(x) for x in rep.to_json_lines().splitlines()]
    assert lines[-1]["diagonal"] is True
    assert {"s", "r", "d", "value", "chains"} <= set(lines[0])


def test_com_bar_basis_sizes():
    from operadpbw.bar import bar_basis
    com = cached_builtin("com")
    assert len(bar_basis(com, 2, 3, 2)) == 3
    assert len(bar_basis(com, 2, 3, 1)) == 1
    assert bar_basis(com, 2, 3, 3) == []
    for el in bar_basis(com, 3, 4, 3):
        assert el.marked == frozenset()
    for el in bar_basis(com, 3, 4, 1):
        assert com.split().is_basis_monomial(el.beta)


def test_admissible_edges():
    from operadpbw.bar import admissible_edges
    from operadpbw.trees import internal_edges
    com = cached_builtin("com")
    rs = com.split()
    right = (0, (1, (0, (2, (0, (3, 4))))))
    assert admissible_edges(rs, right) == internal_edges(right)
    assert admissible_edges(rs, (0, (1, 2))) == []
    for lam in rs.dual_basis_monomials(3, 4):
        assert admissible_edges(rs, lam) == []


def test_bar_differential_wrapper():
    from operadpbw.bar import bar_basis, bar_differential
    com = cached_builtin("com")
    for el in bar_basis(com, 3, 4, 1):
        assert bar_differential(com, el) == {}
    for el in bar_basis(com, 2, 3, 2):
        image = bar_differential(com, el)
        assert all(x.degree == 1 and x.weight == 2 for x in image)
        assert sum(image.values()) == -1
