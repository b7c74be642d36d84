import random
from math import comb, factorial

import pytest

from operadpbw.trees import (Tree, apply_leaf_permutation, edge_restriction, enumerate_labelled,
                             enumerate_trees, format_planar, graft, internal_edges, is_canonical,
                             leaves, subtree_of_edge)


def double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def catalan(n):
    return comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_binary_labelled_count(n):
    trees = enumerate_labelled(n, n - 1, {2: (None,)})
    assert len(trees) == double_factorial(2 * n - 3)
    assert len(set(trees)) == len(trees)
    assert all(is_canonical(t) for t in trees)


@pytest.mark.parametrize("n", range(2, 8))
def test_binary_planar_count(n):
    trees = enumerate_labelled(n, n - 1, {2: (None,)}, planar=True)
    assert len(trees) == catalan(n - 1)
    assert all(list(leaves(t)) == list(range(1, n + 1)) for t in trees)


@pytest.mark.parametrize("n,total", [(1, 1), (2, 1), (3, 4), (4, 26), (5, 236)])
def test_reduced_trees_without_unary_vertices(n, total):
    # reduced labelled trees, vertex arities >= 2: 1, 1, 4, 26, 236 (A000311)
    count = 0
    for r in range(0, n):
        labels = {k: (None,) for k in range(2, n + 1)}
        count += len(enumerate_labelled(n, r, labels))
    assert count == total


def test_unary_vertices_are_counted_by_weight():
    # one leaf, r unary vertices: a single chain
    for r in range(0, 4):
        assert len(enumerate_trees(1, r, 1)) == 1
    assert len(enumerate_trees(2, 2, 2)) == 3


def random_tree(rng, n):
    """Random reduced tree by merging random groups of roots."""
    roots = list(range(1, n + 1))
    edges = []
    k = 0
    while len(roots) > 1 or not edges:
        size = rng.randint(1, min(3, len(roots)))
        group = rng.sample(roots, size)
        k += 1
        v = "u%d" % k
        edges += [(g, v) for g in group]
        roots = [x for x in roots if x not in group] + [v]
    edges.append((roots[0], 0))
    return Tree(n, edges)


def test_random_trees_are_enumerated():
    rng = random.Random(3)
    pools = {}
    checked = 0
    while checked < 200:
        n = rng.randint(1, 5)
        t = random_tree(rng, n)
        r = len(t.vertices)
        if r > n + 1:
            continue
        if (n, r) not in pools:
            pools[n, r] = set(enumerate_trees(n, r, 3))
        assert t.planar() in pools[n, r]
        checked += 1


def test_vertex_ids_do_not_matter():
    a = Tree(3, [("x", 0), ("y", "x"), (1, "y"), (2, "y"), (3, "x")])
    b = Tree(3, [("p", 0), (3, "p"), ("q", "p"), (2, "q"), (1, "q")])
    assert a == b and hash(a) == hash(b)
    assert Tree.from_planar(a.planar()) == a


def test_invalid_trees():
    with pytest.raises(ValueError):
        Tree(2, [("v", 0), (1, "v")])
    with pytest.raises(ValueError):
        Tree(1, [("v", 0), ("w", 0), (1, "v")])
    with pytest.raises(ValueError):
        Tree(1, [("v", 0), ("w", "v"), (1, "v")])


def test_graft_and_edges():
    c2 = Tree.corolla(2)
    t = graft(c2, 1, c2)
    assert t.arity == 3
    assert format_planar(t.planar()) == "*(*(1,2),3)"
    (e,) = t.internal_edges
    assert subtree_of_edge(t, e) == t
    u = graft(c2, 2, c2)
    assert format_planar(u.planar()) == "*(1,*(2,3))"


def test_subtree_of_edge_standardizes_leaves():
    t = Tree.from_planar((None, ((None, (1, (None, (2, 4)))), 3)))
    es = sorted(t.internal_edges)
    shapes = sorted(format_planar(subtree_of_edge(t, e).planar()) for e in es)
    assert shapes == ["*(*(1,2),3)", "*(1,*(2,3))"]


def test_edge_restriction_blocks():
    t = ("a", (("b", (1, 4)), ("c", (2, 3))))
    q, blocks = edge_restriction(t, (0,))
    assert q == ("a", (("b", (1, 3)), 2))
    assert blocks == [1, ("c", (2, 3)), 4]
    assert len(internal_edges(t)) == 2


def test_leaf_permutation_round_trip():
    t = Tree.from_planar((None, ((None, (1, 3)), 2)))
    w = (3, 1, 2)
    inv = tuple(w.index(i) + 1 for i in range(1, 4))
    assert apply_leaf_permutation(inv, apply_leaf_permutation(w, t)) == t
    orbit = {apply_leaf_permutation(p, t) for p in [(1, 2, 3), (2, 1, 3), (1, 3, 2), (3, 2, 1)]}
    assert len(orbit) == 3
    assert factorial(3) // 2 == len(orbit)
