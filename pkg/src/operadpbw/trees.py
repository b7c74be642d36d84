"""
Reduced rooted trees with labelled leaves.

Two representations live here.

``Tree`` is the abstract object: vertex ids, oriented edges ``(source,
target)`` with leaves ``1..n`` as sources and the root sentinel ``0`` as a
target.  Vertex ids are never part of equality.

The *planar* form is a nested tuple.  A leaf is an ``int``; a vertex is a
pair ``(label, children)`` where ``children`` is a tuple of planar trees.
The bare leaf ``1`` is the trivial tree (no vertices, the operadic unit).
A planar tree is *canonical* when the children of every vertex are sorted
by the minimum leaf linked to them; two ``Tree`` objects are isomorphic iff
their canonical planar forms agree.  Monomials of the free operad use the
same nested form with generator ids as labels.
"""

from functools import lru_cache
from itertools import product


# -- nested planar trees -----------------------------------------------------

def is_leaf(t):
    return isinstance(t, int)


def leaves(t):
    """Leaf labels in left-to-right planar order."""
    if isinstance(t, int):
        return [t]
    out = []
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, int):
            out.append(x)
        else:
            stack.extend(reversed(x[1]))
    return out


def min_leaf(t):
    while not isinstance(t, int):
        t = t[1][0]
    return t


def canonical_min_leaf(t):
    """Minimum leaf of ``t``; valid for any planar tree, not only canonical."""
    return min(leaves(t))


def arity(t):
    return len(leaves(t))


def weight(t):
    """Number of vertices."""
    if isinstance(t, int):
        return 0
    return 1 + sum(weight(c) for c in t[1])


def vertex_labels(t):
    """Vertex labels in depth-first (pre-)order."""
    out = []
    stack = [t]
    while stack:
        x = stack.pop()
        if not isinstance(x, int):
            out.append(x[0])
            stack.extend(reversed(x[1]))
    return out


def vertex_paths(t):
    """Paths (tuples of child positions from the root) of all vertices, preorder."""
    out = []

    def walk(x, path):
        if isinstance(x, int):
            return
        out.append(path)
        for j, c in enumerate(x[1]):
            walk(c, path + (j,))

    walk(t, ())
    return out


def internal_edges(t):
    """Internal edges in depth-first order.

    An internal edge is named by the path of its source vertex (the upper
    one); its target is the vertex at ``path[:-1]``.
    """
    return [p for p in vertex_paths(t) if p]


def at(t, path):
    for j in path:
        t = t[1][j]
    return t


def replace_at(t, path, new):
    if not path:
        return new
    j = path[0]
    ch = list(t[1])
    ch[j] = replace_at(ch[j], path[1:], new)
    return (t[0], tuple(ch))


def relabel(t, mapping):
    """Rename leaves through ``mapping`` (dict or sequence indexed by leaf)."""
    if isinstance(t, int):
        return mapping[t]
    return (t[0], tuple(relabel(c, mapping) for c in t[1]))


def is_canonical(t):
    if isinstance(t, int):
        return True
    mins = [canonical_min_leaf(c) for c in t[1]]
    return mins == sorted(mins) and all(is_canonical(c) for c in t[1])


def sort_children(t):
    """Canonical planar form of an unlabelled-semantics nested tree."""
    if isinstance(t, int):
        return t
    ch = sorted((sort_children(c) for c in t[1]), key=min_leaf)
    return (t[0], tuple(ch))


def is_reduced(t):
    if isinstance(t, int):
        return True
    return len(t[1]) > 0 and all(is_reduced(c) for c in t[1])


def graft_planar(a, i, b):
    """``a o_i b`` on nested trees with the operadic leaf renumbering.

    Leaves ``1..i-1`` of ``a`` keep their labels, leaves of ``b`` become
    ``i..i+n-1`` and the leaves ``i+1..m`` of ``a`` are shifted by ``n-1``.
    If ``a`` and ``b`` are canonical then so is the result.
    """
    m = arity(a)
    n = arity(b)
    if not 1 <= i <= m:
        raise IndexError("graft position %d outside 1..%d" % (i, m))
    bb = relabel(b, {k: k + i - 1 for k in range(1, n + 1)})

    def walk(x):
        if isinstance(x, int):
            if x == i:
                return bb
            return x if x < i else x + n - 1
        return (x[0], tuple(walk(c) for c in x[1]))

    return walk(a)


def edge_restriction(t, path):
    """Two-vertex subtree generated by the internal edge ``path``.

    Returns ``(q, blocks)``: ``q`` is the planar tree on the lower and upper
    vertices whose leaves are the ranks ``1..k`` of the minima of the
    original entries, and ``blocks[l-1]`` is the original subtree (leaf or
    vertex) plugged into leaf ``l`` of ``q``.  For canonical ``t`` the
    result ``q`` is canonical.
    """
    if not path:
        raise ValueError("the root has no outgoing internal edge")
    lower = at(t, path[:-1])
    j = path[-1]
    upper = lower[1][j]
    if isinstance(upper, int):
        raise ValueError("path %r names a leaf, not an internal edge" % (path,))
    blocks = [c for k, c in enumerate(lower[1]) if k != j] + list(upper[1])
    blocks.sort(key=canonical_min_leaf)
    rank = {id(b): r + 1 for r, b in enumerate(blocks)}
    up = (upper[0], tuple(rank[id(c)] for c in upper[1]))
    low = (lower[0], tuple(up if k == j else rank[id(c)] for k, c in enumerate(lower[1])))
    return low, blocks


# -- enumeration ---------------------------------------------------------------

def _set_partitions(items, k):
    """Partitions of the sorted tuple ``items`` into ``k`` blocks ordered by minimum."""
    n = len(items)
    if k == 0:
        if n == 0:
            yield ()
        return
    if n < k:
        return
    first, rest = items[0], items[1:]
    # blocks of the partition, first block contains items[0]
    def rec(i, blocks):
        if i == len(rest):
            if len(blocks) == k:
                yield tuple(tuple(b) for b in blocks)
            return
        x = rest[i]
        remaining = len(rest) - i
        for b in blocks:
            b.append(x)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k and len(blocks) + remaining >= k:
            blocks.append([x])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [[first]])


def _interval_partitions(items, k):
    n = len(items)
    if k == 0:
        if n == 0:
            yield ()
        return
    for cuts in _compositions(n, k):
        out, pos = [], 0
        for c in cuts:
            out.append(items[pos:pos + c])
            pos += c
        yield tuple(out)


def _compositions(n, k):
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _weight_splits(total, sizes):
    """Distribute ``total`` vertices over blocks; size-1 blocks may take 0."""
    if not sizes:
        if total == 0:
            yield ()
        return
    lo = 0 if sizes[0] == 1 else 1
    for w in range(lo, total + 1):
        for rest in _weight_splits(total - w, sizes[1:]):
            yield (w,) + rest


def enumerate_labelled(n, r, labels_by_arity, planar=False):
    """All canonical labelled trees with ``n`` leaves and ``r`` vertices.

    ``labels_by_arity`` maps a vertex arity to the labels allowed there.
    With ``planar=True`` every vertex takes contiguous leaf intervals, which
    gives the planar trees with leaves ``1..n`` read left to right.
    """
    key = tuple(sorted((k, tuple(v)) for k, v in labels_by_arity.items() if v))
    return list(_enum(n, r, key, planar))


@lru_cache(maxsize=None)
def _enum(n, r, key, planar):
    labels = dict(key)
    if r == 0:
        return (1,) if n == 1 else ()
    parts = _interval_partitions if planar else _set_partitions
    items = tuple(range(1, n + 1))
    out = []
    for k in sorted(labels):
        if k > n:
            continue
        for blocks in parts(items, k):
            sizes = tuple(len(b) for b in blocks)
            for ws in _weight_splits(r - 1, sizes):
                choices = []
                for b, w in zip(blocks, ws):
                    if w == 0:
                        choices.append((b[0],))
                        continue
                    sub = _enum(len(b), w, key, planar)
                    mp = dict(zip(range(1, len(b) + 1), b))
                    choices.append(tuple(relabel(s, mp) for s in sub))
                if not all(choices):
                    continue
                for ch in product(*choices):
                    for g in labels[k]:
                        out.append((g, ch))
    return tuple(out)


def shape_key(t):
    """Depth-first encoding used for deterministic ordering of shapes."""
    if isinstance(t, int):
        return (0, t)
    return (1, len(t[1])) + tuple(x for c in t[1] for x in (shape_key(c),))


def enumerate_trees(n, r, max_vertex_arity):
    """Canonical planar representatives of reduced ``n``-trees with ``r`` vertices.

    Vertices have between 1 and ``max_vertex_arity`` entries.  One
    representative per isomorphism class, in a deterministic order.
    """
    if n < 1 or r < 0:
        return []
    labels = {k: (None,) for k in range(1, max_vertex_arity + 1)}
    return sorted(enumerate_labelled(n, r, labels), key=shape_key)


# -- abstract trees ----------------------------------------------------------

class Tree:
    """Abstract reduced ``n``-tree.

    ``edges`` is a collection of ``(source, target)`` pairs.  Sources are
    vertex ids or leaf labels ``1..n``; targets are vertex ids or the root
    sentinel ``0``.  Vertex ids may be any hashable value other than ``int``.
    """

    __slots__ = ("arity", "edges", "vertices", "_canon")

    def __init__(self, arity, edges):
        self.arity = int(arity)
        self.edges = frozenset(edges)
        self.vertices = frozenset(
            x for e in self.edges for x in e if not isinstance(x, int))
        self._canon = None
        self._validate()

    def _validate(self):
        n = self.arity
        if n < 1:
            raise ValueError("arity must be at least 1")
        src = {}
        for s, t in self.edges:
            if s in src:
                raise ValueError("%r is the source of two edges" % (s,))
            src[s] = t
            if isinstance(s, int) and not 1 <= s <= n:
                raise ValueError("leaf %r outside 1..%d" % (s, n))
            if isinstance(t, int) and t != 0:
                raise ValueError("edge target %r is a leaf" % (t,))
        roots = [s for s, t in self.edges if t == 0]
        if len(roots) != 1:
            raise ValueError("need exactly one root edge, found %d" % len(roots))
        for i in range(1, n + 1):
            if i not in src:
                raise ValueError("leaf %d has no edge" % i)
        for v in self.vertices:
            if v not in src:
                raise ValueError("vertex %r has no outgoing edge" % (v,))
        entries = self.entries()
        for v in self.vertices:
            if not entries.get(v):
                raise ValueError("vertex %r has no entries (tree not reduced)" % (v,))
            seen = set()
            x = v
            while x != 0:
                if x in seen:
                    raise ValueError("cycle through vertex %r" % (v,))
                seen.add(x)
                x = src[x]

    def entries(self):
        """``I_v`` for every vertex and for the root sentinel 0."""
        out = {}
        for s, t in self.edges:
            out.setdefault(t, []).append(s)
        return out

    @property
    def internal_edges(self):
        return frozenset((s, t) for s, t in self.edges
                         if not isinstance(s, int) and t != 0)

    @property
    def root_vertex(self):
        (s,) = [s for s, t in self.edges if t == 0]
        return s

    def planar(self):
        """Canonical planar representation (cached)."""
        if self._canon is None:
            entries = self.entries()

            def build(x):
                if isinstance(x, int):
                    return x
                return sort_children((None, tuple(build(c) for c in entries[x])))

            self._canon = build(self.root_vertex)
        return self._canon

    def __eq__(self, other):
        return isinstance(other, Tree) and self.planar() == other.planar()

    def __hash__(self):
        return hash(self.planar())

    def __repr__(self):
        return "Tree(%d, %s)" % (self.arity, format_planar(self.planar()))

    @classmethod
    def from_planar(cls, t):
        edges = []
        counter = [0]

        def walk(x, target):
            if isinstance(x, int):
                edges.append((x, target))
                return
            counter[0] += 1
            v = "v%d" % counter[0]
            edges.append((v, target))
            for c in x[1]:
                walk(c, v)

        walk(t, 0)
        return cls(len(leaves(t)), edges)

    @classmethod
    def corolla(cls, n):
        return cls(n, [("v", 0)] + [(i, "v") for i in range(1, n + 1)])


def canonical_planar(t):
    """Canonical planar form of a ``Tree`` (or of a nested planar tree)."""
    if isinstance(t, Tree):
        return t.planar()
    return sort_children(t)


def graft(sigma, i, tau):
    """Tree obtained by grafting the root of ``tau`` onto entry ``i`` of ``sigma``."""
    return Tree.from_planar(graft_planar(sigma.planar(), i, tau.planar()))


def subtree_of_edge(t, e):
    """Two-vertex tree ``tau_e`` of the internal edge ``e = (source, target)``."""
    if e not in t.internal_edges:
        raise ValueError("%r is not an internal edge" % (e,))
    up, low = e
    entries = t.entries()

    def linked_min(x):
        if isinstance(x, int):
            return x
        return min(linked_min(c) for c in entries[x])

    outer = [c for c in entries[low] if c != up] + list(entries[up])
    rank = {c: r + 1 for r, c in enumerate(sorted(outer, key=linked_min))}
    edges = [(low, 0), (up, low)]
    edges += [(rank[c], low) for c in entries[low] if c != up]
    edges += [(rank[c], up) for c in entries[up]]
    return Tree(len(outer), edges)


def apply_leaf_permutation(w, t):
    """Relabel leaf ``i`` as ``w[i-1]`` (``w`` in one-line notation)."""
    w = tuple(w)
    if sorted(w) != list(range(1, t.arity + 1)):
        raise ValueError("permutation of size %d does not match arity %d"
                         % (len(w), t.arity))
    mp = {i + 1: w[i] for i in range(len(w))}
    return Tree(t.arity, [(mp[s] if isinstance(s, int) else s, tt) for s, tt in t.edges])


def format_planar(t, names=None):
    """Nested-call text, e.g. ``m(m(1,2),3)``."""
    if isinstance(t, int):
        return str(t)
    g = t[0]
    name = "*" if g is None else (names[g] if names is not None else str(g))
    return "%s(%s)" % (name, ",".join(format_planar(c, names) for c in t[1]))
