"""
Free operads on a finite Sigma_*-module with an ordered basis.

Monomials (treewise tensors) are canonical nested planar trees whose vertex
labels are generator ids.  Elements are finite linear combinations of
monomials over an exact field.

Sign conventions
----------------
A monomial stands for the tensor product of its vertex labels taken in
depth-first order of its canonical planar tree.  Whenever labels change
relative position (reordering children, grafting one tree into another)
the Koszul sign of the permutation of odd-degree labels is applied.

For a generator ``g`` of arity ``k`` and a permutation ``p`` (one-line
notation), ``g.p`` is the operation ``(a_1..a_k) -> g(a_p(1), .., a_p(k))``.
The module action is given on adjacent transpositions ``swap j = (j j+1)``.
Relabelling the leaves of a monomial by ``w`` (leaf ``l`` becomes
``w(l)``) is the left action ``w.x``.
"""

from functools import lru_cache
from itertools import permutations
from math import comb

from .field import QQ
from .trees import (arity as tree_arity, enumerate_labelled, graft_planar,
                    leaves, min_leaf, relabel, format_planar, weight as tree_weight)

SYMMETRIC = "symmetric"
NONSYMMETRIC = "nonsymmetric"


class OperadError(ValueError):
    pass


def _perm_sign(seq):
    """Parity (0/1) of the permutation that sorts ``seq``."""
    seq = list(seq)
    n = len(seq)
    par = 0
    seen = [False] * n
    order = sorted(range(n), key=seq.__getitem__)
    for i in range(n):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        par ^= (length - 1) & 1
    return par


def permutation_sign(w):
    """Signature +1/-1 of a permutation in one-line notation."""
    return -1 if _perm_sign(w) else 1


class GeneratorModule:
    """Ordered generator basis ``B^M`` with arities, degrees and Sigma-action.

    ``actions`` maps ``(generator, j)`` to the image of that generator under
    the adjacent transposition ``(j, j+1)``, as ``{generator: coefficient}``.
    Generators are numbered by declaration order; ``precedence`` (per arity,
    ascending) fixes the ordered basis used by monomial orders.
    """

    def __init__(self, names, arities, degrees=None, actions=None,
                 flavor=SYMMETRIC, field=QQ, precedence=None):
        self.names = list(names)
        self.arity = list(arities)
        n = len(self.names)
        if len(set(self.names)) != n:
            raise OperadError("duplicate generator names")
        if len(self.arity) != n:
            raise OperadError("one arity per generator expected")
        self.degree = list(degrees) if degrees is not None else [0] * n
        if any(a < 1 for a in self.arity):
            raise OperadError("generators of arity 0 are not allowed")
        if flavor not in (SYMMETRIC, NONSYMMETRIC):
            raise OperadError("unknown flavor %r" % (flavor,))
        self.flavor = flavor
        self.field = field
        self.index = {nm: g for g, nm in enumerate(self.names)}

        by_arity = {}
        for g, k in enumerate(self.arity):
            by_arity.setdefault(k, []).append(g)
        if precedence is not None:
            for k, gens in by_arity.items():
                ranked = [g for g in precedence if self.arity[g] == k]
                if sorted(ranked) != sorted(gens):
                    raise OperadError("precedence must list every generator of arity %d once" % k)
                by_arity[k] = ranked
        self.by_arity = by_arity
        self.rank = {}
        for k, gens in by_arity.items():
            for r, g in enumerate(gens):
                self.rank[g] = r
        self.has_odd = any(d % 2 for d in self.degree)

        self.actions = {}
        if flavor == NONSYMMETRIC:
            if actions:
                raise OperadError("a nonsymmetric module carries no action data")
        else:
            actions = actions or {}
            for (g, j), img in actions.items():
                if not 1 <= j < self.arity[g]:
                    raise OperadError("swap %d is not defined for %s of arity %d"
                                      % (j, self.names[g], self.arity[g]))
                clean = {}
                for h, c in img.items():
                    if self.arity[h] != self.arity[g]:
                        raise OperadError("action of swap %d on %s leaves arity %d"
                                          % (j, self.names[g], self.arity[g]))
                    if self.degree[h] != self.degree[g]:
                        raise OperadError("action of swap %d on %s changes degree"
                                          % (j, self.names[g]))
                    c = field(c)
                    if c != 0:
                        clean[h] = c
                self.actions[g, j] = clean
            for g in range(n):
                for j in range(1, self.arity[g]):
                    if (g, j) not in self.actions:
                        raise OperadError("missing action of swap %d on %s"
                                          % (j, self.names[g]))
            self._perm_cache = {}
            self._check_coxeter()

    # -- action ------------------------------------------------------------

    def _apply_swap(self, vec, j):
        F = self.field
        out = {}
        for g, c in vec.items():
            for h, d in self.actions[g, j].items():
                out[h] = F.reduce(out.get(h, 0) + c * d)
        return {h: c for h, c in out.items() if c != 0}

    def act_generator(self, g, p):
        """``g.p`` as ``{generator: coefficient}`` (``p`` in one-line notation)."""
        p = tuple(p)
        if all(p[i] == i + 1 for i in range(len(p))):
            return {g: self.field(1)}
        if self.flavor == NONSYMMETRIC:
            raise OperadError("nonsymmetric generators have no symmetric-group action")
        key = (g, p)
        hit = self._perm_cache.get(key)
        if hit is not None:
            return hit
        # p = s_j o q with q having one fewer inversion; g.p = (g.q).s_j ... use
        # A_{s o q} = A_s A_q, i.e. g.(s o q) = (g.q).s
        k = len(p)
        for j in range(1, k):
            # s_j o q = p  <=>  q = s_j o p, which swaps the values j, j+1 in p
            pos_j, pos_j1 = p.index(j), p.index(j + 1)
            if pos_j > pos_j1:
                q = list(p)
                q[pos_j], q[pos_j1] = j + 1, j
                inner = self.act_generator(g, tuple(q))
                res = self._apply_swap(inner, j)
                self._perm_cache[key] = res
                return res
        raise AssertionError("unreachable")

    def _check_coxeter(self):
        F = self.field
        for k, gens in self.by_arity.items():
            for g in gens:
                e = {g: F(1)}
                for j in range(1, k):
                    if self._apply_swap(self._apply_swap(e, j), j) != e:
                        raise OperadError("swap %d on %s is not an involution"
                                          % (j, self.names[g]))
                    if j + 1 < k:
                        x = e
                        for _ in range(3):
                            x = self._apply_swap(self._apply_swap(x, j), j + 1)
                        if x != e:
                            raise OperadError("braid relation fails for swaps %d,%d on %s"
                                              % (j, j + 1, self.names[g]))
                    for l in range(j + 2, k):
                        a = self._apply_swap(self._apply_swap(e, j), l)
                        b = self._apply_swap(self._apply_swap(e, l), j)
                        if a != b:
                            raise OperadError("swaps %d and %d do not commute on %s"
                                              % (j, l, self.names[g]))

    # -- bookkeeping -------------------------------------------------------

    @property
    def symmetric(self):
        return self.flavor == SYMMETRIC

    @property
    def max_arity(self):
        return max(self.arity) if self.arity else 1

    def letter_key(self, g):
        return (self.arity[g], self.rank[g])

    def labels_by_arity(self):
        return {k: tuple(v) for k, v in self.by_arity.items()}

    def is_odd(self, g):
        return self.degree[g] % 2 == 1

    def degree_of(self, m):
        if isinstance(m, int):
            return 0
        return self.degree[m[0]] + sum(self.degree_of(c) for c in m[1])

    def element(self, terms=None):
        return Element(terms, self.field)

    def monomial(self, m, coeff=1):
        return Element({m: self.field(coeff)}, self.field)

    def corolla(self, g):
        return (g, tuple(range(1, self.arity[g] + 1)))

    def format_monomial(self, m):
        return format_planar(m, self.names)

    def format(self, x):
        return x.format(self.names)

    # -- canonical forms ---------------------------------------------------

    def canonicalize(self, raw, coeff=1):
        """Rewrite a nested tree with arbitrary child order in canonical form.

        Reordering the entries of a vertex acts on its generator through the
        module action; moving odd labels past each other contributes Koszul
        signs.  Returns an ``Element``.
        """
        F = self.field
        if self.flavor == NONSYMMETRIC:
            ls = leaves(raw)
            if any(ls[k] >= ls[k + 1] for k in range(len(ls) - 1)):
                raise OperadError("nonsymmetric monomials must read their leaves in increasing order")
            self._check_arities(raw)
            return Element({raw: F(coeff)}, F)
        tagged = _tag_preorder(raw) if self.has_odd else raw
        out = {}
        for c, t, tags in self._canon(tagged):
            if tags and _perm_sign(tags):
                c = -c
            c = F.reduce(c * F(coeff))
            x = F.reduce(out.get(t, 0) + c)
            if x == 0:
                out.pop(t, None)
            else:
                out[t] = x
        return Element(out, F)

    def canonicalize_tagged(self, raw3, coeff=1):
        """Canonicalize a tree whose vertices are ``(label, children, tag)``.

        The tags give the reference order of the tensor factors; the Koszul
        sign is taken relative to that order.
        """
        F = self.field
        if not self.has_odd:
            return self.canonicalize(_strip_tags(raw3), coeff)
        if self.flavor == NONSYMMETRIC:
            c = F(coeff)
            if _perm_sign(_preorder_odd_tags(raw3, self)):
                c = -c
            return self.canonicalize(_strip_tags(raw3), c)
        out = {}
        for c, t, tags in self._canon(raw3):
            if tags and _perm_sign(tags):
                c = -c
            c = F.reduce(c * F(coeff))
            x = F.reduce(out.get(t, 0) + c)
            if x == 0:
                out.pop(t, None)
            else:
                out[t] = x
        return Element(out, F)

    def _check_arities(self, t):
        if isinstance(t, int):
            return
        g = t[0]
        if len(t[1]) != self.arity[g]:
            raise OperadError("%s has arity %d but the vertex has %d entries"
                              % (self.names[g], self.arity[g], len(t[1])))
        for c in t[1]:
            self._check_arities(c)

    def _canon(self, t):
        """List of (coeff, canonical tree, odd tags in preorder)."""
        F = self.field
        if isinstance(t, int):
            return [(F(1), t, [])]
        g, ch = t[0], t[1]
        tag = t[2] if len(t) > 2 else None
        if len(ch) != self.arity[g]:
            raise OperadError("%s has arity %d but the vertex has %d entries"
                              % (self.names[g], self.arity[g], len(ch)))
        combos = [(F(1), [], [])]
        for c in ch:
            sub = self._canon(c)
            combos = [(F.reduce(a * b), trees + [s], tags + [stags])
                      for a, trees, tags in combos for b, s, stags in sub]
        out = []
        for coef, kids, kid_tags in combos:
            mins = [min_leaf(k) for k in kids]
            order = sorted(range(len(kids)), key=mins.__getitem__)
            sorted_kids = tuple(kids[o] for o in order)
            # c_j = d_{pi(j)}
            pi = [0] * len(kids)
            for newpos, o in enumerate(order):
                pi[o] = newpos + 1
            own = [tag] if (tag is not None and self.degree[g] % 2) else []
            tags = own + [x for o in order for x in kid_tags[o]]
            for h, a in self.act_generator(g, pi).items():
                out.append((F.reduce(coef * a), (h, sorted_kids), tags))
        return out

    def act(self, w, x):
        """Leaf relabelling ``w.x`` for an element or a monomial."""
        if isinstance(x, Element):
            out = Element({}, self.field)
            for m, c in x.items():
                out = out + self.act(w, m).scale(c)
            return out
        w = tuple(w)
        if sorted(w) != list(range(1, len(w) + 1)) or len(w) != tree_arity(x):
            raise OperadError("permutation does not match arity")
        if self.flavor == NONSYMMETRIC and any(w[i] != i + 1 for i in range(len(w))):
            raise OperadError("nonsymmetric operads carry no leaf permutations")
        mp = {i + 1: w[i] for i in range(len(w))}
        return self.canonicalize(relabel(x, mp))

    # -- composition -------------------------------------------------------

    def compose_monomials(self, a, i, b, w=None):
        """``w.(a o_i b)`` for canonical monomials, as an ``Element``."""
        F = self.field
        g = graft_planar(a, i, b)
        c = F(1)
        if self.has_odd and self.degree_of(b) % 2:
            if _odd_labels_after_leaf(a, i, self) % 2:
                c = -c
        if w is None or all(w[k] == k + 1 for k in range(len(w))):
            return Element({g: c}, F)
        if self.flavor == NONSYMMETRIC:
            raise OperadError("nonsymmetric composition takes no shuffle")
        return self.act(w, g).scale(c)

    def compose(self, a, i, b, w=None):
        """Bilinear partial composition ``w.(a o_i b)``.

        In the symmetric flavor ``w`` must be a pointed shuffle for
        ``(arity a, arity b, i)`` (or None for the identity).
        """
        if not isinstance(a, Element):
            a = self.monomial(a)
        if not isinstance(b, Element):
            b = self.monomial(b)
        m, n = a.arity(), b.arity()
        if m is None or n is None:
            return Element({}, self.field)
        if w is not None:
            w = tuple(w)
            if self.flavor == NONSYMMETRIC:
                if any(w[k] != k + 1 for k in range(len(w))):
                    raise OperadError("nonsymmetric composition takes no shuffle")
            elif w not in pointed_shuffles(m, n, i):
                raise OperadError("%r is not a pointed shuffle for (%d,%d,%d)" % (w, m, n, i))
        F = self.field
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                for t, c in self.compose_monomials(ma, i, mb, w).items():
                    x = F.reduce(out.get(t, 0) + c * ca * cb)
                    if x == 0:
                        out.pop(t, None)
                    else:
                        out[t] = x
        return Element(out, F)

    # -- bases -------------------------------------------------------------

    def monomials(self, s, r):
        """Canonical basis monomials of weight ``s`` and arity ``r``."""
        return _monomials(self, s, r)


@lru_cache(maxsize=None)
def _monomials_cached(labels_key, s, r, planar):
    return tuple(enumerate_labelled(r, s, dict(labels_key), planar=planar))


def _monomials(module, s, r):
    if s == 0:
        return [1] if r == 1 else []
    key = tuple(sorted(module.labels_by_arity().items()))
    return list(_monomials_cached(key, s, r, module.flavor == NONSYMMETRIC))


def monomials_of_weight(module, s, r):
    return module.monomials(s, r)


def _tag_preorder(t):
    counter = [0]

    def walk(x):
        if isinstance(x, int):
            return x
        tag = counter[0]
        counter[0] += 1
        return (x[0], tuple(walk(c) for c in x[1]), tag)

    return walk(t)


def _strip_tags(t):
    if isinstance(t, int):
        return t
    return (t[0], tuple(_strip_tags(c) for c in t[1]))


def _preorder_odd_tags(t, module):
    out = []
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, int):
            continue
        if module.degree[x[0]] % 2:
            out.append(x[2])
        stack.extend(reversed(x[1]))
    return out


def _odd_labels_after_leaf(a, i, module):
    count = 0
    found = False
    stack = [a]
    while stack:
        x = stack.pop()
        if isinstance(x, int):
            if x == i:
                found = True
            continue
        if found and module.degree[x[0]] % 2:
            count += 1
        stack.extend(reversed(x[1]))
    return count


@lru_cache(maxsize=None)
def pointed_shuffles(m, n, i):
    """Pointed shuffles of a composition ``a o_i b`` (arities m, n).

    Permutations ``w`` of ``1..m+n-1`` (one-line, ``w[k-1] = w(k)``) that
    keep the entries of ``a`` and of ``b`` in order and send the smallest
    entry of the ``b``-block to ``i``.  Literal filter over the symmetric
    group up to size 8, direct construction beyond.
    """
    if not 1 <= i <= m:
        raise IndexError("composition index %d outside 1..%d" % (i, m))
    N = m + n - 1
    a_pos = list(range(1, i)) + list(range(i + n, N + 1))
    b_pos = list(range(i, i + n))
    if N <= 8:
        out = []
        for w in permutations(range(1, N + 1)):
            wa = [w[p - 1] for p in a_pos]
            wb = [w[p - 1] for p in b_pos]
            if wa == sorted(wa) and wb == sorted(wb) and wb[0] == i:
                out.append(w)
        return tuple(out)
    return _pointed_shuffles_direct(m, n, i)


def _pointed_shuffles_direct(m, n, i):
    from itertools import combinations
    N = m + n - 1
    rest = list(range(i + 1, N + 1))
    out = []
    for chosen in combinations(rest, n - 1):
        bvals = [i] + list(chosen)
        avals = list(range(1, i)) + [v for v in rest if v not in chosen]
        w = [0] * N
        a_pos = list(range(1, i)) + list(range(i + n, N + 1))
        for p, v in zip(a_pos, avals):
            w[p - 1] = v
        for p, v in zip(range(i, i + n), bvals):
            w[p - 1] = v
        out.append(tuple(w))
    return tuple(sorted(out))


def pointed_shuffle_count(m, n, i):
    return comb(m - i + n - 1, n - 1)


class Element:
    """Finite linear combination of canonical monomials (no zero coefficients)."""

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = field(c)
                if c != 0:
                    self.terms[m] = c

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __contains__(self, m):
        return m in self.terms

    def __getitem__(self, m):
        return self.terms.get(m, 0)

    def is_zero(self):
        return not self.terms

    def _combine(self, other, sign):
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            x = F.reduce(out.get(m, 0) + sign * c)
            if x == 0:
                out.pop(m, None)
            else:
                out[m] = x
        e = Element.__new__(Element)
        e.field = F
        e.terms = out
        return e

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        F = self.field
        c = F(c)
        if c == 0:
            return Element({}, F)
        e = Element.__new__(Element)
        e.field = F
        e.terms = {m: F.reduce(v * c) for m, v in self.terms.items()}
        return e

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def arity(self):
        for m in self.terms:
            return tree_arity(m)
        return None

    def weights(self):
        return {tree_weight(m) for m in self.terms}

    def format(self, names=None):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=repr):
            parts.append(format_term(self.terms[m], format_planar(m, names)))
        return _join_terms(parts)

    def __repr__(self):
        return "Element(%s)" % self.format()


def format_term(c, body):
    if c == 1:
        return "+ " + body
    if c == -1:
        return "- " + body
    if c < 0:
        return "- %s*%s" % (-c, body)
    return "+ %s*%s" % (c, body)


def _join_terms(parts):
    s = " ".join(parts)
    if s.startswith("+ "):
        s = s[2:]
    elif s.startswith("- "):
        s = "-" + s[2:]
    return s
