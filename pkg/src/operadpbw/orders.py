"""
Orders on treewise-tensor monomials.

Both shipped orders compare the *path words* of two monomials of equal
arity: word ``i`` lists the generator labels met on the path from the root
to leaf ``i``.  Words of different lengths compare by length (shorter first
for ``lex``, longer first for ``revlenlex``), words of equal length
letter by letter, and word sequences position by position.

Distinct monomials can share their path words once the weight reaches 3
(``m(m(1,2),m(3,4))`` and ``m(m(1,3),m(2,4))`` do), so ``compare`` is a
strict partial order that answers ``INCOMPARABLE`` on such ties.
``sort_key`` refines it to a total order for deterministic iteration.
"""

import random

from .free import pointed_shuffles
from .trees import arity as tree_arity, graft_planar, leaves, relabel

LT, EQ, GT, INCOMPARABLE = "LT", "EQ", "GT", "INCOMPARABLE"

LEX = "lex"
REVLENLEX = "revlenlex"
KINDS = (LEX, REVLENLEX)


def path_words(m):
    """Tuple of words (tuples of generator ids), indexed by leaf ``1..n``."""
    out = {}

    def walk(x, word):
        if isinstance(x, int):
            out[x] = word
            return
        w = word + (x[0],)
        for c in x[1]:
            walk(c, w)

    walk(m, ())
    return tuple(out[i] for i in range(1, len(out) + 1))


def encode(m):
    """Flat integer encoding of a nested monomial (a total tie-break key)."""
    out = []
    stack = [m]
    while stack:
        x = stack.pop()
        if isinstance(x, int):
            out.append(-x)
        else:
            out.append(x[0] if x[0] is not None else -1)
            out.append(len(x[1]) + 1000)
            stack.extend(reversed(x[1]))
    return tuple(out)


class MonomialOrder:
    """Path-word order of kind ``lex`` or ``revlenlex``.

    Letters are compared by ``(arity, precedence rank)`` taken from the
    generator module; ``descending_arity`` flips the arity component (this
    is what the opposite of an order on mixed arities needs).
    """

    symmetrized = False

    def __init__(self, kind, module, descending_arity=False, reverse_precedence=False):
        if kind not in KINDS:
            raise ValueError("unknown order kind %r" % (kind,))
        self.kind = kind
        self.module = module
        self.descending_arity = descending_arity
        self.reverse_precedence = reverse_precedence
        sa = -1 if descending_arity else 1
        sr = -1 if reverse_precedence else 1
        self._letter = {g: (sa * module.arity[g], sr * module.rank[g])
                        for g in range(len(module.names))}
        self._cache = {}

    def letter_key(self, g):
        return self._letter[g]

    def word_key(self, word):
        letters = tuple(self._letter[g] for g in word)
        n = len(word)
        return (n if self.kind == LEX else -n, letters)

    def key(self, m):
        """Path-word key; ``a < b`` in the order iff ``key(a) < key(b)``."""
        k = self._cache.get(m)
        if k is None:
            k = tuple(self.word_key(w) for w in path_words(m))
            self._cache[m] = k
        return k

    def sort_key(self, m):
        return (self.key(m), encode(m))

    def compare(self, a, b):
        if tree_arity(a) != tree_arity(b):
            raise ValueError("monomials of different arity are not compared")
        if a == b:
            return EQ
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return INCOMPARABLE

    def le(self, a, b):
        return self.compare(a, b) in (LT, EQ)

    def opposite(self, module=None):
        """The opposite order, expressed again as a path-word order."""
        kind = REVLENLEX if self.kind == LEX else LEX
        return MonomialOrder(kind, module or self.module,
                             descending_arity=not self.descending_arity,
                             reverse_precedence=not self.reverse_precedence)

    def describe(self):
        return self.kind

    def __repr__(self):
        return "MonomialOrder(%s)" % self.kind


class SymmetrizedOrder:
    """Order on the symmetrization of a nonsymmetric operad.

    Generators of the symmetric module are pairs ``(g, pi)`` of a
    nonsymmetric generator and a permutation; a monomial corresponds to a
    planar monomial ``alpha`` together with the permutation ``sigma`` read
    off its leaves.  Two monomials compare iff they share ``sigma``, and then
    as their planar monomials do.
    """

    symmetrized = True

    def __init__(self, base, module, origin):
        # base: MonomialOrder on the nonsymmetric module
        # origin: symmetric generator id -> (ns generator id, pi)
        self.base = base
        self.module = module
        self.origin = dict(origin)
        self.kind = base.kind
        self._cache = {}

    def straighten(self, m):
        """``(sigma, alpha)`` with ``alpha`` planar over the nonsymmetric generators."""
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        origin = self.origin

        def walk(x):
            if isinstance(x, int):
                return x
            g, pi = origin[x[0]]
            return (g, tuple(walk(x[1][p - 1]) for p in pi))

        planar = walk(m)
        sigma = tuple(leaves(planar))
        alpha = relabel(planar, {leaf: i + 1 for i, leaf in enumerate(sigma)})
        res = (sigma, alpha)
        self._cache[m] = res
        return res

    def key(self, m):
        sigma, alpha = self.straighten(m)
        return (sigma, self.base.key(alpha))

    def sort_key(self, m):
        return (self.key(m), encode(m))

    def compare(self, a, b):
        if tree_arity(a) != tree_arity(b):
            raise ValueError("monomials of different arity are not compared")
        if a == b:
            return EQ
        sa, aa = self.straighten(a)
        sb, ab = self.straighten(b)
        if sa != sb:
            return INCOMPARABLE
        return self.base.compare(aa, ab)

    def le(self, a, b):
        return self.compare(a, b) in (LT, EQ)

    def opposite(self, module=None):
        return SymmetrizedOrder(self.base.opposite(), module or self.module, self.origin)

    def describe(self):
        return "symmetrized " + self.base.kind

    def __repr__(self):
        return "SymmetrizedOrder(%s)" % self.base.kind


def compatibility_violations(order, module, max_weight=2, samples=2000, seed=0,
                             max_arity=None):
    """Randomized check of the compatibility axiom.

    Draws ``alpha <= alpha'`` (same arity) and ``beta``, and for every
    position ``i`` and every pointed shuffle ``w`` checks
    ``w.(alpha o_i beta) <= w.(alpha' o_i beta)`` and
    ``w.(beta o_j alpha) <= w.(beta o_j alpha')``.  Returns the list of
    violating cases (empty when the axiom holds on the sample) and the
    number of comparisons made.
    """
    rng = random.Random(seed)
    pool = _monomial_pool(module, max_weight, max_arity)
    by_arity = {}
    for m in pool:
        by_arity.setdefault(tree_arity(m), []).append(m)
    arities = sorted(by_arity)
    bad = []
    checks = 0
    for _ in range(samples):
        n = rng.choice(arities)
        a, a2 = rng.choice(by_arity[n]), rng.choice(by_arity[n])
        c = order.compare(a, a2)
        if c == GT:
            a, a2 = a2, a
        elif c == INCOMPARABLE:
            continue
        b = rng.choice(pool)
        nb = tree_arity(b)
        for i in range(1, n + 1):
            for w in _shuffles(module, n, nb, i):
                x = _shuffled_graft(a, i, b, w)
                y = _shuffled_graft(a2, i, b, w)
                checks += 1
                if order.compare(x, y) not in (LT, EQ):
                    bad.append((a, a2, b, i, w, "left"))
        for j in range(1, nb + 1):
            for w in _shuffles(module, nb, n, j):
                x = _shuffled_graft(b, j, a, w)
                y = _shuffled_graft(b, j, a2, w)
                checks += 1
                if order.compare(x, y) not in (LT, EQ):
                    bad.append((a, a2, b, j, w, "right"))
    return bad, checks


def strict_monotonicity_violations(order, module, max_weight=2, samples=1000, seed=1):
    """Cases with ``alpha < alpha'`` but ``w.(alpha o_i beta)`` not strictly below."""
    rng = random.Random(seed)
    pool = _monomial_pool(module, max_weight, None)
    by_arity = {}
    for m in pool:
        by_arity.setdefault(tree_arity(m), []).append(m)
    arities = sorted(by_arity)
    bad = []
    for _ in range(samples):
        n = rng.choice(arities)
        a, a2 = rng.choice(by_arity[n]), rng.choice(by_arity[n])
        if order.compare(a, a2) != LT:
            continue
        b = rng.choice(pool)
        nb = tree_arity(b)
        for i in range(1, n + 1):
            for w in _shuffles(module, n, nb, i):
                if order.compare(_shuffled_graft(a, i, b, w),
                                 _shuffled_graft(a2, i, b, w)) != LT:
                    bad.append((a, a2, b, i, w))
    return bad


def _shuffles(module, m, n, i):
    if module.symmetric:
        return pointed_shuffles(m, n, i)
    return (tuple(range(1, m + n)),)


def _shuffled_graft(a, i, b, w):
    # a pointed shuffle of a graft of canonical trees is canonical again
    g = graft_planar(a, i, b)
    return relabel(g, {k + 1: w[k] for k in range(len(w))})


def _monomial_pool(module, max_weight, max_arity):
    pool = []
    top = max_arity or (max_weight * (module.max_arity - 1) + 1)
    for s in range(1, max_weight + 1):
        for r in range(1, top + 1):
            pool.extend(module.monomials(s, r))
    return pool


def compare(order, a, b):
    """``LT``, ``EQ``, ``GT`` or ``INCOMPARABLE`` for two monomials of equal arity."""
    return order.compare(a, b)
