"""
Quadratic presentations, rewriting and PBW certification.

A presentation is a generator module, a list of weight-2 relations and a
monomial order.  ``quadratic_split`` row-reduces the Sigma-closure of the
relations with columns sorted by the order: pivots are the leading
monomials ``I``, the rest is ``J``, and every leading monomial rewrites into
a combination of strictly larger ``J`` monomials.

Dimensions of ``P_(s)(r)`` come from an explicit spanning set of the ideal
component: the closure of the relations in weight 2, and in weight ``s``
all pointed-shuffle compositions of a weight ``s-1`` ideal element with a
generator corolla, on either side.
"""

import heapq
import json
import warnings
from itertools import permutations

from .free import Element, OperadError, pointed_shuffles
from .linalg import RowEchelon
from .orders import INCOMPARABLE, LT, SymmetrizedOrder
from .trees import arity as tree_arity, edge_restriction, internal_edges, replace_at


class PBWError(OperadError):
    pass


class QuadraticPresentation:
    """Generators, weight-2 relations and a monomial order."""

    def __init__(self, name, module, relations, order, check_order=False):
        self.name = name
        self.module = module
        self.field = module.field
        self.order = order
        rels = []
        for k, x in enumerate(relations):
            if not isinstance(x, Element):
                raise PBWError("relation %d is not an operad element" % (k + 1))
            if not x:
                warnings.warn("relation %d of %s is zero after canonicalization; dropped"
                              % (k + 1, name))
                continue
            ws = x.weights()
            if ws != {2}:
                raise PBWError("relation %d is not quadratic (weights %s)" % (k + 1, sorted(ws)))
            ar = {tree_arity(m) for m in x}
            if len(ar) != 1:
                raise PBWError("relation %d mixes arities %s" % (k + 1, sorted(ar)))
            rels.append(x)
        self.relations = rels
        self._columns = {}
        self._ideal = {}
        self._split = None
        if check_order:
            from .orders import compatibility_violations
            bad, _ = compatibility_violations(order, module)
            if bad:
                raise PBWError("order fails the compatibility axiom on %d samples" % len(bad))

    def __repr__(self):
        return "QuadraticPresentation(%s)" % self.name

    @property
    def symmetric(self):
        return self.module.symmetric

    def relation_arities(self):
        return sorted({x.arity() for x in self.relations})

    def quadratic_arities(self):
        """Arities carrying weight-2 monomials."""
        ks = sorted(self.module.by_arity)
        return sorted({a + b - 1 for a in ks for b in ks})

    # -- columns -----------------------------------------------------------

    def columns(self, s, r):
        """Weight-``s`` arity-``r`` monomials sorted ascending, with their index."""
        key = (s, r)
        hit = self._columns.get(key)
        if hit is None:
            mons = sorted(self.module.monomials(s, r), key=self.order.sort_key)
            hit = (mons, {m: k for k, m in enumerate(mons)})
            self._columns[key] = hit
        return hit

    def to_row(self, x, s, r):
        _, idx = self.columns(s, r)
        return {idx[m]: c for m, c in x.items()}

    def from_row(self, row, s, r):
        mons, _ = self.columns(s, r)
        return Element({mons[c]: v for c, v in row.items()}, self.field)

    # -- ideal -------------------------------------------------------------

    def closure_rows(self, r):
        """Spanning rows of ``R-bar(r)``, the Sigma-closure of the relations."""
        out = []
        for x in self.relations:
            if x.arity() != r:
                continue
            if self.symmetric:
                for w in permutations(range(1, r + 1)):
                    out.append(self.to_row(self.module.act(w, x), 2, r))
            else:
                out.append(self.to_row(x, 2, r))
        return out

    def ideal(self, s, r):
        """Echelon basis (``RowEchelon``) of the ideal component ``(R-bar)_(s)(r)``."""
        key = (s, r)
        hit = self._ideal.get(key)
        if hit is not None:
            return hit
        ech = RowEchelon(self.field)
        if s == 2:
            for row in self.closure_rows(r):
                ech.add(row)
        elif s > 2:
            mod = self.module
            for g in range(len(mod.names)):
                k = mod.arity[g]
                rr = r - k + 1
                if rr < 1:
                    continue
                lower = self.ideal(s - 1, rr)
                if not lower.rank:
                    continue
                gen = mod.corolla(g)
                elems = [self.from_row(row, s - 1, rr) for row in lower.rows.values()]
                for x in elems:
                    for i in range(1, rr + 1):
                        for w in self._shuffles(rr, k, i):
                            ech.add(self.to_row(mod.compose(x, i, gen, w), s, r))
                    for i in range(1, k + 1):
                        for w in self._shuffles(k, rr, i):
                            ech.add(self.to_row(mod.compose(gen, i, x, w), s, r))
        self._ideal[key] = ech
        return ech

    def _shuffles(self, m, n, i):
        if self.symmetric:
            return pointed_shuffles(m, n, i)
        return (None,)

    def ideal_component_matrix(self, s, r):
        """Rows (dicts column -> scalar) spanning the ideal in cell ``(s, r)``."""
        return [dict(row) for _, row in sorted(self.ideal(s, r).rows.items())]

    def ideal_contains(self, x, s, r):
        return self.ideal(s, r).contains(self.to_row(x, s, r))

    def dim(self, s, r):
        """``dim P_(s)(r)``: monomial count minus ideal rank."""
        n = len(self.columns(s, r)[0])
        if s < 2:
            return n
        return n - self.ideal(s, r).rank

    def dims(self, max_weight, max_arity):
        return {(s, r): self.dim(s, r)
                for s in range(1, max_weight + 1) for r in range(1, max_arity + 1)}

    def total_dim(self, r, max_weight=None):
        """``dim P(r)`` summed over weights (weights bounded by the arity when generators have arity >= 2)."""
        if max_weight is None:
            if min(self.module.by_arity) < 2:
                raise PBWError("unary generators: give max_weight explicitly")
            max_weight = r - 1
        return sum(self.dim(s, r) for s in range(1, max_weight + 1)) + (1 if r == 1 else 0)

    # -- splitting ---------------------------------------------------------

    def split(self):
        if self._split is None:
            self._split = quadratic_split(self)
        return self._split


class SplitFailure(PBWError):
    def __init__(self, message, arity=None, row=None):
        super().__init__(message)
        self.arity = arity
        self.row = row


class RewriteSystem:
    """Leading monomials ``I``, quadratic basis part ``J`` and ``alpha_i -> sum c_ij alpha_j``."""

    def __init__(self, presentation, leading, basis, rewrite):
        self.presentation = presentation
        self.module = presentation.module
        self.order = presentation.order
        self.field = presentation.field
        self.leading = leading        # arity -> list of I monomials (ascending)
        self.basis = basis            # arity -> list of J monomials (ascending)
        self.rewrite = rewrite        # I monomial -> {J monomial: c_ij}
        self.I = frozenset(m for v in leading.values() for m in v)
        self.J = frozenset(m for v in basis.values() for m in v)

    def quadratic_basis(self):
        return sorted(self.J, key=lambda m: (tree_arity(m), self.order.sort_key(m)))

    def leading_monomials(self):
        return sorted(self.I, key=lambda m: (tree_arity(m), self.order.sort_key(m)))

    def edge_restrictions(self, m):
        return [(p, edge_restriction(m, p)) for p in internal_edges(m)]

    def admissible_edges(self, m):
        """Internal edges (as vertex paths) whose restriction is in ``J``."""
        return [p for p in internal_edges(m) if edge_restriction(m, p)[0] not in self.I]

    def is_basis_monomial(self, m):
        for p in internal_edges(m):
            if edge_restriction(m, p)[0] in self.I:
                return False
        return True

    def is_dual_basis_monomial(self, m):
        for p in internal_edges(m):
            if edge_restriction(m, p)[0] not in self.I:
                return False
        return True

    def basis_monomials(self, s, r):
        mons, _ = self.presentation.columns(s, r)
        return [m for m in mons if self.is_basis_monomial(m)]

    def dual_basis_monomials(self, s, r):
        mons, _ = self.presentation.columns(s, r)
        return [m for m in mons if self.is_dual_basis_monomial(m)]

    # -- rewriting ---------------------------------------------------------

    def rewrite_at(self, m, path):
        """Rewrite the leading monomial sitting on edge ``path`` of ``m``."""
        mod = self.module
        F = self.field
        lower_path = path[:-1]
        q, blocks = edge_restriction(m, path)
        targets = self.rewrite[q]
        out = {}
        if mod.has_odd:
            tagged_blocks, nxt = [], 2
            for b in blocks:
                tb, nxt = _tag(b, nxt)
                tagged_blocks.append(tb)
            ref = _plug(_tag(q, 0)[0], tagged_blocks)
            sign1 = _odd_parity(ref, mod)
            for alpha, c in targets.items():
                raw = _plug(_tag(alpha, 0)[0], tagged_blocks)
                coeff = -c if sign1 else c
                for t, v in mod.canonicalize_tagged(raw, coeff).items():
                    full = replace_at(m, lower_path, t)
                    out[full] = F.reduce(out.get(full, 0) + v)
        else:
            for alpha, c in targets.items():
                raw = _plug(alpha, blocks)
                for t, v in mod.canonicalize(raw, c).items():
                    full = replace_at(m, lower_path, t)
                    out[full] = F.reduce(out.get(full, 0) + v)
        return {t: v for t, v in out.items() if v != 0}

    def normal_form(self, x, strict=False):
        """Rewrite every term into basis monomials (terms processed smallest first)."""
        if not isinstance(x, Element):
            x = self.module.monomial(x)
        F = self.field
        order = self.order
        pending = dict(x.items())
        heap = [(order.sort_key(m), m) for m in pending]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = pending.pop(m, None)
            if c is None or c == 0:
                continue
            path = None
            for p in internal_edges(m):
                if edge_restriction(m, p)[0] in self.I:
                    path = p
                    break
            if path is None:
                out[m] = F.reduce(out.get(m, 0) + c)
                continue
            for t, v in self.rewrite_at(m, path).items():
                if strict and order.compare(m, t) != LT:
                    raise PBWError("rewriting %s produced the non-larger %s"
                                   % (self.module.format_monomial(m),
                                      self.module.format_monomial(t)))
                if t in pending:
                    pending[t] = F.reduce(pending[t] + c * v)
                else:
                    pending[t] = F.reduce(c * v)
                    heapq.heappush(heap, (order.sort_key(t), t))
        return Element(out, F)

    def normal_form_matrix(self, s, r):
        """Normal forms of all monomials of a cell, as ``{monomial: Element}``."""
        mons, _ = self.presentation.columns(s, r)
        return {m: self.normal_form(m) for m in mons}


def _tag(t, start):
    if isinstance(t, int):
        return t, start
    tag = start
    nxt = start + 1
    kids = []
    for c in t[1]:
        k, nxt = _tag(c, nxt)
        kids.append(k)
    return (t[0], tuple(kids), tag), nxt


def _plug(t, blocks):
    """Replace leaf ``l`` of ``t`` by ``blocks[l-1]``."""
    if isinstance(t, int):
        return blocks[t - 1]
    return (t[0], tuple(_plug(c, blocks) for c in t[1])) + tuple(t[2:])


def _odd_parity(t, module):
    from .free import _perm_sign, _preorder_odd_tags
    tags = _preorder_odd_tags(t, module)
    return _perm_sign(tags) if tags else 0


def quadratic_split(p):
    """Leading/basis split of the weight-2 relations; raises ``SplitFailure``."""
    order = p.order
    leading, basis, rewrite = {}, {}, {}
    for r in p.quadratic_arities():
        mons, _ = p.columns(2, r)
        if not mons:
            continue
        ech = p.ideal(2, r)
        red = ech.reduced_rows()
        lead = []
        for piv, row in red.items():
            m = mons[piv]
            for c in row:
                if c == piv:
                    continue
                verdict = order.compare(m, mons[c])
                if verdict != LT:
                    rel = p.from_row(row, 2, r)
                    raise SplitFailure(
                        "relation %s has no strict leading monomial (%s vs %s: %s)"
                        % (p.module.format(rel), p.module.format_monomial(m),
                           p.module.format_monomial(mons[c]),
                           "incomparable" if verdict == INCOMPARABLE else verdict),
                        arity=r, row=rel)
            lead.append(m)
            F = p.field
            rewrite[m] = {mons[c]: F.reduce(-v) for c, v in row.items() if c != piv}
        leads = set(lead)
        leading[r] = lead
        basis[r] = [m for m in mons if m not in leads]
    return RewriteSystem(p, leading, basis, rewrite)


# -- certification -------------------------------------------------------------

class Cell:
    __slots__ = ("s", "r", "monomials", "rank", "dim", "candidates", "ok", "witness", "note")

    def __init__(self, s, r, monomials, rank, dim, candidates, ok, witness=None, note=None):
        self.s, self.r = s, r
        self.monomials, self.rank, self.dim = monomials, rank, dim
        self.candidates, self.ok = candidates, ok
        self.witness, self.note = witness, note

    def record(self):
        d = {"s": self.s, "r": self.r, "monomials": self.monomials, "ideal_rank": self.rank,
             "dim": self.dim, "basis_candidates": self.candidates, "ok": self.ok}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note:
            d["note"] = self.note
        return d


class PBWReport:
    def __init__(self, name, split, cells, max_weight, max_arity, failure=None):
        self.name = name
        self.split = split
        self.cells = cells
        self.max_weight = max_weight
        self.max_arity = max_arity
        self.failure = failure

    @property
    def ok(self):
        return self.failure is None and all(c.ok for c in self.cells)

    def first_failure(self):
        for c in self.cells:
            if not c.ok:
                return c
        return None

    def cell(self, s, r):
        for c in self.cells:
            if c.s == s and c.r == r:
                return c
        raise KeyError((s, r))

    def to_text(self):
        lines = ["operad %s: PBW check up to weight %d, arity %d"
                 % (self.name, self.max_weight, self.max_arity)]
        if self.failure:
            lines.append("quadratic split failed: %s" % self.failure)
            lines.append("verdict: NOT PBW")
            return "\n".join(lines)
        lines.append("%3s %3s %10s %10s %8s %10s  %s"
                     % ("s", "r", "monomials", "ideal", "dim", "candidates", "ok"))
        for c in self.cells:
            lines.append("%3d %3d %10d %10d %8d %10d  %s"
                         % (c.s, c.r, c.monomials, c.rank, c.dim, c.candidates,
                            "yes" if c.ok else "NO"))
            if c.witness:
                lines.append("    witness: %s" % c.witness)
        lines.append("verdict: %s" % ("PBW up to bounds" if self.ok else "NOT PBW"))
        return "\n".join(lines)

    def to_json_lines(self):
        out = []
        if self.failure:
            out.append(json.dumps({"operad": self.name, "split_failure": str(self.failure)}))
        for c in self.cells:
            d = {"operad": self.name}
            d.update(c.record())
            out.append(json.dumps(d))
        out.append(json.dumps({"operad": self.name, "verdict": self.ok}))
        return "\n".join(out)


def check_pbw(p, max_weight, max_arity):
    """Compare condition-2 monomial counts with ``dim P_(s)(r)`` cell by cell."""
    try:
        rs = p.split()
    except SplitFailure as e:
        return PBWReport(p.name, None, [], max_weight, max_arity, failure=str(e))
    mod = p.module
    cells = []
    for s in range(1, max_weight + 1):
        for r in range(1, max_arity + 1):
            mons, _ = p.columns(s, r)
            if not mons:
                continue
            rank = p.ideal(s, r).rank if s >= 2 else 0
            dim = len(mons) - rank
            cand = rs.basis_monomials(s, r)
            ok = len(cand) == dim
            witness = None
            if not ok:
                witness = _witness(p, rs, s, r, cand)
            elif s >= 2:
                # the candidates must also be independent modulo the ideal
                ech = p.ideal(s, r)
                _, idx = p.columns(s, r)
                for m in cand:
                    if ech.contains({idx[m]: p.field(1)}):
                        ok = False
                        witness = "%s lies in the ideal" % mod.format_monomial(m)
                        break
            cells.append(Cell(s, r, len(mons), rank, dim, len(cand), ok, witness))
    return PBWReport(p.name, rs, cells, max_weight, max_arity)


def _witness(p, rs, s, r, cand):
    """A linear dependency among candidates modulo the ideal, or a missing direction."""
    mod = p.module
    F = p.field
    _, idx = p.columns(s, r)
    ech = p.ideal(s, r)
    if len(cand) > len(p.columns(s, r)[0]) - ech.rank:
        # track combinations: reduce candidates one by one against ideal + previous
        basis = RowEchelon(F)
        for row in ech.rows.values():
            basis.add(dict(row))
        for m in cand:
            if basis.contains({idx[m]: F(1)}):
                return "%s is dependent on earlier candidates modulo the ideal" % mod.format_monomial(m)
            basis.add({idx[m]: F(1)})
        return "candidate count exceeds dimension"
    span = RowEchelon(F)
    for row in ech.rows.values():
        span.add(dict(row))
    for m in cand:
        span.add({idx[m]: F(1)})
    mons, _ = p.columns(s, r)
    for m in mons:
        if not span.contains({idx[m]: F(1)}):
            return "%s is not reached by candidates modulo the ideal" % mod.format_monomial(m)
    return "candidate count below dimension"


# -- symmetrization ------------------------------------------------------------

def symmetrize(p, name=None):
    """Symmetric presentation whose generators are the orbits ``g.pi`` of the nonsymmetric ones.

    The order compares two monomials only when their leaf permutations agree,
    and then as the underlying planar monomials.
    """
    from .free import GeneratorModule, SYMMETRIC
    mod = p.module
    if mod.symmetric:
        raise PBWError("symmetrize expects a nonsymmetric presentation")
    names, arities, degrees, origin = [], [], [], {}
    index = {}
    for g in range(len(mod.names)):
        k = mod.arity[g]
        perms = sorted(permutations(range(1, k + 1)))
        for pi in perms:
            gid = len(names)
            index[g, pi] = gid
            origin[gid] = (g, pi)
            ident = all(pi[t] == t + 1 for t in range(k))
            names.append(mod.names[g] if ident else "%s_%s" % (mod.names[g], "".join(map(str, pi))))
            arities.append(k)
            degrees.append(mod.degree[g])
    actions = {}
    for gid, (g, pi) in origin.items():
        k = mod.arity[g]
        for j in range(1, k):
            # (g.pi).s_j = g.(s_j o pi): swap the values j and j+1 in pi
            new = tuple(j + 1 if v == j else j if v == j + 1 else v for v in pi)
            actions[gid, j] = {index[g, new]: 1}
    precedence = []
    for g in sorted(range(len(mod.names)), key=mod.letter_key):
        k = mod.arity[g]
        for pi in sorted(permutations(range(1, k + 1))):
            precedence.append(index[g, pi])
    smod = GeneratorModule(names, arities, degrees, actions, SYMMETRIC, mod.field, precedence)
    relabel_gen = {g: index[g, tuple(range(1, mod.arity[g] + 1))] for g in range(len(mod.names))}

    def lift(t):
        if isinstance(t, int):
            return t
        return (relabel_gen[t[0]], tuple(lift(c) for c in t[1]))

    rels = [Element({lift(m): c for m, c in x.items()}, mod.field) for x in p.relations]
    order = SymmetrizedOrder(p.order, smod, origin)
    return QuadraticPresentation(name or ("%s-sym" % p.name), smod, rels, order)
