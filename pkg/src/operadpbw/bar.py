"""
Reduced bar complex of a quadratic operad, cell by cell.

A chain is a two-level tree: an outer tree whose vertices are labelled by
basis monomials ``p_v`` of ``P`` (weight >= 1), children sorted by minimum
leaf, child ``l`` plugged into leaf ``l`` of ``p_v``.  Flattening gives the
pair ``(beta, S)``: the monomial obtained by plugging, and the set ``S`` of
its internal edges lying inside a component.

The basis of ``P`` in each cell is the set of monomials that are not pivots
of the ideal echelon (columns sorted by the order); reducing modulo the
echelon gives normal forms.  For a PBW presentation these are exactly the
condition-2 monomials.

Orientation: a chain is the tensor product of the suspended labels
``s p_v`` (degree ``1 + |p_v|``) in depth-first order of the outer tree.
Contracting the edge from ``v`` to its child ``u`` at entry ``j``:

* move ``s p_u`` next to ``s p_v`` (Koszul sign against the subtrees of
  the children of ``v`` before ``j``);
* apply ``s p_v (x) s p_u -> (-1)^|s p_v| s(p_v o_j p_u)`` in place, which
  costs the Koszul sign of passing all labels before ``v``; the composite
  is taken in the free operad with its own Koszul sign and reduced in ``P``;
* reorder the children of the merged vertex by minimum leaf (Koszul sign
  of the block permutation).
"""

import json
from itertools import combinations

from .free import _perm_sign
from .linalg import RowEchelon
from .pbw import _plug, _tag
from .trees import arity as tree_arity, internal_edges, leaves, replace_at, weight


class CellTooLarge(Exception):
    pass


def _min_leaf(t):
    return min(leaves(t))


def _leaf_paths(p):
    out = {}

    def walk(x, path):
        if isinstance(x, int):
            out[x] = path
            return
        for k, c in enumerate(x[1]):
            walk(c, path + (k,))

    walk(p, ())
    return out


def collapse(beta, marked):
    """Outer tree of ``(beta, S)``; ``marked`` holds vertex paths of edges in ``S``."""
    marked = set(marked)

    def component(x, path):
        blocks = []

        def pattern(y, ypath, top):
            if isinstance(y, int):
                blocks.append((y, None))
                return -len(blocks)
            if not top and ypath not in marked:
                blocks.append((y, ypath))
                return -len(blocks)
            return (y[0], tuple(pattern(c, ypath + (k,), False) for k, c in enumerate(y[1])))

        pat = pattern(x, path, True)
        mins = [_min_leaf(b) for b, _ in blocks]
        order = sorted(range(len(blocks)), key=mins.__getitem__)
        rank = {-(o + 1): r + 1 for r, o in enumerate(order)}
        label = _relabel_neg(pat, rank)
        kids = []
        for o in order:
            b, bpath = blocks[o]
            kids.append(b if bpath is None else component(b, bpath))
        return (label, tuple(kids))

    if isinstance(beta, int):
        return beta
    return component(beta, ())


def _relabel_neg(t, rank):
    if isinstance(t, int):
        return rank[t]
    return (t[0], tuple(_relabel_neg(c, rank) for c in t[1]))


def flatten(outer):
    """``(beta, S)`` of an outer tree; ``S`` is a frozenset of vertex paths."""
    marked = []

    def walk(x, base):
        if isinstance(x, int):
            return x
        p, kids = x
        lp = _leaf_paths(p)
        for path in internal_edges(p):
            marked.append(base + path)
        flat = [walk(c, base + lp[l + 1]) for l, c in enumerate(kids)]
        return _plug(p, flat)

    beta = walk(outer, ())
    return beta, frozenset(marked)


def outer_vertices(t):
    """Outer vertex labels in depth-first order."""
    out = []
    stack = [t]
    while stack:
        x = stack.pop()
        if not isinstance(x, int):
            out.append(x[0])
            stack.extend(reversed(x[1]))
    return out


class BarElement:
    """A basis chain, with both its outer-tree form and its ``(beta, S)`` form."""

    __slots__ = ("outer", "beta", "marked")

    def __init__(self, outer):
        self.outer = outer
        self.beta, self.marked = flatten(outer)

    @property
    def degree(self):
        return len(outer_vertices(self.outer))

    @property
    def weight(self):
        return weight(self.beta)

    @property
    def cutting(self):
        return [e for e in internal_edges(self.beta) if e not in self.marked]

    def __eq__(self, other):
        return isinstance(other, BarElement) and self.outer == other.outer

    def __hash__(self):
        return hash(self.outer)

    def __repr__(self):
        return "BarElement(%r, S=%s)" % (self.beta, sorted(self.marked))


class BarComplex:
    """Chains, differential and homology of ``B(P)`` for a presentation ``p``."""

    def __init__(self, p, cap=20000):
        self.p = p
        self.module = p.module
        self.field = p.field
        self.cap = cap
        self._chains = {}
        self._reduced = {}

    # -- basis of P ------------------------------------------------------

    def is_basis_monomial(self, m):
        s = weight(m)
        if s < 2:
            return True
        _, idx = self.p.columns(s, tree_arity(m))
        return idx[m] not in self.p.ideal(s, tree_arity(m)).rows

    def reduce(self, terms, s, r):
        """Normal form in ``P`` of ``{monomial: coeff}`` (weight ``s``, arity ``r``)."""
        if s < 2:
            return dict(terms)
        mons, idx = self.p.columns(s, r)
        rem = self.p.ideal(s, r).reduce({idx[m]: c for m, c in terms.items()})
        return {mons[c]: v for c, v in rem.items()}

    def reduce_monomial(self, m):
        hit = self._reduced.get(m)
        if hit is None:
            hit = self.reduce({m: self.field(1)}, weight(m), tree_arity(m))
            self._reduced[m] = hit
        return hit

    # -- chains ----------------------------------------------------------

    def chains(self, s, r, d):
        """Basis chains of weight ``s``, arity ``r`` and degree ``d`` (outer trees, sorted)."""
        key = (s, r, d)
        hit = self._chains.get(key)
        if hit is not None:
            return hit
        out = []
        if 1 <= d <= s:
            mons, _ = self.p.columns(s, r)
            k = s - d
            for beta in mons:
                edges = internal_edges(beta)
                for S in combinations(edges, k):
                    t = collapse(beta, S)
                    if all(self.is_basis_monomial(lbl) for lbl in outer_vertices(t)):
                        out.append(t)
                        if len(out) > self.cap:
                            raise CellTooLarge("more than %d chains in cell (%d,%d,%d)"
                                               % (self.cap, s, r, d))
        out.sort(key=repr)
        self._chains[key] = out
        return out

    def bar_basis(self, s, r, d):
        return [BarElement(t) for t in self.chains(s, r, d)]

    # -- differential ----------------------------------------------------

    def _deg(self, x):
        """Total degree of an outer subtree (sum of ``1 + |p_v|``)."""
        if isinstance(x, int):
            return 0
        return 1 + self.module.degree_of(x[0]) + sum(self._deg(c) for c in x[1])

    def differential(self, t):
        """``delta t`` as ``{outer tree: coeff}``."""
        mod = self.module
        out = {}

        prefix = [0]

        def visit(x, path):
            if isinstance(x, int):
                return
            pv, kids = x
            ahead = prefix[0]
            prefix[0] += 1 + mod.degree_of(pv)
            before = 0
            for j, u in enumerate(kids):
                if not isinstance(u, int):
                    self._contract(t, path, x, j, ahead, before, out)
                before += self._deg(u)
            for j, u in enumerate(kids):
                visit(u, path + (j,))

        visit(t, ())
        return {k: v for k, v in out.items() if v != 0}

    def _contract(self, t, path, v, j, ahead, before, out):
        F = self.field
        mod = self.module
        pv, vkids = v
        pu, ukids = vkids[j]
        deg_u = 1 + mod.degree_of(pu)
        deg_v = 1 + mod.degree_of(pv)
        sign = (ahead + deg_u * before + deg_v) % 2

        # blocks of the merged vertex, in tensor order, then sorted
        seq = list(vkids[:j]) + list(ukids) + list(vkids[j + 1:])
        order = sorted(range(len(seq)), key=lambda k: _block_min(seq[k]))
        rank = {o: r + 1 for r, o in enumerate(order)}
        # suspended labels have odd degree, so block moves always count
        odd = [k for k in order if self._deg(seq[k]) % 2]
        if odd and _perm_sign(odd):
            sign ^= 1

        # composite p_v o_j p_u in the free operad, leaves relabelled by block rank
        u_leaves = [rank[j + k] for k in range(len(ukids))]
        v_leaves = []
        for l in range(len(vkids)):
            if l < j:
                v_leaves.append(rank[l])
            elif l > j:
                v_leaves.append(rank[l + len(ukids) - 1])
        if mod.has_odd:
            tu, _ = _tag(pu, 1000)
            tv, _ = _tag(pv, 0)
            inner = _plug(tu, u_leaves)
            flat = v_leaves[:j] + [inner] + v_leaves[j:]
            raw = _plug(tv, flat)
            composite = mod.canonicalize_tagged(raw)
        else:
            inner = _plug(pu, u_leaves)
            flat = v_leaves[:j] + [inner] + v_leaves[j:]
            composite = mod.canonicalize(_plug(pv, flat))
        new_kids = tuple(seq[o] for o in order)
        s_m = weight(pv) + weight(pu)
        r_m = len(seq)
        for q, c in composite.items():
            for n, a in self.reduce({q: c}, s_m, r_m).items():
                coeff = -a if sign else a
                nt = replace_at(t, path, (n, new_kids))
                out[nt] = F.reduce(out.get(nt, 0) + coeff)

    # -- homology --------------------------------------------------------

    def matrix(self, s, r, d):
        """Rows of ``delta: C_d -> C_(d-1)`` indexed by chain position."""
        src = self.chains(s, r, d)
        _, idx = self._index(s, r, d - 1)
        rows = []
        for t in src:
            img = self.differential(t)
            rows.append({idx[k]: v for k, v in img.items()})
        return rows

    def _index(self, s, r, d):
        ch = self.chains(s, r, d)
        return ch, {t: k for k, t in enumerate(ch)}

    def delta_squared_zero(self, s, r, d):
        """Check ``delta o delta = 0`` on every chain of degree ``d``."""
        F = self.field
        for t in self.chains(s, r, d):
            acc = {}
            for x, c in self.differential(t).items():
                for y, e in self.differential(x).items():
                    acc[y] = F.reduce(acc.get(y, 0) + c * e)
            if any(v != 0 for v in acc.values()):
                return False, t
        return True, None

    def cell(self, s, r, check_square=True):
        F = self.field
        try:
            dims = {d: len(self.chains(s, r, d)) for d in range(1, s + 1)}
        except CellTooLarge as e:
            return HomologyCell(s, r, status="capped", note=str(e))
        ranks = {}
        for d in range(2, s + 1):
            ech = RowEchelon(F)
            for row in self.matrix(s, r, d):
                ech.add(row)
            ranks[d] = ech.rank
        ranks[1] = 0
        ranks[s + 1] = 0
        hom = {d: dims[d] - ranks[d] - ranks[d + 1] for d in range(1, s + 1)}
        square_ok = True
        if check_square:
            for d in range(3, s + 1):
                ok, bad = self.delta_squared_zero(s, r, d)
                if not ok:
                    square_ok = False
                    break
        kdim = dims[s] - ranks[s]
        return HomologyCell(s, r, dims=dims, ranks=ranks, homology=hom, kdim=kdim,
                            square_ok=square_ok)

    def koszul_dim(self, s, r):
        return self.cell(s, r, check_square=False).kdim


class HomologyCell:
    def __init__(self, s, r, dims=None, ranks=None, homology=None, kdim=None,
                 square_ok=True, status="ok", note=None):
        self.s, self.r = s, r
        self.dims = dims or {}
        self.ranks = ranks or {}
        self.homology = homology or {}
        self.kdim = kdim
        self.square_ok = square_ok
        self.status = status
        self.note = note

    @property
    def diagonal(self):
        return self.status == "ok" and all(h == 0 for d, h in self.homology.items() if d != self.s)

    @property
    def euler_chains(self):
        return sum((-1) ** d * n for d, n in self.dims.items())

    @property
    def euler_homology(self):
        return sum((-1) ** d * n for d, n in self.homology.items())


class HomologyReport:
    def __init__(self, name, cells, max_weight, max_arity, field):
        self.name = name
        self.cells = cells
        self.max_weight = max_weight
        self.max_arity = max_arity
        self.field = field

    @property
    def diagonal(self):
        return all(c.diagonal for c in self.cells)

    @property
    def square_ok(self):
        return all(c.square_ok for c in self.cells)

    @property
    def complete(self):
        return all(c.status == "ok" for c in self.cells)

    def cell(self, s, r):
        for c in self.cells:
            if (c.s, c.r) == (s, r):
                return c
        raise KeyError((s, r))

    def to_text(self):
        lines = ["operad %s: bar homology over %s up to weight %d, arity %d"
                 % (self.name, self.field.name, self.max_weight, self.max_arity)]
        lines.append("%3s %3s  %-28s %-22s %6s  %s" % ("s", "r", "chains by degree", "homology by degree",
                                                    "K", "diagonal"))
        for c in self.cells:
            if c.status != "ok":
                lines.append("%3d %3d  skipped: %s" % (c.s, c.r, c.note))
                continue
            ch = " ".join("%d" % c.dims[d] for d in sorted(c.dims))
            hm = " ".join("%d" % c.homology[d] for d in sorted(c.homology))
            flag = "yes" if c.diagonal else "NO"
            if not c.square_ok:
                flag += " (d^2 != 0)"
            lines.append("%3d %3d  %-28s %-22s %6d  %s" % (c.s, c.r, ch, hm, c.kdim, flag))
        lines.append("verdict: %s" % ("diagonal (Koszul up to bounds)" if self.diagonal and self.square_ok
                                      else "NOT diagonal" if self.complete else "incomplete"))
        return "\n".join(lines)

    def records(self):
        for c in self.cells:
            if c.status != "ok":
                yield {"s": c.s, "r": c.r, "status": c.status, "note": c.note}
                continue
            for d in sorted(c.homology):
                yield {"s": c.s, "r": c.r, "d": d, "value": c.homology[d],
                       "chains": c.dims[d]}

    def to_json_lines(self):
        out = [json.dumps(dict(operad=self.name, **rec)) for rec in self.records()]
        out.append(json.dumps({"operad": self.name, "diagonal": self.diagonal,
                               "delta_squared_zero": self.square_ok}))
        return "\n".join(out)


def _block_min(b):
    return b if isinstance(b, int) else _min_leaf_outer(b)


def _min_leaf_outer(t):
    return min(_block_min(c) for c in t[1])


def homology(p, max_weight, max_arity, cap=20000, check_square=True):
    """Homology report of ``B(P)`` for all cells ``s <= W``, ``r <= R``."""
    bc = BarComplex(p, cap=cap)
    cells = []
    for s in range(1, max_weight + 1):
        for r in range(1, max_arity + 1):
            if not p.columns(s, r)[0]:
                continue
            cells.append(bc.cell(s, r, check_square=check_square))
    return HomologyReport(p.name, cells, max_weight, max_arity, p.field)


def admissible_edges(rs, beta):
    """Internal edges of ``beta`` whose two-vertex restriction is a basis monomial."""
    return rs.admissible_edges(beta)


def _complex(p):
    bc = getattr(p, "_bar_complex", None)
    if bc is None:
        bc = p._bar_complex = BarComplex(p)
    return bc


def bar_basis(p, s, r, d):
    """Basis chains ``(beta, S)`` of weight ``s``, arity ``r`` and degree ``d``."""
    return _complex(p).bar_basis(s, r, d)


def bar_differential(p, element):
    """``delta`` of a basis chain, as ``{BarElement: coeff}``."""
    outer = element.outer if isinstance(element, BarElement) else element
    return {BarElement(t): c for t, c in _complex(p).differential(outer).items()}
