"""
Koszul dual presentations.

From a split ``R-bar = span{alpha_i - sum_j c_ij alpha_j}`` the orthogonal
complement for the pairing in which dual monomials pair to 1 with their
namesakes is ``span{alpha_j^# + sum_i c_ij alpha_i^#}``.  A quadratic dual
monomial ``w.(x1 o_i x2)`` is then multiplied by a sign depending on the
mode:

``kdual``
    ``(-1)^|x1|``; generators move to degree ``1 - d``.
``shriek``
    ``eps(w) (-1)^(|x1|(n2-1)) (-1)^((i-1)(n2-1))``; only for binary
    generators, which keep their degree.

On dual generators the symmetric groups act by the transpose of the
original action, tensored with the sign representation in ``shriek`` mode.
The dual order is the opposite order.
"""

import warnings

from .free import Element, GeneratorModule, OperadError, permutation_sign
from .orders import MonomialOrder, SymmetrizedOrder
from .pbw import QuadraticPresentation
from .trees import leaves

KDUAL = "kdual"
SHRIEK = "shriek"
MODES = (KDUAL, SHRIEK)
SUFFIX = "_dual"


class DualError(OperadError):
    pass


def dual_name(name):
    """Toggle the ``_dual`` suffix."""
    if name.endswith(SUFFIX):
        return name[:-len(SUFFIX)]
    return name + SUFFIX


def dual_module(mod, mode):
    if mode not in MODES:
        raise DualError("unknown mode %r (expected kdual or shriek)" % (mode,))
    if mode == SHRIEK and any(k != 2 for k in mod.arity):
        raise DualError("shriek mode needs binary generators only")
    names = [dual_name(n) for n in mod.names]
    degrees = list(mod.degree) if mode == SHRIEK else [1 - d for d in mod.degree]
    actions = None
    if mod.symmetric:
        actions = {}
        for g in range(len(names)):
            for j in range(1, mod.arity[g]):
                actions[g, j] = {}
        for (g, j), img in mod.actions.items():
            for h, c in img.items():
                # transpose: h^# . s_j picks up the coefficient of h in g . s_j
                actions[h, j][g] = -c if mode == SHRIEK else c
    precedence = []
    for k in sorted(mod.by_arity):
        precedence.extend(reversed(mod.by_arity[k]))
    return GeneratorModule(names, mod.arity, degrees, actions, mod.flavor, mod.field, precedence)


def opposite_order(order, dual_mod, mode=SHRIEK):
    """Opposite of ``order``, expressed over the dual module (whose precedence is reversed)."""
    if isinstance(order, SymmetrizedOrder):
        base_dual = dual_module(order.base.module, mode)
        return SymmetrizedOrder(opposite_order(order.base, base_dual), dual_mod, order.origin)
    if order.reverse_precedence:
        raise DualError("orders with reversed precedence are not dualized")
    kind = "revlenlex" if order.kind == "lex" else "lex"
    # the arity component only matters when generator arities differ
    mixed = len(dual_mod.by_arity) > 1
    return MonomialOrder(kind, dual_mod, descending_arity=mixed and not order.descending_arity)


def quadratic_shape(m):
    """``(x1, i, x2, w)`` with ``m = w.(x1 o_i x2)`` for a canonical 2-vertex monomial."""
    g1, kids = m
    for pos, c in enumerate(kids):
        if not isinstance(c, int):
            return g1, pos + 1, c[0], tuple(leaves(m))
    raise DualError("not a weight-2 monomial")


def suspension_sign(module, m, mode):
    """Sign attached to the dual of the quadratic monomial ``m`` (original module data)."""
    x1, i, x2, w = quadratic_shape(m)
    d1 = module.degree[x1]
    if mode == KDUAL:
        # the action is not sign-twisted here, so eps(w) would break equivariance
        return (-1) ** (d1 % 2)
    eps = permutation_sign(w)
    n2 = module.arity[x2]
    if n2 != 2 or module.arity[x1] != 2:
        raise DualError("shriek signs are only defined for binary generators")
    return eps * (-1) ** ((d1 * (n2 - 1)) % 2) * (-1) ** (((i - 1) * (n2 - 1)) % 2)


def orthogonal_complement(rs):
    """Unsigned complement ``alpha_j^# + sum_i c_ij alpha_i^#`` as ``{monomial: coeff}`` dicts."""
    F = rs.field
    out = []
    for r in sorted(rs.basis):
        for aj in rs.basis[r]:
            row = {aj: F(1)}
            for ai in rs.leading.get(r, ()):
                c = rs.rewrite[ai].get(aj)
                if c:
                    row[ai] = c
            out.append(row)
    return out


def apply_suspension_signs(rows, module, mode):
    """Multiply each dual quadratic monomial by its mode sign."""
    F = module.field
    return [{m: F.reduce(c * F(suspension_sign(module, m, mode))) for m, c in row.items()}
            for row in rows]


def dual_presentation(p, mode=SHRIEK, name=None, check_closure=True):
    """Dual presentation on ``_dual`` generators with the opposite order.

    Only the weight-2 split enters; certify ``p`` with ``check_pbw`` first
    when the dual is meant to be PBW.
    """
    rs = p.split()
    mod = p.module
    dmod = dual_module(mod, mode)
    order = opposite_order(p.order, dmod, mode)
    rows = apply_suspension_signs(orthogonal_complement(rs), mod, mode)
    rels = [Element(row, dmod.field) for row in rows]
    if name is None:
        name = dual_name(p.name) if not p.name.endswith("!") else p.name[:-1]
    q = QuadraticPresentation(name, dmod, rels, order)
    q.dual_mode = mode
    q.dual_of = p
    if check_closure:
        for r in sorted(rs.basis):
            want = len(rs.basis[r])
            got = q.ideal(2, r).rank
            if got != want:
                warnings.warn("dual relations of %s in arity %d span a Sigma-module of "
                              "dimension %d instead of %d" % (p.name, r, got, want))
    return q


def dual_basis_monomials(rs, s, r):
    """Monomials all of whose edge restrictions are leading monomials."""
    return rs.dual_basis_monomials(s, r)


def dual_quadratic_basis(rs):
    """The leading monomials ``alpha_i``, read as dual monomials."""
    return rs.leading_monomials()


def same_span(p, q_rows_a, q_rows_b, s=2):
    """Whether two lists of elements of ``p`` span the same Sigma-closed subspace."""
    from .linalg import RowEchelon
    F = p.field

    def closure(xs):
        ech = RowEchelon(F)
        for x in xs:
            r = x.arity()
            if r is None:
                continue
            ws = [None]
            if p.symmetric:
                from itertools import permutations
                ws = list(permutations(range(1, r + 1)))
            for w in ws:
                y = p.module.act(w, x) if w is not None else x
                ech.add({(r, p.columns(s, r)[1][m]): c for m, c in y.items()})
        return ech

    a, b = closure(q_rows_a), closure(q_rows_b)
    if a.rank != b.rank:
        return False
    return all(a.contains(row) for row in b.rows.values())
