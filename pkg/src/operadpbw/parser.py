"""
Presentation files.

::

    operad <name>
    flavor symmetric | nonsymmetric
    field Q | F<p>
    generator <id> arity <n> [degree <d>]
    action <id> swap <k> = <term> (+ <term>)*
    order lex | revlenlex [descending-arity]
    precedence <id> (< <id>)*
    relation <poly> = 0

``#`` starts a comment.  A relation may also be written ``<poly> = <poly>``.
Monomials are nested calls ``g(a1,..,an)`` whose leaves list ``1..n`` once
each; the leaf placement encodes the permutation.  Coefficients are
integers or fractions written before the monomial (``-2/3*b(1,2)``).
"""

import re
from fractions import Fraction

from .field import QQ, parse_field
from .free import NONSYMMETRIC, SYMMETRIC, Element, GeneratorModule, OperadError, format_term, _join_terms
from .orders import KINDS, MonomialOrder, SymmetrizedOrder
from .trees import arity as tree_arity, leaves

_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_NUM = re.compile(r"\d+(?:/\d+)?")


class ParseError(OperadError):
    def __init__(self, message, line=None, col=None, source=None):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        where = ""
        if line is not None:
            where = "%s:%d:%d: " % (source or "<input>", line, col or 1)
        super().__init__(where + message)


class _Scanner:
    def __init__(self, text, line=None, col0=0, source=None):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0
        self.source = source
        self.leaf_pos = []

    def error(self, msg, pos=None):
        p = self.pos if pos is None else pos
        return ParseError(msg, self.line, self.col0 + p + 1, self.source)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() != ch:
            raise self.error("expected %r" % ch)
        self.pos += 1

    def at_end(self):
        return self.peek() == ""

    def ident(self):
        self.skip()
        m = _ID.match(self.text, self.pos)
        if not m:
            raise self.error("expected an identifier")
        self.pos = m.end()
        return m.group()

    def number(self):
        self.skip()
        m = _NUM.match(self.text, self.pos)
        if not m:
            raise self.error("expected a number")
        self.pos = m.end()
        return m.group()


def _parse_monomial(sc, module):
    """Raw nested tree (children in written order) with generator ids."""
    start = sc.pos
    sc.skip()
    if sc.peek().isdigit():
        return int(sc.number()), start
    pos = sc.pos
    name = sc.ident()
    g = module.index.get(name)
    if g is None:
        raise sc.error("unknown generator %r" % name, pos)
    sc.eat("(")
    kids = []
    while True:
        if sc.peek().isdigit():
            lpos = sc.pos
            tok = sc.number()
            if "/" in tok:
                raise sc.error("leaf labels are positive integers", lpos)
            kids.append(int(tok))
            sc.leaf_pos.append((int(tok), lpos))
        else:
            kids.append(_parse_monomial(sc, module)[0])
        if sc.peek() == ",":
            sc.pos += 1
            continue
        sc.eat(")")
        break
    if len(kids) != module.arity[g]:
        raise sc.error("%s has arity %d but is applied to %d entries"
                       % (name, module.arity[g], len(kids)), pos)
    return (g, tuple(kids)), pos


def _check_leaves(sc, raw, pos):
    ls = leaves(raw)
    n = len(ls)
    if sorted(ls) != list(range(1, n + 1)):
        seen = set()
        for leaf, lpos in sc.leaf_pos:
            if leaf in seen:
                raise sc.error("leaf %d repeated" % leaf, lpos)
            seen.add(leaf)
        missing = sorted(set(range(1, n + 1)) - seen)
        raise sc.error("leaves must be 1..%d; missing %s" % (n, missing[0] if missing else "?"), pos)


def _parse_poly(sc, module, stop=("",)):
    """Sum of signed, coefficient-prefixed monomials, returned as an ``Element``."""
    F = module.field
    out = Element({}, F)
    first = True
    arity = None
    while True:
        ch = sc.peek()
        sign = 1
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        elif not first:
            break
        coeff = Fraction(1)
        if sc.peek().isdigit():
            save = sc.pos
            tok = sc.number()
            if sc.peek() == "*":
                sc.pos += 1
                coeff = Fraction(tok)
            elif sc.peek() == "" or sc.peek() in "+-=":
                raise sc.error("a scalar alone is not a monomial", save)
            else:
                coeff = Fraction(tok)
        sc.skip()
        sc.leaf_pos = []
        raw, pos = _parse_monomial(sc, module)
        if isinstance(raw, int):
            raise sc.error("the identity is not allowed in relations", pos)
        _check_leaves(sc, raw, pos)
        n = tree_arity(raw)
        if arity is not None and n != arity:
            raise sc.error("term of arity %d in a sum of arity %d" % (n, arity), pos)
        arity = n
        try:
            term = module.canonicalize(raw, F(sign * coeff))
        except OperadError as e:
            raise sc.error(str(e), pos)
        out = out + term
        first = False
        if sc.peek() in stop:
            break
    return out


def parse_element(text, module):
    """Parse a sum of monomials over ``module`` (as used by ``nf --expr``)."""
    if text.strip() == "0":
        return Element({}, module.field)
    sc = _Scanner(text, line=1)
    x = _parse_poly(sc, module)
    if not sc.at_end():
        raise sc.error("unexpected %r" % sc.peek())
    return x


def _strip_comment(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse(text, source=None):
    """Parse a presentation file into a ``QuadraticPresentation``."""
    from .pbw import QuadraticPresentation

    name = None
    flavor = SYMMETRIC
    field = QQ
    gens = []        # (name, arity, degree, line)
    actions = []     # (gen name, k, rhs text, line, col)
    order_kind, order_mods, order_line = None, [], None
    precedences = []
    relations = []   # (text, line, col)
    seen = set()

    def err(msg, ln, col=1):
        return ParseError(msg, ln, col, source)

    for ln, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        kw, _, rest = body.partition(" ")
        rest_col = indent + len(kw) + 2
        rest = rest.strip()
        if kw == "operad":
            if not rest:
                raise err("operad needs a name", ln, rest_col)
            name = rest
        elif kw == "flavor":
            if rest not in (SYMMETRIC, NONSYMMETRIC):
                raise err("flavor must be symmetric or nonsymmetric", ln, rest_col)
            flavor = rest
        elif kw == "field":
            try:
                field = parse_field(rest)
            except ValueError as e:
                raise err(str(e), ln, rest_col)
        elif kw == "generator":
            toks = rest.split()
            if len(toks) not in (3, 5) or toks[1] != "arity" or (len(toks) == 5 and toks[3] != "degree"):
                raise err("expected: generator <id> arity <n> [degree <d>]", ln, rest_col)
            if not _ID.fullmatch(toks[0]):
                raise err("bad generator name %r" % toks[0], ln, rest_col)
            if toks[0] in seen:
                raise err("generator %r declared twice" % toks[0], ln, rest_col)
            try:
                ar = int(toks[2])
                deg = int(toks[4]) if len(toks) == 5 else 0
            except ValueError:
                raise err("arity and degree must be integers", ln, rest_col)
            if ar < 1:
                raise err("arity must be at least 1", ln, rest_col)
            seen.add(toks[0])
            gens.append((toks[0], ar, deg, ln))
        elif kw == "action":
            m = re.match(r"(\S+)\s+swap\s+(\d+)\s*=\s*(.*)$", rest)
            if not m:
                raise err("expected: action <id> swap <k> = <terms>", ln, rest_col)
            actions.append((m.group(1), int(m.group(2)), m.group(3), ln,
                            rest_col + m.start(3)))
        elif kw == "order":
            toks = rest.split()
            if not toks or toks[0] not in KINDS + ("symmetrized",):
                raise err("order must be lex or revlenlex", ln, rest_col)
            order_kind, order_mods, order_line = toks[0], toks[1:], ln
        elif kw == "precedence":
            names = [t.strip() for t in rest.split("<")]
            if any(not _ID.fullmatch(t) for t in names):
                raise err("expected: precedence <id> (< <id>)*", ln, rest_col)
            precedences.append((names, ln))
        elif kw == "relation":
            relations.append((rest, ln, rest_col))
        else:
            raise err("unknown keyword %r" % kw, ln, indent + 1)

    if name is None:
        raise err("missing 'operad <name>' line", 1)
    if not gens:
        raise err("no generators declared", 1)
    names = [g[0] for g in gens]
    index = {n: k for k, n in enumerate(names)}
    arities = [g[1] for g in gens]

    act = {}
    if actions and flavor == NONSYMMETRIC:
        raise err("action lines are only allowed in the symmetric flavor", actions[0][3])
    for gname, k, rhs, ln, col in actions:
        g = index.get(gname)
        if g is None:
            raise err("unknown generator %r" % gname, ln)
        if not 1 <= k < arities[g]:
            raise err("swap %d undefined for %s of arity %d" % (k, gname, arities[g]), ln)
        img = {}
        for t in re.split(r"(?=[+-])", rhs.replace(" ", "")):
            if not t:
                continue
            mm = re.fullmatch(r"([+-]?)(?:(\d+(?:/\d+)?)\*)?([A-Za-z_][A-Za-z0-9_']*)", t)
            if not mm:
                raise err("bad action term %r" % t, ln, col)
            h = index.get(mm.group(3))
            if h is None:
                raise err("unknown generator %r" % mm.group(3), ln, col)
            c = Fraction(mm.group(2) or 1) * (-1 if mm.group(1) == "-" else 1)
            img[h] = img.get(h, 0) + c
        act[g, k] = img

    prec = []
    covered = set()
    for plist, ln in precedences:
        for n in plist:
            if n not in index:
                raise err("unknown generator %r in precedence" % n, ln)
        ks = {arities[index[n]] for n in plist}
        if len(ks) != 1:
            raise err("precedence must list generators of a single arity", ln)
        k = ks.pop()
        if k in covered:
            raise err("second precedence line for arity %d" % k, ln)
        covered.add(k)
        if sorted(plist) != sorted(n for n in names if arities[index[n]] == k):
            raise err("precedence must list every generator of arity %d exactly once" % k, ln)
        prec.extend(index[n] for n in plist)
    for g in range(len(names)):
        if arities[g] not in covered:
            prec.append(g)

    try:
        module = GeneratorModule(names, arities, [g[2] for g in gens], act or None,
                                 flavor, field, prec)
    except OperadError as e:
        raise err(str(e), gens[0][3])

    if order_kind is None:
        raise err("missing order line", 1)
    order = _make_order(order_kind, order_mods, module, lambda m: err(m, order_line))

    rels = []
    for body, ln, col in relations:
        sc = _Scanner(body, ln, col - 1, source)
        lhs = _parse_poly(sc, module, stop=("=", ""))
        sc.eat("=")
        sc.skip()
        if sc.text[sc.pos:].strip() == "0":
            rhs = Element({}, field)
            sc.pos = len(sc.text)
        else:
            rhs = _parse_poly(sc, module)
        if not sc.at_end():
            raise sc.error("unexpected %r" % sc.peek())
        x = lhs - rhs
        if lhs.arity() is not None and rhs.arity() is not None and lhs.arity() != rhs.arity():
            raise sc.error("the two sides have different arities", 0)
        ws = x.weights() | lhs.weights() | rhs.weights()
        if ws and ws != {2}:
            raise sc.error("relation is not quadratic (weight %s)" % ",".join(map(str, sorted(ws))), 0)
        rels.append(x)
    return QuadraticPresentation(name, module, rels, order)


def _make_order(kind, mods, module, err):
    descending = False
    for m in mods:
        if m == "descending-arity":
            descending = True
        else:
            raise err("unknown order modifier %r" % m)
    if kind == "symmetrized":
        raise err("symmetrized orders are built with symmetrize(), not read from files")
    return MonomialOrder(kind, module, descending_arity=descending)


def format_element(x, module, order=None):
    if not x:
        return "0"
    key = order.sort_key if order is not None else repr
    parts = [format_term(x[m], module.format_monomial(m)) for m in sorted(x, key=key)]
    return _join_terms(parts)


def dump(p):
    """Presentation file text for ``p`` (parse(dump(p)) reproduces ``p``)."""
    mod = p.module
    if isinstance(p.order, SymmetrizedOrder):
        raise OperadError("symmetrized orders have no file syntax; print the nonsymmetric presentation")
    lines = ["operad %s" % p.name, "flavor %s" % mod.flavor, "field %s" % mod.field.name]
    for g, nm in enumerate(mod.names):
        d = mod.degree[g]
        lines.append("generator %s arity %d%s" % (nm, mod.arity[g], " degree %d" % d if d else ""))
    if mod.symmetric:
        for g, nm in enumerate(mod.names):
            for j in range(1, mod.arity[g]):
                img = mod.actions[g, j]
                terms = [format_term(c, mod.names[h]) for h, c in sorted(img.items())]
                lines.append("action %s swap %d = %s" % (nm, j, _join_terms(terms) or "0"))
    o = p.order
    lines.append("order %s%s" % (o.kind, " descending-arity" if o.descending_arity else ""))
    for k in sorted(mod.by_arity):
        gens = mod.by_arity[k]
        if len(gens) > 1:
            seq = sorted(gens, key=lambda g: o.letter_key(g))
            lines.append("precedence %s" % " < ".join(mod.names[g] for g in seq))
    for x in p.relations:
        lines.append("relation %s = 0" % format_element(x, mod, p.order))
    return "\n".join(lines) + "\n"


def presentations_equal(a, b):
    """Same module data, order and relation list."""
    ma, mb = a.module, b.module
    if (a.name, ma.names, ma.arity, ma.degree, ma.flavor, ma.field) != \
            (b.name, mb.names, mb.arity, mb.degree, mb.flavor, mb.field):
        return False
    if ma.symmetric and ma.actions != mb.actions:
        return False
    if (a.order.kind, a.order.descending_arity) != (b.order.kind, b.order.descending_arity):
        return False
    if any(a.order.letter_key(g) != b.order.letter_key(g) for g in range(len(ma.names))):
        return False
    return [x.terms for x in a.relations] == [x.terms for x in b.relations]
