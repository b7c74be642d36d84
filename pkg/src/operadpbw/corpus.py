"""
Built-in presentations, stored as presentation-file text.
"""

import re

from .parser import parse

ASSOC_NS = """\
operad assoc-ns
flavor nonsymmetric
generator m arity 2
order lex
relation m(m(1,2),3) = m(1,m(2,3))
"""

ASSOC = """\
operad assoc
flavor symmetric
generator m arity 2
generator mt arity 2       # mt(a,b) = m(b,a)
action m swap 1 = mt
action mt swap 1 = m
order lex
precedence m < mt
relation m(m(1,2),3) = m(1,m(2,3))
"""

COM = """\
operad com
flavor symmetric
generator m arity 2
action m swap 1 = m
order revlenlex
relation m(m(1,2),3) = m(1,m(2,3))
"""

LIE = """\
operad lie
flavor symmetric
generator b arity 2
action b swap 1 = -b
order lex
relation b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2) = 0
"""

POISSON = """\
operad poisson
flavor symmetric
generator m arity 2        # commutative product
generator k arity 2        # bracket
action m swap 1 = m
action k swap 1 = -k
order lex
precedence k < m
relation m(1,m(2,3)) = m(m(1,2),3)
relation k(k(1,2),3) + k(k(2,3),1) + k(k(3,1),2) = 0
relation k(m(1,2),3) = m(1,k(2,3)) + m(2,k(1,3))
"""

PERM = """\
operad perm
flavor symmetric
generator m arity 2
generator mt arity 2       # mt(a,b) = m(b,a)
action m swap 1 = mt
action mt swap 1 = m
order lex
precedence mt < m
relation m(m(1,2),3) = m(1,m(2,3))
relation m(1,m(2,3)) = m(1,m(3,2))
"""

PRELIE = """\
operad prelie
flavor symmetric
generator m arity 2
generator mt arity 2       # mt(a,b) = m(b,a)
action m swap 1 = mt
action mt swap 1 = m
order revlenlex
precedence m < mt
relation m(m(1,2),3) - m(m(1,3),2) - m(1,m(2,3)) + m(1,m(3,2)) = 0
"""

TOT_ASSOC_3 = """\
operad tot-assoc-3
flavor nonsymmetric
generator t arity 3
order lex
relation t(t(1,2,3),4,5) = t(1,t(2,3,4),5)
relation t(1,t(2,3,4),5) = t(1,2,t(3,4,5))
"""

PART_ASSOC_3 = """\
operad part-assoc-3
flavor nonsymmetric
generator t arity 3 degree 1
order revlenlex
relation t(t(1,2,3),4,5) + t(1,t(2,3,4),5) + t(1,2,t(3,4,5)) = 0
"""


def m_dend_text(m):
    """``m``-dendriform presentation: ``d1`` is the right operation, ``dm`` the left one.

    The sum ``x * y`` of the two extreme operations is expanded in place.
    """
    if m < 2:
        raise ValueError("m-dend needs m >= 2, got %d" % m)
    L, R = "d%d" % m, "d1"
    mid = ["d%d" % i for i in range(2, m)]
    lines = ["operad m-dend(%d)" % m, "flavor nonsymmetric"]
    lines += ["generator d%d arity 2" % i for i in range(1, m + 1)]
    lines.append("order lex")
    lines.append("precedence " + " < ".join("d%d" % i for i in range(1, m + 1)))
    lines.append("# (x<y)<z = x<(y*z)")
    lines.append("relation %s(%s(1,2),3) = %s(1,%s(2,3)) + %s(1,%s(2,3))" % (L, L, L, R, L, L))
    lines.append("# (x>y)<z = x>(y<z)")
    lines.append("relation %s(%s(1,2),3) = %s(1,%s(2,3))" % (L, R, R, L))
    lines.append("# (x*y)>z = x>(y>z)")
    lines.append("relation %s(%s(1,2),3) + %s(%s(1,2),3) = %s(1,%s(2,3))" % (R, L, R, R, R, R))
    for d in mid:
        lines.append("# (x<y).%s z = x.%s(y>z)" % (d, d))
        lines.append("relation %s(%s(1,2),3) = %s(1,%s(2,3))" % (d, L, d, R))
        lines.append("# (x>y).%s z = x>(y.%s z)" % (d, d))
        lines.append("relation %s(%s(1,2),3) = %s(1,%s(2,3))" % (d, R, R, d))
        lines.append("# (x.%s y)<z = x.%s(y<z)" % (d, d))
        lines.append("relation %s(%s(1,2),3) = %s(1,%s(2,3))" % (L, d, d, L))
    for a in range(len(mid)):
        for b in range(a + 1, len(mid)):
            di, dj = mid[a], mid[b]
            lines.append("relation %s(%s(1,2),3) = %s(1,%s(2,3))" % (dj, di, di, dj))
    return "\n".join(lines) + "\n"


TEXTS = {
    "assoc-ns": ASSOC_NS,
    "assoc": ASSOC,
    "com": COM,
    "lie": LIE,
    "poisson": POISSON,
    "perm": PERM,
    "prelie": PRELIE,
    "tot-assoc-3": TOT_ASSOC_3,
    "part-assoc-3": PART_ASSOC_3,
}

NAMES = tuple(TEXTS) + ("m-dend(m)",)


def builtin_text(name):
    mm = re.fullmatch(r"m-dend\((\d+)\)|m-dend-?(\d+)", name)
    if mm:
        return m_dend_text(int(mm.group(1) or mm.group(2)))
    if name not in TEXTS:
        raise KeyError("unknown builtin %r (known: %s)" % (name, ", ".join(NAMES)))
    return TEXTS[name]


def builtin(name):
    """Parse a built-in presentation by name (``m-dend(3)`` style for the family)."""
    return parse(builtin_text(name), source="builtin:%s" % name)
