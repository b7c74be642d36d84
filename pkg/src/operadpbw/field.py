"""
Exact ground fields: the rationals and prime fields F_p.

Scalars for Q are ``fractions.Fraction``; scalars for F_p are ints in [0, p).
"""

from fractions import Fraction


class Rationals:
    name = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def reduce(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def neg_one_pow(self, k):
        return Fraction(-1 if k % 2 else 1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("F_p needs a prime p, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.name = "F%d" % p

    def __call__(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero in %s" % self.name)
        return pow(x, -1, self.p)

    def neg_one_pow(self, k):
        return self.p - 1 if k % 2 else 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return self.name


QQ = Rationals()


def parse_field(text):
    """Field from its descriptor: ``Q`` or ``F<p>`` (e.g. ``F101``)."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text[:1] == "F" and text[1:].isdigit():
        return PrimeField(int(text[1:]))
    raise ValueError("unknown field %r (expected Q or F<p>)" % text)
