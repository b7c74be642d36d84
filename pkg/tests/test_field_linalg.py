from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from operadpbw.field import QQ, PrimeField, parse_field
from operadpbw.linalg import RowEchelon, rank
from oracles import sympy_rank


def test_parse_field():
    assert parse_field("Q") is QQ
    F = parse_field("F7")
    assert F.p == 7 and F.characteristic == 7
    for bad in ("F4", "F1", "R", "F"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.reduce(10) == 3
    assert F.reduce(-1) == 6
    assert F.reduce(3 * F.inv(3)) == 1
    assert F.neg_one_pow(3) == 6


def test_rationals_are_exact():
    assert QQ(Fraction(1, 3)) * 3 == 1
    assert QQ.inv(Fraction(2, 5)) == Fraction(5, 2)


rows_strategy = st.lists(
    st.dictionaries(st.integers(0, 7), st.integers(-3, 3), max_size=5),
    max_size=9)


@settings(max_examples=150, deadline=None)
@given(rows_strategy)
def test_rank_matches_sympy_over_q(rows):
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    assert rank(rows, QQ) == sympy_rank(rows, 8)


@settings(max_examples=150, deadline=None)
@given(rows_strategy)
def test_rank_matches_sympy_over_f3(rows):
    F = PrimeField(3)
    rows = [{c: F.reduce(v) for c, v in r.items() if F.reduce(v)} for r in rows]
    assert rank(rows, F) == sympy_rank(rows, 8, F)


@settings(max_examples=100, deadline=None)
@given(rows_strategy, st.dictionaries(st.integers(0, 7), st.integers(-3, 3), max_size=5))
def test_echelon_membership(rows, probe):
    ech = RowEchelon(QQ)
    for r in rows:
        ech.add({c: v for c, v in r.items() if v})
    probe = {c: v for c, v in probe.items() if v}
    expected = sympy_rank(list(ech.rows.values()) + [probe], 8) == ech.rank
    assert ech.contains(probe) == expected
    reduced = ech.reduce(probe)
    assert all(c not in ech.rows for c in reduced)
