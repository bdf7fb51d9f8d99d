from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permext.errors import FieldMismatchError, ParseError
from permext.fields import GF, QQ, Mod, infer_field, is_prime, parse_field

PRIMES = [2, 3, 5, 7, 11, 13, 101, 2**31 - 1]


def test_characteristic():
    assert QQ.characteristic == 0
    assert GF(7).characteristic == 7


@pytest.mark.parametrize("n", [1, 4, 9, 15, 91, 561, 2**31 - 3, 1_000_000_007 * 3])
def test_composite_or_unit_moduli_rejected(n):
    with pytest.raises(ValueError):
        GF(n)


def test_modulus_range():
    with pytest.raises(ValueError):
        GF(2**31 + 11)


def test_is_prime_matches_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if trial(n)]
    assert is_prime(2**31 - 1)


def test_parse_and_format():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.parse("+4") == 4
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    assert QQ.format(Fraction(5)) == "5"
    assert GF(5).parse("4") == Mod(4, 5)
    assert GF(5).format(GF(5)(-1)) == "4"
    assert str(QQ) == "Q" and str(GF(3)) == "GF(3)"
    assert parse_field("GF(13)") == GF(13) and parse_field("Q") is QQ


@pytest.mark.parametrize("text", ["", "1/0", "1.5", "a", "1/-2", "--1", " 1"])
def test_bad_rationals(text):
    with pytest.raises(ParseError):
        QQ.parse(text)


@pytest.mark.parametrize("text", ["5", "-1", "x", "1/2", ""])
def test_bad_residues(text):
    with pytest.raises(ParseError):
        GF(5).parse(text)


@pytest.mark.parametrize("text", ["GF(4)", "GF(1)", "F5", "R", "GF()"])
def test_bad_fields(text):
    with pytest.raises(ParseError):
        parse_field(text)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        GF(5)(1) * Fraction(1, 2)
    with pytest.raises(FieldMismatchError):
        Fraction(1, 2) + GF(5)(1)
    with pytest.raises(FieldMismatchError):
        QQ.coerce(GF(3)(1))
    with pytest.raises(FieldMismatchError):
        infer_field([GF(3)(1), Fraction(1)])


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        GF(5)(0).inverse()


@given(st.sampled_from(PRIMES), st.integers(), st.integers())
def test_mod_matches_integer_arithmetic(p, a, b):
    F = GF(p)
    x, y = F(a), F(b)
    assert (x + y).value == (a + b) % p
    assert (x - y).value == (a - b) % p
    assert (x * y).value == (a * b) % p
    assert (-x).value == (-a) % p
    assert 0 <= x.value < p
    if b % p:
        assert ((x / y) * y) == x
        assert (y * y.inverse()).value == 1


@given(st.fractions(), st.fractions())
def test_rationals_cross_multiplication(a, b):
    s = QQ(a) + QQ(b)
    assert s.numerator * a.denominator * b.denominator == (a.numerator * b.denominator + b.numerator * a.denominator) * s.denominator
    for x in (s, a * b):
        assert x.denominator > 0
    assert a + (-a) == 0
    if b:
        assert b * (1 / b) == 1


@given(st.fractions())
def test_rational_round_trip(a):
    assert QQ.parse(QQ.format(a)) == a


@given(st.sampled_from(PRIMES[:6]), st.integers(min_value=0))
def test_residue_round_trip(p, v):
    F = GF(p)
    assert F.parse(F.format(F(v))) == F(v)
