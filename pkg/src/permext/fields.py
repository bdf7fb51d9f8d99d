"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are :class:`fractions.Fraction` values.  Elements of
GF(p) are :class:`Mod` instances holding the least non-negative residue.
Both forms are canonical, so structural equality is field equality.

Fields are hashable value objects::

    >>> F = GF(5)
    >>> F(2) * F(3)
    Mod(1, 5)
    >>> F.format(F(-1))
    '4'
    >>> QQ.parse("-3/6")
    Fraction(-1, 2)
"""

from __future__ import annotations

import functools
import itertools
import re
from fractions import Fraction
from typing import Iterator, Union

from .errors import FieldMismatchError, ParseError

__all__ = [
    "FieldSpec",
    "Rationals",
    "PrimeField",
    "Mod",
    "QQ",
    "GF",
    "Scalar",
    "is_prime",
    "parse_field",
    "infer_field",
]

MAX_MODULUS = 2**31

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_RESIDUE_RE = re.compile(r"\d+")
_GF_RE = re.compile(r"GF\((\d+)\)")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.4e14."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) and GF({other.p}) operands")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        raise FieldMismatchError(f"cannot combine GF({self.p}) element with {type(other).__name__}")

    @property
    def field(self) -> "PrimeField":
        return GF(self.p)

    def __add__(self, other):
        return Mod(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.value - self._other(other), self.p)

    def __rsub__(self, other):
        return Mod(self._other(other) - self.value, self.p)

    def __mul__(self, other):
        return Mod(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * Mod(self._other(other), self.p).inverse()

    def __rtruediv__(self, other):
        return Mod(self._other(other), self.p) * self.inverse()

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        return Mod(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Mod]


class FieldSpec:
    """Common interface of the supported exact fields."""

    characteristic: int
    zero: Scalar
    one: Scalar

    def __call__(self, value) -> Scalar:
        raise NotImplementedError

    def coerce(self, value) -> Scalar:
        """Return ``value`` as an element of this field, rejecting foreign elements."""
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, x: Scalar) -> str:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    def vector(self, coords) -> tuple:
        return tuple(self.coerce(c) for c in coords)


class Rationals(FieldSpec):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return self.parse(value)
        return self.coerce(value)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, Mod):
            raise FieldMismatchError(f"GF({value.p}) element where Q was expected")
        raise TypeError(f"cannot interpret {value!r} as a rational scalar")

    def parse(self, text: str) -> Fraction:
        if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
            raise ParseError(f"malformed rational scalar {text!r}")
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(text))

    def format(self, x: Fraction) -> str:
        return str(self.coerce(x))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"


class PrimeField(FieldSpec):
    """GF(p) for a prime ``2 <= p < 2**31``; compositeness is rejected eagerly."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_MODULUS:
            raise ValueError(f"modulus must be an integer in [2, 2^31), got {p!r}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def __call__(self, value) -> Mod:
        if isinstance(value, str):
            return self.parse(value)
        return self.coerce(value)

    def coerce(self, value) -> Mod:
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element where GF({self.p}) was expected")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Mod(value, self.p)
        if isinstance(value, Fraction):
            raise FieldMismatchError(f"rational {value} where GF({self.p}) was expected")
        raise TypeError(f"cannot interpret {value!r} as an element of GF({self.p})")

    def parse(self, text: str) -> Mod:
        if not isinstance(text, str) or not _RESIDUE_RE.fullmatch(text):
            raise ParseError(f"malformed GF({self.p}) residue {text!r}")
        v = int(text)
        if v >= self.p:
            raise ParseError(f"residue {v} out of range for GF({self.p})")
        return Mod(v, self.p)

    def format(self, x: Mod) -> str:
        return str(self.coerce(x).value)

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> list[Mod]:
        return [Mod(v, self.p) for v in range(self.p)]

    def vectors(self, n: int) -> Iterator[tuple]:
        """All of GF(p)^n in lexicographic order of residues."""
        elems = self.elements()
        return itertools.product(elems, repeat=n)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__


QQ = Rationals()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"Q"`` or ``"GF(p)"``."""
    if text == "Q":
        return QQ
    m = _GF_RE.fullmatch(text) if isinstance(text, str) else None
    if m is None:
        raise ParseError(f"unknown field {text!r}; expected 'Q' or 'GF(p)'")
    try:
        return GF(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def infer_field(entries) -> FieldSpec:
    """Field shared by ``entries``; plain ints default to Q."""
    found = None
    for x in entries:
        if isinstance(x, Mod):
            f = GF(x.p)
        elif isinstance(x, Fraction):
            f = QQ
        elif isinstance(x, int):
            continue
        else:
            raise TypeError(f"not an exact scalar: {x!r}")
        if found is None:
            found = f
        elif f != found:
            raise FieldMismatchError(f"entries over both {found} and {f}")
    return found if found is not None else QQ
