"""Exact coefficient fields: F_p for prime p, and the rationals.

Scalars are plain Python values so that hot loops stay cheap: an element
of F_p is an ``int`` residue in [0, p), an element of Q is a stdlib
``Fraction`` (always in lowest terms, positive denominator). The field
descriptor objects below carry the arithmetic and the text encoding.
No floating point is used anywhere in this package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .errors import InversionOfZero, MixedFields

Scalar = Union[int, Fraction]

MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    """Deterministic trial division, adequate for moduli below 2**31."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p. Scalars are int residues in [0, p)."""

    __slots__ = ("p",)
    kind = "Fp"
    finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not (2 <= p < MAX_PRIME):
            raise ValueError(f"prime modulus must be an integer in [2, 2^31), got {p!r}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    # -- identities ---------------------------------------------------
    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    # -- arithmetic ---------------------------------------------------
    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.p

    def neg(self, x: int) -> int:
        return (-x) % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise InversionOfZero(f"inverse of 0 in F_{self.p}")
        return pow(x, self.p - 2, self.p)

    def coerce(self, v) -> int:
        """Normalize an int, Fraction with unit denominator, or decimal string."""
        if isinstance(v, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"{v} is not an integer residue")
            return v.numerator % self.p
        if isinstance(v, str):
            return self.parse(v)
        raise TypeError(f"cannot coerce {v!r} into F_{self.p}")

    # -- text form ----------------------------------------------------
    def parse(self, s: str) -> int:
        return int(s.strip()) % self.p

    def format(self, x: int) -> str:
        return str(x % self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    # -- identity -----------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __str__(self) -> str:
        return f"F_{self.p}"


class RationalField:
    """The rationals with arbitrary-precision Fraction scalars."""

    __slots__ = ()
    kind = "Q"
    finite = False

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def char(self) -> int:
        return 0

    @property
    def order(self):
        return None

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise InversionOfZero("inverse of 0 in Q")
        return 1 / x

    def coerce(self, v) -> Fraction:
        if isinstance(v, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        if isinstance(v, str):
            return self.parse(v)
        raise TypeError(f"cannot coerce {v!r} into Q")

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def format(self, x: Fraction) -> str:
        return str(x)

    def elements(self):
        from .errors import InfiniteField

        raise InfiniteField("the rationals cannot be enumerated")

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "RationalField()"

    def __str__(self) -> str:
        return "Q"


Field = Union[PrimeField, RationalField]

QQ = RationalField()
GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)


def field_from_json(obj: dict) -> Field:
    """Decode {"kind":"Fp","p":p} or {"kind":"Q"}."""
    kind = obj.get("kind")
    if kind == "Fp":
        return PrimeField(int(obj["p"]))
    if kind == "Q":
        return QQ
    raise ValueError(f"unknown field kind {kind!r}")


def field_to_json(field: Field) -> dict:
    if isinstance(field, PrimeField):
        return {"kind": "Fp", "p": field.p}
    return {"kind": "Q"}


def require_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise MixedFields(f"operands over {a} and {b}")
