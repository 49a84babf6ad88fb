"""Exact scalars: the rationals (via ``fractions.Fraction``) and prime fields."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Fp:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError(f"mixed fields: F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        raise FieldError(f"cannot combine F_{self.p} element with {type(other).__name__}")

    def __add__(self, other):
        return Fp(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Fp:
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other) % self.p
        if o == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Fp(self._coerce(other), self.p) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)

    def __reduce__(self):
        return (Fp, (self.v, self.p))


@dataclass(frozen=True)
class Field:
    """Field descriptor: ``Field()`` is Q, ``Field("prime", p)`` is F_p."""

    kind: str = "rational"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise FieldError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise FieldError(f"modulus {self.p!r} is not prime")
            if self.p in (2, 3):
                raise FieldError("characteristic 2 and 3 are not supported")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> Field:
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls("prime", p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p

    def __call__(self, x):
        """Coerce an int, Fraction, string or element into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "rational":
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise FieldError(f"cannot coerce {x!r} into Q")
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldError(f"mixed fields: F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return Fp(x.numerator, self.p) / x.denominator
        raise FieldError(f"cannot coerce {x!r} into F_{self.p}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        if self.kind == "rational":
            return isinstance(x, Fraction)
        return isinstance(x, Fp) and x.p == self.p

    def parse(self, text: str):
        m = _SCALAR_RE.match(text)
        if not m:
            raise FieldError(f"malformed scalar {text!r}")
        a = int(m.group(1))
        b = int(m.group(2)) if m.group(2) is not None else 1
        if b == 0:
            raise FieldError(f"zero denominator in {text!r}")
        if self.kind == "prime" and b % self.p == 0:
            raise FieldError(f"denominator of {text!r} vanishes mod {self.p}")
        return self(Fraction(a, b))

    def format(self, x) -> str:
        if self.kind == "rational":
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(self(x).v)

    def describe(self) -> str:
        return "Q" if self.kind == "rational" else f"F_{self.p}"


QQ = Field.rational()


def scalar_parse(text: str, field: Field):
    return field.parse(text)


def scalar_arith(a, b, op: str):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def scalar_pow(a, n: int):
    if n < 0 and not a:
        raise ZeroDivisionError("zero to a negative power")
    return a**n
