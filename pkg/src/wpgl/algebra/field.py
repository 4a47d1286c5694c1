# Exact coefficient fields: the rationals and prime fields F_p.
#
# Usage:
#   Q = RATIONALS
#   F7 = Field.prime(7)
#   x = F7(3) * F7(5)

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from sympy import GF, QQ, isprime

from wpgl.util.wpgl_types import FieldMismatchError, InputError


@dataclass(frozen=True)
class Field:
    # 0 for the rationals, p for F_p
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(int(p))

    @classmethod
    def parse(cls, spec) -> Field:
        """Parse `q`, `Q`, `fp:7`, `F7`, or the JSON forms "Q" and {"Fp": 7}."""
        if isinstance(spec, dict):
            if "Fp" not in spec:
                raise InputError(f"unknown field {spec}")
            return cls.prime(int(spec["Fp"]))
        text = str(spec).strip().lower()
        if text in ("q", "qq", "rationals"):
            return RATIONALS
        for prefix in ("fp:", "f"):
            if text.startswith(prefix) and text[len(prefix) :].isdigit():
                try:
                    return cls.prime(int(text[len(prefix) :]))
                except ValueError as err:
                    raise InputError(str(err)) from err
        raise InputError(f"unknown field {spec}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def domain(self):
        """The sympy domain (QQ or GF(p)) used for exact linear algebra."""
        return QQ if self.is_rational else GF(self.characteristic)

    def to_domain(self, element):
        value = self(element).value
        if self.is_rational:
            return QQ(value.numerator, value.denominator)
        return self.domain(value)

    def from_sympy(self, value) -> FieldElement:
        """Element from a sympy Integer or Rational, as returned by to_Matrix and to_sympy."""
        return self(Fraction(int(value.p), int(value.q)))

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, (float, bool)):
            raise TypeError(f"inexact coefficient {value!r}, expected an integer, a Fraction or a string a/b")
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(value.field, self)
            return value
        if self.is_rational:
            return FieldElement(self, Fraction(value))
        if isinstance(value, Fraction) or isinstance(value, str):
            frac = Fraction(value)
            return FieldElement(self, int(frac.numerator) % self.characteristic) / FieldElement(self, int(frac.denominator) % self.characteristic)
        return FieldElement(self, int(value) % self.characteristic)

    def parse_element(self, text) -> FieldElement:
        if isinstance(text, (float, bool)):
            raise InputError(f"bad coefficient {text!r}: expected an integer or a string a/b")
        try:
            return self(Fraction(str(text)) if self.is_rational else text)
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise InputError(f"bad coefficient {text!r}: {err}") from err

    def elements(self):
        """All elements of a prime field, 0 first."""
        if self.is_rational:
            raise ValueError("the rationals are infinite")
        return [FieldElement(self, v) for v in range(self.characteristic)]

    def random_element(self, rng: random.Random, nonzero: bool = False, bound: int = 5) -> FieldElement:
        while True:
            if self.is_rational:
                value = self(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
            else:
                value = self(rng.randrange(self.characteristic))
            if not nonzero or value:
                return value

    def to_json(self):
        return "Q" if self.is_rational else {"Fp": self.characteristic}

    def __str__(self):
        return "Q" if self.is_rational else f"F{self.characteristic}"


RATIONALS = Field(0)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    # Fraction in lowest terms over Q, int in [0, p) over F_p
    value: object

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(self.field, other.field)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _wrap(self, value) -> FieldElement:
        if self.field.is_rational:
            return FieldElement(self.field, value)
        return FieldElement(self.field, value % self.field.characteristic)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        if self.field.is_rational:
            return FieldElement(self.field, 1 / self.value)
        return FieldElement(self.field, pow(self.value, -1, self.field.characteristic))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.field.is_rational:
            return FieldElement(self.field, self.value**exponent)
        return FieldElement(self.field, pow(self.value, exponent, self.field.characteristic))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        # an int or Fraction is equal to an element of F_p only as its representative
        # in [0, p), so that equal objects hash alike
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def to_json(self):
        """Integer when the value is integral, else the string "a/b"."""
        if self.field.is_rational:
            if self.value.denominator == 1:
                return int(self.value.numerator)
            return f"{self.value.numerator}/{self.value.denominator}"
        return int(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.field}({self.value})"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_div(a: FieldElement, b: FieldElement) -> FieldElement:
    return a / b
