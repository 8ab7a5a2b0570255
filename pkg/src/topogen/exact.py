"""Exact arithmetic in imaginary quadratic fields Q(sqrt(-N)) and complex similitudes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[int, Fraction]


class FieldMismatch(ValueError):
    pass


def _squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class ExactComplex:
    """The number x + y*sqrt(N)*i with rational x, y."""

    x: Fraction
    y: Fraction
    N: int

    def __init__(self, x: Rational = 0, y: Rational = 0, N: int = 1):
        if not _squarefree(N):
            raise ValueError(f"field discriminant must be a positive square-free integer, got {N}")
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "N", int(N))

    def _coerce(self, other) -> "ExactComplex":
        if isinstance(other, ExactComplex):
            if other.N != self.N:
                raise FieldMismatch(f"Q(sqrt(-{self.N})) vs Q(sqrt(-{other.N}))")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactComplex(other, 0, self.N)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExactComplex(self.x + o.x, self.y + o.y, self.N)

    __radd__ = __add__

    def __neg__(self):
        return ExactComplex(-self.x, -self.y, self.N)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExactComplex(self.x - o.x, self.y - o.y, self.N)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExactComplex(self.x * o.x - self.N * self.y * o.y, self.x * o.y + self.y * o.x, self.N)

    __rmul__ = __mul__

    def conj(self) -> "ExactComplex":
        return ExactComplex(self.x, -self.y, self.N)

    def norm_sq(self) -> Fraction:
        return self.x * self.x + self.N * self.y * self.y

    def inverse(self) -> "ExactComplex":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conj()
        return ExactComplex(c.x / n, c.y / n, self.N)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ExactComplex(1, 0, self.N), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if isinstance(other, ExactComplex):
            return (self.x, self.y, self.N) == (other.x, other.y, other.N)
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y, self.N))

    def __bool__(self):
        return bool(self.x or self.y)

    def __complex__(self):
        return complex(float(self.x), float(self.y) * math.sqrt(self.N))

    def key(self):
        return (self.x, self.y)

    def __repr__(self):
        return f"ExactComplex({self})"

    def __str__(self):
        if not self.y:
            return _fstr(self.x)
        root = "i" if self.N == 1 else f"i√{self.N}"
        ys = "" if abs(self.y) == 1 else _fstr(abs(self.y))
        imag = f"{ys}{root}"
        if not self.x:
            return imag if self.y > 0 else f"-{imag}"
        return f"{_fstr(self.x)}{'+' if self.y > 0 else '-'}{imag}"

    def to_json(self):
        return [self.x.numerator, self.x.denominator, self.y.numerator, self.y.denominator]

    @classmethod
    def from_json(cls, data: Sequence[int], N: int) -> "ExactComplex":
        xn, xd, yn, yd = data
        return cls(Fraction(xn, xd), Fraction(yn, yd), N)


def _fstr(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Similitude:
    """z -> alpha*z + beta, or z -> alpha*conj(z) + beta when ``conj``."""

    alpha: ExactComplex
    beta: ExactComplex
    conj: bool = False

    def __post_init__(self):
        if not self.alpha:
            raise ValueError("similitude needs a nonzero multiplier")
        if self.alpha.N != self.beta.N:
            raise FieldMismatch("multiplier and translation live in different fields")

    @property
    def N(self) -> int:
        return self.alpha.N

    @classmethod
    def identity(cls, N: int) -> "Similitude":
        return cls(ExactComplex(1, 0, N), ExactComplex(0, 0, N))

    def __call__(self, z: ExactComplex) -> ExactComplex:
        if z.N != self.N:
            raise FieldMismatch("point and map live in different fields")
        return self.alpha * (z.conj() if self.conj else z) + self.beta

    def __matmul__(self, other: "Similitude") -> "Similitude":
        return compose(self, other)

    def ratio_sq(self) -> Fraction:
        return self.alpha.norm_sq()

    def is_identity(self) -> bool:
        return not self.conj and self.alpha == 1 and not self.beta

    def key(self):
        return (self.conj, self.alpha.key(), self.beta.key())

    def __str__(self):
        z = "z̄" if self.conj else "z"
        a = self.alpha
        if a == 1:
            lin = z
        elif a == -1:
            lin = f"-{z}"
        elif a.x and a.y:
            lin = f"({a}){z}"
        else:
            lin = f"{a}{z}"
        if not self.beta:
            return lin
        b = str(self.beta)
        if self.beta.x and self.beta.y:
            return f"{lin}+({b})"
        return f"{lin}{b}" if b.startswith("-") else f"{lin}+{b}"

    def to_json(self):
        return {"alpha": self.alpha.to_json(), "beta": self.beta.to_json(), "conj": self.conj}

    @classmethod
    def from_json(cls, data, N: int) -> "Similitude":
        return cls(ExactComplex.from_json(data["alpha"], N), ExactComplex.from_json(data["beta"], N), bool(data.get("conj", False)))


def compose(s: Similitude, t: Similitude) -> Similitude:
    """The map z -> s(t(z))."""
    if s.N != t.N:
        raise FieldMismatch("maps live in different fields")
    ta, tb = (t.alpha.conj(), t.beta.conj()) if s.conj else (t.alpha, t.beta)
    return Similitude(s.alpha * ta, s.alpha * tb + s.beta, s.conj != t.conj)


def invert(s: Similitude) -> Similitude:
    if s.conj:
        ac = s.alpha.conj()
        return Similitude(ac.inverse(), -(s.beta.conj() / ac), True)
    return Similitude(s.alpha.inverse(), -(s.beta / s.alpha), False)


def apply(s: Similitude, z: ExactComplex) -> ExactComplex:
    return s(z)


def power(s: Similitude, k: int) -> Similitude:
    out = Similitude.identity(s.N)
    base = s if k >= 0 else invert(s)
    for _ in range(abs(k)):
        out = compose(out, base)
    return out
