"""Exact scalar fields.

Rationals are plain :class:`fractions.Fraction`.  Real quadratic extensions
are :class:`QuadraticNumber`, an element ``a + b*sqrt(d)`` where ``a`` and
``b`` live in a base field.  The base field is either the rationals (then
``d`` is a square-free integer > 1) or another quadratic field, which gives
towers such as Q[sqrt 2][sqrt 3].

Three scalar kinds are recognised throughout the package: ``"rational"``,
``"quadratic"`` and ``"float"``.  Kinds never mix implicitly; use
:func:`to_float` for the (lossy) conversion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "QuadraticNumber",
    "scalar_kind",
    "to_float",
    "sign",
    "is_zero",
    "sqrt_of",
    "is_squarefree",
    "rational_sqrt",
    "quadratic_sqrt",
]


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def _field_of(x) -> tuple:
    """Generator tuple of the smallest field this package assigns to ``x``."""
    if isinstance(x, QuadraticNumber):
        return x.field
    if isinstance(x, (int, Fraction)):
        return ()
    raise TypeError(f"not an exact scalar: {x!r}")


class QuadraticNumber:
    """``a + b*sqrt(d)`` with ``a, b`` in the base field and ``d > 0`` a non-square there.

    Arithmetic with elements of the base field (including ints and
    Fractions) coerces them into the extension.  Arithmetic with floats
    raises ``TypeError``.
    """

    __slots__ = ("a", "b", "d", "field", "_base")

    def __init__(self, a, b, d):
        if isinstance(d, QuadraticNumber):
            base = d.field
        elif isinstance(d, (int, Fraction)):
            d = int(d) if Fraction(d).denominator == 1 else d
            if not isinstance(d, int) or not is_squarefree(d) or d == 1:
                raise ValueError(f"d must be a square-free integer > 1, got {d!r}")
            base = ()
        else:
            raise TypeError(f"unsupported radicand {d!r}")
        if sign(d) <= 0:
            raise ValueError("radicand must be positive")
        if isinstance(d, QuadraticNumber) and len(d.field) == 1 and quadratic_sqrt(d) is not None:
            raise ValueError(f"radicand {d} is a square in its own field")
        self.a = _embed(a, base)
        self.b = _embed(b, base)
        self.d = d
        self._base = base
        self.field = base + (d,)

    # -- coercion -----------------------------------------------------------
    def _lift(self, field: tuple) -> QuadraticNumber:
        """This element viewed in the larger field ``field``."""
        x = self
        for d in field[len(self.field):]:
            x = QuadraticNumber(x, 0, d)
        return x

    def _pair(self, other):
        """``(self, other)`` moved into a common field, or NotImplemented."""
        if isinstance(other, QuadraticNumber):
            if other.field == self.field:
                return self, other
            if other.field == self.field[: len(other.field)]:
                return self, other._lift(self.field)
            if self.field == other.field[: len(self.field)]:
                return self._lift(other.field), other
            raise TypeError(f"incompatible quadratic fields {self.field} and {other.field}")
        if isinstance(other, (int, Fraction)):
            return self, QuadraticNumber(other, 0, self.d)
        if isinstance(other, float):
            raise TypeError("implicit float/exact mixing; convert with to_float()")
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        x, o = p
        return QuadraticNumber(x.a + o.a, x.b + o.b, x.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        x, o = p
        return QuadraticNumber(x.a - o.a, x.b - o.b, x.d)

    def __rsub__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        x, o = p
        return o - x

    def __mul__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        x, o = p
        return QuadraticNumber(x.a * o.a + x.b * o.b * x.d, x.a * o.b + x.b * o.a, x.d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self):
        """Field norm down to the base field: ``a^2 - b^2 d``."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if is_zero(n):
            raise ZeroDivisionError("inverse of zero")
        inv = 1 / n if isinstance(n, QuadraticNumber) else Fraction(1) / n
        return QuadraticNumber(self.a * inv, -self.b * inv, self.d)

    def __truediv__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        x, o = p
        return x * o.inverse()

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        x, o = p
        return o * x.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticNumber(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def sign(self) -> int:
        sa, sb = sign(self.a), sign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: compare a^2 against b^2 d
        return sa * sign(self.a * self.a - self.b * self.b * self.d)

    def __eq__(self, other):
        try:
            p = self._pair(other)
        except TypeError:
            return False
        if p is NotImplemented:
            return NotImplemented
        x, o = p
        return x.a == o.a and x.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field))

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    def __float__(self):
        return to_float(self.a) + to_float(self.b) * math.sqrt(to_float(self.d))

    def __repr__(self):
        return f"QuadraticNumber({self.a!r}, {self.b!r}, {self.d!r})"

    def __str__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def _embed(x, base: tuple):
    """Place ``x`` into the field generated by ``base`` (``()`` = rationals)."""
    if not base:
        if isinstance(x, QuadraticNumber):
            raise TypeError("quadratic coefficient over the rationals")
        if isinstance(x, float):
            raise TypeError("float coefficient in exact scalar")
        return Fraction(x)
    if isinstance(x, QuadraticNumber) and x.field == base:
        return x
    if isinstance(x, float):
        raise TypeError("float coefficient in exact scalar")
    fx = _field_of(x)
    if fx != base[: len(fx)]:
        raise TypeError(f"coefficient in field {fx}, expected subfield of {base}")
    inner = _embed(x, base[:-1])
    return QuadraticNumber(inner, 0, base[-1])


def sqrt_of(d) -> QuadraticNumber:
    """The generator ``sqrt(d)`` of Q(sqrt d) or of an extension of ``d``'s field."""
    return QuadraticNumber(0, 1, d)


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    n, m = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and m * m == q.denominator:
        return Fraction(n, m)
    return None


def quadratic_sqrt(x: QuadraticNumber) -> QuadraticNumber | None:
    """Square root of ``x`` inside Q(sqrt d) if it exists (single-level fields only)."""
    if len(x.field) != 1:
        raise ValueError("only single quadratic extensions are supported")
    # (p + q sqrt d)^2 = p^2 + q^2 d + 2 p q sqrt d
    n = rational_sqrt(x.norm())
    if n is None:
        return None
    for p2 in ((x.a + n) / 2, (x.a - n) / 2):
        p = rational_sqrt(p2)
        if p is None:
            continue
        if p == 0:
            q = rational_sqrt(x.a / x.d)
            if q is not None and x.b == 0:
                return QuadraticNumber(0, q, x.d)
            continue
        q = x.b / (2 * p)
        cand = QuadraticNumber(p, q, x.d)
        if cand * cand == x:
            return cand if cand.sign() >= 0 else -cand
    return None


def sign(x) -> int:
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return int(x > 0) - int(x < 0)


def is_zero(x) -> bool:
    if isinstance(x, QuadraticNumber):
        return not x
    return x == 0


def scalar_kind(x) -> str:
    if isinstance(x, QuadraticNumber):
        return "quadratic"
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return "rational"
    if isinstance(x, float):
        return "float"
    if isinstance(x, _RationalABC):
        return "rational"
    raise TypeError(f"unsupported scalar {x!r}")


def to_float(x) -> float:
    return float(x)
