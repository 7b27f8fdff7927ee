"""Exact coefficient fields: rationals and small finite fields.

Rational coefficients are plain ``int`` or ``fractions.Fraction`` values,
with ints preferred whenever a value is integral (integer arithmetic is
much cheaper and the hot paths -- minors, Groebner reductions by monic
polynomials -- never leave the integers).  Finite field elements are small
wrapper objects with operator overloading, so polynomial code is written
once against ordinary ``+ - * /`` and truthiness for zero tests.

Division of two raw ints would produce a float, so any coefficient
division must go through ``field.div``.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """The rationals.  Elements are ``int`` or ``Fraction``."""

    char = 0
    zero = 0
    one = 1

    @staticmethod
    def of(num, den=1):
        """Coerce ``num/den`` to a field element (int when integral)."""
        q = Fraction(num, den)
        return q.numerator if q.denominator == 1 else q

    @staticmethod
    def div(a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        q = Fraction(a) / Fraction(b)
        return q.numerator if q.denominator == 1 else q

    def inv(self, a):
        return self.div(1, a)

    decode = of  # JSON decoding coincides with coercion

    def __repr__(self):
        return "QQ"


#: The default coefficient field.
QQ = RationalField()


class FFElement:
    """An element of a small finite field, encoded by an index in [0, q)."""

    __slots__ = ("val", "field")

    def __init__(self, val, field):
        self.val = val
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.field is not self.field:
                raise ValueError("mixing elements of different finite fields")
            return other
        if isinstance(other, int):
            return self.field.of(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field._add(self.val, o.val), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field._sub(self.val, o.val), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field._sub(o.val, self.val), self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field._mul(self.val, o.val), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field._mul(self.val, self.field._inv(o.val)), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field._mul(o.val, self.field._inv(self.val)), self.field)

    def __neg__(self):
        return FFElement(self.field._sub(0, self.val), self.field)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return FFElement(self.field._inv(self.val), self.field) ** (-e)
        r = self.field.one
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field is other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == self.field.of(other).val
        return NotImplemented

    def __hash__(self):
        return hash(self.val)

    def __repr__(self):
        return str(self.val)


class PrimeField:
    """GF(p) for a prime p < 2**31."""

    def __init__(self, p):
        if not isinstance(p, int) or not 2 <= p < 2**31 or not _is_prime(p):
            raise ValueError(f"field order must be a prime below 2**31, got {p!r}")
        self.p = p
        self.char = p
        self.size = p
        self.zero = FFElement(0, self)
        self.one = FFElement(1, self)

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def of(self, num, den=1):
        if isinstance(num, Fraction):
            num, den = num.numerator * den, num.denominator
        base = self._mul(num % self.p, self._inv(den % self.p)) if den != 1 else num % self.p
        return FFElement(base, self)

    def div(self, a, b):
        return self.of(a) / b if isinstance(a, int) else a / b

    def inv(self, a):
        return self.div(self.one, a)

    def elements(self):
        return [FFElement(v, self) for v in range(self.p)]

    def decode(self, v):
        return FFElement(v % self.p, self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class QuarticField:
    """GF(4) = GF(2)[w]/(w^2+w+1), elements encoded 0,1,w=2,w+1=3."""

    def __init__(self):
        self.char = 2
        self.size = 4
        self.zero = FFElement(0, self)
        self.one = FFElement(1, self)

    @staticmethod
    def _add(a, b):
        return a ^ b

    _sub = _add

    @staticmethod
    def _mul(a, b):
        if a == 0 or b == 0:
            return 0
        # multiply (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        c0 = (a0 & b0) ^ (a1 & b1)
        c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
        return c0 | (c1 << 1)

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in GF(4)")
        return {1: 1, 2: 3, 3: 2}[a]

    def of(self, num, den=1):
        if isinstance(num, Fraction):
            num, den = num.numerator * den, num.denominator
        v = num % 2
        if den % 2 == 0:
            raise ZeroDivisionError("denominator vanishes in GF(4)")
        return FFElement(v, self)

    def div(self, a, b):
        return self.of(a) / b if isinstance(a, int) else a / b

    def inv(self, a):
        return self.div(self.one, a)

    def elements(self):
        return [FFElement(v, self) for v in range(4)]

    def decode(self, v):
        return FFElement(v & 3, self)

    def __eq__(self, other):
        return isinstance(other, QuarticField)

    def __hash__(self):
        return hash("GF4")

    def __repr__(self):
        return "GF(4)"


def GF(q):
    """Finite field of order q; q must be prime or 4."""
    if q == 4:
        return QuarticField()
    return PrimeField(q)


def scalar_to_json(c):
    """Encode a field element as a JSON-friendly value."""
    if isinstance(c, FFElement):
        return c.val
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return c


def scalar_from_json(field, v):
    """Decode the output of :func:`scalar_to_json`."""
    if isinstance(v, str):
        num, _, den = v.partition("/")
        return field.of(int(num), int(den) if den else 1)
    return field.decode(v)
