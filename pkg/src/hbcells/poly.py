"""Monomials, multivariate polynomials under lex order, and k[y] polynomials.

Monomials are plain exponent tuples, one entry per ring variable.  The
lexicographic order induced by x1 > x2 > ... > xn coincides with Python's
native tuple comparison, which keeps the hot comparison paths free of any
custom code.

A :class:`Polynomial` is an immutable association of monomials to nonzero
coefficients, stored as a term tuple sorted in decreasing lex order so the
leading term is ``terms[0]``.  A :class:`UniPoly` is a dense univariate
polynomial in y, used for the entries of cell matrices.
"""

from __future__ import annotations

import math
import re

from .errors import ParseError
from .field import QQ


# ---------------------------------------------------------------------------
# monomials

def lex_compare(a, b):
    """Return -1, 0 or 1 comparing exponent tuples in lex order."""
    if len(a) != len(b):
        raise ValueError(f"monomials live in different rings: {a} vs {b}")
    if a == b:
        return 0
    return 1 if a > b else -1


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent-wise a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def monomials_of_degree(nvars, deg):
    """All degree-``deg`` monomials in ``nvars`` variables, lex-descending."""
    if nvars == 1:
        return [(deg,)]
    out = []
    for e in range(deg, -1, -1):
        out.extend((e,) + rest for rest in monomials_of_degree(nvars - 1, deg - e))
    return out


def default_names(nvars):
    if nvars == 1:
        return ("y",)
    if nvars == 2:
        return ("x", "y")
    return tuple(f"x{i + 1}" for i in range(nvars))


def mono_to_str(mono, names):
    parts = []
    for e, name in zip(mono, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# multivariate polynomials

class Polynomial:
    """Immutable exact multivariate polynomial with lex term order."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms):
        """``terms``: mapping or iterable of (monomial, coefficient) pairs."""
        items = terms.items() if hasattr(terms, "items") else terms
        acc = {}
        for mono, c in items:
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
            if mono in acc:
                c = acc[mono] + c
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", tuple(sorted(acc.items(), reverse=True)))

    @classmethod
    def _raw(cls, field, nvars, sorted_terms):
        """Trusted constructor: ``sorted_terms`` already canonical."""
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", sorted_terms)
        return self

    @classmethod
    def from_dict(cls, field, nvars, d):
        return cls._raw(field, nvars, tuple(sorted(((m, c) for m, c in d.items() if c), reverse=True)))

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, ())

    @classmethod
    def constant(cls, field, nvars, c):
        c = field.of(c) if isinstance(c, int) else c
        if not c:
            return cls.zero(field, nvars)
        return cls._raw(field, nvars, (((0,) * nvars, c),))

    @classmethod
    def monomial(cls, field, nvars, mono, c=None):
        c = field.one if c is None else c
        if not c:
            return cls.zero(field, nvars)
        return cls._raw(field, nvars, ((tuple(mono), c),))

    @classmethod
    def variable(cls, field, nvars, i):
        mono = tuple(1 if k == i else 0 for k in range(nvars))
        return cls._raw(field, nvars, ((mono, field.one),))

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def lt(self):
        """Leading monomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lc(self):
        """Leading coefficient."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def coefficient(self, mono):
        for m, c in self.terms:
            if m == mono:
                return c
        return self.field.zero

    def total_degree(self):
        """Max total degree, or -inf for the zero polynomial."""
        if not self.terms:
            return -math.inf
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        d = dict(self.terms)
        for m, c in other.terms:
            v = d.get(m)
            v = c if v is None else v + c
            if v:
                d[m] = v
            else:
                del d[m]
        return Polynomial.from_dict(self.field, self.nvars, d)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        d = dict(self.terms)
        for m, c in other.terms:
            v = d.get(m)
            v = -c if v is None else v - c
            if v:
                d[m] = v
            else:
                del d[m]
        return Polynomial.from_dict(self.field, self.nvars, d)

    def __neg__(self):
        return Polynomial._raw(self.field, self.nvars, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if len(self.terms) > len(other.terms):
                self, other = other, self
            d = {}
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = tuple(x + y for x, y in zip(m1, m2))
                    v = d.get(m)
                    v = c1 * c2 if v is None else v + c1 * c2
                    if v:
                        d[m] = v
                    else:
                        del d[m]
            return Polynomial.from_dict(self.field, self.nvars, d)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        r = Polynomial.constant(self.field, self.nvars, self.field.one)
        for _ in range(e):
            r = r * self
        return r

    def scale(self, c):
        if not c:
            return Polynomial.zero(self.field, self.nvars)
        return Polynomial._raw(self.field, self.nvars, tuple((m, c * cc) for m, cc in self.terms))

    def mul_term(self, mono, c):
        """Multiply by the single term c * x^mono."""
        if not c:
            return Polynomial.zero(self.field, self.nvars)
        return Polynomial._raw(
            self.field, self.nvars,
            tuple((tuple(x + y for x, y in zip(m, mono)), c * cc) for m, cc in self.terms))

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.field.one:
            return self
        inv = self.field.div(self.field.one, lc)
        return self.scale(inv)

    def substitute(self, i, replacement):
        """Substitute ``replacement`` (a Polynomial) for variable i."""
        one = Polynomial.constant(self.field, self.nvars, self.field.one)
        powers = [one]
        acc = {}
        for m, c in self.terms:
            e = m[i]
            while e >= len(powers):
                powers.append(powers[-1] * replacement)
            rest = m[:i] + (0,) + m[i + 1:]
            for pm, pc in powers[e].terms:
                key = tuple(a + b for a, b in zip(pm, rest))
                v = acc.get(key)
                v = pc * c if v is None else v + pc * c
                if v:
                    acc[key] = v
                else:
                    del acc[key]
        return Polynomial.from_dict(self.field, self.nvars, acc)

    def evaluate(self, values):
        """Evaluate at a full point (one value per variable)."""
        total = self.field.zero
        for m, c in self.terms:
            v = c
            for e, x in zip(m, values):
                if e:
                    v = v * x**e
            total = total + v
        return total

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.terms))

    def __repr__(self):
        return f"Polynomial({self.to_str()})"

    def __str__(self):
        return self.to_str()

    def to_str(self, names=None):
        return polynomial_to_str(self, names)


def polynomial_to_str(p, names=None):
    """Canonical text form: terms in decreasing lex order, a/b coefficients."""
    if p.is_zero:
        return "0"
    names = default_names(p.nvars) if names is None else names
    out = []
    for mono, c in p.terms:
        cs = str(c)
        sign = "-" if cs.startswith("-") else "+"
        mag = cs[1:] if cs.startswith("-") else cs
        ms = mono_to_str(mono, names)
        if not ms:
            body = mag
        elif mag == "1":
            body = ms
        else:
            body = f"{mag}*{ms}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# univariate polynomials in y

class UniPoly:
    """Dense univariate polynomial over an exact field, variable ``y``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def y_power(cls, field, k, c=None):
        c = field.one if c is None else c
        return cls(field, (field.zero,) * k + (c,))

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.field, out)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else z
            y = other.coeffs[i] if i < len(other.coeffs) else z
            out.append(x - y)
        return UniPoly(self.field, out)

    def __neg__(self):
        return UniPoly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly.zero(self.field)
            z = self.field.zero
            out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return UniPoly(self.field, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return UniPoly.zero(self.field)
        return UniPoly(self.field, tuple(c * x for x in self.coeffs))

    def shift(self, k):
        """Multiply by y^k."""
        if not self.coeffs:
            return self
        return UniPoly(self.field, (self.field.zero,) * k + self.coeffs)

    def __divmod__(self, other):
        return divide_univariate(self, other)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_polynomial(self, nvars=2, y_index=None):
        """Embed into a multivariate ring with y as the last variable."""
        y_index = nvars - 1 if y_index is None else y_index
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = tuple(k if i == y_index else 0 for i in range(nvars))
                terms.append((mono, c))
        return Polynomial(self.field, nvars, terms)

    def to_str(self):
        return polynomial_to_str(self.to_polynomial(nvars=1))

    def __repr__(self):
        return f"UniPoly({self.to_str()})"


def exact_quotient(f, g):
    """f / g when g divides f exactly, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    field = f.field
    lg, cg = g.terms[0] if g.terms else ((), None)
    work = dict(f.terms)
    quot = {}
    while work:
        m = max(work)
        if not mono_divides(lg, m):
            return None
        c = work.pop(m)
        q = field.div(c, cg)
        u = mono_div(m, lg)
        quot[u] = q
        for tm, tc in g.terms[1:]:
            key = mono_mul(u, tm)
            v = work.get(key)
            v = -(q * tc) if v is None else v - q * tc
            if v:
                work[key] = v
            else:
                work.pop(key, None)
    return Polynomial.from_dict(field, f.nvars, quot)


def divide_univariate(f, h):
    """Division with remainder in k[y]: f = h*q + r, r = 0 or deg r < deg h."""
    if h.is_zero:
        raise ZeroDivisionError("univariate division by the zero polynomial")
    field = f.field
    inv_lead = field.div(field.one, h.lc)
    dh = len(h.coeffs) - 1
    rem = list(f.coeffs)
    q = [field.zero] * max(len(rem) - dh, 0)
    for i in range(len(rem) - 1, dh - 1, -1):
        c = rem[i]
        if not c:
            continue
        qc = c * inv_lead
        q[i - dh] = qc
        for j, hc in enumerate(h.coeffs):
            rem[i - dh + j] = rem[i - dh + j] - qc * hc
    return UniPoly(field, q), UniPoly(field, rem[:dh])


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_polynomial(text, variables, field=QQ):
    """Parse the canonical text grammar into a :class:`Polynomial`.

    Terms are separated by ``+``/``-``; a term is a ``*``-separated product
    of rational numbers (``3``, ``3/2``) and powers ``name^e`` of the given
    variables.  Printing and reparsing is the identity.
    """
    names = list(variables)
    index = {n: i for i, n in enumerate(names)}
    nvars = len(names)
    tokens = _tokenize(text)
    k = 0

    def peek():
        return tokens[k]

    def take(kind=None):
        nonlocal k
        tok = tokens[k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}" if tok[0] != "end"
                             else f"unexpected end of input (expected {kind})", tok[2])
        k += 1
        return tok

    def parse_factor():
        """Returns (scalar, exponent-vector) for one factor."""
        kind, val, pos = peek()
        if kind == "num":
            take()
            num = int(val)
            if peek()[0] == "/":
                take()
                dk, dv, dpos = take("num")
                if int(dv) == 0:
                    raise ParseError("zero denominator", dpos)
                return field.of(num, int(dv)), (0,) * nvars
            return field.of(num), (0,) * nvars
        if kind == "name":
            take()
            if val not in index:
                raise ParseError(f"unknown variable {val!r}", pos)
            e = 1
            if peek()[0] == "^":
                take()
                _, ev, _ = take("num")
                e = int(ev)
            mono = tuple(e if i == index[val] else 0 for i in range(nvars))
            return field.one, mono
        raise ParseError(f"expected a number or variable, found {val!r}" if kind != "end"
                         else "unexpected end of input", pos)

    def parse_term():
        coeff, mono = parse_factor()
        while peek()[0] == "*":
            take()
            c2, m2 = parse_factor()
            coeff = coeff * c2
            mono = tuple(a + b for a, b in zip(mono, m2))
        return coeff, mono

    acc = {}
    sign = 1
    kind, _, pos = peek()
    if kind in "+-":
        sign = -1 if kind == "-" else 1
        take()
    while True:
        coeff, mono = parse_term()
        if sign < 0:
            coeff = -coeff
        v = acc.get(mono, field.zero) + coeff
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind not in "+-":
            raise ParseError(f"expected '+', '-' or end of input, found {val!r}", pos)
        sign = -1 if kind == "-" else 1
        take()
    return Polynomial.from_dict(field, nvars, acc)


def parse_ideal(text, variables, field=QQ):
    """Parse a comma-separated list of polynomials."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty ideal description", 0)
    return [parse_polynomial(p, variables, field) for p in parts]
