"""Univariate polynomials in ``z`` over a finite field."""

from __future__ import annotations

import re
from collections.abc import Iterable

from cgoppa.errors import CodeError, FieldMismatchError
from cgoppa.galois import FieldElement, FieldSpec

__all__ = ["Poly", "NEG_INF", "degree", "poly_divmod", "gcd", "evaluate", "parse_poly"]

#: Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """A polynomial over ``field``; coefficients are stored constant term first.

    Coefficients are kept as packed field indices.  ``coeffs`` exposes them as
    :class:`FieldElement` values.
    """

    __slots__ = ("field", "_c")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        self._c = _trim([_coerce(field, c) for c in coeffs])

    @classmethod
    def _raw(cls, field: FieldSpec, c: tuple[int, ...]) -> Poly:
        p = object.__new__(cls)
        p.field = field
        p._c = c
        return p

    @classmethod
    def const(cls, field: FieldSpec, value) -> Poly:
        return cls(field, [value])

    @classmethod
    def z(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, (0, 1))

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, (1,))

    @classmethod
    def linear(cls, field: FieldSpec, slope, intercept) -> Poly:
        """``slope * z + intercept``."""
        return cls(field, [intercept, slope])

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self._c)

    @property
    def raw(self) -> tuple[int, ...]:
        """Packed coefficient indices, constant term first."""
        return self._c

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else NEG_INF

    def coeff(self, i: int) -> int:
        """Packed index of the ``z^i`` coefficient (0 beyond the degree)."""
        return self._c[i] if 0 <= i < len(self._c) else 0

    @property
    def lead(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self._c))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine polynomials over {self.field.describe()} and {other.field.describe()}"
                )
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return g
        F, a, b = self.field, self._c, g._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = F.add(out[i], bi)
        return Poly._raw(F, _trim(out))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, tuple(F.neg(c) for c in self._c))

    def __sub__(self, other):
        g = self._lift(other)
        return g if g is NotImplemented else self + (-g)

    def __rsub__(self, other):
        g = self._lift(other)
        return g if g is NotImplemented else g + (-self)

    def __mul__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return g
        a, b = self._c, g._c
        if not a or not b:
            return Poly._raw(self.field, ())
        F = self.field
        add, mul = F.add, F.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly._raw(F, _trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise CodeError("negative powers of polynomials are not polynomials")
        out, base = Poly.one(self.field), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: int) -> Poly:
        """Multiply by the packed field element ``c``."""
        F = self.field
        if c == 0:
            return Poly._raw(F, ())
        return Poly._raw(F, tuple(F.mul(x, c) for x in self._c))

    def shift(self, k: int) -> Poly:
        """Multiply by ``z^k``."""
        if not self._c or k == 0:
            return self
        return Poly._raw(self.field, (0,) * k + self._c)

    def __divmod__(self, other):
        g = self._lift(other)
        if g is NotImplemented:
            return g
        return poly_divmod(self, g)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self._c:
            return self
        return self.scale(self.field.inv(self._c[-1]))

    def __call__(self, z0) -> FieldElement:
        return evaluate(self, z0)


def _coerce(field: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldMismatchError(f"{c!r} is not in {field.describe()}")
        return c.index
    if isinstance(c, int):
        return c % field.p
    if isinstance(c, str):
        return field.parse(c).index
    raise TypeError(f"cannot use {c!r} as a coefficient")


def degree(f: Poly) -> int | float:
    return f.degree


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``f = q*g + r`` with ``deg r < deg g``."""
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    if not g._c:
        raise ZeroDivisionError("polynomial division by zero")
    F = f.field
    r = list(f._c)
    b = g._c
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    if len(r) <= db:
        return Poly._raw(F, ()), f
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        q[i - db] = c
        for j, bj in enumerate(b):
            if bj:
                r[i - db + j] = F.sub(r[i - db + j], F.mul(c, bj))
    return Poly._raw(F, _trim(q)), Poly._raw(F, _trim(r[:db]))


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    if not f and not g:
        raise CodeError("gcd(0, 0) is undefined")
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def evaluate(f: Poly, z0) -> FieldElement:
    """Substitute ``z = z0`` (Horner)."""
    F = f.field
    x = _coerce(F, z0)
    acc = 0
    for c in reversed(f._c):
        acc = F.add(F.mul(acc, x), c)
    return FieldElement(F, acc)


# -- text -----------------------------------------------------------------


def format_poly(f: Poly) -> str:
    """``c_d*z^d+...+c_0``; prime-field coefficients print without ``*``."""
    F = f.field
    if not f._c:
        return "0"
    terms = []
    for i in range(len(f._c) - 1, -1, -1):
        c = f._c[i]
        if c == 0:
            continue
        cs = F.format(c)
        if i == 0:
            terms.append(cs)
            continue
        mono = "z" if i == 1 else f"z^{i}"
        if c == 1:
            terms.append(mono)
        elif F.m == 1:
            terms.append(cs + mono)
        else:
            terms.append(f"{cs}*{mono}")
    return "+".join(terms)


class _Parser:
    # expr := ['-'] term (('+'|'-') term)*
    # term := power ('*'? power)*
    # power := atom ('^' ['-'] int)?
    # atom := int | 'a' | 'z' | '(' expr ')' | '(' int (',' int)+ ')'

    def __init__(self, field: FieldSpec, text: str):
        self.F = field
        self.text = text
        self.pos = 0

    def fail(self, what: str):
        raise CodeError(f"cannot parse {self.text!r}: {what} at position {self.pos}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self) -> int:
        self.peek()
        mt = re.match(r"\d+", self.text[self.pos :])
        if not mt:
            self.fail("expected an integer")
        self.pos += mt.end()
        return int(mt.group())

    def parse(self) -> Poly:
        if not self.peek():
            self.fail("empty input")
        out = self.expr()
        if self.peek():
            self.fail(f"unexpected {self.peek()!r}")
        return out

    def expr(self) -> Poly:
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek() in ("+", "-") and self.peek():
            op = self.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.take()
                acc = acc * self.power()
            elif ch and (ch.isdigit() or ch in "azZα("):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Poly:
        base, is_const = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            e = sign * self.integer()
            if e < 0:
                if not is_const or not base:
                    self.fail("negative exponent on a non-unit")
                return Poly._raw(self.F, (self.F.pow(base.lead, e),))
            return base**e
        return base

    def atom(self) -> tuple[Poly, bool]:
        F = self.F
        ch = self.peek()
        if ch.isdigit():
            return Poly(F, [self.integer() % F.p]), True
        if ch in ("a", "α"):
            self.take()
            return Poly._raw(F, (F.primitive,)), True
        if ch in ("z", "Z"):
            self.take()
            return Poly.z(F), False
        if ch == "(":
            self.take()
            save = self.pos
            mt = re.match(r"\s*\d+\s*(,\s*\d+\s*)+\)", self.text[self.pos :])
            if mt:
                digits = [int(t) for t in self.text[save : save + mt.end() - 1].split(",")]
                self.pos = save + mt.end()
                return Poly._raw(F, _trim([F.pack(list(reversed(digits)))])), True
            inner = self.expr()
            if self.take() != ")":
                self.fail("expected ')'")
            return inner, inner.is_constant()
        self.fail("expected a term")


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """Parse a polynomial such as ``z^2+2z+1``, ``a^2*z+a`` or ``(z+1)^2``."""
    return _Parser(field, text).parse()
