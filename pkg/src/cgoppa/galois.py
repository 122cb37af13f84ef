"""Finite fields GF(p^m) with elements packed as base-p integers.

An element of GF(p^m) is the residue class of a polynomial of degree < m over
GF(p).  Its index packs the coefficient vector in base p, constant term in the
least significant digit, so ``0`` and ``1`` are the additive and multiplicative
identities in every field.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections.abc import Sequence

from cgoppa.errors import CodeError, FieldMismatchError

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_make",
    "parse_field",
    "arith",
    "inv",
    "power",
    "primitive_element",
]

TABLE_LIMIT = 1 << 16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return None


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# Polynomials over GF(p) as coefficient lists, constant term first.  Only used
# to validate moduli and to build multiplication tables.


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _is_irreducible(low_first: list[int], p: int) -> bool:
    m = len(low_first) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _pmod(low_first, divisor, p):
                return False
    return True


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    # Monic degree-m polynomials in increasing packed index; first irreducible wins.
    for packed in range(p**m):
        low = [(packed // p**i) % p for i in range(m)] + [1]
        if _is_irreducible(low, p):
            return tuple(reversed(low))
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^m).

    ``modulus`` lists the coefficients of the defining polynomial from the
    leading one down to the constant term, matching the ``GF(p^m; c_m,...,c_0)``
    text form.  Instances are immutable; build them through :func:`field_make`
    so that equal fields share their lookup tables.
    """

    __slots__ = ("p", "m", "q", "modulus", "_low", "_exp", "_log", "_prim", "_np")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._low = tuple(reversed(modulus))
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._np: dict = {}
        self._prim = self._find_primitive()
        if self.q <= TABLE_LIMIT:
            exp = [1] * (self.q - 1)
            for i in range(1, self.q - 1):
                exp[i] = self._slow_mul(exp[i - 1], self._prim)
            log = [0] * self.q
            for i, x in enumerate(exp):
                log[x] = i
            self._exp, self._log = exp, log

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec({self.describe()!r})"

    def describe(self) -> str:
        """Text form accepted by :func:`parse_field`."""
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}; {','.join(map(str, self.modulus))})"

    # -- packing ------------------------------------------------------------

    def digits(self, x: int) -> list[int]:
        """Coefficient vector of ``x``, constant term first."""
        return [(x // self.p**i) % self.p for i in range(self.m)]

    def pack(self, digits: Sequence[int]) -> int:
        if len(digits) > self.m:
            raise CodeError(f"too many coefficients for {self.describe()}")
        return sum((d % self.p) * self.p**i for i, d in enumerate(digits))

    # -- integer-level arithmetic (hot paths use these directly) -------------

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p, out, scale = self.p, 0, 1
        while x or y:
            out += ((x % p + y % p) % p) * scale
            x //= p
            y //= p
            scale *= p
        return out

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        if self.m == 1:
            return -x % self.p
        return self.pack([-d for d in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
        return self._slow_mul(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        if self._exp is not None:
            return self._exp[-self._log[x] % (self.q - 1)]
        return self.pow(x, self.q - 2)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if x == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[x] * e % (self.q - 1)]
        out = 1
        while e:
            if e & 1:
                out = self._slow_mul(out, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return out

    def log(self, x: int) -> int:
        """Discrete logarithm of ``x`` to the base of :meth:`primitive`."""
        if x == 0:
            raise ValueError("log(0) is undefined")
        if self._log is not None:
            return self._log[x]
        acc = 1
        for k in range(self.q - 1):
            if acc == x:
                return k
            acc = self._slow_mul(acc, self._prim)
        raise AssertionError("unreachable")  # pragma: no cover

    def _slow_mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        p = self.p
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        while prod and prod[-1] == 0:
            prod.pop()
        return self.pack(_pmod(prod, list(self._low), p)) if len(prod) > self.m else self.pack(prod)

    def _find_primitive(self) -> int:
        for x in range(1, self.q):
            if self._is_generator(x):
                return x
        raise AssertionError("field has no primitive element")  # pragma: no cover

    def _is_generator(self, x: int) -> bool:
        n = self.q - 1
        for d in _divisors(n)[:-1]:
            if self._slow_pow(x, d) == 1:
                return False
        return True

    def _slow_pow(self, x: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._slow_mul(out, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return out

    # -- elements -----------------------------------------------------------

    @property
    def primitive(self) -> int:
        """Index of the smallest element of multiplicative order q - 1."""
        return self._prim

    def __call__(self, value) -> FieldElement:
        """Coerce an int (taken mod p), FieldElement or string into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not in {self.describe()}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldElement(self, value % self.p)

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise CodeError(f"index {index} out of range for {self.describe()}")
        return FieldElement(self, index)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    # -- text ---------------------------------------------------------------

    def format(self, x: int) -> str:
        """Decimal for prime fields; ``0``, ``1``, ``a``, ``a^k`` otherwise."""
        if self.m == 1:
            return str(x)
        if x == 0:
            return "0"
        k = self.log(x)
        return "1" if k == 0 else "a" if k == 1 else f"a^{k}"

    def parse(self, text: str) -> FieldElement:
        """Parse ``a^k``, ``a``, an integer, or a coefficient tuple ``(c_{m-1},...,c_0)``."""
        s = text.strip().replace("α", "a").replace(" ", "")
        if not s:
            raise CodeError("empty field element")
        if s.startswith("(") and s.endswith(")"):
            try:
                high_first = [int(t) for t in s[1:-1].split(",")]
            except ValueError:
                raise CodeError(f"bad coefficient tuple {text!r}") from None
            return FieldElement(self, self.pack(list(reversed(high_first))))
        sign = 1
        if s.startswith("-"):
            sign, s = -1, s[1:]
        mt = re.fullmatch(r"a(?:\^(-?\d+))?", s)
        if mt:
            x = self.pow(self._prim, int(mt.group(1) or 1))
        elif re.fullmatch(r"\d+", s):
            x = int(s) % self.p
        else:
            raise CodeError(f"cannot parse field element {text!r} in {self.describe()}")
        return FieldElement(self, self.neg(x) if sign < 0 else x)

    # -- numpy tables (brute-force enumeration) -------------------------------

    def np_tables(self):
        """``(add, mul, neg)`` lookup tables as numpy arrays, built once per field."""
        if "tables" not in self._np:
            import numpy as np

            if self.q > 256:
                raise CodeError("table enumeration is limited to q <= 256")
            rng = range(self.q)
            add = np.array([[self.add(x, y) for y in rng] for x in rng], dtype=np.uint8)
            mul = np.array([[self.mul(x, y) for y in rng] for x in rng], dtype=np.uint8)
            neg = np.array([self.neg(x) for x in rng], dtype=np.uint8)
            self._np["tables"] = (add, mul, neg)
        return self._np["tables"]


class FieldElement:
    """An element of a :class:`FieldSpec`, identified by its packed index."""

    __slots__ = ("field", "index")

    def __init__(self, field: FieldSpec, index: int):
        self.field = field
        self.index = index

    def _other(self, y) -> int:
        if isinstance(y, FieldElement):
            if y.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field.describe()} and {y.field.describe()}"
                )
            return y.index
        if isinstance(y, int):
            return y % self.field.p
        return NotImplemented

    def _wrap(self, x: int) -> FieldElement:
        return FieldElement(self.field, x)

    def __add__(self, y):
        o = self._other(y)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, y):
        o = self._other(y)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.index, o))

    def __rsub__(self, y):
        o = self._other(y)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.index))

    def __mul__(self, y):
        o = self._other(y)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, y):
        o = self._other(y)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.index, self.field.inv(o)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.index, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.index))

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.index))

    def __repr__(self):
        return f"{self.field.describe()}[{self}]"

    def __str__(self):
        return self.field.format(self.index)

    def order(self) -> int:
        """Multiplicative order."""
        if self.index == 0:
            raise ValueError("0 has no multiplicative order")
        f = self.field
        for d in _divisors(f.q - 1):
            if f.pow(self.index, d) == 1:
                return d
        raise AssertionError("unreachable")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def _make(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not _is_prime(p):
        raise CodeError(f"characteristic {p} is not prime")
    if m < 1:
        raise CodeError(f"extension degree must be positive, got {m}")
    if modulus is None:
        modulus = (1, p - 1) if m == 1 else _default_modulus(p, m)
    else:
        if len(modulus) != m + 1:
            raise CodeError(f"modulus {list(modulus)} does not have degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise CodeError(f"modulus coefficients must lie in [0, {p})")
        if modulus[0] != 1:
            raise CodeError(f"modulus {list(modulus)} is not monic")
        if not _is_irreducible(list(reversed(modulus)), p):
            raise CodeError(f"modulus {list(modulus)} is reducible over GF({p})")
    return FieldSpec(p, m, tuple(modulus))


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build and validate GF(p^m).

    ``modulus`` gives the defining polynomial's coefficients, leading one
    first.  For ``m == 1`` it may be omitted (arithmetic is mod p); for
    ``m > 1`` the default is the monic irreducible of smallest packed index.
    """
    return _make(int(p), int(m), None if modulus is None else tuple(int(c) for c in modulus))


_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*([\d\s,]+))?\)\s*$")


def parse_field(text: str) -> FieldSpec:
    """Parse ``GF(p)``, ``GF(q)``, ``GF(p^m)`` or ``GF(p^m; c_m,...,c_0)``."""
    mt = _FIELD_RE.match(text)
    if not mt:
        raise CodeError(f"cannot parse field description {text!r}")
    base, exp, mod = mt.groups()
    p, m = int(base), int(exp) if exp else 1
    if exp is None and not _is_prime(p):
        pm = _prime_power(p)
        if pm is None:
            raise CodeError(f"{p} is not a prime power")
        p, m = pm
    modulus = [int(c) for c in mod.split(",")] if mod else None
    return field_make(p, m, modulus)


def _check_same(x: FieldElement, y: FieldElement) -> None:
    if x.field != y.field:
        raise FieldMismatchError(
            f"cannot combine elements of {x.field.describe()} and {y.field.describe()}"
        )


def arith(op: str, x: FieldElement, y: FieldElement) -> FieldElement:
    """Apply ``add``, ``sub``, ``mul`` or ``neg`` (``y`` ignored for ``neg``)."""
    if op == "neg":
        return -x
    _check_same(x, y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise CodeError(f"unknown field operation {op!r}")


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def power(x: FieldElement, e: int) -> FieldElement:
    return x**e


def primitive_element(field: FieldSpec) -> FieldElement:
    """Smallest-index element of multiplicative order q - 1."""
    return FieldElement(field, field.primitive)
