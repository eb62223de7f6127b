"""Exact arithmetic over Q and over small Galois fields GF(p^k).

Finite field elements are stored as an integer code ``sum(c_i * p**i)``
where ``c_0 .. c_{k-1}`` are the coefficients in the basis
``1, t, ..., t^(k-1)`` modulo a fixed irreducible polynomial. The code is
canonical, so equality and hashing are plain integer operations.
Rationals are ``fractions.Fraction`` values.

>>> F = ff_make(2, 2)
>>> t = F("t")
>>> t * t
FieldElem(GF(2^2), 't+1')
>>> sqrt_char2(t)
FieldElem(GF(2^2), 't+1')
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldMismatch,
    IndeterminatePoint,
    ParseError,
    UnsupportedDegree,
    WrongCharacteristic,
)

MAX_DEGREE = 8
MODULUS_TABLE_VERSION = 1

# Coefficients low-to-high. Degrees not listed fall back to the smallest
# monic irreducible by code, which reproduces every entry below.
MODULUS_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# --- polynomials over GF(p), coefficient lists low-to-high -------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        r = _trim(r)
    return _trim(q), r


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    f = _trim([c % p for c in coeffs])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p ** k, f, p), x, p):
        return False
    for r in _prime_factors(k):
        h = _poly_sub(_poly_powmod(x, p ** (k // r), f, p), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


def _default_modulus(p, k):
    if (p, k) in MODULUS_TABLE:
        return MODULUS_TABLE[(p, k)]
    for code in range(p ** k):
        coeffs = [(code // p ** i) % p for i in range(k)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# --- fields ------------------------------------------------------------------

class Field:
    """Q (``p == 0``) or GF(p^k) with a fixed modulus.

    Use :func:`ff_make` rather than constructing directly; it caches
    instances so fields compare by identity in the common case.
    """

    __slots__ = ("p", "k", "modulus", "order", "_mod_code", "_mod_low")

    def __init__(self, p: int, k: int, modulus: tuple):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p ** k if p else None
        if p == 2 and k > 1:
            self._mod_code = sum(c << i for i, c in enumerate(modulus))
        else:
            self._mod_code = None
        # t^k = -(m_0 + m_1 t + ...); used by the generic reduction
        self._mod_low = [(-c) % p for c in modulus[:-1]] if k > 1 else []

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def extension_degree(self) -> int:
        return self.k

    @property
    def is_finite(self) -> bool:
        return self.p > 0

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return "Q" if self.p == 0 else f"GF({self.p}^{self.k})"

    def describe(self) -> dict:
        """JSON form echoed by the CLI."""
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def zero(self) -> "FieldElem":
        return FieldElem(self, Fraction(0) if self.p == 0 else 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, Fraction(1) if self.p == 0 else 1)

    def gen(self) -> "FieldElem":
        """The class of ``t`` in GF(p^k), k > 1."""
        if self.p == 0 or self.k == 1:
            raise WrongCharacteristic(f"{self!r} has no polynomial generator")
        return FieldElem(self, self.p)

    def elements(self) -> Iterator["FieldElem"]:
        if self.p == 0:
            raise WrongCharacteristic("Q is infinite")
        for code in range(self.order):
            yield FieldElem(self, code)

    def from_code(self, code: int) -> "FieldElem":
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElem(self, code)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElem":
        # reduce a polynomial of any degree modulo the modulus
        c = [int(x) % self.p for x in coeffs]
        if self.k > 1:
            c = self._reduce_list(c)
        else:
            if any(c[1:]):
                raise ParseError(f"{self!r} has no generator t")
            c = c[:1] or [0]
        return FieldElem(self, self._encode(c))

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} element used in {self!r}")
            return value
        if isinstance(value, str):
            return parse_literal(self, value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            if self.p == 0:
                return FieldElem(self, Fraction(value))
            return FieldElem(self, value % self.p)
        if isinstance(value, Fraction):
            if self.p == 0:
                return FieldElem(self, value)
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"{value} has no image in {self!r}")
            return FieldElem(self, value.numerator % self.p) / FieldElem(self, den)
        if isinstance(value, (tuple, list)):
            if self.p == 0:
                raise ParseError("coefficient vectors need a finite field")
            return self.from_coeffs(value)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    # internal helpers on codes
    def _decode(self, code):
        p = self.p
        out = []
        for _ in range(self.k):
            code, r = divmod(code, p)
            out.append(r)
        return out

    def _encode(self, coeffs):
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def _reduce_list(self, c):
        k, p, low = self.k, self.p, self._mod_low
        c = list(c)
        for deg in range(len(c) - 1, k - 1, -1):
            lead = c[deg]
            if lead:
                c[deg] = 0
                base = deg - k
                for i, m in enumerate(low):
                    if m:
                        c[base + i] = (c[base + i] + lead * m) % p
        c = c[:k]
        return c + [0] * (k - len(c))

    def _mul_codes(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if self._mod_code is not None:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                b >>= 1
            k, m = self.k, self._mod_code
            while r.bit_length() > k:
                r ^= m << (r.bit_length() - k - 1)
            return r
        prod = _poly_mul(self._decode(a), self._decode(b), self.p)
        return self._encode(self._reduce_list(prod))

    def _add_codes(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p, out, place = self.p, 0, 1
        for _ in range(self.k):
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def _neg_code(self, a):
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        p, out, place = self.p, 0, 1
        for _ in range(self.k):
            a, x = divmod(a, p)
            out += ((-x) % p) * place
            place *= p
        return out


@lru_cache(maxsize=None)
def ff_make(p: int, k: int = 1) -> Field:
    """Return Q (``p == 0``) or GF(p^k) with the built-in modulus."""
    if p == 0:
        if k != 1:
            raise UnsupportedDegree("Q only supports k = 1")
        return Field(0, 1, ())
    if not is_prime(p):
        raise CompositeCharacteristic(f"characteristic {p} is not prime")
    if not 1 <= k <= MAX_DEGREE:
        raise UnsupportedDegree(f"extension degree {k} outside 1..{MAX_DEGREE}")
    modulus = () if k == 1 else _default_modulus(p, k)
    return Field(p, k, modulus)


QQ = ff_make(0)


# --- elements ----------------------------------------------------------------

Coercible = Union["FieldElem", int, Fraction]


class FieldElem:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("field", "_v")

    def __init__(self, field: Field, value):
        self.field = field
        self._v = value

    @property
    def coeffs(self) -> tuple:
        """Coefficient vector of length k (finite fields only)."""
        if self.field.p == 0:
            raise WrongCharacteristic("rationals have no coefficient vector")
        return tuple(self.field._decode(self._v))

    @property
    def code(self) -> int:
        if self.field.p == 0:
            raise WrongCharacteristic("rationals have no integer code")
        return self._v

    @property
    def value(self):
        """The underlying Fraction (Q) or integer code (finite fields)."""
        return self._v

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def is_zero(self) -> bool:
        return not self._v

    def __bool__(self):
        return bool(self._v)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, FieldElem) else other
        if o is None:
            return NotImplemented
        return o.field == self.field and o._v == self._v

    def __hash__(self):
        return hash((self.field.p, self.field.k, self._v))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.p == 0:
            return FieldElem(self.field, self._v + o._v)
        return FieldElem(self.field, self.field._add_codes(self._v, o._v))

    __radd__ = __add__

    def __neg__(self):
        if self.field.p == 0:
            return FieldElem(self.field, -self._v)
        return FieldElem(self.field, self.field._neg_code(self._v))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.p == 0:
            return FieldElem(self.field, self._v * o._v)
        return FieldElem(self.field, self.field._mul_codes(self._v, o._v))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self._v:
            raise DivisionByZero(f"inverse of zero in {self.field!r}")
        if self.field.p == 0:
            return FieldElem(self.field, 1 / self._v)
        if self.field.k == 1:
            return FieldElem(self.field, pow(self._v, -1, self.field.p))
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.field.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def literal(self) -> str:
        return format_literal(self)

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return f"FieldElem({self.field!r}, {self.literal()!r})"


def arith(op: str, a: FieldElem, b: Optional[FieldElem] = None) -> FieldElem:
    """Dispatch form of the field operations: ``add``, ``mul``, ``neg``, ``inv``."""
    if op in ("add", "mul"):
        if b is None:
            raise TypeError(f"{op} needs two operands")
        if a.field != b.field:
            raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
        return a + b if op == "add" else a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")


def frobenius(a: FieldElem) -> FieldElem:
    if a.field.p == 0:
        raise WrongCharacteristic("Frobenius needs positive characteristic")
    return a ** a.field.p


def sqrt_char2(a: FieldElem) -> FieldElem:
    """The unique square root in GF(2^k), computed as ``a^(2^(k-1))``."""
    if a.field.p != 2:
        raise WrongCharacteristic(f"sqrt_char2 called over {a.field!r}")
    return a ** (2 ** (a.field.k - 1))


# --- projective line ---------------------------------------------------------

class P1Point:
    """A point of P^1 over a field: a finite value or infinity."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Optional[FieldElem]):
        if value is not None and value.field != field:
            raise FieldMismatch(f"{value.field!r} value on P1 over {field!r}")
        self.field = field
        self.value = value

    @classmethod
    def finite(cls, value: FieldElem) -> "P1Point":
        return cls(value.field, value)

    @classmethod
    def infinity(cls, field: Field) -> "P1Point":
        return cls(field, None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def homogeneous(self) -> tuple:
        """Coordinates ``(x0, x1)`` with the point equal to ``x0 / x1``."""
        if self.value is None:
            return (self.field.one(), self.field.zero())
        return (self.value, self.field.one())

    def __eq__(self, other):
        if not isinstance(other, P1Point):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash(("P1", self.value))

    def literal(self) -> str:
        return "inf" if self.value is None else self.value.literal()

    def __repr__(self):
        return f"P1Point({self.literal()})"


def p1_normalize(num: FieldElem, den: FieldElem) -> P1Point:
    if num.field != den.field:
        raise FieldMismatch(f"{num.field!r} vs {den.field!r}")
    if den.is_zero():
        if num.is_zero():
            raise IndeterminatePoint("(0 : 0) is not a point of P1")
        return P1Point.infinity(num.field)
    return P1Point.finite(num / den)


def p1_points(field: Field) -> Iterator[P1Point]:
    """All points of P^1 over a finite field, finite ones first, infinity last."""
    for a in field.elements():
        yield P1Point.finite(a)
    yield P1Point.infinity(field)


# --- literals ----------------------------------------------------------------

_MONO = re.compile(r"(\d*)\*?(t(?:\^(\d+))?)?")
_FIELD_SPEC = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_field(spec: str) -> Field:
    """Parse ``"p^k"``, ``"p"``, ``"0"`` or ``"Q"``."""
    s = spec.strip()
    if s in ("Q", "QQ", "0"):
        return QQ
    m = _FIELD_SPEC.fullmatch(s)
    if not m:
        raise ParseError(f"bad field spec {spec!r}; expected p^k")
    return ff_make(int(m.group(1)), int(m.group(2) or 1))


def parse_literal(field: Field, text: str) -> FieldElem:
    """Parse a field-element literal: ``"t^2+t+1"``, ``"2t+1"``, ``"-3/4"``."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty literal")
    if field.p == 0:
        try:
            return FieldElem(field, Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc
    coeffs = [0] * (field.k)
    terms = s.replace("-", "+-").split("+")
    if terms[0] == "":
        terms = terms[1:]
    for term in terms:
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        m = _MONO.fullmatch(term)
        if not term or not m or not (m.group(1) or m.group(2)):
            raise ParseError(f"bad term {term!r} in literal {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            if field.k == 1:
                raise ParseError(f"{field!r} has no generator t")
            e = int(m.group(3)) if m.group(3) else 1
        else:
            e = 0
        if e >= len(coeffs):
            coeffs += [0] * (e + 1 - len(coeffs))
        coeffs[e] += sign * c
    return field.from_coeffs(coeffs)


def format_literal(a: FieldElem) -> str:
    if a.field.p == 0:
        return str(a._v)
    if a.field.k == 1:
        return str(a._v)
    terms = []
    for e, c in reversed(list(enumerate(a.coeffs))):
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = "t" if e == 1 else f"t^{e}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def parse_p1(field: Field, text: str) -> P1Point:
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return P1Point.infinity(field)
    return P1Point.finite(parse_literal(field, text))
