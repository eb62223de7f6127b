"""Sparse bivariate polynomials with exact field coefficients."""
from __future__ import annotations

from .field import Field, FieldElem


class Poly2:
    """Polynomial in ``x, y`` stored as ``{(i, j): coeff}`` with nonzero coeffs."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=None):
        self.field = field
        clean = {}
        for mono, c in (terms or {}).items():
            c = field(c)
            if c:
                clean[mono] = c
        self.terms = clean

    @classmethod
    def x(cls, field):
        return cls(field, {(1, 0): 1})

    @classmethod
    def y(cls, field):
        return cls(field, {(0, 1): 1})

    @classmethod
    def const(cls, field, c):
        return cls(field, {(0, 0): c})

    def _lift(self, other):
        if isinstance(other, Poly2):
            return other
        return Poly2.const(self.field, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Poly2(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for (a, b), c in self.terms.items():
            for (i, j), e in other.terms.items():
                m = (a + i, b + j)
                out[m] = out[m] + c * e if m in out else c * e
        return Poly2(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly2.const(self.field, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, x, y) -> FieldElem:
        total = self.field.zero()
        for (i, j), c in self.terms.items():
            total = total + c * (x ** i) * (y ** j)
        return total

    def diff(self, var: str) -> "Poly2":
        """Formal partial derivative; integer multiples reduce in the field."""
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i:
                out[(i - 1, j)] = c * i
            elif var == "y" and j:
                out[(i, j - 1)] = c * j
        return Poly2(self.field, out)

    def compose(self, px: "Poly2", py: "Poly2") -> "Poly2":
        """Substitute ``x -> px``, ``y -> py``."""
        out = Poly2(self.field)
        for (i, j), c in self.terms.items():
            out = out + (px ** i) * (py ** j) * c
        return out

    def homogeneous_part(self, deg: int) -> "Poly2":
        return Poly2(self.field, {m: c for m, c in self.terms.items() if sum(m) == deg})

    def coeff(self, i: int, j: int) -> FieldElem:
        return self.terms.get((i, j), self.field.zero())

    def divide_by_x_power(self, k: int) -> "Poly2":
        """Exact division by ``x**k`` (raises if some term has lower x-degree)."""
        if any(i < k for i, _ in self.terms):
            raise ValueError(f"not divisible by x^{k}")
        return Poly2(self.field, {(i - k, j): c for (i, j), c in self.terms.items()})

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            lit = c.literal()
            if not mono:
                parts.append(lit)
            elif lit == "1":
                parts.append(mono)
            else:
                parts.append(f"({lit}){mono}")
        return " + ".join(parts)
