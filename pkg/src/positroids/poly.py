"""Exact integer polynomials in ``x`` and ``y``.

>>> X, Y = BivariatePoly.x(), BivariatePoly.y()
>>> print((X + Y) ** 2)
x^2 + 2xy + y^2
>>> print((1 - (X - 1) * (Y - 1)))
x - xy + y
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["BivariatePoly"]


class BivariatePoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c: dict[tuple[int, int], int] = {}
        for (i, j), v in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if v:
                c[(i, j)] = c.get((i, j), 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, v: int) -> "BivariatePoly":
        return cls({(0, 0): v})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BivariatePoly":
        return cls({(i, j): coeff})

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "BivariatePoly":
        return cls({(i, j): c for i, j, c in triples})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, c) for (i, j), c in self._c.items())

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePoly.const(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    @staticmethod
    def _lift(v) -> "BivariatePoly":
        if isinstance(v, BivariatePoly):
            return v
        if isinstance(v, int):
            return BivariatePoly.const(v)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BivariatePoly(c)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c: dict[tuple[int, int], int] = {}
        for (a, b), u in self._c.items():
            for (p, q), v in other._c.items():
                k = (a + p, b + q)
                c[k] = c.get(k, 0) + u * v
        return BivariatePoly(c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = BivariatePoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x, y):
        """Evaluate exactly (ints stay ints, fractions stay fractions)."""
        total = 0
        for (i, j), c in self._c.items():
            total += c * Fraction(x) ** i * Fraction(y) ** j
        return int(total) if total.denominator == 1 else total

    def specialize(self, x: int | None = None, y: int | None = None) -> "BivariatePoly":
        """Substitute an integer for one or both variables."""
        c: dict[tuple[int, int], int] = {}
        for (i, j), v in self._c.items():
            if x is not None:
                v, i = v * x**i, 0
            if y is not None:
                v, j = v * y**j, 0
            c[(i, j)] = c.get((i, j), 0) + v
        return BivariatePoly(c)

    def swap(self) -> "BivariatePoly":
        return BivariatePoly({(j, i): v for (i, j), v in self._c.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        # x-degree descending, then y-degree ascending
        terms = sorted(self._c.items(), key=lambda kv: (-kv[0][0], kv[0][1]))
        out = []
        for t, ((i, j), c) in enumerate(terms):
            mono = _mono("x", i) + _mono("y", j)
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            if t == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"BivariatePoly({str(self)!r})"


def _mono(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"
