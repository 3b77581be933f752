"""Immutable sparse exponent vectors.

A :class:`Monomial` doubles as a multidegree: over vertex variables it is a
``MultiDegree``, over edge variables an ``EdgeMonomial``.  Variables only
need to be hashable and mutually orderable.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Any


class Monomial(Mapping):
    """Exponent vector with nonnegative integer entries and finite support."""

    __slots__ = ("_items", "_dict", "_hash")

    def __init__(self, exponents: Mapping[Any, int] | Iterable[tuple[Any, int]] = ()):
        data: dict[Any, int] = {}
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        for var, exp in pairs:
            exp = int(exp)
            if exp < 0:
                raise ValueError(f"negative exponent {exp} on {var}")
            if exp:
                data[var] = data.get(var, 0) + exp
        self._items = tuple(sorted(data.items()))
        self._dict = dict(self._items)
        self._hash = hash(self._items)

    @classmethod
    def from_vars(cls, variables: Iterable[Any]) -> "Monomial":
        """Product of the given variables, repeated ones multiplying."""
        counts: dict[Any, int] = {}
        for v in variables:
            counts[v] = counts.get(v, 0) + 1
        return cls(counts)

    # Mapping protocol; missing variables have exponent zero.
    def __getitem__(self, var) -> int:
        return self._dict.get(var, 0)

    def get(self, var, default=0):
        return self[var] or default

    def __iter__(self) -> Iterator:
        return (v for v, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, var) -> bool:
        return var in self._dict

    def items(self):
        return self._items

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, Monomial):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._items == Monomial(other)._items
        return NotImplemented

    def __lt__(self, other: "Monomial") -> bool:
        return self._items < other._items

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self._items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._items)

    def __mul__(self, other: "Monomial") -> "Monomial":
        out = dict(self._items)
        for v, e in other.items():
            out[v] = out.get(v, 0) + e
        return Monomial(out)

    __add__ = __mul__

    def __pow__(self, n: int) -> "Monomial":
        return Monomial({v: e * n for v, e in self._items})

    def divides(self, other: "Monomial") -> bool:
        return all(other[v] >= e for v, e in self._items)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        out = dict(self._items)
        for v, e in other.items():
            out[v] -= e
        return Monomial(out)

    __sub__ = __truediv__

    def lcm(self, other: "Monomial") -> "Monomial":
        out = dict(self._items)
        for v, e in other.items():
            out[v] = max(out.get(v, 0), e)
        return Monomial(out)

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self._items)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


ONE = Monomial()
