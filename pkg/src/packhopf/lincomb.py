"""Sparse linear combinations over arbitrary hashable basis keys.

Coefficients are exact rationals (``fractions.Fraction``); zero
coefficients are never stored, so equality of linear combinations is
plain dictionary equality.  Keys only need ``__eq__``/``__hash__``; for
printing they must additionally be totally ordered and have a text form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping

Scalar = int | Fraction


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact scalar expected (int or Fraction), got {type(c).__name__}")


class TensorKey:
    """Ordered tuple of basis keys acting as a tensor-product basis key.

    The arity is fixed at construction (2 for coproducts, 3 for
    coassociativity checks).
    """

    __slots__ = ("factors", "_hash")

    def __init__(self, factors: Iterable[Hashable]):
        factors = tuple(factors)
        if len(factors) not in (2, 3):
            raise ValueError(f"tensor keys have arity 2 or 3, got {len(factors)}")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "_hash", hash(("tensor", factors)))

    def __setattr__(self, name, value):
        raise AttributeError("TensorKey is immutable")

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorKey) and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "TensorKey") -> bool:
        return self.factors < other.factors

    def __str__(self) -> str:
        return "⊗".join(str(f) for f in self.factors)

    __repr__ = __str__


class LinComb:
    """Finite formal sum of basis keys with nonzero rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, c in items:
            c = _as_fraction(c)
            if not c:
                continue
            s = acc.get(key, 0) + c
            if s:
                acc[key] = s
            else:
                del acc[key]
        self._terms = acc

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def term(cls, key: Hashable, coeff: Scalar = 1) -> "LinComb":
        return cls(((key, coeff),))

    @classmethod
    def wrap(cls, x) -> "LinComb":
        """Coerce a bare basis key (or an existing LinComb) to a LinComb."""
        return x if isinstance(x, cls) else cls.term(x)

    def coeff(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self._terms.items())

    def keys(self):
        return self._terms.keys()

    def sorted_items(self) -> list[tuple[Hashable, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self._terms == other._terms

    def __add__(self, other: "LinComb") -> "LinComb":
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, 0) + c
            if s:
                acc[key] = s
            else:
                del acc[key]
        out = LinComb.__new__(LinComb)
        out._terms = acc
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def scale(self, c: Scalar) -> "LinComb":
        c = _as_fraction(c)
        out = LinComb.__new__(LinComb)
        out._terms = {} if not c else {k: c * v for k, v in self._terms.items()}
        return out

    def __rmul__(self, c: Scalar) -> "LinComb":
        return self.scale(c)

    def __mul__(self, c: Scalar) -> "LinComb":
        return self.scale(c)

    def apply(self, f: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Linear extension of a map defined on basis keys."""
        acc: dict = {}
        for key, c in self._terms.items():
            for k2, c2 in f(key)._terms.items():
                s = acc.get(k2, 0) + c * c2
                if s:
                    acc[k2] = s
                else:
                    del acc[k2]
        out = LinComb.__new__(LinComb)
        out._terms = acc
        return out

    def map_keys(self, g: Callable[[Hashable], Hashable]) -> "LinComb":
        """Push forward along a key map, merging collisions."""
        acc: dict = {}
        for key, c in self._terms.items():
            k2 = g(key)
            s = acc.get(k2, 0) + c
            if s:
                acc[k2] = s
            else:
                del acc[k2]
        out = LinComb.__new__(LinComb)
        out._terms = acc
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (key, c) in enumerate(self.sorted_items()):
            mag = abs(c)
            body = str(key) if mag == 1 else f"{mag}*{key}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    __repr__ = __str__


def tensor(*factors: LinComb) -> LinComb:
    """Tensor product of 2 or 3 linear combinations, as a LinComb over TensorKey."""
    if len(factors) not in (2, 3):
        raise ValueError("tensor takes 2 or 3 factors")
    acc: dict = {}
    if len(factors) == 2:
        a, b = factors
        for ka, ca in a.items():
            for kb, cb in b.items():
                acc[TensorKey((ka, kb))] = ca * cb
    else:
        a, b, c = factors
        for ka, ca in a.items():
            for kb, cb in b.items():
                for kc, cc in c.items():
                    acc[TensorKey((ka, kb, kc))] = ca * cb * cc
    return LinComb(acc)


def pairing(a: LinComb, b: LinComb) -> Fraction:
    """Delta pairing on basis keys, extended bilinearly: sum of a[k]*b[k]."""
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    total = Fraction(0)
    for key, c in small.items():
        c2 = big.coeff(key)
        if c2:
            total += c * c2
    return total
