"""Polynomial realization of packed matrices over finite ordered alphabets,
and its exact numeric evaluation on rational grids.

A matrix M with k rows and l columns expands to a sum of monomials in
doubly indexed variables ``t[i, j]``: choose strictly increasing row
indices and column indices, then place each nonzero entry of M as the
exponent of the matching variable.  With a finite alphabet the expansion
silently truncates (matrices taller or wider than the alphabet realise to
0).  Evaluating the variables on a grid of rationals gives the family of
iterated-sums features of the grid indexed by packed matrices.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .lincomb import LinComb
from .matrices import EMPTY, Matrix, PackedMatrix, ParseError, pack


class Monomial2:
    """Monomial in the variables t[i, j], stored as sorted (index, exponent)
    pairs with 1-based indices and positive exponents."""

    __slots__ = ("powers",)

    def __init__(self, powers: Iterable[tuple[tuple[int, int], int]] = ()):
        cleaned = []
        for (i, j), e in powers:
            if e < 1:
                raise ValueError("exponents must be positive")
            if i < 1 or j < 1:
                raise ValueError("variable indices are 1-based")
            cleaned.append(((i, j), e))
        cleaned.sort()
        for a, b in zip(cleaned, cleaned[1:]):
            if a[0] == b[0]:
                raise ValueError(f"repeated variable {a[0]}")
        object.__setattr__(self, "powers", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial2 is immutable")

    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial2) and self.powers == other.powers

    def __hash__(self) -> int:
        return hash(("mon2", self.powers))

    def __lt__(self, other: "Monomial2") -> bool:
        return self.powers < other.powers

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(
            f"t[{i},{j}]" if e == 1 else f"t[{i},{j}]^{e}"
            for (i, j), e in self.powers
        )

    __repr__ = __str__


EMPTY_MONOMIAL = Monomial2(())


def phi_formal(m: PackedMatrix, rows_alphabet: int, cols_alphabet: int) -> LinComb:
    """Formal expansion of the realization of m over alphabets of the given
    sizes; empty when either alphabet is too small."""
    if m.is_empty():
        return LinComb.term(EMPTY_MONOMIAL)
    if rows_alphabet < m.rows or cols_alphabet < m.cols:
        return LinComb.zero()
    acc: dict = {}
    cells = [(r, c, e) for r, row in enumerate(m.entries) for c, e in enumerate(row) if e]
    for isel in combinations(range(1, rows_alphabet + 1), m.rows):
        for jsel in combinations(range(1, cols_alphabet + 1), m.cols):
            mono = Monomial2((((isel[r], jsel[c]), e) for r, c, e in cells))
            acc[mono] = acc.get(mono, 0) + 1
    return LinComb(acc)


def classify(p: Monomial2) -> PackedMatrix:
    """The packed matrix whose entries are the exponents of p placed at the
    ranks of its used row and column indices.  Left inverse of the
    expansion: every monomial of ``phi_formal(m, ...)`` classifies to m."""
    if not p.powers:
        return EMPTY
    rows_used = sorted({i for (i, _), _ in p.powers})
    cols_used = sorted({j for (_, j), _ in p.powers})
    ri = {i: r for r, i in enumerate(rows_used)}
    ci = {j: c for c, j in enumerate(cols_used)}
    grid = [[0] * len(cols_used) for _ in rows_used]
    for (i, j), e in p.powers:
        grid[ri[i]][ci[j]] = e
    return PackedMatrix(tuple(tuple(row) for row in grid))


def monomials_of_degree(rows_alphabet: int, cols_alphabet: int, degree: int):
    """All monomials of the given total degree in the t[i, j] variables."""
    variables = [(i, j) for i in range(1, rows_alphabet + 1)
                 for j in range(1, cols_alphabet + 1)]

    def rec(idx: int, rest: int, chosen: list):
        if rest == 0:
            yield Monomial2(tuple(chosen))
            return
        if idx == len(variables):
            return
        yield from rec(idx + 1, rest, chosen)
        for e in range(1, rest + 1):
            chosen.append((variables[idx], e))
            yield from rec(idx + 1, rest - e, chosen)
            chosen.pop()

    yield from rec(0, degree, [])


class Grid:
    """Rectangular grid of exact rationals used to evaluate realizations."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Iterable[Fraction | int]]):
        rows = tuple(tuple(Fraction(v) for v in row) for row in values)
        if not rows or not rows[0]:
            raise ValueError("grid dimensions must be positive")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("grid rows must have equal length")
        object.__setattr__(self, "values", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Grid is immutable")

    @property
    def rows(self) -> int:
        return len(self.values)

    @property
    def cols(self) -> int:
        return len(self.values[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, Grid) and self.values == other.values

    def transpose(self) -> "Grid":
        return Grid(zip(*self.values))

    def block_diag(self, other: "Grid") -> "Grid":
        """Direct sum with zero off blocks; realises the split of a totally
        ordered alphabet into a lower and an upper part."""
        top = tuple(row + (Fraction(0),) * other.cols for row in self.values)
        bottom = tuple((Fraction(0),) * self.cols + row for row in other.values)
        return Grid(top + bottom)

    def kron(self, other: "Grid") -> "Grid":
        """Kronecker product with lexicographic index order; realises the
        product of two totally ordered alphabets."""
        out = []
        for r1 in range(self.rows):
            for r2 in range(other.rows):
                row = []
                for c1 in range(self.cols):
                    for c2 in range(other.cols):
                        row.append(self.values[r1][c1] * other.values[r2][c2])
                out.append(tuple(row))
        return Grid(tuple(out))

    @classmethod
    def from_json(cls, text: str) -> "Grid":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid grid JSON: {exc}") from None
        if not isinstance(obj, dict) or not {"rows", "cols", "values"} <= set(obj):
            raise ParseError('grid JSON needs keys "rows", "cols", "values"')
        values = obj["values"]
        if len(values) != obj["rows"] or any(len(r) != obj["cols"] for r in values):
            raise ParseError("grid values do not match the declared dimensions")
        try:
            return cls(tuple(tuple(Fraction(v) for v in row) for row in values))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid grid value: {exc}") from None

    def to_json(self) -> str:
        return json.dumps({
            "rows": self.rows,
            "cols": self.cols,
            "values": [[str(v) for v in row] for row in self.values],
        })


def evaluate(m: PackedMatrix, grid: Grid) -> Fraction:
    """Exact value of the realization of m on a grid: sum over strictly
    increasing row and column index choices of the product of the chosen
    grid values raised to the entries of m.  0 when the grid is too small."""
    if m.is_empty():
        return Fraction(1)
    if grid.rows < m.rows or grid.cols < m.cols:
        return Fraction(0)
    cells = [(r, c, e) for r, row in enumerate(m.entries) for c, e in enumerate(row) if e]
    total = Fraction(0)
    for isel in combinations(range(grid.rows), m.rows):
        for jsel in combinations(range(grid.cols), m.cols):
            term = Fraction(1)
            for r, c, e in cells:
                v = grid.values[isel[r]][jsel[c]]
                if not v:
                    term = Fraction(0)
                    break
                term *= v if e == 1 else v ** e
            total += term
    return total


def evaluate_lincomb(x, grid: Grid) -> Fraction:
    """Linear extension of :func:`evaluate`."""
    total = Fraction(0)
    for m, c in LinComb.wrap(x).items():
        total += c * evaluate(m, grid)
    return total
