"""Matrix carriers: packing, transpose, reading word, and map matrices.

A :class:`Matrix` is a rectangular grid of nonnegative integers; the only
matrix with zero extent is the empty matrix ``[]`` (0 rows and 0 columns).
A :class:`PackedMatrix` additionally has no zero row and no zero column;
packed matrices form the preferred basis of the bialgebras built in
:mod:`packhopf.hopfpack`.

The canonical total order on matrices is by
``(weight, rows, cols, row-major entries)``; it fixes the printing order
of linear combinations and the output order of shell enumerations.
"""

from __future__ import annotations

from typing import Iterable, Optional


class ParseError(ValueError):
    """Malformed text input to one of the parsers."""


class Composition:
    """Finite sequence of positive integers (possibly empty)."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_hash", hash(("comp", parts)))

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")

    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __add__(self, other: "Composition") -> "Composition":
        # concatenation, the free product on compositions
        return Composition(self.parts + other.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (self.weight(), len(self.parts), self.parts)

    def __lt__(self, other: "Composition") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    __repr__ = __str__


class Matrix:
    """Immutable grid of nonnegative integers; ``rows == 0`` iff ``cols == 0``."""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries: Iterable[Iterable[int]] = ()):
        rows = tuple(tuple(row) for row in entries)
        if rows:
            width = len(rows[0])
            if width == 0:
                raise ValueError("a nonempty matrix needs at least one column")
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise ValueError(f"ragged row at row {i + 1}")
                for e in row:
                    if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                        raise ValueError(f"entries must be nonnegative integers, got {e!r}")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_hash", hash(("mat", rows)))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def weight(self) -> int:
        return sum(sum(row) for row in self.entries)

    def max_entry(self) -> int:
        return max((e for row in self.entries for e in row), default=0)

    def is_empty(self) -> bool:
        return not self.entries

    def is_packed(self) -> bool:
        if not self.entries:
            return True
        if any(not any(row) for row in self.entries):
            return False
        return all(any(row[j] for row in self.entries) for j in range(self.cols))

    def transpose(self) -> "Matrix":
        return type(self)(zip(*self.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        flat = tuple(e for row in self.entries for e in row)
        return (self.weight(), self.rows, self.cols, flat)

    def __lt__(self, other: "Matrix") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "[" + ";".join(" ".join(str(e) for e in row) for row in self.entries) + "]"

    __repr__ = __str__


class PackedMatrix(Matrix):
    """A matrix with no zero row and no zero column (the empty matrix counts)."""

    __slots__ = ()

    def __init__(self, entries: Iterable[Iterable[int]] = ()):
        super().__init__(entries)
        for i, row in enumerate(self.entries):
            if not any(row):
                raise ValueError(f"zero row at row {i + 1} in a packed matrix")
        for j in range(self.cols):
            if not any(row[j] for row in self.entries):
                raise ValueError(f"zero column at column {j + 1} in a packed matrix")


EMPTY = PackedMatrix(())


def pack(m: Matrix) -> PackedMatrix:
    """Delete the zero rows and zero columns of ``m``.

    Idempotent and weight preserving; the zero matrix packs to the empty
    matrix.
    """
    rows = [row for row in m.entries if any(row)]
    if not rows:
        return EMPTY
    keep = [j for j in range(len(rows[0])) if any(row[j] for row in rows)]
    return PackedMatrix(tuple(tuple(row[j] for j in keep) for row in rows))


def comp(m: Matrix) -> Composition:
    """Row-major reading word of ``m`` with the zeros deleted."""
    return Composition(e for row in m.entries for e in row if e)


def map_matrix(word: tuple[int, ...], codomain: Optional[int] = None) -> Matrix:
    """0/1 matrix of a map ``alpha: [k] -> [l]`` given in one-line notation.

    Entry ``(i, j)`` is 1 exactly when ``alpha(j) = i``, so the result has
    ``l`` rows and ``k`` columns.  It is packed iff ``alpha`` is
    surjective.  ``codomain`` defaults to ``max(word)``.
    """
    k = len(word)
    l = max(word, default=0) if codomain is None else codomain
    if any(not (1 <= v <= l) for v in word):
        raise ValueError(f"word values must lie in [1..{l}]")
    if l == 0:
        return Matrix(())
    if k == 0:
        raise ValueError("a map into a nonempty codomain needs a nonempty domain here")
    entries = tuple(tuple(1 if word[j] == i + 1 else 0 for j in range(k)) for i in range(l))
    return Matrix(entries)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Ordinary matrix product (used to check functoriality of map matrices)."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.is_empty():
        return Matrix(())
    entries = tuple(
        tuple(sum(a.entries[i][t] * b.entries[t][j] for t in range(a.cols))
              for j in range(b.cols))
        for i in range(a.rows)
    )
    return Matrix(entries)


def diag_of(m: Matrix) -> Optional[Composition]:
    """Diagonal of ``m`` as a composition, or None if ``m`` is not diagonal.

    The empty matrix is diagonal with empty diagonal.
    """
    if m.is_empty():
        return Composition(())
    if m.rows != m.cols:
        return None
    for i, row in enumerate(m.entries):
        for j, e in enumerate(row):
            if i != j and e:
                return None
    if any(m.entries[i][i] == 0 for i in range(m.rows)):
        return None
    return Composition(m.entries[i][i] for i in range(m.rows))


def parse_matrix(text: str) -> Matrix:
    """Parse ``"[1 0;0 2]"`` / ``"[]"``; returns a PackedMatrix when packed."""
    s = text.strip()
    if not s.startswith("[") or not s.endswith("]"):
        raise ParseError(f"matrix must be bracketed like [1 0;0 2], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        m = Matrix(())
        return pack(m)
    rows = []
    for i, chunk in enumerate(body.split(";")):
        tokens = chunk.split()
        if not tokens:
            raise ParseError(f"empty row at row {i + 1}")
        row = []
        for tok in tokens:
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(f"invalid entry {tok!r} at row {i + 1}") from None
            if value < 0:
                raise ParseError(f"negative entry {tok!r} at row {i + 1}")
            row.append(value)
        rows.append(tuple(row))
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"ragged row at row {i + 1}")
    m = Matrix(rows)
    return PackedMatrix(m.entries) if m.is_packed() else m


def parse_composition(text: str) -> Composition:
    """Parse ``"(1,2,3)"`` or ``"()"``."""
    s = text.strip()
    if not s.startswith("(") or not s.endswith(")"):
        raise ParseError(f"composition must be parenthesised like (1,2), got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Composition(())
    parts = []
    for tok in body.split(","):
        tok = tok.strip()
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"invalid part {tok!r} in composition") from None
        if value < 1:
            raise ParseError(f"composition parts must be positive, got {tok!r}")
        parts.append(value)
    return Composition(parts)
