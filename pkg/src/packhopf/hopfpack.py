"""Products, coproducts, counits, and the antipode on packed integer matrices.

The span of packed matrices carries, on the same basis:

* the block-diagonal product ``searrow`` with the sum-splitting coproduct
  ``coproduct_black`` (a graded connected Hopf algebra, antipode
  :func:`antipode`);
* the dual pair: the commutative quasi-shuffle product
  :func:`quasi_shuffle` with the block-deconcatenation coproduct
  :func:`deconcat`;
* the bigraded pair: the strict-shuffle product :func:`shuffle`, dual to
  the bigrade-preserving restriction :func:`coproduct_black_res`;
* a second coproduct :func:`second_coproduct` built from admissible
  surjection pairs acting on rows and columns, which upgrades the
  quasi-shuffle bialgebra to a double bialgebra.

All functions are pure; the coproducts are memoised per matrix since the
verification harness revisits the same small matrices constantly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import product as iproduct

from . import config
from .lincomb import LinComb, TensorKey
from .matrices import EMPTY, Composition, Matrix, PackedMatrix, pack
from .surjections import enumerate_adm, enumerate_qsh, enumerate_sh


def searrow_mat(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal concatenation of two basis matrices."""
    if a.is_empty():
        return b
    if b.is_empty():
        return a
    top = tuple(row + (0,) * b.cols for row in a.entries)
    bottom = tuple((0,) * a.cols + row for row in b.entries)
    cls = PackedMatrix if isinstance(a, PackedMatrix) and isinstance(b, PackedMatrix) else Matrix
    return cls(top + bottom)


def _bilinear(f):
    def g(x, y) -> LinComb:
        xs, ys = LinComb.wrap(x), LinComb.wrap(y)
        acc: dict = {}
        for kx, cx in xs.items():
            for ky, cy in ys.items():
                c = cx * cy
                fk = f(kx, ky)
                if isinstance(fk, LinComb):
                    for k2, c2 in fk.items():
                        s = acc.get(k2, 0) + c * c2
                        if s:
                            acc[k2] = s
                        else:
                            del acc[k2]
                else:
                    s = acc.get(fk, 0) + c
                    if s:
                        acc[fk] = s
                    else:
                        del acc[fk]
        return LinComb(acc)
    return g


def searrow(x, y) -> LinComb:
    """Bilinear extension of block-diagonal concatenation; unit is ``[]``."""
    return _bilinear(searrow_mat)(x, y)


def _splittings(m: Matrix):
    """All entrywise splittings m = m1 + m2 of the same shape, as grid pairs."""
    flat = [e for row in m.entries for e in row]
    cols = m.cols
    for choice in iproduct(*(range(e + 1) for e in flat)):
        left = tuple(tuple(choice[i * cols + j] for j in range(cols)) for i in range(m.rows))
        right = tuple(tuple(flat[i * cols + j] - choice[i * cols + j] for j in range(cols))
                      for i in range(m.rows))
        yield left, right


def _guard_split(m: Matrix, limit: int | None) -> None:
    lim = config.DEFAULT_SPLIT_WEIGHT if limit is None else limit
    config.check("split-weight", m.weight(), lim, "the max_weight argument")


@cache
def coproduct_black(m: PackedMatrix, max_weight: int | None = None) -> LinComb:
    """Sum-splitting coproduct: all ways to write m as an entrywise sum of
    two same-shape matrices, with both parts packed afterwards.

    The raw number of splittings is the product of (entry + 1) over all
    entries, hence the weight guard.
    """
    _guard_split(m, max_weight)
    if m.is_empty():
        return LinComb.term(TensorKey((EMPTY, EMPTY)))
    acc: dict = {}
    for left, right in _splittings(m):
        key = TensorKey((pack(Matrix(left)), pack(Matrix(right))))
        acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


@cache
def coproduct_black_mat(m: Matrix, max_weight: int | None = None) -> LinComb:
    """Sum-splitting coproduct on arbitrary matrices, without packing.

    Only used to check that packing is a quotient map for the splitting
    coproduct; tensor legs may have zero rows or columns.
    """
    _guard_split(m, max_weight)
    if m.is_empty():
        return LinComb.term(TensorKey((Matrix(()), Matrix(()))))
    acc: dict = {}
    for left, right in _splittings(m):
        key = TensorKey((Matrix(left), Matrix(right)))
        acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def coproduct_black_res(m: PackedMatrix, max_weight: int | None = None) -> LinComb:
    """Bigrade-preserving part of the sum-splitting coproduct.

    Keeps the splittings whose packed legs satisfy
    ``rows(left) + rows(right) == rows(m)`` and the same for columns,
    i.e. those in which every row and every column of m goes entirely to
    one side.  Dual to :func:`shuffle` for the (rows, cols) bigrading.
    """
    full = coproduct_black(m, max_weight)
    k, l = m.rows, m.cols
    kept = {key: c for key, c in full.items()
            if key[0].rows + key[1].rows == k and key[0].cols + key[1].cols == l}
    return LinComb(kept)


def block_cut_points(m: Matrix) -> tuple[tuple[int, int], ...]:
    """Nontrivial block-diagonal cut positions (i, j) of m.

    A cut (i, j) means the top-left i x j and bottom-right blocks carry
    all the mass; for a packed matrix the valid cuts form a chain, so the
    result is strictly increasing in both coordinates.
    """
    cuts = []
    for i in range(1, m.rows):
        for j in range(1, m.cols):
            if all(m.entries[r][c] == 0 for r in range(i) for c in range(j, m.cols)) and \
               all(m.entries[r][c] == 0 for r in range(i, m.rows) for c in range(j)):
                cuts.append((i, j))
    return tuple(cuts)


def _cut_block(m: Matrix, i0: int, j0: int, i1: int, j1: int) -> PackedMatrix:
    return PackedMatrix(tuple(row[j0:j1] for row in m.entries[i0:i1]))


@cache
def deconcat(m: PackedMatrix) -> LinComb:
    """Deconcatenation coproduct: all factorizations m = m1 searrow m2,
    including the two trivial ones.  Dual to :func:`searrow`."""
    if m.is_empty():
        return LinComb.term(TensorKey((EMPTY, EMPTY)))
    acc: dict = {TensorKey((EMPTY, m)): 1, TensorKey((m, EMPTY)): 1}
    for (i, j) in block_cut_points(m):
        key = TensorKey((_cut_block(m, 0, 0, i, j), _cut_block(m, i, j, m.rows, m.cols)))
        acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def block_factorizations(m: PackedMatrix) -> list[tuple[PackedMatrix, ...]]:
    """All factorizations of m into nonempty packed diagonal blocks.

    Returned as tuples of factors; the singleton factorization (m,) is
    included, and the empty matrix has exactly the empty factorization.
    """
    if m.is_empty():
        return [()]
    cuts = block_cut_points(m)
    out = []
    for mask in range(1 << len(cuts)):
        chosen = [cuts[t] for t in range(len(cuts)) if mask >> t & 1]
        bounds = [(0, 0)] + chosen + [(m.rows, m.cols)]
        out.append(tuple(_cut_block(m, i0, j0, i1, j1)
                         for (i0, j0), (i1, j1) in zip(bounds, bounds[1:])))
    return out


def _sandwich(m: Matrix, row_word: tuple[int, ...], col_word: tuple[int, ...]) -> PackedMatrix:
    """Merge rows along the fibers of row_word and columns along col_word.

    Equals mu(row_word) * m * mu(col_word)^T; packed whenever m is packed
    and both words are surjective.
    """
    p = max(row_word, default=0)
    q = max(col_word, default=0)
    if p == 0 or q == 0:
        return EMPTY
    grid = [[0] * q for _ in range(p)]
    for r, row in enumerate(m.entries):
        gr = grid[row_word[r] - 1]
        for c, e in enumerate(row):
            if e:
                gr[col_word[c] - 1] += e
    return PackedMatrix(tuple(tuple(row) for row in grid))


@cache
def quasi_shuffle_mat(a: PackedMatrix, b: PackedMatrix) -> LinComb:
    """Quasi-shuffle of two basis matrices: row and column interleavings
    of the block sum, with coincident rows or columns added together.
    Commutative; dual to :func:`coproduct_black`."""
    blk = searrow_mat(a, b)
    acc: dict = {}
    for sigma in enumerate_qsh(a.rows, b.rows):
        for tau in enumerate_qsh(a.cols, b.cols):
            key = _sandwich(blk, sigma, tau)
            acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def quasi_shuffle(x, y) -> LinComb:
    return _bilinear(quasi_shuffle_mat)(x, y)


@cache
def shuffle_mat(a: PackedMatrix, b: PackedMatrix) -> LinComb:
    """Strict-shuffle product: like the quasi-shuffle but without merging,
    so every term has rows(a) + rows(b) rows and cols(a) + cols(b) cols."""
    blk = searrow_mat(a, b)
    acc: dict = {}
    for sigma in enumerate_sh(a.rows, b.rows):
        for tau in enumerate_sh(a.cols, b.cols):
            key = _sandwich(blk, sigma, tau)
            acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def shuffle(x, y) -> LinComb:
    return _bilinear(shuffle_mat)(x, y)


@cache
def second_coproduct(m: PackedMatrix, max_dim: int | None = None) -> LinComb:
    """Second coproduct from admissible surjection pairs.

    Rows are merged along an admissible pair (s', s'') and columns along
    (t', t''); the term is (s', t')-merge tensor (s'', t'')-merge.  Both
    legs keep the weight of m.  Together with the quasi-shuffle product
    and deconcatenation this is a double bialgebra.
    """
    lim = config.DEFAULT_DELTA_DIM if max_dim is None else max_dim
    config.check("second-coproduct-dimension", max(m.rows, m.cols), lim,
                 "the max_dim argument")
    row_pairs = enumerate_adm(m.rows)
    col_pairs = enumerate_adm(m.cols)
    sand: dict = {}

    def leg(rw, cw):
        key = (rw, cw)
        got = sand.get(key)
        if got is None:
            got = sand[key] = _sandwich(m, rw, cw) if not m.is_empty() else EMPTY
        return got

    acc: dict = {}
    for s1, s2 in row_pairs:
        for t1, t2 in col_pairs:
            key = TensorKey((leg(s1, t1), leg(s2, t2)))
            acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


COUNIT_KINDS = ("black", "deconcat", "delta")


def counit(kind: str, m: Matrix) -> Fraction:
    """Counits of the three coproducts on the packed-matrix basis.

    ``black``: 1 iff the weight is 0; ``deconcat``: 1 iff m is the empty
    matrix; ``delta``: 1 iff m is empty or has exactly one row and one
    column.
    """
    if kind == "black":
        return Fraction(1) if m.weight() == 0 else Fraction(0)
    if kind == "deconcat":
        return Fraction(1) if m.is_empty() else Fraction(0)
    if kind == "delta":
        if m.is_empty() or (m.rows == 1 and m.cols == 1):
            return Fraction(1)
        return Fraction(0)
    raise ValueError(f"unknown counit kind {kind!r}; expected one of {COUNIT_KINDS}")


def antipode_mat(m: PackedMatrix, max_weight: int | None = None) -> LinComb:
    """Antipode of the (searrow, sum-splitting) Hopf algebra.

    Alternating sum over ordered decompositions of m into same-shape
    summands of nonzero weight, each summand packed and the packs
    concatenated block-diagonally.
    """
    lim = config.DEFAULT_ANTIPODE_WEIGHT if max_weight is None else max_weight
    config.check("antipode-weight", m.weight(), lim, "the max_weight argument")
    if m.weight() == 0:
        return LinComb.term(EMPTY)
    acc: dict = {}

    def rec(remaining: tuple[tuple[int, ...], ...], prefix: Matrix, layers: int) -> None:
        rem = Matrix(remaining)
        for left, right in _splittings(rem):
            if not any(any(row) for row in left):
                continue
            blk = searrow_mat(prefix, pack(Matrix(left)))
            if any(any(row) for row in right):
                rec(right, blk, layers + 1)
            else:
                sign = -1 if layers % 2 == 0 else 1
                acc[blk] = acc.get(blk, 0) + sign

    rec(m.entries, EMPTY, 0)
    return LinComb(acc)


def antipode(x) -> LinComb:
    return LinComb.wrap(x).apply(antipode_mat)


def is_indecomposable(m: PackedMatrix) -> bool:
    """True iff m is nonempty and admits no nontrivial block-diagonal
    factorization.  Indecomposables count the primitives of the
    deconcatenation coalgebra."""
    if m.is_empty():
        raise ValueError("the empty matrix is the unit, not an indecomposable")
    return not block_cut_points(m)


def in_truncation(m: Matrix, n: int) -> bool:
    """True iff every entry of m is at most n (entry-bounded subbialgebra)."""
    if n < 1:
        raise ValueError("truncation bound must be at least 1")
    return m.max_entry() <= n


def is_permutation_matrix(m: Matrix) -> bool:
    """Square 0/1 matrix with exactly one 1 in every row and column."""
    if m.is_empty():
        return True
    if m.rows != m.cols:
        return False
    for row in m.entries:
        if sum(row) != 1 or any(e not in (0, 1) for e in row):
            return False
    return all(sum(row[j] for row in m.entries) == 1 for j in range(m.cols))
