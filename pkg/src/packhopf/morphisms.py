"""The named maps between the packed-matrix bialgebras, the composition
bialgebras, and univariate polynomials.

Every map here is linear (or linear after fixing rational parameters) and
is exposed on the command line under ``morph --name ...``:

==============  ===========================================================
CLI name        map
==============  ===========================================================
``theta-big``   :func:`to_nsym` - collapse a matrix to its reading word
``k-xy``        :func:`from_nsym` - weighted lift of compositions to shells
``theta``       :func:`reading_fiber` - sum of matrices with a given reading
``kappa-xy``    :func:`to_qsym` - weighted block-factorization collapse
``upsilon``     :func:`merge_iso` - normalized row/column merging
``phi``         :func:`to_polynomial` - polynomial character
``transpose``   :func:`transpose_lin`
==============  ===========================================================
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from . import config
from .counts import enumerate_pack, supports
from .hopfpack import block_factorizations, searrow, searrow_mat
from .lincomb import LinComb
from .matrices import EMPTY, Composition, Matrix, PackedMatrix, comp
from .nsymqsym import hilbert_eval


def to_nsym(x) -> LinComb:
    """Send a packed matrix to its reading composition, linearly.

    An algebra map from block concatenation to composition concatenation
    and a coalgebra map for the two sum-splitting coproducts.
    """
    return LinComb.wrap(x).map_keys(comp)


def shell_sum_mat(k: int, l: int, parts, max_size: int | None = None) -> LinComb:
    """Block concatenation of full weight shells of k x l matrices.

    ``parts`` is a sequence of nonnegative integers; each part n
    contributes the sum of all k x l matrices of weight n (the weight-0
    shell is the zero matrix, not the empty one).
    """
    if k < 1 or l < 1:
        raise ValueError("shape must be at least 1 x 1")
    lim = config.DEFAULT_MAT_SHELL_SIZE if max_size is None else max_size
    acc = LinComb.term(Matrix(()))
    for n in parts:
        if n < 0:
            raise ValueError("weights must be nonnegative")
        config.check("mat-shell-size", comb(k * l + n - 1, n), lim, "the max_size argument")
        layer = LinComb((m, 1) for m in _mat_shell(k, l, n))
        acc = searrow(acc, layer)
    return acc


def _mat_shell(k: int, l: int, n: int):
    def rec(cells_left: int, rest: int, flat: list[int]):
        if cells_left == 1:
            flat.append(rest)
            yield tuple(flat)
            flat.pop()
            return
        for v in range(rest + 1):
            flat.append(v)
            yield from rec(cells_left - 1, rest - v, flat)
            flat.pop()

    for flat in rec(k * l, n, []):
        yield Matrix(tuple(flat[i * l:(i + 1) * l] for i in range(k)))


def from_nsym(x, xval, yval, max_part: int | None = None) -> LinComb:
    """Lift compositions to weighted sums of packed-shell concatenations.

    Each part a of a composition contributes the weight-a packed shell,
    every shell member M weighted by H_rows(x) * H_cols(y) with H the
    binomial-coefficient polynomials; the factors are concatenated
    block-diagonally.  At (x, y) = (1, 1) this degenerates to the diagonal
    matrix of the composition.
    """
    xval = Fraction(xval)
    yval = Fraction(yval)
    lim = config.DEFAULT_KXY_PART if max_part is None else max_part
    out = LinComb.zero()
    for nu, c in LinComb.wrap(x).items():
        acc = LinComb.term(EMPTY)
        for part in nu:
            config.check("shell-factor-weight", part, lim, "the max_part argument or --max-weight")
            layer = LinComb(
                (m, hilbert_eval(m.rows, xval) * hilbert_eval(m.cols, yval))
                for m in enumerate_pack(part, max_weight=max(part, config.max_weight_default()))
            )
            acc = searrow(acc, layer)
        out = out + acc.scale(c)
    return out


def reading_fiber(x, max_length: int | None = None) -> LinComb:
    """Sum of all packed matrices whose reading composition is the input.

    The number of terms depends only on the length of the composition and
    grows fast (1, 4, 24, 196, 2016, ...), hence the length guard.
    """
    lim = config.DEFAULT_FIBER_LENGTH if max_length is None else max_length
    out = LinComb.zero()
    for nu, c in LinComb.wrap(x).items():
        n = len(nu)
        config.check("reading-fiber-length", n, lim, "the max_length argument or --max-weight")
        if n == 0:
            out = out + LinComb.term(EMPTY, c)
            continue
        acc: dict = {}
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                for support in supports(k, l, n):
                    grid = [[0] * l for _ in range(k)]
                    pos = 0
                    for r, row_cols in enumerate(support):
                        for j in row_cols:
                            grid[r][j] = nu[pos]
                            pos += 1
                    m = PackedMatrix(tuple(tuple(row) for row in grid))
                    acc[m] = acc.get(m, 0) + 1
        out = out + LinComb(acc).scale(c)
    return out


def to_qsym(x, xval, yval) -> LinComb:
    """Collapse block factorizations to compositions of block weights.

    A factorization into blocks M_1, ..., M_k contributes the composition
    of their weights with coefficient prod H_rows(M_i)(x) H_cols(M_i)(y).
    At (x, y) = (1, 1) only diagonal matrices survive, mapping to their
    diagonals.
    """
    xval = Fraction(xval)
    yval = Fraction(yval)
    out = LinComb.zero()
    for m, c in LinComb.wrap(x).items():
        acc: dict = {}
        for factors in block_factorizations(m):
            coeff = Fraction(1)
            for f in factors:
                coeff *= hilbert_eval(f.rows, xval) * hilbert_eval(f.cols, yval)
                if not coeff:
                    break
            if not coeff:
                continue
            key = Composition(f.weight() for f in factors)
            acc[key] = acc.get(key, 0) + coeff
        out = out + LinComb(acc).scale(c)
    return out


def merge_iso(x) -> LinComb:
    """Row/column merging along weakly increasing surjections, weighted by
    the reciprocal fiber factorials.

    Triangular with respect to matrix size, hence invertible; intertwines
    the strict-shuffle product with the quasi-shuffle product.
    """
    from .hopfpack import _sandwich
    from .surjections import enumerate_inc, surj_factorial

    out = LinComb.zero()
    for m, c in LinComb.wrap(x).items():
        acc: dict = {}
        for sigma in enumerate_inc(m.rows):
            fs = surj_factorial(sigma)
            for tau in enumerate_inc(m.cols):
                coeff = Fraction(1, fs * surj_factorial(tau))
                key = _sandwich(m, sigma, tau) if not m.is_empty() else EMPTY
                acc[key] = acc.get(key, 0) + coeff
        out = out + LinComb(acc).scale(c)
    return out


def to_polynomial(x):
    """Polynomial character of the double bialgebra structure.

    Diagonal matrices map to the binomial-coefficient polynomial of their
    size, everything else to 0; equals the composition character
    after the (1, 1) block-factorization collapse.
    """
    from .matrices import diag_of
    from .nsymqsym import Polynomial1, hilbert_poly

    out = Polynomial1()
    for m, c in LinComb.wrap(x).items():
        d = diag_of(m)
        if d is not None:
            out = out + hilbert_poly(m.rows).scale(c)
    return out


def transpose_lin(x) -> LinComb:
    """Key-wise matrix transposition, a double bialgebra automorphism."""
    return LinComb.wrap(x).map_keys(lambda m: m.transpose())
