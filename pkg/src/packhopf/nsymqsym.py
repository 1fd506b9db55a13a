"""The free bialgebra on one generator per positive integer (basis indexed
by compositions), its graded dual on the monomial basis, the internal
product in each degree, and the commutative products on permutations that
the strict shuffle induces.

Conventions:

* the concatenation algebra on compositions carries the generator
  coproduct ``cop(n) = sum over i of (i) tensor (n - i)`` extended
  multiplicatively (:func:`nsym_coproduct`);
* dually, compositions multiply by quasi-shuffle and comultiply by
  deconcatenation;
* each degree carries the internal product of Eq.-style Mackey type:
  the product of two compositions of n sums the reading words of all
  nonnegative integer matrices with the prescribed row and column sums
  (:func:`internal_product`);
* the second coproduct on the dual (:func:`qsym_delta`) is defined by
  transposing the degree-n internal-product structure constants, and the
  full degree table is cached.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache, lru_cache
from math import factorial

from . import config
from .lincomb import LinComb, TensorKey
from .matrices import Composition
from .surjections import (enumerate_qsh, enumerate_sh, word_compose,
                          word_inverse, word_tensor)

Perm = tuple[int, ...]


class Polynomial1:
    """Univariate polynomial in X with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial1 is immutable")

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial1) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("poly", self.coeffs))

    def __add__(self, other: "Polynomial1") -> "Polynomial1":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial1(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    def __neg__(self) -> "Polynomial1":
        return Polynomial1(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial1") -> "Polynomial1":
        return self + (-other)

    def __mul__(self, other: "Polynomial1") -> "Polynomial1":
        if not self.coeffs or not other.coeffs:
            return Polynomial1()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial1(out)

    def scale(self, c) -> "Polynomial1":
        c = c if isinstance(c, Fraction) else Fraction(c)
        return Polynomial1(c * a for a in self.coeffs)

    def __rmul__(self, c) -> "Polynomial1":
        return self.scale(c)

    def evaluate(self, x) -> Fraction:
        x = x if isinstance(x, Fraction) else Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        first = True
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                xs = "X" if d == 1 else f"X^{d}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if first:
                parts.append(body if c > 0 else "-" + body)
                first = False
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    __repr__ = __str__


POLY_ONE = Polynomial1((1,))
POLY_X = Polynomial1((0, 1))


@cache
def hilbert_poly(n: int) -> Polynomial1:
    """X(X-1)...(X-n+1)/n!, the binomial-coefficient polynomial."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    p = POLY_ONE
    for i in range(n):
        p = p * Polynomial1((-i, 1))
    return p.scale(Fraction(1, factorial(n)))


def hilbert_eval(n: int, x) -> Fraction:
    x = x if isinstance(x, Fraction) else Fraction(x)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    acc = Fraction(1)
    for i in range(n):
        acc *= x - i
    return acc / factorial(n)


def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n, in the canonical composition order."""
    if n == 0:
        return (Composition(()),)
    out = []

    def rec(rest, prefix):
        if rest == 0:
            out.append(Composition(prefix))
            return
        for p in range(1, rest + 1):
            rec(rest - p, prefix + [p])

    rec(n, [])
    out.sort()
    return tuple(out)


def compositions_into(n: int, parts: int):
    """Compositions of n into exactly the given number of positive parts."""
    if parts == 0:
        if n == 0:
            yield Composition(())
        return
    for first in range(1, n - parts + 2):
        for rest in compositions_into(n - first, parts - 1):
            yield Composition((first,) + rest.parts)


def nsym_concat(a: Composition, b: Composition) -> Composition:
    """Concatenation of compositions, the product on the free-generator basis."""
    return a + b


def nsym_product(x, y) -> LinComb:
    acc: dict = {}
    for ka, ca in LinComb.wrap(x).items():
        for kb, cb in LinComb.wrap(y).items():
            k = ka + kb
            acc[k] = acc.get(k, 0) + ca * cb
    return LinComb(acc)


def nsym_coproduct(mu: Composition) -> LinComb:
    """Generator coproduct extended multiplicatively.

    Each part n contributes the splits (i, n - i); zero pieces are
    identified with the empty composition and dropped.
    """
    acc = {(Composition(()), Composition(())): 1}
    for part in mu:
        nxt: dict = {}
        for (left, right), c in acc.items():
            for i in range(part + 1):
                l2 = left + Composition((i,)) if i else left
                r2 = right + Composition((part - i,)) if part - i else right
                key = (l2, r2)
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    return LinComb((TensorKey(k), c) for k, c in acc.items())


def _bounded_weak_comps(total: int, bounds: tuple[int, ...]):
    """Weak compositions of total with per-slot upper bounds."""
    n = len(bounds)

    def rec(i: int, rest: int, prefix: list[int]):
        if i == n:
            if rest == 0:
                yield tuple(prefix)
            return
        if rest > sum(bounds[i:]):
            return
        for v in range(min(rest, bounds[i]) + 1):
            prefix.append(v)
            yield from rec(i + 1, rest - v, prefix)
            prefix.pop()

    yield from rec(0, total, [])


def margin_matrices(row_sums: tuple[int, ...], col_sums: tuple[int, ...]):
    """Nonnegative integer grids with prescribed row and column sums."""
    if sum(row_sums) != sum(col_sums):
        return
    if not row_sums:
        if not col_sums or all(c == 0 for c in col_sums):
            yield ()
        return

    def rec(i: int, remaining: tuple[int, ...], rows: list):
        if i == len(row_sums):
            if all(r == 0 for r in remaining):
                yield tuple(rows)
            return
        for row in _bounded_weak_comps(row_sums[i], remaining):
            rows.append(row)
            yield from rec(i + 1, tuple(r - v for r, v in zip(remaining, row)), rows)
            rows.pop()

    yield from rec(0, col_sums, [])


@lru_cache(maxsize=None)
def internal_product(beta: Composition, mu: Composition) -> LinComb:
    """Degree-preserving internal product on the free-generator basis.

    Sums, over all nonnegative integer matrices with row sums beta and
    column sums mu, the composition read off the rows with zeros deleted.
    Zero when the weights differ.
    """
    if beta.weight() != mu.weight():
        return LinComb.zero()
    acc: dict = {}
    for grid in margin_matrices(beta.parts, mu.parts):
        word = Composition(e for row in grid for e in row if e)
        acc[word] = acc.get(word, 0) + 1
    return LinComb(acc)


def internal_product_lin(x, y) -> LinComb:
    return _nsym_bilinear(internal_product)(x, y)


def _nsym_bilinear(f):
    def g(x, y) -> LinComb:
        acc = LinComb.zero()
        for ka, ca in LinComb.wrap(x).items():
            for kb, cb in LinComb.wrap(y).items():
                acc = acc + f(ka, kb).scale(ca * cb)
        return acc
    return g


def eulerian_idempotent(n: int) -> LinComb:
    """Degree-n component of log of the sum of all single-part generators.

    The log series turns the composition (c1, ..., cj) into the
    coefficient (-1)^(j-1)/j; the result is primitive for the generator
    coproduct.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    acc: dict = {}
    for j in range(1, n + 1):
        c = Fraction((-1) ** (j - 1), j)
        for comp in compositions_into(n, j):
            acc[comp] = acc.get(comp, 0) + c
    return LinComb(acc)


def qsym_quasi_shuffle_comp(a: Composition, b: Composition) -> LinComb:
    parts = a.parts + b.parts
    k, l = len(a), len(b)
    acc: dict = {}
    for sigma in enumerate_qsh(k, l):
        top = max(sigma, default=0)
        merged = [0] * top
        for i, v in enumerate(sigma):
            merged[v - 1] += parts[i]
        key = Composition(merged)
        acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def qsym_quasi_shuffle(x, y) -> LinComb:
    """Quasi-shuffle product on the monomial basis of compositions."""
    return _nsym_bilinear(qsym_quasi_shuffle_comp)(x, y)


def qsym_deconcat(nu: Composition) -> LinComb:
    """Deconcatenation coproduct: all prefix/suffix splits."""
    return LinComb(
        (TensorKey((Composition(nu.parts[:i]), Composition(nu.parts[i:]))), 1)
        for i in range(len(nu) + 1)
    )


@cache
def _qsym_delta_table(n: int) -> dict[Composition, LinComb]:
    comps = compositions(n)
    acc: dict[Composition, dict] = {nu: {} for nu in comps}
    for beta in comps:
        for mu in comps:
            for nu, c in internal_product(beta, mu).items():
                row = acc[nu]
                key = TensorKey((beta, mu))
                row[key] = row.get(key, 0) + c
    return {nu: LinComb(row) for nu, row in acc.items()}


def qsym_delta(nu: Composition, max_weight: int | None = None) -> LinComb:
    """Second coproduct on compositions, dual to the internal product.

    The coefficient of beta tensor mu is the multiplicity of nu in the
    internal product of beta and mu; the whole degree-n table is computed
    once and cached.
    """
    n = nu.weight()
    lim = config.DEFAULT_QSYM_DELTA_WEIGHT if max_weight is None else max_weight
    config.check("qsym-delta-weight", n, lim, "the max_weight argument")
    return _qsym_delta_table(n)[nu]


def qsym_counit_delta(nu: Composition) -> Fraction:
    """Counit of the second coproduct: 1 iff the composition has length <= 1."""
    return Fraction(1) if len(nu) <= 1 else Fraction(0)


def phi_qsym(x) -> Polynomial1:
    """Length-indexed binomial polynomial character of the monomial basis.

    Sends a composition of length k to the degree-k binomial-coefficient
    polynomial, extended linearly; turns the quasi-shuffle product into
    the polynomial product.
    """
    out = Polynomial1()
    for nu, c in LinComb.wrap(x).items():
        out = out + hilbert_poly(len(nu)).scale(c)
    return out


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def _check_perm(w: Perm) -> None:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation word: {w!r}")


def star_product(s: Perm, t: Perm) -> LinComb:
    """Conjugation-averaged shuffle product on permutations: one strict
    shuffle conjugates the block permutation on both sides."""
    _check_perm(s)
    _check_perm(t)
    block = word_tensor(s, t)
    acc: dict = {}
    for alpha in enumerate_sh(len(s), len(t)):
        key = word_compose(alpha, word_compose(block, word_inverse(alpha)))
        acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def perm_shuffle(s: Perm, t: Perm) -> LinComb:
    """Two-sided shuffle product on permutations: independent strict
    shuffles act on the left and on the right of the block permutation.
    Matches the strict-shuffle product of the permutation matrices."""
    _check_perm(s)
    _check_perm(t)
    block = word_tensor(s, t)
    acc: dict = {}
    for alpha in enumerate_sh(len(s), len(t)):
        left = word_compose(alpha, block)
        for beta in enumerate_sh(len(s), len(t)):
            key = word_compose(left, word_inverse(beta))
            acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)
