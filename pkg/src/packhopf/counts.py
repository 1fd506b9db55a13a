"""Enumeration and counting of packed-matrix shells.

``enumerate_pack`` materialises the weight-n shell in canonical order by
backtracking over rows with column-coverage pruning.  ``count_pack``
instead counts with a small memoised recursion over (rows left, weight
left, uncovered columns), so weights 7 and 8 stay cheap; the two agree
and are cross-checked in the tests.  The primitive and generator series
are obtained from the shell counts: primitives from the reciprocal of
the counting series, generators from an Euler product with one
commutative generator per basis element.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations
from math import comb

from . import config
from .matrices import EMPTY, PackedMatrix


def _weak_comps_cached():
    table: dict = {}

    def get(total: int, slots: int):
        key = (total, slots)
        got = table.get(key)
        if got is None:
            out = []

            def rec(i, rest, prefix):
                if i == slots:
                    if rest == 0:
                        out.append(tuple(prefix))
                    return
                for v in range(rest + 1):
                    prefix.append(v)
                    rec(i + 1, rest - v, prefix)
                    prefix.pop()

            rec(0, total, [])
            got = table[key] = tuple(out)
        return got

    return get


_weak_comps = _weak_comps_cached()


@cache
def _shell(n: int) -> tuple[PackedMatrix, ...]:
    if n == 0:
        return (EMPTY,)
    out: list[PackedMatrix] = []
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            _fill_shape(k, l, n, out)
    out.sort()
    return tuple(out)


def _fill_shape(k: int, l: int, n: int, out: list[PackedMatrix]) -> None:
    rows: list[tuple[int, ...]] = []

    def rec(r: int, weight_left: int, uncovered: int) -> None:
        if r == k:
            if weight_left == 0 and uncovered == 0:
                out.append(PackedMatrix(tuple(rows)))
            return
        rows_left_after = k - r - 1
        for w in range(1, weight_left - rows_left_after + 1):
            for row in _weak_comps(w, l):
                if not any(row):
                    continue
                new_uncovered = uncovered
                for j in range(l):
                    if row[j] and (uncovered >> j) & 1:
                        new_uncovered &= ~(1 << j)
                # the rows still to come must cover every remaining column
                if bin(new_uncovered).count("1") > weight_left - w:
                    continue
                rows.append(row)
                rec(r + 1, weight_left - w, new_uncovered)
                rows.pop()

    rec(0, n, (1 << l) - 1)


def enumerate_pack(n: int, max_weight: int | None = None) -> tuple[PackedMatrix, ...]:
    """All packed matrices of weight n, each exactly once, canonically ordered."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    lim = config.max_weight_default() if max_weight is None else max_weight
    config.check("pack-shell-weight", n, lim)
    return _shell(n)


@cache
def _shape_count(k: int, l: int, n: int) -> int:
    @cache
    def f(r: int, w: int, u: int) -> int:
        if r == 0:
            return 1 if (w == 0 and u == 0) else 0
        total = 0
        for w1 in range(1, w - (r - 1) + 1):
            for s in range(1, min(w1, l) + 1):
                row_ways = comb(w1 - 1, s - 1)
                for t in range(max(0, s - (l - u)), min(s, u) + 1):
                    sub = f(r - 1, w - w1, u - t)
                    if sub:
                        total += row_ways * comb(u, t) * comb(l - u, s - t) * sub
        return total

    return f(k, n, l)


def count_pack(upto: int, max_weight: int | None = None) -> list[int]:
    """Shell sizes ``|Pack_n|`` for n = 0..upto."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    lim = config.max_weight_default() if max_weight is None else max_weight
    config.check("pack-shell-weight", upto, lim)
    out = [1]
    for n in range(1, upto + 1):
        out.append(sum(_shape_count(k, l, n) for k in range(1, n + 1) for l in range(1, n + 1)))
    return out


def primitive_dims(upto: int, max_weight: int | None = None) -> list[int]:
    """Dimensions of the primitives of the deconcatenation coalgebra.

    Cofree convention: if D(t) is the shell counting series, the
    primitive series P satisfies D = 1/(1 - P).  Entry 0 is 0.
    """
    d = count_pack(upto, max_weight)
    inv = [Fraction(1)]
    for n in range(1, upto + 1):
        inv.append(-sum(Fraction(d[i]) * inv[n - i] for i in range(1, n + 1)))
    out = [0]
    for n in range(1, upto + 1):
        p = -inv[n]
        if p.denominator != 1:
            raise ArithmeticError("primitive series must have integer coefficients")
        out.append(int(p))
    return out


def generator_counts(upto: int, max_weight: int | None = None) -> list[int]:
    """Number of free commutative algebra generators per weight.

    Euler-product convention: D(t) equals the product over n of
    (1 - t^n)^(-g_n), solved order by order from log D.  Entry 0 is 0.
    """
    d = count_pack(upto, max_weight)
    # log D with exact rational arithmetic: log(1 + u) = sum (-1)^(j-1) u^j / j
    u = [Fraction(c) for c in d]
    u[0] = Fraction(0)
    log = [Fraction(0)] * (upto + 1)
    power = [Fraction(1)] + [Fraction(0)] * upto
    for j in range(1, upto + 1):
        nxt = [Fraction(0)] * (upto + 1)
        for i in range(upto + 1):
            if power[i] == 0:
                continue
            for t in range(1, upto + 1 - i):
                if u[t]:
                    nxt[i + t] += power[i] * u[t]
        power = nxt
        sign = Fraction((-1) ** (j - 1), j)
        for i in range(upto + 1):
            log[i] += sign * power[i]
    out = [0]
    for m in range(1, upto + 1):
        g = log[m]
        for j in range(2, m + 1):
            if m % j == 0:
                g -= Fraction(out[m // j], j)
        if g.denominator != 1:
            raise ArithmeticError("generator series must have integer coefficients")
        out.append(int(g))
    return out


def supports(k: int, l: int, n: int):
    """Supports of n cells in a k x l grid covering every row and column.

    Yields tuples of per-row column tuples (0-based, increasing), with
    every row nonempty.  The row-major order of the cells is the reading
    order used by the reading-fiber morphism.
    """
    if k < 1 or l < 1 or n < max(k, l) or n > k * l:
        return

    def sizes(rest: int, rows_left: int, prefix: list[int]):
        if rows_left == 0:
            if rest == 0:
                yield tuple(prefix)
            return
        for s in range(1, min(l, rest - (rows_left - 1)) + 1):
            prefix.append(s)
            yield from sizes(rest - s, rows_left - 1, prefix)
            prefix.pop()

    cols = tuple(range(l))
    for dist in sizes(n, k, []):
        chosen: list[tuple[int, ...]] = []

        def rec(r: int, covered: int):
            if r == k:
                if covered == (1 << l) - 1:
                    yield tuple(chosen)
                return
            # remaining rows can cover at most the number of remaining cells
            missing = l - bin(covered).count("1")
            if missing > sum(dist[r:]):
                return
            for subset in combinations(cols, dist[r]):
                mask = covered
                for j in subset:
                    mask |= 1 << j
                chosen.append(subset)
                yield from rec(r + 1, mask)
                chosen.pop()

        yield from rec(0, 0)


def count_qn(n: int, max_n: int | None = None) -> int:
    """Number of packed matrices with exactly n nonzero entries.

    Counted by direct enumeration of row/column supports over all grid
    shapes; independent of the values placed on the support, so this is
    also the number of terms of the reading-fiber sum at any length-n
    composition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lim = config.DEFAULT_QN if max_n is None else max_n
    config.check("support-count-length", n, lim, "the max_n argument or --max-weight")
    if n == 0:
        return 1
    total = 0
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            total += sum(1 for _ in supports(k, l, n))
    return total
