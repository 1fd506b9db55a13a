"""Surjection combinatorics: quasi-shuffles, shuffles, increasing maps,
admissible pairs, and the factorial-weighted merge identity.

A surjection ``[k] ->> [p]`` is stored as its one-line word, a tuple of
positive integers whose set of values is exactly ``1..p``.  Enumerations
return tuples sorted in lexicographic word order, which makes golden
tests stable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial

from .lincomb import LinComb

Word = tuple[int, ...]


@cache
def enumerate_qsh(k: int, l: int) -> tuple[Word, ...]:
    """All (k, l)-quasi-shuffles: surjective words with positions 1..k and
    k+1..k+l each strictly increasing."""
    if k < 0 or l < 0:
        raise ValueError("block sizes must be nonnegative")
    out: list[Word] = []
    word = [0] * (k + l)

    def rec(i: int, j: int, v: int) -> None:
        if i == k and j == l:
            out.append(tuple(word))
            return
        if i < k:
            word[i] = v
            rec(i + 1, j, v + 1)
        if i < k and j < l:
            word[i] = v
            word[k + j] = v
            rec(i + 1, j + 1, v + 1)
        if j < l:
            word[k + j] = v
            rec(i, j + 1, v + 1)

    rec(0, 0, 1)
    out.sort()
    return tuple(out)


@cache
def enumerate_sh(k: int, l: int) -> tuple[Word, ...]:
    """All (k, l)-shuffles, i.e. the injective (k, l)-quasi-shuffles."""
    if k < 0 or l < 0:
        raise ValueError("block sizes must be nonnegative")
    out: list[Word] = []
    word = [0] * (k + l)

    def rec(i: int, j: int, v: int) -> None:
        if i == k and j == l:
            out.append(tuple(word))
            return
        if i < k:
            word[i] = v
            rec(i + 1, j, v + 1)
        if j < l:
            word[k + j] = v
            rec(i, j + 1, v + 1)

    rec(0, 0, 1)
    out.sort()
    return tuple(out)


@cache
def enumerate_inc(k: int) -> tuple[Word, ...]:
    """All weakly increasing surjections on [k]; 2^(k-1) of them for k >= 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ((),)
    out: list[Word] = []
    word = [0] * k

    def rec(i: int, v: int) -> None:
        if i == k:
            out.append(tuple(word))
            return
        word[i] = v
        rec(i + 1, v)       # stay on the current value
        word[i] = v + 1
        rec(i + 1, v + 1)   # open a new value

    word[0] = 1
    rec(1, 1)
    out.sort()
    return tuple(out)


@cache
def enumerate_adm(k: int) -> tuple[tuple[Word, Word], ...]:
    """Admissible pairs (s, t) of surjections on [k].

    ``s`` is weakly increasing and ``t`` is strictly increasing on every
    fiber of ``s``; both are surjective.  Generated by backtracking over
    the values of ``t`` fiber by fiber rather than filtering all pairs.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return (((), ()),)
    out: list[tuple[Word, Word]] = []
    for s in enumerate_inc(k):
        t = [0] * k
        used = [0] * (k + 1)

        def rec(i: int, top: int) -> None:
            if i == k:
                if all(used[v] for v in range(1, top + 1)):
                    out.append((s, tuple(t)))
                return
            lo = t[i - 1] + 1 if i > 0 and s[i] == s[i - 1] else 1
            for v in range(lo, k + 1):
                newtop = v if v > top else top
                used[v] += 1
                # each still-missing value below the max needs a future slot
                missing = sum(1 for u in range(1, newtop + 1) if not used[u])
                if missing <= k - i - 1:
                    t[i] = v
                    rec(i + 1, newtop)
                used[v] -= 1

        rec(0, 0)
    out.sort()
    return tuple(out)


def surj_factorial(word: Word) -> int:
    """Product over the values of (fiber size)!."""
    top = max(word, default=0)
    sizes = [0] * (top + 1)
    for v in word:
        sizes[v] += 1
    result = 1
    for c in sizes[1:]:
        result *= factorial(c)
    return result


def word_tensor(u: Word, v: Word) -> Word:
    """Block word of two maps: values of v shifted past the values of u."""
    shift = max(u, default=0)
    return u + tuple(x + shift for x in v)


def word_compose(outer: Word, inner: Word) -> Word:
    """One-line word of outer ∘ inner."""
    return tuple(outer[x - 1] for x in inner)


def word_inverse(w: Word) -> Word:
    """Inverse of a permutation word."""
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def check_hoffman_identity(k: int, l: int) -> bool:
    """Factorial-weighted merge identity on surjection words.

    Both sides live in the span of surjective words on [k + l]:
    the left side composes quasi-shuffles with a pair of increasing
    surjections weighted by 1/(s'! s''!); the right side composes
    increasing surjections with strict shuffles weighted by 1/t!.
    """
    lhs: dict[Word, Fraction] = {}
    for s1 in enumerate_inc(k):
        f1 = surj_factorial(s1)
        for s2 in enumerate_inc(l):
            f2 = surj_factorial(s2)
            coeff = Fraction(1, f1 * f2)
            block = word_tensor(s1, s2)
            for tau in enumerate_qsh(max(s1, default=0), max(s2, default=0)):
                key = word_compose(tau, block)
                lhs[key] = lhs.get(key, Fraction(0)) + coeff
    rhs: dict[Word, Fraction] = {}
    for sigma in enumerate_sh(k, l):
        for tau in enumerate_inc(k + l):
            key = word_compose(tau, sigma)
            coeff = Fraction(1, surj_factorial(tau))
            rhs[key] = rhs.get(key, Fraction(0)) + coeff
    return LinComb(lhs) == LinComb(rhs)


def count_sh(k: int, l: int) -> int:
    """Binomial count of strict shuffles, for cross-checking enumerations."""
    return comb(k + l, k)
