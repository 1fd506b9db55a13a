"""Verification harness: machine checks for every structural identity of
the packed-matrix bialgebras, their duals, the composition bialgebras,
the morphisms between them, and the polynomial realization.

Checks are grouped into named suites mirroring the library layout:
``axioms``, ``duality``, ``morphisms``, ``realization``, ``counts``.
Each check walks every instance inside its stated weight bound and stops
at the first violation, reporting the inputs and both sides of the failed
identity.  All randomness is drawn from a seeded generator, so a run is
reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .counts import count_pack, count_qn, enumerate_pack, primitive_dims, generator_counts
from .hopfpack import (antipode_mat, block_cut_points, coproduct_black,
                       coproduct_black_mat, coproduct_black_res, counit,
                       deconcat, is_indecomposable, is_permutation_matrix,
                       quasi_shuffle, quasi_shuffle_mat, searrow, searrow_mat,
                       second_coproduct, shuffle, shuffle_mat)
from .lincomb import LinComb, TensorKey, pairing, tensor
from .matrices import EMPTY, Composition, Matrix, PackedMatrix, comp, map_matrix, pack
from .morphisms import (from_nsym, merge_iso, reading_fiber, to_nsym,
                        to_polynomial, to_qsym, transpose_lin)
from .nsymqsym import (compositions, eulerian_idempotent, hilbert_eval,
                       internal_product, internal_product_lin, nsym_coproduct,
                       nsym_product, perm_shuffle, phi_qsym, qsym_counit_delta,
                       qsym_deconcat, qsym_delta, qsym_quasi_shuffle,
                       star_product)
from .realization import Grid, classify, evaluate, evaluate_lincomb, monomials_of_degree, phi_formal
from .surjections import check_hoffman_identity, enumerate_inc, enumerate_qsh, enumerate_sh

# Golden counting tables (OEIS A120733 for the shells, A101370 for the
# support counts; the primitive and generator columns follow from them).
PACK_TABLE = (1, 1, 5, 33, 281, 2961, 37277)
PRIMITIVE_TABLE = (1, 4, 24, 204, 2224)
GENERATOR_TABLE = (1, 4, 28, 238, 2568)
QN_TABLE = (1, 4, 24, 196, 2016)


@dataclass
class Counterexample:
    identity: str
    inputs: dict
    lhs: str
    rhs: str

    def to_json_obj(self) -> dict:
        return {"identity": self.identity, "inputs": self.inputs,
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckResult:
    name: str
    cases: int
    counterexample: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


class _Fail(Exception):
    def __init__(self, counterexample: Counterexample):
        self.counterexample = counterexample


def _expect(name: str, inputs: dict, lhs, rhs) -> None:
    if lhs != rhs:
        raise _Fail(Counterexample(name, {k: str(v) for k, v in inputs.items()},
                                   str(lhs), str(rhs)))


def _run(name: str, body: Callable[[], int]) -> CheckResult:
    try:
        return CheckResult(name, body())
    except _Fail as f:
        return CheckResult(name, 0, f.counterexample)


def _rand_frac(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        f = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if f or not nonzero:
            return f


def packed_upto(w: int) -> list[PackedMatrix]:
    out: list[PackedMatrix] = []
    for n in range(w + 1):
        out.extend(enumerate_pack(n, max_weight=max(n, 6)))
    return out


# ---------------------------------------------------------------------------
# tensor-leg helpers

def cop_left(cop, t: LinComb) -> LinComb:
    """(cop tensor id) applied to a 2-tensor linear combination."""
    acc: dict = {}
    for key, c in t.items():
        a, b = key
        for (a1, a2), c2 in cop(a).items():
            k3 = TensorKey((a1, a2, b))
            acc[k3] = acc.get(k3, 0) + c * c2
    return LinComb(acc)


def cop_right(cop, t: LinComb) -> LinComb:
    """(id tensor cop) applied to a 2-tensor linear combination."""
    acc: dict = {}
    for key, c in t.items():
        a, b = key
        for (b1, b2), c2 in cop(b).items():
            k3 = TensorKey((a, b1, b2))
            acc[k3] = acc.get(k3, 0) + c * c2
    return LinComb(acc)


def counit_left(eps, t: LinComb) -> LinComb:
    acc: dict = {}
    for key, c in t.items():
        a, b = key
        e = eps(a)
        if e:
            acc[b] = acc.get(b, 0) + c * e
    return LinComb(acc)


def counit_right(eps, t: LinComb) -> LinComb:
    acc: dict = {}
    for key, c in t.items():
        a, b = key
        e = eps(b)
        if e:
            acc[a] = acc.get(a, 0) + c * e
    return LinComb(acc)


def legwise2(key_prod, t1: LinComb, t2: LinComb) -> LinComb:
    """Componentwise product of two 2-tensor linear combinations."""
    acc: dict = {}
    for (a, b), c1 in t1.items():
        for (c, d), c2 in t2.items():
            c12 = c1 * c2
            for kl, cl in LinComb.wrap(key_prod(a, c)).items():
                for kr, cr in LinComb.wrap(key_prod(b, d)).items():
                    key = TensorKey((kl, kr))
                    acc[key] = acc.get(key, 0) + c12 * cl * cr
    return LinComb(acc)


def _coassoc(name: str, cop, elements) -> CheckResult:
    """Coassociativity walker with interned keys.

    The second coproduct of a 4 x 4 matrix has thousands of merged terms
    and each side of the coassociativity identity has millions of raw
    contributions, so keys are interned to small integers and both sides
    are accumulated into one signed dictionary.
    """
    def body() -> int:
        table: list = []
        ids: dict = {}
        cops: dict = {}

        def intern(m) -> int:
            i = ids.get(m)
            if i is None:
                i = ids[m] = len(table)
                table.append(m)
            return i

        def cop_ids(i: int):
            got = cops.get(i)
            if got is None:
                got = cops[i] = [(intern(k[0]), intern(k[1]), c)
                                 for k, c in cop(table[i]).items()]
            return got

        cases = 0
        for m in elements:
            acc: dict = {}
            top = cop_ids(intern(m))
            for i1, i2, c in top:
                for j1, j2, c2 in cop_ids(i1):
                    key = (j1, j2, i2)
                    acc[key] = acc.get(key, 0) + c * c2
            for i1, i2, c in top:
                for j1, j2, c2 in cop_ids(i2):
                    key = (i1, j1, j2)
                    acc[key] = acc.get(key, 0) - c * c2
            bad = next((k for k, v in acc.items() if v), None)
            if bad is not None:
                raise _Fail(Counterexample(
                    name, {"M": str(m), "term": str(TensorKey(tuple(table[i] for i in bad)))},
                    "(cop x id) o cop", "(id x cop) o cop"))
            cases += 1
        return cases
    return _run(name, body)


# ---------------------------------------------------------------------------
# axioms suite

def check_coassoc_splitting(w: int, rng) -> CheckResult:
    return _coassoc("coassoc-sum-splitting", coproduct_black, packed_upto(w))


def check_coassoc_deconcat(w: int, rng) -> CheckResult:
    return _coassoc("coassoc-deconcat", deconcat, packed_upto(w))


def check_coassoc_second(w: int, rng) -> CheckResult:
    return _coassoc("coassoc-second", second_coproduct, packed_upto(w))


def check_counits(w: int, rng) -> CheckResult:
    name = "counit-laws"

    def body() -> int:
        cases = 0
        kinds = (("black", coproduct_black), ("deconcat", deconcat), ("delta", second_coproduct))
        for m in packed_upto(w):
            one = LinComb.term(m)
            for kind, cop in kinds:
                t = cop(m)
                eps = lambda x, kind=kind: counit(kind, x)
                _expect(name, {"M": m, "kind": kind}, counit_left(eps, t), one)
                _expect(name, {"M": m, "kind": kind}, counit_right(eps, t), one)
                cases += 1
        return cases
    return _run(name, body)


def check_splitting_multiplicative(w: int, rng) -> CheckResult:
    name = "splitting-multiplicative"

    def body() -> int:
        cases = 0
        half = packed_upto(max(1, w // 2))
        for a in half:
            for b in half:
                lhs = coproduct_black(searrow_mat(a, b))
                rhs = legwise2(searrow_mat, coproduct_black(a), coproduct_black(b))
                _expect(name, {"M": a, "M'": b}, lhs, rhs)
                cases += 1
        return cases
    return _run(name, body)


def check_antipode(w: int, rng) -> CheckResult:
    name = "antipode-convolution"

    def body() -> int:
        cases = 0
        for m in packed_upto(w):
            t = coproduct_black(m)
            left = LinComb.zero()
            right = LinComb.zero()
            for (a, b), c in t.items():
                left = left + searrow(antipode_mat(a), LinComb.term(b)).scale(c)
                right = right + searrow(LinComb.term(a), antipode_mat(b)).scale(c)
            target = LinComb.term(EMPTY, counit("black", m)) if m.weight() == 0 else LinComb.zero()
            _expect(name, {"M": m, "side": "left"}, left, target)
            _expect(name, {"M": m, "side": "right"}, right, target)
            cases += 1
        return cases
    return _run(name, body)


def check_infinitesimal(w: int, rng) -> CheckResult:
    name = "infinitesimal-compat"

    def body() -> int:
        cases = 0
        half = packed_upto(max(1, w // 2))
        for a in half:
            for b in half:
                lhs = deconcat(searrow_mat(a, b))
                rhs = (legwise2(searrow_mat, deconcat(a), LinComb.term(TensorKey((EMPTY, b))))
                       + legwise2(searrow_mat, LinComb.term(TensorKey((a, EMPTY))), deconcat(b))
                       - LinComb.term(TensorKey((a, b))))
                _expect(name, {"M": a, "M'": b}, lhs, rhs)
                cases += 1
        return cases
    return _run(name, body)


def check_second_multiplicative(w: int, rng) -> CheckResult:
    name = "second-multiplicative"

    def body() -> int:
        cases = 0
        half = packed_upto(max(1, min(2, w // 2)))
        for a in half:
            for b in half:
                lhs = quasi_shuffle_mat(a, b).apply(second_coproduct)
                rhs = legwise2(quasi_shuffle_mat, second_coproduct(a), second_coproduct(b))
                _expect(name, {"M": a, "M'": b}, lhs, rhs)
                cases += 1
        return cases
    return _run(name, body)


def check_double_compat(w: int, rng) -> CheckResult:
    name = "double-bialgebra-compat"

    def body() -> int:
        cases = 0
        for m in packed_upto(min(3, w)):
            lhs = cop_left(deconcat, second_coproduct(m))
            acc: dict = {}
            for (a, b), c in deconcat(m).items():
                for (a1, a2), ca in second_coproduct(a).items():
                    for (b1, b2), cb in second_coproduct(b).items():
                        for e, ce in quasi_shuffle_mat(a2, b2).items():
                            k3 = TensorKey((a1, b1, e))
                            acc[k3] = acc.get(k3, 0) + c * ca * cb * ce
            _expect(name, {"M": m}, lhs, LinComb(acc))
            cases += 1
        return cases
    return _run(name, body)


def check_truncation_closure(w: int, rng) -> CheckResult:
    name = "truncation-closure"

    def body() -> int:
        cases = 0
        for m in packed_upto(w):
            bound = m.max_entry()
            for (a, b) in coproduct_black(m).keys():
                _expect(name, {"M": m}, max(a.max_entry(), b.max_entry()) <= bound, True)
            cases += 1
        half = packed_upto(max(1, w // 2))
        for a in half:
            for b in half:
                bound = max(a.max_entry(), b.max_entry())
                _expect(name, {"M": a, "M'": b},
                        searrow_mat(a, b).max_entry() <= bound or bound == 0, True)
                cases += 1
        return cases
    return _run(name, body)


def check_permutation_closure(w: int, rng) -> CheckResult:
    name = "permutation-closure"

    def body() -> int:
        cases = 0
        for m in packed_upto(min(3, w)):
            if not is_permutation_matrix(m):
                continue
            for (a, b) in coproduct_black(m).keys():
                _expect(name, {"M": m},
                        is_permutation_matrix(a) and is_permutation_matrix(b), True)
            cases += 1
        return cases
    return _run(name, body)


def check_packing_quotient(w: int, rng) -> CheckResult:
    name = "packing-quotient"

    def body() -> int:
        cases = 0
        samples: list[Matrix] = [Matrix(((0,),)), Matrix(((0, 0), (0, 0)))]
        for m in packed_upto(min(3, w)):
            if m.is_empty():
                continue
            rows = m.entries
            samples.append(Matrix(rows + ((0,) * m.cols,)))
            samples.append(Matrix(tuple((0,) + row for row in rows)))
        for m in samples:
            lhs = coproduct_black_mat(m).map_keys(
                lambda key: TensorKey((pack(key[0]), pack(key[1]))))
            rhs = coproduct_black(pack(m))
            _expect(name, {"M": m}, lhs, rhs)
            cases += 1
        return cases
    return _run(name, body)


def check_internal_distributivity(w: int, rng) -> CheckResult:
    name = "internal-distributivity"

    def body() -> int:
        cases = 0
        for n in range(0, 6):
            cs = compositions(n)
            pairs = [(a, b) for i in range(0, n + 1)
                     for a in compositions(i) for b in compositions(n - i)]
            for c in cs:
                copc = nsym_coproduct(c)
                for a, b in pairs:
                    lhs = internal_product_lin(nsym_product(a, b), LinComb.term(c))
                    rhs = LinComb.zero()
                    for (c1, c2), cc in copc.items():
                        rhs = rhs + nsym_product(internal_product(a, c1),
                                                 internal_product(b, c2)).scale(cc)
                    _expect(name, {"a": a, "b": b, "c": c}, lhs, rhs)
                    cases += 1
        return cases
    return _run(name, body)


def check_internal_coproduct(w: int, rng) -> CheckResult:
    name = "internal-coproduct-compat"

    def body() -> int:
        cases = 0
        for n in range(0, 5):
            cs = compositions(n)
            for a in cs:
                for b in cs:
                    lhs = internal_product(a, b).apply(nsym_coproduct)
                    rhs = legwise2(internal_product, nsym_coproduct(a), nsym_coproduct(b))
                    _expect(name, {"a": a, "b": b}, lhs, rhs)
                    cases += 1
        return cases
    return _run(name, body)


def check_internal_unit_assoc(w: int, rng) -> CheckResult:
    name = "internal-unit-assoc"

    def body() -> int:
        cases = 0
        for n in range(0, 7):
            unit = Composition((n,)) if n else Composition(())
            for mu in compositions(n):
                one = LinComb.term(mu)
                _expect(name, {"mu": mu}, internal_product(unit, mu), one)
                _expect(name, {"mu": mu}, internal_product(mu, unit), one)
                cases += 1
        for n in range(0, 6):
            cs = compositions(n)
            for a in cs:
                for b in cs:
                    ab = internal_product(a, b)
                    for c in cs:
                        lhs = internal_product_lin(ab, LinComb.term(c))
                        rhs = internal_product_lin(LinComb.term(a), internal_product(b, c))
                        _expect(name, {"a": a, "b": b, "c": c}, lhs, rhs)
                        cases += 1
        return cases
    return _run(name, body)


def check_eulerian_primitive(w: int, rng) -> CheckResult:
    name = "eulerian-primitive"

    def body() -> int:
        cases = 0
        empty = Composition(())
        for n in range(1, 5):
            e = eulerian_idempotent(n)
            lhs = e.apply(nsym_coproduct)
            rhs = LinComb.zero()
            for mu, c in e.items():
                rhs = rhs + LinComb(((TensorKey((mu, empty)), c), (TensorKey((empty, mu)), c)))
            _expect(name, {"n": n}, lhs, rhs)
            cases += 1
        return cases
    return _run(name, body)


def check_hoffman(w: int, rng) -> CheckResult:
    name = "hoffman-merge-identity"

    def body() -> int:
        cases = 0
        for k in range(0, 5):
            for l in range(0, 5):
                _expect(name, {"k": k, "l": l}, check_hoffman_identity(k, l), True)
                cases += 1
        return cases
    return _run(name, body)


def check_qsym_nsym_duality(w: int, rng) -> CheckResult:
    name = "qsym-nsym-duality"

    def body() -> int:
        cases = 0
        for n in range(0, 6):
            for i in range(0, n + 1):
                for a in compositions(i):
                    for b in compositions(n - i):
                        prod = qsym_quasi_shuffle(a, b)
                        dec = nsym_product(a, b)
                        for nu in compositions(n):
                            _expect(name, {"a": a, "b": b, "nu": nu},
                                    prod.coeff(nu),
                                    nsym_coproduct(nu).coeff(TensorKey((a, b))))
                            _expect(name, {"a": a, "b": b, "nu": nu},
                                    dec.coeff(nu),
                                    qsym_deconcat(nu).coeff(TensorKey((a, b))))
                            cases += 1
        return cases
    return _run(name, body)


def check_qsym_double_compat(w: int, rng) -> CheckResult:
    name = "qsym-double-bialgebra-compat"

    def body() -> int:
        cases = 0
        for n in range(0, min(4, w) + 1):
            for nu in compositions(n):
                lhs = cop_left(qsym_deconcat, qsym_delta(nu))
                acc: dict = {}
                for (a, b), c in qsym_deconcat(nu).items():
                    for (a1, a2), ca in qsym_delta(a).items():
                        for (b1, b2), cb in qsym_delta(b).items():
                            for e, ce in qsym_quasi_shuffle(a2, b2).items():
                                k3 = TensorKey((a1, b1, e))
                                acc[k3] = acc.get(k3, 0) + c * ca * cb * ce
                _expect(name, {"nu": nu}, lhs, LinComb(acc))
                cases += 1
        return cases
    return _run(name, body)


def check_nsym_truncation(w: int, rng) -> CheckResult:
    name = "nsym-truncation-closure"

    def body() -> int:
        cases = 0
        for n in range(1, 3):
            for total in range(0, 6):
                for mu in compositions(total):
                    if mu and max(mu.parts) > n:
                        continue
                    for (a, b) in nsym_coproduct(mu).keys():
                        ok = (not a.parts or max(a.parts) <= n) and (not b.parts or max(b.parts) <= n)
                        _expect(name, {"mu": mu, "n": n}, ok, True)
                    cases += 1
        return cases
    return _run(name, body)


# ---------------------------------------------------------------------------
# duality suite

def check_qsh_splitting_adjunction(w: int, rng) -> CheckResult:
    name = "quasi-shuffle-splitting-adjunction"

    def body() -> int:
        cases = 0
        for n in range(0, w + 1):
            shells = {i: enumerate_pack(i, max_weight=max(i, 6)) for i in range(n + 1)}
            cops = {m: coproduct_black(m) for m in enumerate_pack(n, max_weight=max(n, 6))}
            for i in range(0, n + 1):
                for a in shells[i]:
                    for b in shells[n - i]:
                        prod = quasi_shuffle_mat(a, b)
                        key = TensorKey((a, b))
                        for m, copm in cops.items():
                            _expect(name, {"a": a, "b": b, "N": m},
                                    prod.coeff(m), copm.coeff(key))
                            cases += 1
        return cases
    return _run(name, body)


def check_searrow_deconcat_adjunction(w: int, rng) -> CheckResult:
    name = "searrow-deconcat-adjunction"

    def body() -> int:
        cases = 0
        for n in range(0, w + 1):
            shells = {i: enumerate_pack(i, max_weight=max(i, 6)) for i in range(n + 1)}
            cops = {m: deconcat(m) for m in enumerate_pack(n, max_weight=max(n, 6))}
            for i in range(0, n + 1):
                for a in shells[i]:
                    for b in shells[n - i]:
                        prod = searrow_mat(a, b)
                        key = TensorKey((a, b))
                        for m, copm in cops.items():
                            _expect(name, {"a": a, "b": b, "N": m},
                                    Fraction(1) if prod == m else Fraction(0),
                                    copm.coeff(key))
                            cases += 1
        return cases
    return _run(name, body)


def check_shuffle_bigraded_adjunction(w: int, rng) -> CheckResult:
    name = "shuffle-bigraded-adjunction"

    def body() -> int:
        cases = 0
        for n in range(0, w + 1):
            shells = {i: enumerate_pack(i, max_weight=max(i, 6)) for i in range(n + 1)}
            cops = {m: coproduct_black_res(m) for m in enumerate_pack(n, max_weight=max(n, 6))}
            for i in range(0, n + 1):
                for a in shells[i]:
                    for b in shells[n - i]:
                        prod = shuffle_mat(a, b)
                        key = TensorKey((a, b))
                        for m, copm in cops.items():
                            _expect(name, {"a": a, "b": b, "N": m},
                                    prod.coeff(m), copm.coeff(key))
                            cases += 1
        return cases
    return _run(name, body)


def check_lift_collapse_adjoint(w: int, rng) -> CheckResult:
    name = "lift-collapse-adjointness"

    def body() -> int:
        cases = 0
        pairs = [(_rand_frac(rng), _rand_frac(rng)) for _ in range(5)]
        for x, y in pairs:
            for n in range(0, min(3, w) + 1):
                mats = enumerate_pack(n, max_weight=max(n, 6))
                kappas = {m: to_qsym(m, x, y) for m in mats}
                for c in compositions(n):
                    lift = from_nsym(c, x, y)
                    for m in mats:
                        _expect(name, {"x": x, "y": y, "c": c, "M": m},
                                lift.coeff(m), kappas[m].coeff(c))
                        cases += 1
        return cases
    return _run(name, body)


# ---------------------------------------------------------------------------
# morphisms suite

def check_reading_morphism(w: int, rng) -> CheckResult:
    name = "reading-morphism-bialgebra"

    def body() -> int:
        cases = 0
        half = packed_upto(max(1, w // 2))
        for a in half:
            for b in half:
                _expect(name, {"M": a, "M'": b},
                        to_nsym(searrow_mat(a, b)),
                        nsym_product(to_nsym(a), to_nsym(b)))
                cases += 1
        for m in packed_upto(w):
            lhs = coproduct_black(m).map_keys(lambda k: TensorKey((comp(k[0]), comp(k[1]))))
            rhs = nsym_coproduct(comp(m))
            _expect(name, {"M": m}, lhs, rhs)
            cases += 1
        return cases
    return _run(name, body)


def check_shell_lift_bialgebra(w: int, rng) -> CheckResult:
    name = "shell-lift-bialgebra"

    def body() -> int:
        cases = 0
        pairs = [(_rand_frac(rng), _rand_frac(rng)) for _ in range(10)]
        bound = min(3, w)
        for x, y in pairs:
            for n in range(0, bound + 1):
                for c in compositions(n):
                    lift = from_nsym(c, x, y)
                    lhs = lift.apply(coproduct_black)
                    rhs = LinComb.zero()
                    for (c1, c2), cc in nsym_coproduct(c).items():
                        rhs = rhs + tensor(from_nsym(c1, x, y), from_nsym(c2, x, y)).scale(cc)
                    _expect(name, {"x": x, "y": y, "c": c}, lhs, rhs)
                    for i in range(0, n + 1):
                        for a in compositions(i):
                            for b in compositions(n - i):
                                if a + b == c:
                                    _expect(name, {"x": x, "y": y, "a": a, "b": b},
                                            searrow(from_nsym(a, x, y), from_nsym(b, x, y)),
                                            from_nsym(a + b, x, y))
                    cases += 1
        return cases
    return _run(name, body)


def check_reading_fiber_double(w: int, rng) -> CheckResult:
    name = "reading-fiber-double-morphism"

    def body() -> int:
        cases = 0
        bound = min(3, w)
        for n in range(0, bound + 1):
            for i in range(0, n + 1):
                for a in compositions(i):
                    for b in compositions(n - i):
                        _expect(name, {"a": a, "b": b},
                                reading_fiber(qsym_quasi_shuffle(a, b)),
                                quasi_shuffle(reading_fiber(a), reading_fiber(b)))
                        cases += 1
            for nu in compositions(n):
                lhs = reading_fiber(nu).apply(deconcat)
                rhs = LinComb.zero()
                for (c1, c2), cc in qsym_deconcat(nu).items():
                    rhs = rhs + tensor(reading_fiber(c1), reading_fiber(c2)).scale(cc)
                _expect(name, {"nu": nu, "cop": "deconcat"}, lhs, rhs)
                lhs = reading_fiber(nu).apply(second_coproduct)
                rhs = LinComb.zero()
                for (c1, c2), cc in qsym_delta(nu).items():
                    rhs = rhs + tensor(reading_fiber(c1), reading_fiber(c2)).scale(cc)
                _expect(name, {"nu": nu, "cop": "second"}, lhs, rhs)
                cases += 2
        return cases
    return _run(name, body)


def check_collapse_bialgebra(w: int, rng) -> CheckResult:
    name = "collapse-bialgebra"

    def body() -> int:
        cases = 0
        pairs = [(_rand_frac(rng), _rand_frac(rng)) for _ in range(5)]
        bound = min(3, w)
        half = packed_upto(max(1, bound // 2 + 1))
        for x, y in pairs:
            for a in half:
                for b in half:
                    if a.weight() + b.weight() > bound:
                        continue
                    _expect(name, {"x": x, "y": y, "M": a, "M'": b},
                            to_qsym(quasi_shuffle_mat(a, b), x, y),
                            qsym_quasi_shuffle(to_qsym(a, x, y), to_qsym(b, x, y)))
                    cases += 1
            for m in packed_upto(bound):
                lhs = LinComb.zero()
                for (m1, m2), c in deconcat(m).items():
                    lhs = lhs + tensor(to_qsym(m1, x, y), to_qsym(m2, x, y)).scale(c)
                rhs = to_qsym(m, x, y).apply(qsym_deconcat)
                _expect(name, {"x": x, "y": y, "M": m}, lhs, rhs)
                cases += 1
        return cases
    return _run(name, body)


def check_collapse_delta_compat(w: int, rng) -> CheckResult:
    name = "collapse-second-coproduct-compat"

    def body() -> int:
        cases = 0
        for m in packed_upto(min(3, w)):
            lhs = LinComb.zero()
            for (m1, m2), c in second_coproduct(m).items():
                lhs = lhs + tensor(to_qsym(m1, 1, 1), to_qsym(m2, 1, 1)).scale(c)
            rhs = to_qsym(m, 1, 1).apply(qsym_delta)
            _expect(name, {"M": m}, lhs, rhs)
            cases += 1
        return cases
    return _run(name, body)


def check_collapse_negative_control(w: int, rng) -> CheckResult:
    name = "collapse-negative-control"

    def body() -> int:
        m = PackedMatrix(((1, 1),))
        image = to_qsym(m, 1, 2)
        lhs = sum((qsym_counit_delta(nu) * c for nu, c in image.items()), Fraction(0))
        rhs = counit("delta", m)
        # the (1, 2) collapse must NOT be compatible with the second counit
        _expect(name, {"M": m}, lhs != rhs, True)
        return 1
    return _run(name, body)


def check_collapse_surjectivity(w: int, rng) -> CheckResult:
    name = "collapse-surjectivity-triangularity"

    def body() -> int:
        cases = 0
        x, y = _rand_frac(rng, nonzero=True), _rand_frac(rng, nonzero=True)
        for n in range(1, 5):
            for nu in compositions(n):
                k = len(nu)
                diag = PackedMatrix(tuple(tuple(nu[i] if i == j else 0 for j in range(k))
                                          for i in range(k)))
                image = to_qsym(diag, x, y)
                _expect(name, {"x": x, "y": y, "nu": nu},
                        image.coeff(nu), (x * y) ** k)
                for other, _ in image.items():
                    _expect(name, {"x": x, "y": y, "nu": nu, "term": other},
                            other == nu or len(other) < k, True)
                cases += 1
        for m in packed_upto(min(3, w)):
            if m.is_empty():
                continue
            _expect(name, {"M": m, "x": 0}, to_qsym(m, 0, 1), LinComb.zero())
            _expect(name, {"M": m, "y": 0}, to_qsym(m, 1, 0), LinComb.zero())
            cases += 1
        return cases
    return _run(name, body)


def check_merge_iso(w: int, rng) -> CheckResult:
    name = "merge-iso-morphism"

    def body() -> int:
        cases = 0
        bound = min(3, w)
        half = packed_upto(max(1, bound - 1))
        for a in half:
            for b in half:
                if a.weight() + b.weight() > bound:
                    continue
                _expect(name, {"M": a, "M'": b},
                        merge_iso(shuffle_mat(a, b)),
                        quasi_shuffle(merge_iso(a), merge_iso(b)))
                cases += 1
        for m in packed_upto(bound):
            lhs = merge_iso(m).apply(deconcat)
            rhs = LinComb.zero()
            for (m1, m2), c in deconcat(m).items():
                rhs = rhs + tensor(merge_iso(m1), merge_iso(m2)).scale(c)
            _expect(name, {"M": m}, lhs, rhs)
            cases += 1
        return cases
    return _run(name, body)


def check_transpose_automorphism(w: int, rng) -> CheckResult:
    name = "transpose-automorphism"

    def body() -> int:
        cases = 0
        bound = min(3, w)
        half = packed_upto(max(1, bound - 1))
        for a in half:
            for b in half:
                if a.weight() + b.weight() > bound:
                    continue
                _expect(name, {"M": a, "M'": b},
                        transpose_lin(quasi_shuffle_mat(a, b)),
                        quasi_shuffle_mat(a.transpose(), b.transpose()))
                cases += 1
        for m in packed_upto(bound):
            lhs = second_coproduct(m).map_keys(
                lambda k: TensorKey((k[0].transpose(), k[1].transpose())))
            rhs = second_coproduct(m.transpose())
            _expect(name, {"M": m}, lhs, rhs)
            cases += 1
        return cases
    return _run(name, body)


def check_polynomial_character(w: int, rng) -> CheckResult:
    name = "polynomial-character-factorization"

    def body() -> int:
        cases = 0
        for m in packed_upto(min(4, w + 1)):
            _expect(name, {"M": m}, to_polynomial(m), phi_qsym(to_qsym(m, 1, 1)))
            cases += 1
        return cases
    return _run(name, body)


def check_perm_products(w: int, rng) -> CheckResult:
    name = "permutation-products"

    def body() -> int:
        cases = 0
        perms_by_size = {1: [(1,)], 2: [(1, 2), (2, 1)],
                         3: [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]}
        for ks, ls in ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)):
            for s in perms_by_size[ks]:
                for t in perms_by_size[ls]:
                    lhs = perm_shuffle(s, t).map_keys(lambda word: pack(map_matrix(word)))
                    rhs = shuffle_mat(pack(map_matrix(s)), pack(map_matrix(t)))
                    _expect(name, {"s": s, "t": t}, lhs, rhs)
                    cases += 1
        _expect(name, {"example": "(1) shuffle (21)"},
                perm_shuffle((1,), (2, 1)),
                LinComb((((1, 3, 2), 1), ((3, 1, 2), 2), ((3, 2, 1), 3),
                         ((2, 3, 1), 2), ((2, 1, 3), 1))))
        _expect(name, {"example": "(1) star (21)"},
                star_product((1,), (2, 1)),
                LinComb((((1, 3, 2), 1), ((2, 1, 3), 1), ((3, 2, 1), 1))))
        return cases + 2
    return _run(name, body)


# ---------------------------------------------------------------------------
# realization suite

def _random_grid(rng, max_rows=4, max_cols=4) -> Grid:
    r = rng.randint(1, max_rows)
    c = rng.randint(1, max_cols)
    return Grid(tuple(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                            for _ in range(c)) for _ in range(r)))


def check_eval_multiplicative(w: int, rng) -> CheckResult:
    name = "eval-multiplicative"

    def body() -> int:
        cases = 0
        small = packed_upto(2)
        for _ in range(50):
            g = _random_grid(rng)
            for a in small:
                for b in small:
                    _expect(name, {"M": a, "M'": b, "grid": g.to_json()},
                            evaluate(a, g) * evaluate(b, g),
                            evaluate_lincomb(quasi_shuffle_mat(a, b), g))
                    cases += 1
        return cases
    return _run(name, body)


def check_block_grid_deconcat(w: int, rng) -> CheckResult:
    name = "block-grid-deconcat"

    def body() -> int:
        cases = 0
        for _ in range(10):
            g1 = _random_grid(rng, 3, 3)
            g2 = _random_grid(rng, 3, 3)
            g = g1.block_diag(g2)
            for m in packed_upto(min(3, w)):
                total = sum((c * evaluate(m1, g1) * evaluate(m2, g2)
                             for (m1, m2), c in deconcat(m).items()), Fraction(0))
                _expect(name, {"M": m, "g1": g1.to_json(), "g2": g2.to_json()},
                        evaluate(m, g), total)
                cases += 1
        return cases
    return _run(name, body)


def check_kron_grid_second(w: int, rng) -> CheckResult:
    name = "kron-grid-second-coproduct"

    def body() -> int:
        cases = 0
        for _ in range(5):
            u = _random_grid(rng, 3, 3)
            v = _random_grid(rng, 3, 3)
            g = u.kron(v)
            for m in packed_upto(min(3, w)):
                total = sum((c * evaluate(m1, u) * evaluate(m2, v)
                             for (m1, m2), c in second_coproduct(m).items()), Fraction(0))
                _expect(name, {"M": m, "u": u.to_json(), "v": v.to_json()},
                        evaluate(m, g), total)
                cases += 1
        return cases
    return _run(name, body)


def check_classify_fibers(w: int, rng) -> CheckResult:
    name = "classify-fibers"

    def body() -> int:
        cases = 0
        bound = min(3, w)
        for rows in range(1, 4):
            for cols in range(1, 4):
                for degree in range(0, bound + 1):
                    fibers: dict = {}
                    for mono in monomials_of_degree(rows, cols, degree):
                        m = classify(mono)
                        fibers.setdefault(m, []).append(mono)
                    for n in range(degree, degree + 1):
                        for m in enumerate_pack(n, max_weight=max(n, 6)):
                            expected = LinComb((p, 1) for p in fibers.get(m, []))
                            _expect(name, {"M": m, "rows": rows, "cols": cols},
                                    phi_formal(m, rows, cols), expected)
                            cases += 1
        return cases
    return _run(name, body)


def check_transpose_eval(w: int, rng) -> CheckResult:
    name = "transpose-eval"

    def body() -> int:
        cases = 0
        for _ in range(10):
            g = _random_grid(rng)
            for m in packed_upto(min(3, w)):
                _expect(name, {"M": m, "grid": g.to_json()},
                        evaluate(m.transpose(), g.transpose()), evaluate(m, g))
                cases += 1
        return cases
    return _run(name, body)


# ---------------------------------------------------------------------------
# counts suite

def check_pack_table(w: int, rng) -> CheckResult:
    name = "pack-table"

    def body() -> int:
        got = count_pack(6, max_weight=6)
        _expect(name, {"upto": 6}, tuple(got), PACK_TABLE)
        for n in range(0, 5):
            _expect(name, {"n": n}, len(enumerate_pack(n, max_weight=6)), PACK_TABLE[n])
        return 6 + 5
    return _run(name, body)


def check_primitive_table(w: int, rng) -> CheckResult:
    name = "primitive-table"

    def body() -> int:
        got = primitive_dims(5, max_weight=6)
        _expect(name, {"upto": 5}, tuple(got[1:]), PRIMITIVE_TABLE)
        for n in range(1, 5):
            brute = sum(1 for m in enumerate_pack(n, max_weight=6) if is_indecomposable(m))
            _expect(name, {"n": n, "oracle": "indecomposable count"},
                    brute, PRIMITIVE_TABLE[n - 1])
        return 5 + 4
    return _run(name, body)


def check_generator_table(w: int, rng) -> CheckResult:
    name = "generator-table"

    def body() -> int:
        got = generator_counts(5, max_weight=6)
        _expect(name, {"upto": 5}, tuple(got[1:]), GENERATOR_TABLE)
        return 5
    return _run(name, body)


def check_qn_table(w: int, rng) -> CheckResult:
    name = "qn-table"

    def body() -> int:
        for n in range(1, 6):
            _expect(name, {"n": n}, count_qn(n), QN_TABLE[n - 1])
        return 5
    return _run(name, body)


def check_qn_independence(w: int, rng) -> CheckResult:
    name = "qn-independence"

    def body() -> int:
        cases = 0
        for total in range(1, 7):
            for nu in compositions(total):
                if len(nu) > 4:
                    continue
                _expect(name, {"nu": nu},
                        len(reading_fiber(nu)), QN_TABLE[len(nu) - 1])
                cases += 1
        return cases
    return _run(name, body)


def check_shell_invariants(w: int, rng) -> CheckResult:
    name = "shell-invariants"

    def body() -> int:
        cases = 0
        for n in range(0, 5):
            shell = enumerate_pack(n, max_weight=6)
            _expect(name, {"n": n}, len(set(shell)), len(shell))
            _expect(name, {"n": n}, list(shell), sorted(shell))
            for m in shell:
                _expect(name, {"n": n, "M": m}, m.is_packed() and m.weight() == n, True)
            cases += 1
        return cases
    return _run(name, body)


# ---------------------------------------------------------------------------
# registry

SUITES: dict[str, list] = {
    "axioms": [
        check_coassoc_splitting,
        check_coassoc_deconcat,
        check_coassoc_second,
        check_counits,
        check_splitting_multiplicative,
        check_antipode,
        check_infinitesimal,
        check_second_multiplicative,
        check_double_compat,
        check_truncation_closure,
        check_permutation_closure,
        check_packing_quotient,
        check_internal_distributivity,
        check_internal_coproduct,
        check_internal_unit_assoc,
        check_eulerian_primitive,
        check_hoffman,
        check_qsym_nsym_duality,
        check_qsym_double_compat,
        check_nsym_truncation,
    ],
    "duality": [
        check_qsh_splitting_adjunction,
        check_searrow_deconcat_adjunction,
        check_shuffle_bigraded_adjunction,
        check_lift_collapse_adjoint,
    ],
    "morphisms": [
        check_reading_morphism,
        check_shell_lift_bialgebra,
        check_reading_fiber_double,
        check_collapse_bialgebra,
        check_collapse_delta_compat,
        check_collapse_negative_control,
        check_collapse_surjectivity,
        check_merge_iso,
        check_transpose_automorphism,
        check_polynomial_character,
        check_perm_products,
    ],
    "realization": [
        check_eval_multiplicative,
        check_block_grid_deconcat,
        check_kron_grid_second,
        check_classify_fibers,
        check_transpose_eval,
    ],
    "counts": [
        check_pack_table,
        check_primitive_table,
        check_generator_table,
        check_qn_table,
        check_qn_independence,
        check_shell_invariants,
    ],
}

DEFAULT_SUITE_WEIGHT = {"axioms": 4, "duality": 4, "morphisms": 3,
                        "realization": 3, "counts": 4}


def run_suite(suite: str, max_weight: int | None = None, seed: int = 0) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    w = DEFAULT_SUITE_WEIGHT[suite] if max_weight is None else max_weight
    rng = random.Random(seed)
    return [chk(w, rng) for chk in SUITES[suite]]
