"""Command-line surface.

Verbs: ``mul`` (products), ``cop`` (coproducts), ``antipode``, ``pair``,
``morph`` (named maps), ``sig`` (grid evaluation), ``count`` (tables),
``verify`` (identity suites), ``enum`` (shells).  Output is canonical
text, or JSON with ``--json``.  Exit codes: 0 success, 1 failed verify,
2 parse/usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .config import GuardExceeded
from .hopfpack import (antipode_mat, coproduct_black, coproduct_black_res,
                       deconcat, quasi_shuffle_mat, searrow_mat,
                       second_coproduct, shuffle_mat)
from .lincomb import LinComb, TensorKey
from .matrices import (Composition, Matrix, PackedMatrix, ParseError,
                       parse_composition, parse_matrix)
from .morphisms import (from_nsym, merge_iso, reading_fiber, to_nsym,
                        to_polynomial, to_qsym, transpose_lin)
from .nsymqsym import Polynomial1
from .realization import Grid, evaluate
from .counts import count_pack, count_qn, enumerate_pack, generator_counts, primitive_dims
from . import verify as verify_mod


def _key_json(key):
    if isinstance(key, Matrix):
        return [list(row) for row in key.entries]
    if isinstance(key, Composition):
        return list(key.parts)
    if isinstance(key, TensorKey):
        return {"factors": [_key_json(f) for f in key.factors]}
    if isinstance(key, tuple):
        return list(key)
    raise TypeError(f"no JSON form for key type {type(key).__name__}")


def _lincomb_json(lc: LinComb) -> dict:
    return {"terms": [{"coeff": str(c), "key": _key_json(k)}
                      for k, c in lc.sorted_items()]}


def _emit_lincomb(lc: LinComb, as_json: bool) -> None:
    print(json.dumps(_lincomb_json(lc)) if as_json else str(lc))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid rational {text!r}; expected p/q") from None


def _require_packed(m: Matrix, what: str) -> PackedMatrix:
    if not isinstance(m, PackedMatrix):
        raise ParseError(f"{what} must be packed (no zero rows or columns): {m}")
    return m


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packhopf",
        description="Exact bialgebra computations on packed integer matrices.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("mul", help="product of two basis matrices")
    p.add_argument("--op", choices=("searrow", "qsh", "shuffle"), required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cop", help="coproduct of a packed matrix")
    p.add_argument("--op", choices=("black", "black-res", "deconcat", "delta"), required=True)
    p.add_argument("matrix")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("antipode", help="antipode of a packed matrix")
    p.add_argument("matrix")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("pair", help="delta pairing of two basis matrices")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("morph", help="apply a named morphism")
    p.add_argument("--name", required=True,
                   choices=("theta-big", "theta", "kappa-xy", "k-xy",
                            "upsilon", "phi", "transpose"))
    p.add_argument("--x", default="1")
    p.add_argument("--y", default="1")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("input")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sig", help="evaluate the realization of a matrix on a grid")
    p.add_argument("--matrix", required=True)
    p.add_argument("--grid", required=True, help="JSON grid file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="counting tables as TSV")
    p.add_argument("--seq", choices=("pack", "prim", "gen", "qn"), required=True)
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", required=True,
                   choices=("axioms", "duality", "morphisms", "realization", "counts"))
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enum", help="list the packed matrices of a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_mul(args) -> int:
    a = _require_packed(parse_matrix(args.a), "left factor")
    b = _require_packed(parse_matrix(args.b), "right factor")
    if args.op == "searrow":
        out = LinComb.term(searrow_mat(a, b))
    elif args.op == "qsh":
        out = quasi_shuffle_mat(a, b)
    else:
        out = shuffle_mat(a, b)
    _emit_lincomb(out, args.json)
    return 0


def _cmd_cop(args) -> int:
    m = _require_packed(parse_matrix(args.matrix), "matrix")
    w = args.max_weight
    if args.op == "black":
        out = coproduct_black(m, max_weight=w)
    elif args.op == "black-res":
        out = coproduct_black_res(m, max_weight=w)
    elif args.op == "deconcat":
        out = deconcat(m)
    else:
        out = second_coproduct(m, max_dim=w)
    _emit_lincomb(out, args.json)
    return 0


def _cmd_antipode(args) -> int:
    m = _require_packed(parse_matrix(args.matrix), "matrix")
    _emit_lincomb(antipode_mat(m, max_weight=args.max_weight), args.json)
    return 0


def _cmd_pair(args) -> int:
    a = _require_packed(parse_matrix(args.a), "left argument")
    b = _require_packed(parse_matrix(args.b), "right argument")
    value = Fraction(1) if a == b else Fraction(0)
    print(json.dumps({"value": str(value)}) if args.json else str(value))
    return 0


def _cmd_morph(args) -> int:
    name = args.name
    w = args.max_weight
    if name in ("theta", "k-xy"):
        nu = parse_composition(args.input)
        if name == "theta":
            out = reading_fiber(nu, max_length=w)
        else:
            out = from_nsym(nu, _parse_fraction(args.x), _parse_fraction(args.y), max_part=w)
        _emit_lincomb(out, args.json)
        return 0
    m = _require_packed(parse_matrix(args.input), "matrix")
    if name == "theta-big":
        out = to_nsym(m)
    elif name == "kappa-xy":
        out = to_qsym(m, _parse_fraction(args.x), _parse_fraction(args.y))
    elif name == "upsilon":
        out = merge_iso(m)
    elif name == "transpose":
        out = LinComb.term(m.transpose())
    else:
        poly = to_polynomial(m)
        if args.json:
            print(json.dumps({"coeffs": [str(c) for c in poly.coeffs]}))
        else:
            print(str(poly))
        return 0
    _emit_lincomb(out, args.json)
    return 0


def _cmd_sig(args) -> int:
    m = _require_packed(parse_matrix(args.matrix), "matrix")
    try:
        with open(args.grid, "r", encoding="utf-8") as fh:
            grid = Grid.from_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read grid file {args.grid!r}: {exc}") from None
    value = evaluate(m, grid)
    print(json.dumps({"value": str(value)}) if args.json else str(value))
    return 0


def _cmd_count(args) -> int:
    w = args.max_weight
    upto = args.upto
    if args.seq == "pack":
        values = list(enumerate(count_pack(upto, max_weight=w)))
    elif args.seq == "prim":
        values = list(enumerate(primitive_dims(upto, max_weight=w)))[1:]
    elif args.seq == "gen":
        values = list(enumerate(generator_counts(upto, max_weight=w)))[1:]
    else:
        values = [(n, count_qn(n, max_n=w)) for n in range(1, upto + 1)]
    if args.json:
        print(json.dumps({"seq": args.seq, "values": [[n, v] for n, v in values]}))
    else:
        for n, v in values:
            print(f"{n}\t{v}")
    return 0


def _cmd_verify(args) -> int:
    results = verify_mod.run_suite(args.suite, max_weight=args.max_weight, seed=args.seed)
    failed = next((r for r in results if not r.ok), None)
    if args.json:
        obj = {
            "suite": args.suite,
            "results": [{"name": r.name, "ok": r.ok, "cases": r.cases} for r in results],
        }
        if failed is not None:
            obj["counterexample"] = failed.counterexample.to_json_obj()
        print(json.dumps(obj))
    else:
        for r in results:
            status = "ok  " if r.ok else "FAIL"
            print(f"{status} {args.suite}/{r.name} ({r.cases} cases)")
        if failed is not None:
            print(json.dumps({"suite": args.suite, **failed.counterexample.to_json_obj()}))
    return 0 if failed is None else 1


def _cmd_enum(args) -> int:
    shell = enumerate_pack(args.weight, max_weight=args.max_weight)
    if args.json:
        print(json.dumps({"weight": args.weight,
                          "matrices": [_key_json(m) for m in shell]}))
    else:
        for m in shell:
            print(str(m))
    return 0


_DISPATCH = {
    "mul": _cmd_mul,
    "cop": _cmd_cop,
    "antipode": _cmd_antipode,
    "pair": _cmd_pair,
    "morph": _cmd_morph,
    "sig": _cmd_sig,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "enum": _cmd_enum,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.verb](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
