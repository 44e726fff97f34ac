"""Command-line front end.

Exit codes: 0 success, 1 validation error or failed property, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as C
from .core import InvolutionSemigroup, Subset, hermitian_squares, idempotents, square_set
from .errors import SemigroupError, TooLarge, ValidationError
from .hs import Equal, check_problem, enumerate_hs_stable, genhs_formula, genhs_oracle, is_hs_simple, min_hs_stable
from .structure import classify, f_set
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def parse_set(s: InvolutionSemigroup, text: str) -> Subset:
    text = text.strip()
    if not text:
        return s.empty()
    try:
        idx = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"bad subset {text!r}: expected comma-separated 0-based indices") from None
    bad = [i for i in idx if not 0 <= i < s.order]
    if bad:
        raise UsageError(f"indices {bad} outside [0, {s.order})")
    return s.subset(idx)


def parse_sets(s: InvolutionSemigroup, text: str) -> list[Subset]:
    return [parse_set(s, part) for part in text.split(";")]


def _load(path: str) -> InvolutionSemigroup:
    try:
        return InvolutionSemigroup.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _subset_dict(t: Subset) -> dict:
    return {"elements": list(t.indices), "labels": t.labels()}


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data))
    else:
        print("\n".join(lines))


def cmd_validate(args) -> int:
    try:
        s = _load(args.path)
    except ValidationError as exc:
        _emit(args, {"valid": False, "error": type(exc).__name__, "message": str(exc)},
              [f"INVALID {type(exc).__name__}: {exc}"])
        return 1
    _emit(args, {"valid": True, "order": s.order, "semigroup": s.to_dict()},
          [f"valid involution semigroup of order {s.order}" + (f" ({s.name})" if s.name else "")])
    return 0


def cmd_info(args) -> int:
    s = _load(args.path)
    rep = classify(s)
    sets = {
        "H_S": hermitian_squares(s),
        "E_S": idempotents(s),
        "S^2": square_set(s),
        "F_S": f_set(s),
        "min HS-stable": min_hs_stable(s),
    }
    data = {
        "order": s.order,
        "name": s.name,
        "classes": rep.as_dict(),
        "hs_simple": is_hs_simple(s),
        "sets": {k: _subset_dict(v) for k, v in sets.items()},
    }
    lines = [f"order: {s.order}" + (f"  name: {s.name}" if s.name else "")]
    lines += [f"{k}: {v}" for k, v in rep.as_dict().items()]
    lines.append(f"HS-simple: {data['hs_simple']}")
    lines += [f"{k}: {v!r}" for k, v in sets.items()]
    _emit(args, data, lines)
    return 0


def cmd_genhs(args) -> int:
    s = _load(args.path)
    a = parse_set(s, args.set)
    formula = genhs_formula(a)
    oracle = genhs_oracle(a)
    if formula != oracle:
        msg = f"formula {formula!r} != saturation {oracle!r}"
        _emit(args, {"error": "OracleMismatch", "message": msg}, [f"ERROR OracleMismatch: {msg}"])
        return 1
    _emit(args, {"set": list(a.indices), "generated": list(formula.indices), "labels": formula.labels()},
          [",".join(map(str, formula.indices)), repr(formula)])
    return 0


def cmd_enumerate_hs(args) -> int:
    s = _load(args.path)
    found = enumerate_hs_stable(s, cap=args.cap)
    _emit(args, {"count": len(found), "subsemigroups": [_subset_dict(t) for t in found]},
          [f"{len(found)} HS-stable involution subsemigroups"]
          + [f"{','.join(map(str, t.indices))}\t{t!r}" for t in found])
    return 0


def cmd_check(args) -> int:
    s = _load(args.path)
    results = run_suite(s, args.suite, samples=args.samples, seed=args.seed)
    ok = all(r.ok for r in results)
    _emit(args, {"suite": args.suite, "ok": ok, "results": [r.as_dict() for r in results]},
          [f"{r.status:4}  {r.name}" + (f"  [{r.detail}]" if r.detail else "") for r in results]
          + [f"{'PASS' if ok else 'FAIL'}: {sum(r.status == 'PASS' for r in results)} passed, "
             f"{sum(r.status == 'FAIL' for r in results)} failed, {sum(r.status == 'SKIP' for r in results)} skipped"])
    return 0 if ok else 1


def _perm(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad permutation {text!r}") from None


FAMILIES = {
    "sym": (1, lambda p, a: C.symmetric_group(p[0])),
    "cyclic": (1, lambda p, a: C.cyclic_group(p[0], trivial_star=a.trivial_star)),
    "rect": (1, lambda p, a: C.rectangular_band(p[0])),
    "rees-S3": (0, lambda p, a: C.nonnormal_rees_instance()),
    "chain": (1, lambda p, a: C.chain_semilattice(p[0])),
    "diamond": (0, lambda p, a: C.diamond_semilattice()),
    "Y": (0, lambda p, a: C.nonchain_y_with_swap()),
    "free-semilattice": (1, lambda p, a: C.free_semilattice(p[0])),
    "zero": (1, lambda p, a: C.zero_semigroup(p[0], _perm(a.star) if a.star else None)),
    "sim": (1, lambda p, a: C.symmetric_inverse_monoid(p[0])),
    "brandt": (1, lambda p, a: C.brandt_semigroup(p[0])),
}


def cmd_make(args) -> int:
    nparams, build = FAMILIES[args.family]
    if len(args.params) != nparams:
        raise UsageError(f"family {args.family!r} takes {nparams} integer parameter(s)")
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise UsageError("parameters must be integers") from None
    if any(p < 1 for p in params):
        raise UsageError("parameters must be positive")
    s = build(params, args)
    if args.adjoin_zero:
        s = C.adjoin_zero(s)
    if args.adjoin_identity:
        s = C.adjoin_identity(s)
    if args.output:
        s.save(args.output)
        if not args.json:
            print(f"wrote {s.name} (order {s.order}) to {args.output}")
        else:
            print(json.dumps({"path": args.output, "order": s.order, "name": s.name}))
    else:
        print(s.dumps())
    return 0


def cmd_problem(args) -> int:
    s = _load(args.path)
    sets = parse_sets(s, args.sets)
    if args.sprime is None:
        union = s.empty()
        for t in sets:
            union = union | t
        sprime = genhs_formula(union)
    else:
        sprime = parse_set(s, args.sprime)
    result = check_problem(sets, sprime, exhaustive=args.exhaustive)
    if isinstance(result, Equal):
        data = {"result": "Equal", "generated": _subset_dict(result.generated), "sprime": _subset_dict(sprime),
                "contained": result.contained}
        lines = [result.render()]
    else:
        data = {"result": "WitnessChain", "T": _subset_dict(result.T), "anchors": list(result.anchors),
                "anchor_labels": [s.label(a) for a in result.anchors], "sprime": _subset_dict(sprime),
                "verified": result.verify()}
        lines = ["WitnessChain", result.render(), f"S' = {sprime!r}"]
    _emit(args, data, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="hsstab", description="HS-stability in finite involution semigroups")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", parents=[common], help="check the involution semigroup axioms")
    q.add_argument("path")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("info", parents=[common], help="classes and distinguished subsets")
    q.add_argument("path")
    q.set_defaults(func=cmd_info)

    q = sub.add_parser("genhs", parents=[common], help="generated HS-stable involution subsemigroup")
    q.add_argument("path")
    q.add_argument("--set", default="", help="comma-separated 0-based indices (empty: minimum)")
    q.set_defaults(func=cmd_genhs)

    q = sub.add_parser("enumerate-hs", parents=[common], help="all HS-stable involution subsemigroups")
    q.add_argument("path")
    q.add_argument("--cap", type=int, default=2 ** 16, help="refuse when 2^n exceeds this")
    q.set_defaults(func=cmd_enumerate_hs)

    q = sub.add_parser("check", parents=[common], help="run invariant suites")
    q.add_argument("path")
    q.add_argument("--suite", choices=SUITES + ("all",), default="all")
    q.add_argument("--samples", type=int, default=300, help="random subsets per sweep when n > 10")
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_check)

    q = sub.add_parser("make", parents=[common], help="build a semigroup family as JSON")
    q.add_argument("family", choices=sorted(FAMILIES))
    q.add_argument("params", nargs="*")
    q.add_argument("--trivial-star", action="store_true", help="cyclic: identity involution")
    q.add_argument("--star", help="zero: involution as comma-separated indices")
    q.add_argument("--adjoin-zero", action="store_true")
    q.add_argument("--adjoin-identity", action="store_true")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_make)

    q = sub.add_parser("problem", parents=[common], help="complex-product problem with witness")
    q.add_argument("path")
    q.add_argument("--sets", required=True, help='sets as "0,1;2,3"')
    q.add_argument("--sprime", help="involution subsemigroup S' (default: genHS of the union)")
    q.add_argument("--exhaustive", action="store_true", help="cross-check by exhaustive search (n <= 8)")
    q.set_defaults(func=cmd_problem)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:
        print(f"error {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
