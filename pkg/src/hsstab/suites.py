"""Invariant suites run by ``hsstab check`` against a single semigroup."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .closure import gen_inv_subsemigroup, gen_subsemigroup, is_inv_subsemigroup, omega
from .core import (
    InvolutionSemigroup,
    Subset,
    complex_product,
    hermitian_squares,
    idempotents,
    square_set,
    star_set,
)
from .errors import TooLarge
from .hs import (
    conjugated_squares,
    enumerate_hs_stable,
    genhs_formula,
    genhs_oracle,
    is_group,
    is_hs_simple,
    is_hs_stable,
    is_hs_stable_by_conditions,
)
from .morphic import (
    check_involution_preservation,
    check_kernel_characterization,
    enumerate_group_quotients,
)
from .structure import (
    check_commutative_equivalence,
    classify,
    commutative_legs,
    genhs_commutative,
    genhs_orthodox,
    genhs_regular,
    hermitian_identities,
    inverse_hs_simplicity,
    is_semilattice,
    orthodox_simplicity_agrees,
    regular_star_invariants,
    semilattice_product_criterion,
)

SUITES = ("core", "closure", "hs", "regular", "commutative", "semilattice", "morphic", "example")


@dataclass
class CheckResult:
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def subsets(s: InvolutionSemigroup, samples: int = 1000, exhaustive_bits: int = 10,
            seed: int = 0) -> Iterator[Subset]:
    """All subsets when ``n <= exhaustive_bits``, else a seeded random sample.

    The sample mixes densities and includes generated HS-stable sets so that
    both verdicts of a stability test get exercised.
    """
    n = s.order
    if n <= exhaustive_bits:
        for m in range(2 ** n):
            yield Subset.from_mask(s, m)
        return
    rng = random.Random(seed)
    for k in range(samples):
        p = (0.05, 0.2, 0.5, 0.8, 0.95)[k % 5]
        t = Subset(s, (a for a in range(n) if rng.random() < p))
        if k % 4 == 3:
            t = genhs_formula(Subset(s, rng.sample(range(n), rng.randint(0, 2))))
        yield t


def _sweep(name: str, s, pred: Callable[[Subset], bool], **kw) -> CheckResult:
    count = 0
    for t in subsets(s, **kw):
        count += 1
        if not pred(t):
            return CheckResult(name, "FAIL", f"counterexample T = {t!r}")
    return CheckResult(name, "PASS", f"{count} subsets")


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, "PASS" if ok else "FAIL", detail)


def _skip(name: str, why: str) -> CheckResult:
    return CheckResult(name, "SKIP", why)


def core_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    h, e, s2 = hermitian_squares(s), idempotents(s), square_set(s)
    rng = random.Random(kw.get("seed", 0))
    out = [
        _check("axioms", True, f"order {s.order}"),
        _check("H <= S^2", h <= s2),
        _check("E* = E", star_set(e) == e),
        _check("H* = H", star_set(h) == h),
    ]

    def rand():
        return Subset(s, (a for a in range(s.order) if rng.random() < 0.4))

    ok = True
    for _ in range(50):
        a, b, c = rand(), rand(), rand()
        left = complex_product([complex_product([a, b]), c])
        right = complex_product([a, complex_product([b, c])])
        ok &= left == right == complex_product([a, b, c])
    out.append(_check("complex product fold is associative", ok, "50 random triples"))
    if classify(s).regular_star:
        ok = all(s.mult(s.mult(x, s.inv(x)), s.mult(x, s.inv(x))) == s.mult(x, s.inv(x)) for x in range(s.order))
        out.append(_check("xx* idempotent and star-fixed", ok and h <= e and star_set(h) == h))
    else:
        out.append(_skip("xx* idempotent and star-fixed", "not a regular *-semigroup"))
    return out


def closure_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    rng = random.Random(kw.get("seed", 0) + 1)
    n = s.order

    def rand():
        return Subset(s, (a for a in range(n) if rng.random() < 0.5))

    mono = True
    for _ in range(100):
        a = rand()
        b = a | rand()
        mono &= omega(a) <= omega(b)

    def extensive(t):
        u = gen_subsemigroup(t)
        return u <= omega(u) and omega(u) <= omega(omega(u))

    def closure_op(t):
        g = gen_inv_subsemigroup(t)
        return t <= g and gen_inv_subsemigroup(g) == g and gen_subsemigroup(t) <= g

    conj = conjugated_squares(s)

    def closed_property(t):
        u = gen_inv_subsemigroup(t | conj)
        w = omega(u)
        return omega(w) == w and star_set(w) == w and hermitian_squares(s) <= w

    return [
        _check("omega is monotone", mono, "100 random pairs"),
        _sweep("omega extensive on subsemigroups", s, extensive, **kw),
        _sweep("<.> is a closure operator", s, closure_op, **kw),
        _sweep("T omega closed when xH^2x* <= T", s, closed_property, **kw),
    ]


def hs_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    s2 = square_set(s)

    def main_equiv(t):
        return is_hs_stable(t).stable == is_hs_stable_by_conditions(t).stable

    def oracle(t):
        return genhs_formula(t) == genhs_oracle(t)

    def intersect(t):
        if not is_inv_subsemigroup(t):
            return True
        return is_hs_stable(t).stable == is_hs_stable(t & s2).stable

    def contains_e_and_conj(t):
        if not is_hs_stable(t).stable:
            return True
        return idempotents(s) <= t and conjugated_squares(s) <= t

    def closure_op(t):
        g = genhs_formula(t)
        bigger = genhs_formula(t | s.subset([0]))
        return t <= g and genhs_formula(g) == g and g <= bigger

    out = [
        _sweep("stable <-> omega/S^2 conditions", s, main_equiv, **kw),
        _sweep("generated set: formula = saturation", s, oracle, **kw),
        _check("S^2 is HS-stable", is_hs_stable(s2).stable),
        _sweep("T stable <-> T & S^2 stable", s, intersect, **kw),
        _sweep("stable T contains E and xH^2x*", s, contains_e_and_conj, **kw),
        _sweep("genHS is a closure operator", s, closure_op, **kw),
    ]
    rep = classify(s)
    if rep.has_zero:
        def zero_formula(t):
            return genhs_formula(t) == s2 | ((t | star_set(t)) - s2)
        out.append(_sweep("zero: genHS(A) = S^2 | ((A|A*) - S^2)", s, zero_formula, **kw))
    else:
        out.append(_skip("zero: genHS(A) = S^2 | ((A|A*) - S^2)", "no zero element"))
    if is_group(s):
        try:
            stable = set(enumerate_hs_stable(s, cap=2 ** min(s.order, 32)))
        except TooLarge as exc:
            out.append(_skip("group: HS-stable = subgroups", str(exc)))
        else:
            subgroups = subgroup_lattice(s)
            out.append(_check("group: HS-stable = subgroups", stable == subgroups, f"{len(stable)} subgroups"))
    else:
        out.append(_skip("group: HS-stable = subgroups", "not a group with inversion"))
    return out


def subgroup_lattice(g: InvolutionSemigroup) -> set[Subset]:
    """All subgroups, grown from the trivial one by adjoining one element at a time."""
    start = gen_inv_subsemigroup(hermitian_squares(g))
    found = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for x in t.complement():
            u = gen_inv_subsemigroup(t | g.subset([x]))
            if u not in found:
                found.add(u)
                stack.append(u)
    return found


def regular_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    rep = classify(s)
    if not rep.regular_star:
        return [_skip("regular *-semigroup checks", "not a regular *-semigroup")]
    out = [_check(f"H and E: {k}", v) for k, v in hermitian_identities(s).items()]
    out += [_check(k, v) for k, v in regular_star_invariants(s).items()]
    out.append(_sweep("genHS = <T | F_S> omega", s, lambda t: genhs_regular(t) == genhs_formula(t), **kw))
    if rep.orthodox_star:
        out.append(_sweep("orthodox: genHS = <T | E_S> omega", s, lambda t: genhs_orthodox(t) == genhs_formula(t), **kw))
        out.append(_check("orthodox: E_S = <E_S>", gen_inv_subsemigroup(idempotents(s)) == idempotents(s)))
        try:
            out.append(_check("orthodox: HS-simple <-> trivial group (o)-images", orthodox_simplicity_agrees(s)))
        except TooLarge as exc:
            out.append(_skip("orthodox: HS-simple <-> trivial group (o)-images", str(exc)))
    else:
        out.append(_skip("orthodox checks", "not orthodox"))
    if rep.inverse:
        out.append(_check("inverse: idempotent absorbers <-> HS-simple",
                          inverse_hs_simplicity(s).holds == is_hs_simple(s)))
    else:
        out.append(_skip("inverse: idempotent absorbers <-> HS-simple", "not inverse"))
    return out


def commutative_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    rep = classify(s)
    if not rep.commutative:
        return [_skip("commutative checks", "not commutative")]
    def first_two(t):
        leg1, leg2, _ = commutative_legs(t, max_order=0)
        return leg1 == leg2

    out = [
        _sweep("stable <-> H <= T, T-S^2 = T*-S^2, T omega & S^2 = T & S^2", s, first_two, **kw),
        _sweep("three-way stability agreement", s, check_commutative_equivalence, **kw),
        _sweep("genHS = (<A|H> omega & S^2) | ((A|A*) - S^2)", s,
               lambda t: genhs_commutative(t) == genhs_formula(t), **kw),
    ]
    if s.order <= 8:
        kernels = {q.kernel for q in enumerate_group_quotients(s, True, 8)}
        out.append(_sweep("stable T: T omega is an (o,*)-kernel", s,
                          lambda t: not is_hs_stable(t).stable or omega(t) in kernels, **kw))
    if rep.trivial_involution:
        squares = Subset(s, (s.mult(x, x) for x in range(s.order)))
        out.append(_check("trivial involution: E <= H = {s^2}",
                          idempotents(s) <= hermitian_squares(s) == squares))
    return out


def semilattice_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    if not is_semilattice(s):
        return [_skip("semilattice checks", "not a semilattice")]
    rng = random.Random(kw.get("seed", 0) + 2)
    n = s.order

    def rand():
        t = Subset(s, (a for a in range(n) if rng.random() < 0.4))
        return t if t else s.subset([rng.randrange(n)])

    ok = True
    for _ in range(kw.get("samples", 1000) // 5):
        sets = [rand() for _ in range(rng.randint(1, 3))]
        ok &= semilattice_product_criterion(s, sets).agree
    return [
        _check("product criterion: both sides agree", ok),
        _check("semilattice is HS-simple", is_hs_simple(s)),
    ]


def morphic_suite(s: InvolutionSemigroup, max_order: int = 8, **kw) -> list[CheckResult]:
    name = "group quotient checks"
    if s.order > max_order:
        return [_skip(name, f"order {s.order} above congruence bound {max_order}")]
    star_q = enumerate_group_quotients(s, True, max_order)
    plain_q = enumerate_group_quotients(s, False, max_order)
    kernels = {q.kernel for q in star_q}
    out = [
        _check("(o,*)-kernels are HS-stable", all(is_hs_stable(k).stable for k in kernels), f"{len(kernels)} kernels"),
        _check("HS-simple => only trivial (o,*)-images",
               not is_hs_simple(s) or all(q.order == 1 for q in star_q)),
        _check("H <= kernel <-> involution preserved",
               all(check_involution_preservation(q) == q.preserves_involution_direct() for q in plain_q)),
    ]

    def kernel_char(t):
        if not is_inv_subsemigroup(t):
            return True
        return (t in kernels) == check_kernel_characterization(t)

    out.append(_sweep("kernel <-> closed, reflexive, H <= T", s, kernel_char, **kw))
    return out


def example_suite(s: InvolutionSemigroup, **kw) -> list[CheckResult]:
    """Reproduction checks for the named Rees matrix instance."""
    if s.name != "rees-S3":
        return [_skip("Rees instance reproduction", "input is not the rees-S3 instance")]
    from .constructions import nonnormal_rees_instance, nonnormal_rees_spec

    if s != nonnormal_rees_instance():
        return [CheckResult("Rees instance reproduction", "FAIL", "table differs from the rees-S3 builder")]
    _, named = nonnormal_rees_spec()
    g = nonnormal_rees_spec()[0].group

    def el(i, gname, j):
        return s.index(f"({i},{gname},{j})")

    e, a = "e", g.label(named["a"])
    a_inv = g.label(int(g.star[named["a"]]))
    t = s.subset([el(1, e, 1), el(1, e, 2), el(2, e, 1), el(2, e, 2)])
    tw, tww = omega(t), omega(omega(t))
    target = el(1, a_inv, 1)
    gen_e = omega(gen_inv_subsemigroup(idempotents(s)))
    k_part = Subset(s, (x for x in range(s.order) if s.names[x].split(",")[1] in {g.label(k) for k in named["K"]}))
    conj = el(1, g.label(named["xax^-1"]), 1)
    minimum = genhs_formula(s.empty())
    return [
        _check("T omega != (T omega) omega", tw != tww and target in tww and target not in tw),
        _check("(2,a,3) in T omega", el(2, a, 3) in tw),
        _check("<E> omega inside I x K x I", gen_e <= k_part),
        _check("<E> omega is not HS-stable", not is_hs_stable(gen_e).stable),
        _check("(1,xax^-1,1) in genHS(empty) - <E> omega", conj in minimum and conj not in gen_e),
    ]


_RUNNERS = {
    "core": core_suite,
    "closure": closure_suite,
    "hs": hs_suite,
    "regular": regular_suite,
    "commutative": commutative_suite,
    "semilattice": semilattice_suite,
    "morphic": morphic_suite,
    "example": example_suite,
}


def run_suite(s: InvolutionSemigroup, suite: str = "all", **kw) -> list[CheckResult]:
    if suite != "all" and suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        for r in _RUNNERS[name](s, **kw):
            out.append(CheckResult(f"{name}: {r.name}", r.status, r.detail))
    return out
