"""HS-stable involution subsemigroups.

An involution subsemigroup ``T`` of ``S`` is HS-stable when it contains every
hermitian square ``x x*`` and ``xhy in T`` implies ``xy in T`` for every
hermitian square ``h``.  This module decides HS-stability two ways (directly
and through the omega/S^2 characterisation), computes the generated
HS-stable subsemigroup two ways (closed formula and saturation oracle), and
builds the anchor witnesses for complex-product problems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .closure import gen_inv_subsemigroup, omega
from .core import (
    InvolutionSemigroup,
    Subset,
    complex_product,
    hermitian_squares,
    square_set,
    star_set,
)
from .errors import EmptyInput, MixedParents, NotAGroup, NotSubsemigroup, TooLarge


def _hs_indices(s: InvolutionSemigroup) -> np.ndarray:
    return s.cached("H_idx", lambda: np.asarray(hermitian_squares(s).indices, dtype=np.int32))


def conjugated_squares(s: InvolutionSemigroup) -> Subset:
    """The union of ``x H_S^2 x*`` over all ``x``."""
    return s.cached("xH2x*", lambda: Subset.from_array(
        s, kernels.conjugated_squares(s.table, s.star, _hs_indices(s))))


@dataclass
class HSStabilityReport:
    """Outcome of an HS-stability test.

    ``violated`` names the first failed condition: ``"product"``,
    ``"star"``, ``"HS1"`` or ``"HS2"`` for :func:`is_hs_stable`, and
    ``"main1"``, ``"main2"``, ``"main3"`` for :func:`is_hs_stable_by_conditions`.
    """

    stable: bool
    violated: str | None = None
    counterexample: tuple[int, ...] | None = None

    def __bool__(self):
        return self.stable

    def recheck(self, t: Subset) -> bool:
        """True if the counterexample is a genuine violation (or there is none)."""
        if self.stable:
            return self.violated is None
        s = t.parent
        cex = self.counterexample
        if self.violated == "product":
            a, b = cex
            return a in t and b in t and s.mult(a, b) not in t
        if self.violated == "star":
            return cex[0] in t and s.inv(cex[0]) not in t
        if self.violated == "HS1":
            return cex[0] in hermitian_squares(s) and cex[0] not in t
        if self.violated == "HS2":
            h, x, y = cex
            return h in hermitian_squares(s) and s.product(x, h, y) in t and s.mult(x, y) not in t
        if self.violated == "main1":
            x, e = cex
            h2 = complex_product([hermitian_squares(s)] * 2)
            return e not in t and any(s.product(x, g, s.inv(x)) == e for g in h2)
        if self.violated == "main2":
            e = cex[0]
            s2 = square_set(s)
            return e in s2 and (e in omega(t)) != (e in t)
        if self.violated == "main3":
            e = cex[0]
            return e not in square_set(s) and (e in t) != (e in star_set(t))
        return False


def is_hs_stable(t: Subset) -> HSStabilityReport:
    """Decide HS-stability from the definition."""
    s = t.parent
    arr = t.array
    pair = kernels.product_escape(s.table, arr)
    if pair is not None:
        return HSStabilityReport(False, "product", tuple(int(v) for v in pair))
    bad = np.flatnonzero(arr.astype(bool) & ~arr.astype(bool)[s.star])
    if len(bad):
        return HSStabilityReport(False, "star", (int(bad[0]),))
    missing = hermitian_squares(s) - t
    if missing:
        return HSStabilityReport(False, "HS1", (missing.indices[0],))
    triple = kernels.hs2_violation(s.table, _hs_indices(s), arr)
    if triple is not None:
        return HSStabilityReport(False, "HS2", tuple(int(v) for v in triple))
    return HSStabilityReport(True)


def is_hs_stable_by_conditions(t: Subset) -> HSStabilityReport:
    """Decide HS-stability from the three omega/S^2 conditions.

    1. ``x H_S^2 x* <= T`` for every ``x``;
    2. ``T omega & S^2 == T & S^2``;
    3. ``T - S^2 == T* - S^2``.
    """
    s = t.parent
    arr = t.array.astype(bool)
    if not (conjugated_squares(s) <= t):
        hs = _hs_indices(s)
        h2 = np.unique(s.table[np.ix_(hs, hs)])
        for x in range(s.order):
            conj = s.table[s.table[x, h2], s.star[x]]
            out = conj[~arr[conj]]
            if len(out):
                return HSStabilityReport(False, "main1", (x, int(out.min())))
    s2 = square_set(s)
    diff = (omega(t) & s2).array != (t & s2).array
    if diff.any():
        return HSStabilityReport(False, "main2", (int(np.flatnonzero(diff)[0]),))
    outside = ~s2.array.astype(bool)
    diff = (arr != star_set(t).array.astype(bool)) & outside
    if diff.any():
        return HSStabilityReport(False, "main3", (int(np.flatnonzero(diff)[0]),))
    return HSStabilityReport(True)


def genhs_formula(a: Subset) -> Subset:
    """The HS-stable involution subsemigroup generated by ``a``, in closed form.

    ``(<A | U_x x H^2 x*> omega & S^2) | ((A | A*) - S^2)`` with a single
    application of omega.  ``a`` may be empty, giving the least HS-stable
    involution subsemigroup.
    """
    s = a.parent
    s2 = square_set(s)
    seed = gen_inv_subsemigroup(a | conjugated_squares(s))
    return (omega(seed) & s2) | ((a | star_set(a)) - s2)


def genhs_oracle(a: Subset) -> Subset:
    """Same set as :func:`genhs_formula`, by least-fixpoint saturation.

    Starting from ``A | H_S``, close under product and star and apply the
    rule ``xhy in T => xy in T`` until nothing changes.
    """
    s = a.parent
    return Subset.from_array(s, kernels.hs_saturate(s.table, s.star, _hs_indices(s), a.array))


genhs = genhs_formula


def min_hs_stable(s: InvolutionSemigroup) -> Subset:
    return s.cached("minHS", lambda: genhs_formula(s.empty()))


def is_hs_simple(s: InvolutionSemigroup) -> bool:
    return min_hs_stable(s) == s.full()


def enumerate_hs_stable(s: InvolutionSemigroup, cap: int = 2 ** 16, *, method: str = "closure") -> list[Subset]:
    """All HS-stable involution subsemigroups, sorted by size then indices.

    ``method="closure"`` walks the closure system upwards from the minimum
    (``genhs(T | {x})`` for each stable ``T`` and ``x`` outside it);
    ``method="subsets"`` takes the image of ``genhs`` over every subset.
    Both are refused when ``2**n > cap``.
    """
    n = s.order
    if n >= 63 or 2 ** n > cap:
        raise TooLarge(n, cap, "HS-stable enumeration")
    if method == "subsets":
        found = {genhs_formula(Subset.from_mask(s, m)) for m in range(2 ** n)}
    elif method == "closure":
        start = min_hs_stable(s)
        found = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for x in t.complement():
                u = genhs_formula(t | s.subset([x]))
                if u not in found:
                    found.add(u)
                    stack.append(u)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(found, key=Subset.sort_key)


# complex-product problem

@dataclass
class WitnessChain:
    """An HS-stable ``T`` properly inside ``S'`` with anchors ``a_1..a_{n-1}``.

    Conditions: ``S_1 a_1* <= T``, ``a_{i-1} S_i a_i* <= T`` for ``1 < i < n``
    and ``a_{n-1} S_n <= T``.  With a single set (``n = 1``) there are no
    anchors and the condition is ``S_1 <= T``.
    """

    T: Subset
    anchors: tuple[int, ...]
    sets: tuple[Subset, ...]
    sprime: Subset

    def failures(self) -> list[str]:
        s = self.T.parent
        n = len(self.sets)
        out = []
        if len(self.anchors) != n - 1:
            out.append(f"expected {n - 1} anchors, got {len(self.anchors)}")
            return out
        if not is_hs_stable(self.T):
            out.append("T is not HS-stable")
        if not self.T < self.sprime:
            out.append("T is not a proper subset of S'")
        if n == 1:
            if not self.sets[0] <= self.T:
                out.append("S_1 is not contained in T")
            return out
        a = self.anchors
        single = s.subset
        if not complex_product([self.sets[0], single([s.inv(a[0])])]) <= self.T:
            out.append("S_1 a_1* is not contained in T")
        for i in range(1, n - 1):
            part = complex_product([single([a[i - 1]]), self.sets[i], single([s.inv(a[i])])])
            if not part <= self.T:
                out.append(f"a_{i} S_{i + 1} a_{i + 1}* is not contained in T")
        if not complex_product([single([a[-1]]), self.sets[-1]]) <= self.T:
            out.append(f"a_{n - 1} S_{n} is not contained in T")
        return out

    def verify(self) -> bool:
        return not self.failures()

    def render(self) -> str:
        s = self.T.parent
        anchors = ", ".join(s.label(a) for a in self.anchors)
        return f"T = {self.T!r}\nanchors = ({anchors})"


@dataclass
class Equal:
    """The generated HS-stable set is not properly contained in ``S'``.

    ``contained`` distinguishes equality with ``S'`` from not fitting in it
    at all.
    """

    generated: Subset
    sprime: Subset

    @property
    def contained(self) -> bool:
        return self.generated <= self.sprime

    def render(self) -> str:
        rel = "=" if self.generated == self.sprime else ("<=" if self.contained else "not <=")
        return f"Equal: <S_1...S_n>_HS = {self.generated!r} {rel} S' = {self.sprime!r}"


def _check_problem_inputs(sets: Sequence[Subset], sprime: Subset | None = None):
    if not sets:
        raise EmptyInput("need at least one set")
    parent = sets[0].parent
    for t in sets:
        if t.parent is not parent:
            raise MixedParents("subsets belong to different semigroups")
        if not t:
            raise EmptyInput("all sets must be nonempty")
    if sprime is not None:
        if sprime.parent is not parent:
            raise MixedParents("S' belongs to a different semigroup")
        if gen_inv_subsemigroup(sprime) != sprime:
            raise NotSubsemigroup(f"S' = {sprime!r} is not an involution subsemigroup")


def search_witness(sets: Sequence[Subset], sprime: Subset, max_order: int = 8) -> WitnessChain | None:
    """Exhaustive search over all HS-stable ``T`` and anchor tuples."""
    _check_problem_inputs(sets, sprime)
    s = sets[0].parent
    if s.order > max_order:
        raise TooLarge(s.order, max_order, "witness search")
    candidates = [t for t in enumerate_hs_stable(s) if t < sprime]
    for t in candidates:
        for anchors in itertools.product(range(s.order), repeat=len(sets) - 1):
            chain = WitnessChain(t, tuple(anchors), tuple(sets), sprime)
            if chain.verify():
                return chain
    return None


def check_problem(sets: Sequence[Subset], sprime: Subset, *, exhaustive: bool = False) -> Equal | WitnessChain:
    """Decide ``<S_1 ... S_n>_HS < S'`` and produce the anchor witness.

    The witness takes ``T = <S_1...S_n>_HS`` and ``a_i = x_1 ... x_i`` for
    the least element ``x_i`` of each ``S_i``.  With ``exhaustive=True``
    (orders up to 8) the answer is cross-checked against a search over
    every HS-stable ``T`` and every anchor tuple.
    """
    _check_problem_inputs(sets, sprime)
    s = sets[0].parent
    generated = genhs_formula(complex_product(list(sets)))
    if generated < sprime:
        xs = [t.indices[0] for t in sets]
        anchors = tuple(s.product(*xs[: i + 1]) for i in range(len(sets) - 1))
        result: Equal | WitnessChain = WitnessChain(generated, anchors, tuple(sets), sprime)
        problems = result.failures()
        if problems:
            raise AssertionError("constructed witness fails: " + "; ".join(problems))
    else:
        result = Equal(generated, sprime)
    if exhaustive:
        found = search_witness(sets, sprime)
        if (found is None) != isinstance(result, Equal):
            raise AssertionError("exhaustive witness search disagrees with the generated set")
    return result


def specialform_check(sets: Sequence[Subset], k: int) -> bool:
    """``S_1..S_k S_k*..S_1* <= <S_1...S_n>_HS``."""
    _check_problem_inputs(sets)
    if not 1 <= k <= len(sets):
        raise ValueError(f"k must lie in [1, {len(sets)}], got {k}")
    head = list(sets[:k])
    lhs = complex_product(head + [star_set(t) for t in reversed(head)])
    return lhs <= genhs_formula(complex_product(list(sets)))


# groups

def group_identity(g: InvolutionSemigroup) -> int:
    """Identity of ``g``; raises unless ``g`` is a group with star = inverse."""
    n = g.order
    ids = [e for e in range(n)
           if (g.table[e, :] == np.arange(n)).all() and (g.table[:, e] == np.arange(n)).all()]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    bad = np.flatnonzero((g.table[np.arange(n), g.star] != e) | (g.table[g.star, np.arange(n)] != e))
    if len(bad):
        raise NotAGroup(f"star({int(bad[0])}) is not the inverse of {int(bad[0])}")
    return e


def is_group(g: InvolutionSemigroup) -> bool:
    try:
        group_identity(g)
    except NotAGroup:
        return False
    return True


@dataclass
class CosetResult:
    equal: bool
    generated: Subset  # <A>
    generated_quotients: Subset  # <A^-1 A>
    coset: tuple[int, Subset] | None = None  # (g, G') with A <= g G', G' < <A>

    def verify(self, a: Subset) -> bool:
        if self.equal:
            return self.coset is None and self.generated == self.generated_quotients
        g, sub = self.coset
        s = a.parent
        left = complex_product([s.subset([g]), sub])
        return a <= left and sub < self.generated and g not in sub


def check_coset_criterion(g: InvolutionSemigroup, a: Subset) -> CosetResult:
    """Compare ``<A^-1 A>`` with ``<A>`` in a group and exhibit the coset.

    When they differ, ``A`` lies in the nontrivial left coset ``x <A^-1 A>``
    for any ``x`` in ``A``; the least such ``x`` is reported.
    """
    group_identity(g)
    if a.parent is not g:
        raise MixedParents("A belongs to a different semigroup")
    if not a:
        raise EmptyInput("A must be nonempty")
    whole = gen_inv_subsemigroup(a)
    quotients = gen_inv_subsemigroup(complex_product([star_set(a), a]))
    if whole == quotients:
        return CosetResult(True, whole, quotients)
    return CosetResult(False, whole, quotients, (a.indices[0], quotients))
