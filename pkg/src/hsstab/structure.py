"""Class predicates and the specialised results for regular *-, orthodox,
inverse, commutative and semilattice involution semigroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .closure import gen_inv_subsemigroup, gen_subsemigroup, omega
from .core import (
    InvolutionSemigroup,
    Subset,
    complex_product,
    hermitian_squares,
    idempotents,
    square_set,
    star_set,
)
from .errors import (
    EmptyInput,
    MixedParents,
    NotCommutative,
    NotInverse,
    NotRegularStar,
    NotSemilattice,
    TooLarge,
)
from .hs import conjugated_squares, is_hs_simple, is_hs_stable
from .morphic import enumerate_group_quotients


@dataclass
class ClassReport:
    """Which standard classes ``s`` belongs to.

    ``inverse`` means an inverse semigroup whose involution is the
    inversion, i.e. a regular *-semigroup with unique inverses; ``regular``
    is plain regularity of the underlying semigroup.
    """

    regular: bool
    regular_star: bool
    orthodox_star: bool
    inverse: bool
    commutative: bool
    trivial_involution: bool
    semilattice: bool
    monoid: bool
    has_zero: bool
    zero: int | None = None
    identity: int | None = None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def inverses(s: InvolutionSemigroup, x: int) -> list[int]:
    """``V(x)``: all ``y`` with ``xyx = x`` and ``yxy = y``."""
    t = s.table
    ys = np.arange(s.order)
    ok = (t[t[x, ys], x] == x) & (t[t[ys, x], ys] == ys)
    return [int(y) for y in np.flatnonzero(ok)]


def _identity(s: InvolutionSemigroup) -> int | None:
    ar = np.arange(s.order)
    for e in range(s.order):
        if (s.table[e] == ar).all() and (s.table[:, e] == ar).all():
            return e
    return None


def _zero(s: InvolutionSemigroup) -> int | None:
    for z in range(s.order):
        if (s.table[z] == z).all() and (s.table[:, z] == z).all():
            return z
    return None


def is_regular_star(s: InvolutionSemigroup) -> bool:
    t, st, ar = s.table, s.star, np.arange(s.order)
    return bool((t[t[ar, st], ar] == ar).all() and (t[t[st, ar], st] == st).all())


def is_commutative(s: InvolutionSemigroup) -> bool:
    return bool((s.table == s.table.T).all())


def is_semilattice(s: InvolutionSemigroup) -> bool:
    return is_commutative(s) and idempotents(s) == s.full()


def classify(s: InvolutionSemigroup) -> ClassReport:
    def compute():
        regular = all(inverses(s, x) for x in range(s.order))
        regular_star = is_regular_star(s)
        e = idempotents(s)
        orthodox = regular_star and gen_subsemigroup(e) == e
        inverse = regular_star and all(len(inverses(s, x)) == 1 for x in range(s.order))
        commutative = is_commutative(s)
        zero, one = _zero(s), _identity(s)
        return ClassReport(
            regular=regular,
            regular_star=regular_star,
            orthodox_star=orthodox,
            inverse=inverse,
            commutative=commutative,
            trivial_involution=bool((s.star == np.arange(s.order)).all()),
            semilattice=commutative and e == s.full(),
            monoid=one is not None,
            has_zero=zero is not None,
            zero=zero,
            identity=one,
        )

    return s.cached("classify", compute)


def f_set(s: InvolutionSemigroup) -> Subset:
    """``F_S = {x e x* : x in S, e idempotent}``."""
    e = np.asarray(idempotents(s).indices)
    out = np.zeros(s.order, dtype=np.uint8)
    if len(e):
        out[s.table[s.table[:, e], s.star[:, None]].ravel()] = 1
    return Subset.from_array(s, out)


def _require_regular_star(s: InvolutionSemigroup) -> ClassReport:
    rep = classify(s)
    if not rep.regular_star:
        raise NotRegularStar(f"{s!r} is not a regular *-semigroup")
    return rep


def hermitian_identities(s: InvolutionSemigroup) -> dict[str, bool]:
    """The hermitian-square/idempotent identities of a regular *-semigroup.

    Keys: ``H=fixedE`` (H_S is the set of star-fixed idempotents),
    ``H=E<->inverse``, ``H^2=E`` and, for orthodox ``s``, ``xEx*<=E``.
    """
    rep = _require_regular_star(s)
    h, e = hermitian_squares(s), idempotents(s)
    fixed = Subset(s, (x for x in e if s.inv(x) == x))
    parts = {
        "H=fixedE": h == fixed,
        "H=E<->inverse": (h == e) == rep.inverse,
        "H^2=E": complex_product([h, h]) == e,
    }
    if rep.orthodox_star:
        parts["xEx*<=E"] = f_set(s) <= e
    return parts


def check_hermitian_identities(s: InvolutionSemigroup) -> bool:
    return all(hermitian_identities(s).values())


def genhs_regular(t: Subset) -> Subset:
    """``<T | F_S> omega`` in a regular *-semigroup."""
    s = t.parent
    _require_regular_star(s)
    return omega(gen_inv_subsemigroup(t | f_set(s)))


def genhs_orthodox(t: Subset) -> Subset:
    """``<T | E_S> omega`` in an orthodox *-semigroup."""
    s = t.parent
    if not _require_regular_star(s).orthodox_star:
        raise NotRegularStar(f"{s!r} is not an orthodox *-semigroup")
    return omega(gen_inv_subsemigroup(t | idempotents(s)))


def is_e_unitary(s: InvolutionSemigroup) -> bool:
    e = idempotents(s)
    return omega(e) == e


@dataclass
class InverseSimplicity:
    holds: bool
    witnesses: dict[int, int | None]  # x -> idempotent e with e = xe = ex, or None


def inverse_hs_simplicity(s: InvolutionSemigroup) -> InverseSimplicity:
    """Every ``x`` has an idempotent ``e`` with ``e = xe = ex`` (least such ``e`` reported)."""
    if not classify(s).inverse:
        raise NotInverse(f"{s!r} is not an inverse semigroup with inversion as involution")
    witnesses: dict[int, int | None] = {}
    for x in range(s.order):
        witnesses[x] = next((e for e in idempotents(s) if s.mult(x, e) == e == s.mult(e, x)), None)
    return InverseSimplicity(all(w is not None for w in witnesses.values()), witnesses)


# commutative

def _require_commutative(s: InvolutionSemigroup) -> None:
    if not is_commutative(s):
        raise NotCommutative(f"{s!r} is not commutative")


def commutative_legs(t: Subset, max_order: int = 8) -> tuple[bool, bool, bool | None]:
    """The three equivalent conditions for a commutative parent.

    (1) ``T`` is HS-stable; (2) ``H_S <= T``, ``T - S^2 == T* - S^2`` and
    ``T omega & S^2 == T & S^2``; (3) ``T`` is the kernel of a group
    (o,*)-morphic image.  Leg (3) is ``None`` above ``max_order``.
    """
    s = t.parent
    _require_commutative(s)
    s2 = square_set(s)
    leg1 = is_hs_stable(t).stable
    leg2 = (hermitian_squares(s) <= t and (t - s2) == (star_set(t) - s2)
            and (omega(t) & s2) == (t & s2))
    leg3 = None
    if s.order <= max_order:
        kernels = s.cached("star_kernels", lambda: {q.kernel for q in enumerate_group_quotients(s, True, max_order)})
        leg3 = t in kernels
    return leg1, leg2, leg3


def check_commutative_equivalence(t: Subset, max_order: int = 8) -> bool:
    legs = [v for v in commutative_legs(t, max_order) if v is not None]
    return len(set(legs)) == 1


def genhs_commutative(a: Subset) -> Subset:
    """``(<A | H_S> omega & S^2) | ((A | A*) - S^2)`` for commutative parents."""
    s = a.parent
    _require_commutative(s)
    s2 = square_set(s)
    return (omega(gen_inv_subsemigroup(a | hermitian_squares(s))) & s2) | ((a | star_set(a)) - s2)


# semilattices

@dataclass
class SemilatticeCriterion:
    equal: bool  # <A_1 | ... | A_n> == <A_1 ... A_n>
    dominated: bool  # every alpha in A_i lies below some beta in A_j, all i, j
    witness: tuple[int, int, int] | None = None  # (i, alpha, j), positions 1-based

    @property
    def agree(self) -> bool:
        return self.equal == self.dominated


def semilattice_product_criterion(y: InvolutionSemigroup, sets: Sequence[Subset]) -> SemilatticeCriterion:
    """Compare the subsemilattices generated by the union and by the product.

    Both sides are computed independently: the generated subsemilattices,
    and the domination condition with order ``a <= b`` iff ``ab = a``.  On
    failure of domination the first ``(i, alpha, j)`` (positions counted
    from 1) with no ``beta`` in ``A_j`` above ``alpha`` is returned.
    """
    if not is_semilattice(y):
        raise NotSemilattice(f"{y!r} is not a semilattice")
    if not sets or any(not a for a in sets):
        raise EmptyInput("sets must be a nonempty list of nonempty subsets")
    if any(a.parent is not y for a in sets):
        raise MixedParents("sets must be subsets of the given semilattice")
    union = sets[0]
    for a in sets[1:]:
        union = union | a
    equal = gen_subsemigroup(union) == gen_subsemigroup(complex_product(list(sets)))
    witness = _domination_witness(y, sets)
    return SemilatticeCriterion(equal, witness is None, witness)


def _domination_witness(y: InvolutionSemigroup, sets: Sequence[Subset]):
    for i, ai in enumerate(sets, 1):
        for alpha in ai:
            for j, aj in enumerate(sets, 1):
                if not any(y.mult(alpha, beta) == alpha for beta in aj):
                    return (i, alpha, j)
    return None


def regular_star_invariants(s: InvolutionSemigroup) -> dict[str, bool]:
    """``F_S`` equals the union of ``x H^2 x*`` and ``S = S^2``."""
    _require_regular_star(s)
    return {
        "F=xH2x*": f_set(s) == conjugated_squares(s),
        "S=S^2": square_set(s) == s.full(),
    }


def orthodox_simplicity_agrees(s: InvolutionSemigroup, max_order: int = 10) -> bool:
    """HS-simple iff every group (o)-morphic image is trivial (orthodox *-semigroups)."""
    if not _require_regular_star(s).orthodox_star:
        raise NotRegularStar(f"{s!r} is not orthodox")
    if s.order > max_order:
        raise TooLarge(s.order, max_order, "congruence enumeration")
    trivial_only = all(q.order == 1 for q in enumerate_group_quotients(s, False, max_order))
    return is_hs_simple(s) == trivial_only
