"""The closure operator omega, generated subsemigroups and subset predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import ElementTerm, Subset, idempotents


def omega(t: Subset) -> Subset:
    """``{s : st in T for some t in T}``, applied exactly once."""
    s = t.parent
    return Subset.from_array(s, kernels.omega(s.table, t.array))


def gen_subsemigroup(a: Subset) -> Subset:
    s = a.parent
    return Subset.from_array(s, kernels.closure(s.table, s.star, a.array, False))


def gen_inv_subsemigroup(a: Subset) -> Subset:
    s = a.parent
    return Subset.from_array(s, kernels.closure(s.table, s.star, a.array, True))


def is_subsemigroup(t: Subset) -> bool:
    return kernels.product_escape(t.parent.table, t.array) is None


def is_inv_subsemigroup(t: Subset) -> bool:
    s = t.parent
    arr = t.array.astype(bool)
    return bool(arr[s.star[arr]].all()) and is_subsemigroup(t)


def generation_terms(a: Subset, *, use_star: bool = True) -> dict[int, ElementTerm]:
    """A word over the generators ``a`` for every element of ``<a>``.

    Breadth-first, so every returned word has minimal length among the words
    the search met first; ``gen_inv_subsemigroup(a)`` equals the key set.
    """
    s = a.parent
    terms: dict[int, ElementTerm] = {}
    queue: deque[int] = deque()
    for g in a:
        terms[g] = ElementTerm(((g, False),), g)
        queue.append(g)
    while queue:
        x = queue.popleft()
        tx = terms[x]
        found = []
        if use_star:
            found.append(tx.starred(s))
        for y in list(terms):
            found.append(tx.times(terms[y], s))
            found.append(terms[y].times(tx, s))
        for term in found:
            if term.value not in terms:
                terms[term.value] = term
                queue.append(term.value)
    return terms


@dataclass
class SubsetPredicateReport:
    closed: bool
    full: bool
    reflexive: bool
    dense: bool
    # predicate name -> offending element (closed, full, dense) or pair (reflexive)
    counterexample: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def recheck(self, t: Subset) -> bool:
        """Whether every stored counterexample really violates its predicate."""
        s = t.parent
        ok = True
        for name, cex in self.counterexample.items():
            if name == "closed":
                ok &= (cex[0] in t) != (cex[0] in omega(t))
            elif name == "full":
                ok &= cex[0] in idempotents(s) and cex[0] not in t
            elif name == "reflexive":
                a, b = cex
                ok &= s.mult(a, b) in t and s.mult(b, a) not in t
            elif name == "dense":
                x = cex[0]
                arr = t.array.astype(bool)
                ok &= not (arr[s.table[x, :]].any() and arr[s.table[:, x]].any())
        return bool(ok)


def predicates(t: Subset) -> SubsetPredicateReport:
    """Evaluate full / closed / reflexive / dense on ``t``.

    Counterexamples are the first offenders in index order: an element for
    closed (in exactly one of ``T``, ``T omega``), full and dense, and a pair
    ``(a, b)`` with ``ab`` in ``T`` but ``ba`` not for reflexive.
    """
    s = t.parent
    arr = t.array.astype(bool)
    cex: dict[str, tuple[int, ...]] = {}

    diff = np.flatnonzero(arr != omega(t).array.astype(bool))
    if len(diff):
        cex["closed"] = (int(diff[0]),)

    missing = np.flatnonzero(idempotents(s).array.astype(bool) & ~arr)
    if len(missing):
        cex["full"] = (int(missing[0]),)

    in_t = arr[s.table]
    bad = np.argwhere(in_t & ~in_t.T)
    if len(bad):
        cex["reflexive"] = (int(bad[0][0]), int(bad[0][1]))

    # s is dense-ok iff some s x and some y s land in T
    right_ok = in_t.any(axis=1)
    left_ok = in_t.any(axis=0)
    undense = np.flatnonzero(~(right_ok & left_ok))
    if len(undense):
        cex["dense"] = (int(undense[0]),)

    return SubsetPredicateReport(
        closed="closed" not in cex,
        full="full" not in cex,
        reflexive="reflexive" not in cex,
        dense="dense" not in cex,
        counterexample=cex,
    )
