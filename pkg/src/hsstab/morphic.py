"""Congruences, group quotients and their kernels."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .closure import is_inv_subsemigroup, predicates
from .core import InvolutionSemigroup, Subset, hermitian_squares
from .errors import NotInvSubsemigroup, TooLarge


def _canonical_labels(labels) -> tuple[int, ...]:
    """Relabel blocks in order of first appearance."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(int(b), len(seen)) for b in labels)


@dataclass(frozen=True)
class Congruence:
    parent: InvolutionSemigroup = field(compare=False, repr=False)
    labels: tuple[int, ...]  # element -> block id, blocks numbered by first element

    def __post_init__(self):
        object.__setattr__(self, "labels", _canonical_labels(self.labels))

    @property
    def nblocks(self) -> int:
        return max(self.labels) + 1

    @property
    def star_compatible(self) -> bool:
        lab = np.asarray(self.labels)
        st = self.parent.star
        return all(len(set(lab[st[lab == b]])) == 1 for b in range(self.nblocks))

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.nblocks)]
        for a, b in enumerate(self.labels):
            out[b].append(a)
        return [tuple(b) for b in out]

    def quotient_table(self) -> np.ndarray:
        lab = np.asarray(self.labels)
        reps = np.array([blk[0] for blk in self.blocks()])
        return lab[self.parent.table[np.ix_(reps, reps)]]


def is_congruence(s: InvolutionSemigroup, labels, *, star: bool = False) -> bool:
    lab = np.asarray(labels)
    same = lab[:, None] == lab[None, :]
    prod = lab[s.table]  # prod[a, c] = block of ac
    # a ~ b  =>  ac ~ bc and ca ~ cb for every c
    right = (prod[:, None, :] == prod[None, :, :]).all(axis=2)
    left = (prod.T[:, None, :] == prod.T[None, :, :]).all(axis=2)
    ok = (~same | (right & left)).all()
    if star:
        ok &= (~same | (lab[s.star][:, None] == lab[s.star][None, :])).all()
    return bool(ok)


def _join_closure(s: InvolutionSemigroup, labels, a: int, b: int, star: bool) -> tuple[int, ...]:
    """Least congruence containing the partition ``labels`` and the pair ``(a, b)``."""
    n = s.order
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    first: dict[int, int] = {}
    for x, blk in enumerate(labels):
        union(x, first.setdefault(blk, x))
    union(a, b)
    table = s.table
    changed = True
    while changed:
        changed = False
        for x in range(n):
            r = find(x)
            if r == x:
                continue
            for c in range(n):
                changed |= union(int(table[x, c]), int(table[r, c]))
                changed |= union(int(table[c, x]), int(table[c, r]))
            if star:
                changed |= union(int(s.star[x]), int(s.star[r]))
    return _canonical_labels(find(x) for x in range(n))


def enumerate_congruences(s: InvolutionSemigroup, *, star: bool = False, method: str = "closure",
                          max_order: int = 10) -> list[Congruence]:
    """All congruences of ``s`` (star-compatible ones only if ``star``).

    ``method="closure"`` grows the lattice from the identity relation by
    joining principal congruences; ``method="partitions"`` runs through all
    set partitions with pruning on partially assigned elements.  Output is
    sorted by number of blocks, then labels.
    """
    n = s.order
    if n > max_order:
        raise TooLarge(n, max_order, "congruence enumeration")
    if method == "closure":
        start = tuple(range(n))
        found = {start}
        stack = [start]
        while stack:
            lab = stack.pop()
            for a in range(n):
                for b in range(a + 1, n):
                    if lab[a] != lab[b]:
                        new = _join_closure(s, lab, a, b, star)
                        if new not in found:
                            found.add(new)
                            stack.append(new)
    elif method == "partitions":
        found = set(_partition_congruences(s, star))
    else:
        raise ValueError(f"unknown method {method!r}")
    return [Congruence(s, lab) for lab in sorted(found, key=lambda lab: (-max(lab), lab))]


def _partition_congruences(s: InvolutionSemigroup, star: bool):
    n = s.order
    table = s.table
    labels = [-1] * n

    def consistent(k: int) -> bool:
        # compatibility restricted to products that stay inside 0..k
        lab = np.asarray(labels)
        blk = lab[table[: k + 1, : k + 1]]  # -1 where the product is unassigned
        head = lab[: k + 1]
        same = np.triu(head[:, None] == head[None, :], 1)
        for a, b in zip(*np.nonzero(same)):
            for ra, rb in ((blk[a], blk[b]), (blk[:, a], blk[:, b])):
                both = (ra >= 0) & (rb >= 0)
                if (ra[both] != rb[both]).any():
                    return False
        return True

    def rec(k: int, nblocks: int):
        if k == n:
            if is_congruence(s, labels, star=star):
                yield tuple(labels)
            return
        for b in range(nblocks + 1):
            labels[k] = b
            if consistent(k):
                yield from rec(k + 1, max(nblocks, b + 1))
        labels[k] = -1

    yield from rec(0, 0)


@dataclass
class GroupQuotient:
    congruence: Congruence
    table: np.ndarray  # quotient Cayley table on block ids
    identity: int
    inverse: tuple[int, ...]
    kernel: Subset  # preimage of the identity block

    def phi(self, a: int) -> int:
        return self.congruence.labels[a]

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def preserves_involution_direct(self) -> bool:
        """``phi(a*) == phi(a)^-1`` for every ``a``."""
        s = self.congruence.parent
        return all(self.phi(int(s.star[a])) == self.inverse[self.phi(a)] for a in range(s.order))


def as_group_quotient(c: Congruence) -> GroupQuotient | None:
    """Package ``c`` as a group quotient, or ``None`` if ``S/c`` is not a group."""
    q = c.quotient_table()
    k = q.shape[0]
    ar = np.arange(k)
    ids = [u for u in range(k) if (q[u] == ar).all() and (q[:, u] == ar).all()]
    if not ids:
        return None
    e = ids[0]
    inverse = []
    for u in range(k):
        cand = np.flatnonzero((q[u] == e) & (q[:, u] == e))
        if not len(cand):
            return None
        inverse.append(int(cand[0]))
    kernel = Subset(c.parent, (a for a, b in enumerate(c.labels) if b == e))
    return GroupQuotient(c, q, e, tuple(inverse), kernel)


def enumerate_group_quotients(s: InvolutionSemigroup, star_compatible: bool = False, max_order: int = 10,
                              *, method: str = "closure") -> list[GroupQuotient]:
    """All quotients of ``s`` that are groups.

    With ``star_compatible`` only those whose quotient map sends ``a*`` to
    the group inverse of the image of ``a`` are kept, i.e. the group
    (o,*)-morphic images.  Otherwise all group (o)-morphic images.
    """
    out = []
    for c in enumerate_congruences(s, star=star_compatible, method=method, max_order=max_order):
        q = as_group_quotient(c)
        if q is None:
            continue
        if star_compatible and not q.preserves_involution_direct():
            continue
        out.append(q)
    return out


def greatest_group_quotient(s: InvolutionSemigroup, star_compatible: bool = False,
                            max_order: int = 10) -> GroupQuotient:
    """A group quotient of maximal order (no universality claim)."""
    return max(enumerate_group_quotients(s, star_compatible, max_order), key=lambda q: q.order)


def check_kernel_characterization(t: Subset) -> bool:
    """Closed, reflexive and containing every hermitian square."""
    if not is_inv_subsemigroup(t):
        raise NotInvSubsemigroup(f"{t!r} is not an involution subsemigroup")
    rep = predicates(t)
    return rep.closed and rep.reflexive and hermitian_squares(t.parent) <= t


def check_involution_preservation(q: GroupQuotient) -> bool:
    """Whether the quotient map preserves the involution, via ``H_S <= kernel``."""
    return hermitian_squares(q.congruence.parent) <= q.kernel
