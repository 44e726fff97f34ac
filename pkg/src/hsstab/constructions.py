"""Builders for the involution semigroups used as examples and test corpus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import InvolutionSemigroup
from .errors import InvalidReesSpec, TooLarge
from .hs import group_identity


def _cycle_name(perm: Sequence[int]) -> str:
    """Cycle notation on points 1..n, e.g. ``(132)``; identity is ``e``."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = perm[j]
        cycles.append(cyc)
    if not cycles:
        return "e"
    sep = "" if n < 10 else " "
    return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)


def symmetric_group(n: int) -> InvolutionSemigroup:
    """``S_n`` with inversion; ``(st)(i) = s(t(i))``, identity at index 0."""
    if n < 1:
        raise ValueError("degree must be positive")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    m = len(perms)
    table = np.empty((m, m), dtype=np.int64)
    star = np.empty(m, dtype=np.int64)
    for a, p in enumerate(perms):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        star[a] = index[tuple(inv)]
        for b, q in enumerate(perms):
            table[a, b] = index[tuple(p[q[i]] for i in range(n))]
    return InvolutionSemigroup(table, star, [_cycle_name(p) for p in perms], name=f"S{n}")


def cyclic_group(n: int, *, trivial_star: bool = False) -> InvolutionSemigroup:
    """``(Z_n, +)`` with inversion, or with the identity map as involution."""
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    star = idx if trivial_star else (-idx) % n
    suffix = "-trivial" if trivial_star else ""
    return InvolutionSemigroup(table, star, [str(i) for i in idx], name=f"Z{n}{suffix}")


def rectangular_band(m: int) -> InvolutionSemigroup:
    """``I x I`` with ``(i, j)(k, l) = (i, l)`` and ``(i, j)* = (j, i)``."""
    pairs = [(i, j) for i in range(m) for j in range(m)]
    table = np.array([[p[0] * m + q[1] for q in pairs] for p in pairs])
    star = np.array([j * m + i for i, j in pairs])
    names = [f"({i + 1},{j + 1})" for i, j in pairs]
    return InvolutionSemigroup(table, star, names, name=f"rect{m}")


@dataclass
class ReesMatrixSpec:
    """Group (with inversion), index-set size and sandwich matrix.

    ``P[i][j]`` holds group element indices, 0-based in both ``i`` and ``j``.
    Required: ``P[i][j] = P[j][i]^-1`` and ``P[i][0] = P[0][i] = P[i][i] = e``.
    """

    group: InvolutionSemigroup
    index_size: int
    P: Sequence[Sequence[int]]

    def check(self) -> None:
        e = group_identity(self.group)
        m = self.index_size
        p = np.asarray(self.P)
        if m < 1 or p.shape != (m, m):
            raise InvalidReesSpec(f"P must be {m} x {m}")
        if p.min() < 0 or p.max() >= self.group.order:
            raise InvalidReesSpec("P entries must be group elements")
        for i in range(m):
            if p[i, 0] != e or p[0, i] != e or p[i, i] != e:
                raise InvalidReesSpec(f"P must be e in row/column 1 and on the diagonal (index {i + 1})")
            for j in range(m):
                if p[i, j] != self.group.star[p[j, i]]:
                    raise InvalidReesSpec(f"p[{i + 1},{j + 1}] is not the inverse of p[{j + 1},{i + 1}]")


def rees_matrix(spec: ReesMatrixSpec, name: str | None = None) -> InvolutionSemigroup:
    """``I x G x I`` with ``(i,g,j)(k,h,l) = (i, g p[j][k] h, l)`` and ``(i,g,j)* = (j,g^-1,i)``.

    Element ``(i, g, j)`` has index ``(i * |G| + g) * m + j``.
    """
    spec.check()
    g = spec.group
    m, k = spec.index_size, g.order
    gt = g.table.astype(np.int64)
    p = np.asarray(spec.P)
    trip = [(i, a, j) for i in range(m) for a in range(k) for j in range(m)]

    def idx(i, a, j):
        return (i * k + a) * m + j

    n = len(trip)
    table = np.empty((n, n), dtype=np.int64)
    for x, (i, a, j) in enumerate(trip):
        for y, (kk, b, l) in enumerate(trip):
            table[x, y] = idx(i, gt[gt[a, p[j, kk]], b], l)
    star = np.array([idx(j, g.star[a], i) for i, a, j in trip])
    names = [f"({i + 1},{g.label(a)},{j + 1})" for i, a, j in trip]
    return InvolutionSemigroup(table, star, names, name=name or f"rees-{g.name}-{m}")


def nonnormal_rees_spec() -> tuple[ReesMatrixSpec, dict]:
    """Rees matrix spec over ``S_3`` with ``m = 3`` and ``p[2,3] = (12)``.

    ``K = {e, (12)}`` is non-normal; ``x = (13)`` conjugates ``a = (12)`` to
    ``(23)`` outside ``K``.  Unconstrained entries are ``e``.  The dict
    carries the named group elements.
    """
    g = symmetric_group(3)
    e, a, x = g.index("e"), g.index("(12)"), g.index("(13)")
    p = [[e] * 3 for _ in range(3)]
    p[1][2] = a
    p[2][1] = int(g.star[a])
    named = {"e": e, "a": a, "x": x, "K": (e, a), "xax^-1": g.product(x, a, int(g.star[x]))}
    return ReesMatrixSpec(g, 3, p), named


def nonnormal_rees_instance() -> InvolutionSemigroup:
    spec, _ = nonnormal_rees_spec()
    return rees_matrix(spec, name="rees-S3")


def chain_semilattice(n: int) -> InvolutionSemigroup:
    """The chain ``0 < 1 < ... < n-1`` under min, trivial involution."""
    idx = np.arange(n)
    return InvolutionSemigroup(np.minimum(idx[:, None], idx[None, :]), idx,
                               [str(i) for i in idx], name=f"chain{n}")


def diamond_semilattice() -> InvolutionSemigroup:
    """``{bot, a, b, top}`` under meet, trivial involution."""
    bits = [0b00, 0b01, 0b10, 0b11]
    table = [[bits.index(p & q) for q in bits] for p in bits]
    return InvolutionSemigroup(table, range(4), ["bot", "a", "b", "top"], name="diamond")


def nonchain_y_with_swap() -> InvolutionSemigroup:
    """``Y = {0, x, y}``, ``xy = 0``, with ``x* = y``."""
    table = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
    return InvolutionSemigroup(table, [0, 2, 1], ["0", "x", "y"], name="Y-swap")


def free_semilattice(k: int) -> InvolutionSemigroup:
    """Nonempty subsets of a ``k``-set under union (order ``2^k - 1``)."""
    masks = list(range(1, 2 ** k))
    pos = {m: i for i, m in enumerate(masks)}
    table = [[pos[p | q] for q in masks] for p in masks]
    names = ["{" + ",".join(str(b + 1) for b in range(k) if m >> b & 1) + "}" for m in masks]
    return InvolutionSemigroup(table, range(len(masks)), names, name=f"freeSL{k}")


def zero_semigroup(n: int, star: Sequence[int] | None = None) -> InvolutionSemigroup:
    """All products equal ``0``; ``star`` defaults to the identity."""
    star = list(range(n)) if star is None else list(star)
    names = ["0"] + [f"z{i}" for i in range(1, n)]
    name = f"zero{n}" if star == list(range(n)) else f"zero{n}-" + "".join(map(str, star))
    return InvolutionSemigroup(np.zeros((n, n), dtype=np.int64), star, names, name=name)


def adjoin_zero(s: InvolutionSemigroup, label: str = "0") -> InvolutionSemigroup:
    n = s.order
    table = np.full((n + 1, n + 1), n, dtype=np.int64)
    table[:n, :n] = s.table
    star = np.append(s.star, n)
    names = [s.label(a) for a in range(n)] + [label]
    return InvolutionSemigroup(table, star, names, name=f"{s.name or 'S'}+0")


def adjoin_identity(s: InvolutionSemigroup, label: str = "1") -> InvolutionSemigroup:
    n = s.order
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = s.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    star = np.append(s.star, n)
    names = [s.label(a) for a in range(n)] + [label]
    return InvolutionSemigroup(table, star, names, name=f"{s.name or 'S'}+1")


def direct_product(s1: InvolutionSemigroup, s2: InvolutionSemigroup) -> InvolutionSemigroup:
    """Componentwise product; ``(a, b)`` has index ``a * |s2| + b``."""
    n1, n2 = s1.order, s2.order
    a = np.repeat(np.arange(n1), n2)
    b = np.tile(np.arange(n2), n1)
    table = s1.table[a[:, None], a[None, :]].astype(np.int64) * n2 + s2.table[b[:, None], b[None, :]]
    star = s1.star[a].astype(np.int64) * n2 + s2.star[b]
    names = [f"({s1.label(x)},{s2.label(y)})" for x, y in zip(a, b)]
    return InvolutionSemigroup(table, star, names, name=f"{s1.name or 'S'}x{s2.name or 'T'}")


def symmetric_inverse_monoid(n: int) -> InvolutionSemigroup:
    """Partial bijections of ``{1..n}`` composed as ``(st)(i) = s(t(i))``."""
    pts = range(n)
    maps = []
    for dom_size in range(n + 1):
        for dom in itertools.combinations(pts, dom_size):
            for img in itertools.permutations(pts, dom_size):
                maps.append(tuple(sorted(zip(dom, img))))
    index = {m: i for i, m in enumerate(maps)}

    def compose(f, g):
        fd = dict(f)
        return tuple(sorted((x, fd[y]) for x, y in g if y in fd))

    table = [[index[compose(f, g)] for g in maps] for f in maps]
    star = [index[tuple(sorted((y, x) for x, y in f))] for f in maps]

    def show(f):
        return "[" + ",".join(f"{x + 1}>{y + 1}" for x, y in f) + "]"

    return InvolutionSemigroup(table, star, [show(f) for f in maps], name=f"SIM{n}")


def brandt_semigroup(m: int) -> InvolutionSemigroup:
    """Combinatorial Brandt semigroup: ``(i, j)`` plus ``0``, ``(i,j)(k,l) = (i,l)`` iff ``j = k``."""
    pairs = [(i, j) for i in range(m) for j in range(m)]
    z = len(pairs)
    table = np.full((z + 1, z + 1), z, dtype=np.int64)
    for x, (i, j) in enumerate(pairs):
        for y, (k, l) in enumerate(pairs):
            if j == k:
                table[x, y] = i * m + l
    star = [j * m + i for i, j in pairs] + [z]
    names = [f"({i + 1},{j + 1})" for i, j in pairs] + ["0"]
    return InvolutionSemigroup(table, star, names, name=f"B{m}")


# exhaustive enumeration of small structures

def _involutions(n: int):
    for perm in itertools.permutations(range(n)):
        if all(perm[perm[i]] == i for i in range(n)):
            yield perm


def _canonical(table: np.ndarray, star: np.ndarray) -> tuple:
    n = len(star)
    best = None
    for perm in itertools.permutations(range(n)):
        p = np.array(perm)
        inv = np.argsort(p)
        # relabel element a as p[a]
        t2 = p[table[inv[:, None], inv[None, :]]]
        s2 = p[star[inv]]
        key = tuple(t2.ravel()) + tuple(s2)
        if best is None or key < best:
            best = key
    return best


def enumerate_all(order: int) -> list[InvolutionSemigroup]:
    """Every involution semigroup of the given order up to isomorphism.

    Brute force over all tables and involutive star maps, keeping the
    structures whose relabelled (table, star) is lexicographically least.
    """
    if order > 3:
        raise TooLarge(order, 3, "exhaustive enumeration")
    if order < 1:
        raise ValueError("order must be positive")
    n = order
    seen: dict[tuple, InvolutionSemigroup] = {}
    for flat in itertools.product(range(n), repeat=n * n):
        table = np.array(flat).reshape(n, n)
        if not (table[table] == table[:, table]).all():
            continue
        for star in _involutions(n):
            st = np.array(star)
            if not (st[table] == table[st[None, :], st[:, None]]).all():
                continue
            key = _canonical(table, st)
            if key not in seen:
                ct = np.array(key[: n * n]).reshape(n, n)
                cs = np.array(key[n * n:])
                seen[key] = InvolutionSemigroup(ct, cs, name=f"inv{n}-{len(seen)}")
    return [seen[k] for k in sorted(seen)]


def corpus() -> dict[str, InvolutionSemigroup]:
    """The curated test corpus, keyed by name."""
    items = [
        symmetric_group(2),
        symmetric_group(3),
        symmetric_group(4),
        cyclic_group(4),
        cyclic_group(4, trivial_star=True),
        cyclic_group(3, trivial_star=True),
        cyclic_group(6),
        rectangular_band(1),
        rectangular_band(2),
        rectangular_band(3),
        nonnormal_rees_instance(),
        chain_semilattice(1),
        chain_semilattice(2),
        chain_semilattice(3),
        chain_semilattice(5),
        chain_semilattice(8),
        diamond_semilattice(),
        nonchain_y_with_swap(),
        free_semilattice(3),
        zero_semigroup(2),
        zero_semigroup(3),
        zero_semigroup(3, [0, 2, 1]),
        zero_semigroup(5),
        zero_semigroup(5, [0, 2, 1, 4, 3]),
        adjoin_identity(zero_semigroup(2)),
        adjoin_identity(zero_semigroup(3, [0, 2, 1])),
        adjoin_zero(symmetric_group(3)),
        adjoin_zero(cyclic_group(3)),
        symmetric_inverse_monoid(2),
        brandt_semigroup(2),
        direct_product(symmetric_group(3), cyclic_group(2)),
        direct_product(rectangular_band(2), nonchain_y_with_swap()),
        direct_product(chain_semilattice(2), cyclic_group(3)),
        direct_product(zero_semigroup(2), cyclic_group(2)),
        direct_product(cyclic_group(2, trivial_star=True), zero_semigroup(3)),
    ]
    return {s.name: s for s in items}
