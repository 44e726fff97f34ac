"""Numpy implementations of the subset kernels.

Every kernel takes a Cayley table as a C-contiguous ``int32`` array of shape
``(n, n)``, the involution as an ``int32`` array of length ``n`` and subsets
as ``uint8`` membership vectors.  Subset-valued kernels return fresh ``uint8``
vectors.  ``_ckernels.pyx`` mirrors this module function for function.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def find_nonassociative(table):
    """Return the lexicographically first ``(a, b, c)`` with ``(ab)c != a(bc)``."""
    n = table.shape[0]
    # chunk over a so that n = 200 stays within a few MB
    step = max(1, 2_000_000 // max(1, n * n))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        left = table[table[lo:hi]]  # left[a, b, c] = (ab)c
        right = table[lo:hi][:, table]  # right[a, b, c] = a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = bad[0]
            return (int(a) + lo, int(b), int(c))
    return None


def set_product(table, a, b):
    out = np.zeros(table.shape[0], dtype=np.uint8)
    ai = np.flatnonzero(a)
    bi = np.flatnonzero(b)
    if len(ai) and len(bi):
        out[table[np.ix_(ai, bi)].ravel()] = 1
    return out


def omega(table, t):
    tb = t.astype(bool)
    if not tb.any():
        return np.zeros(table.shape[0], dtype=np.uint8)
    hits = tb[table] & tb[None, :]
    return hits.any(axis=1).astype(np.uint8)


def closure(table, star, t, use_star):
    """Least superset of ``t`` closed under the product (and ``star`` if asked)."""
    out = t.astype(bool).copy()
    if use_star:
        out[star[out]] = True
    while True:
        idx = np.flatnonzero(out)
        grown = out.copy()
        grown[table[np.ix_(idx, idx)].ravel()] = True
        if use_star:
            grown[star[grown]] = True
        if (grown == out).all():
            return out.astype(np.uint8)
        out = grown


def _sandwich_tables(table, hs):
    # for each hermitian square h: m[x, y] = (x h) y
    return [table[table[:, h]] for h in hs]


def hs_saturate(table, star, hs, t):
    """Least fixpoint of product closure, star closure and the HS2 forward rule."""
    out = closure(table, star, t, True).astype(bool)
    if len(hs):
        out[hs] = True
    sandwiches = _sandwich_tables(table, hs)
    while True:
        out = closure(table, star, out.astype(np.uint8), True).astype(bool)
        grown = out.copy()
        for m in sandwiches:
            grown[table[out[m]]] = True
        if (grown == out).all():
            return out.astype(np.uint8)
        out = grown


def hs2_violation(table, hs, t):
    """First ``(h, x, y)`` with ``xhy`` in ``t`` but ``xy`` not in ``t``."""
    tb = t.astype(bool)
    missing = ~tb[table]
    for h in hs:
        bad = np.argwhere(tb[table[table[:, h]]] & missing)
        if len(bad):
            x, y = bad[0]
            return (int(h), int(x), int(y))
    return None


def product_escape(table, t):
    """First ``(a, b)`` in ``t`` x ``t`` whose product leaves ``t``."""
    tb = t.astype(bool)
    bad = np.argwhere(tb[:, None] & tb[None, :] & ~tb[table])
    if len(bad):
        a, b = bad[0]
        return (int(a), int(b))
    return None


def conjugated_squares(table, star, hs):
    """The union over all x of ``x H^2 x*`` for the element list ``hs``."""
    n = table.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    if not len(hs):
        return out
    h2 = np.unique(table[np.ix_(hs, hs)])
    # rows: x, cols: element of H^2 ; value x h
    xh = table[:, h2]
    out[table[xh, star[:, None]].ravel()] = 1
    return out
