# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset kernels; same contract as ``hsstab._pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


def find_nonassociative(const int[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return (a, b, c)
    return None


def set_product(const int[:, ::1] table, const unsigned char[::1] a, const unsigned char[::1] b):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t x, y
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    for x in range(n):
        if a[x]:
            for y in range(n):
                if b[y]:
                    out[table[x, y]] = 1
    return out_arr


def omega(const int[:, ::1] table, const unsigned char[::1] t):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t s, u
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    for s in range(n):
        for u in range(n):
            if t[u] and t[table[s, u]]:
                out[s] = 1
                break
    return out_arr


cdef void _close(const int[:, ::1] table, const int[::1] star, unsigned char[::1] out,
                 int use_star, int[::1] members, int count) noexcept:
    # worklist closure; members[:count] lists the current elements of out
    cdef Py_ssize_t n = table.shape[0]
    cdef int head = 0
    cdef int x, y, z, i
    while head < count:
        x = members[head]
        head += 1
        if use_star:
            z = star[x]
            if not out[z]:
                out[z] = 1
                members[count] = z
                count += 1
        i = 0
        while i < count:
            y = members[i]
            z = table[x, y]
            if not out[z]:
                out[z] = 1
                members[count] = z
                count += 1
            z = table[y, x]
            if not out[z]:
                out[z] = 1
                members[count] = z
                count += 1
            i += 1


def closure(const int[:, ::1] table, const int[::1] star, const unsigned char[::1] t, bint use_star):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t x
    cdef int count = 0
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    members_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] members = members_arr
    for x in range(n):
        if t[x]:
            out[x] = 1
            members[count] = <int>x
            count += 1
    _close(table, star, out, use_star, members, count)
    return out_arr


def hs_saturate(const int[:, ::1] table, const int[::1] star, const int[::1] hs,
                const unsigned char[::1] t):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t k = hs.shape[0]
    cdef Py_ssize_t i, x, y
    cdef int count, h, xh, xy
    cdef bint changed = True
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    members_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] members = members_arr
    for x in range(n):
        if t[x]:
            out[x] = 1
    for i in range(k):
        out[hs[i]] = 1
    while changed:
        changed = False
        count = 0
        for x in range(n):
            if out[x]:
                members[count] = <int>x
                count += 1
        _close(table, star, out, 1, members, count)
        for i in range(k):
            h = hs[i]
            for x in range(n):
                xh = table[x, h]
                for y in range(n):
                    xy = table[x, y]
                    if not out[xy] and out[table[xh, y]]:
                        out[xy] = 1
                        changed = True
    return out_arr


def hs2_violation(const int[:, ::1] table, const int[::1] hs, const unsigned char[::1] t):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t i, x, y
    cdef int h, xh
    for i in range(hs.shape[0]):
        h = hs[i]
        for x in range(n):
            xh = table[x, h]
            for y in range(n):
                if t[table[xh, y]] and not t[table[x, y]]:
                    return (h, x, y)
    return None


def product_escape(const int[:, ::1] table, const unsigned char[::1] t):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t a, b
    for a in range(n):
        if t[a]:
            for b in range(n):
                if t[b] and not t[table[a, b]]:
                    return (a, b)
    return None


def conjugated_squares(const int[:, ::1] table, const int[::1] star, const int[::1] hs):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t k = hs.shape[0]
    cdef Py_ssize_t i, j, x
    cdef int xs
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    sq_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] sq = sq_arr
    for i in range(k):
        for j in range(k):
            sq[table[hs[i], hs[j]]] = 1
    for x in range(n):
        xs = star[x]
        for i in range(n):
            if sq[i]:
                out[table[table[x, i], xs]] = 1
    return out_arr
