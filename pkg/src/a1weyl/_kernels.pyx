# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_pykernels`` exactly, including output order."""

from libc.stdint cimport int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

# keeps sums of |coordinates| and 2*m_plus well inside int64
cdef int64_t COORD_LIMIT = (<int64_t>1) << 56


def bfs_ball(gen_parity, gen_t, int nu, int depth):
    cdef Py_ssize_t G = len(gen_parity)
    cdef Py_ssize_t i, g, idx, lo, hi
    cdef int d
    cdef int64_t key, a, off, base

    max_step = max([abs(int(x)) for x in gen_t], default=0)
    off_py = depth * max(max_step, 1)
    base_py = 2 * off_py + 1
    # packed key: parity bit plus nu base-`base` digits
    if nu > 62 or 2 * base_py ** nu >= (1 << 62):
        raise OverflowError("ball too large for packed int64 keys")
    off = off_py
    base = base_py

    cdef vector[int] gp
    cdef vector[int64_t] gt
    for g in range(G):
        gp.push_back(gen_parity[g])
    for x in gen_t:
        gt.push_back(x)

    cdef vector[int] parity
    cdef vector[int64_t] tt
    cdef vector[int] dist, parent, via
    cdef vector[int64_t] buf
    buf.resize(nu)
    cdef unordered_map[int64_t, int] seen

    parity.push_back(1)
    for i in range(nu):
        tt.push_back(0)
    dist.push_back(0)
    parent.push_back(-1)
    via.push_back(-1)
    key = 0
    for i in range(nu - 1, -1, -1):
        key = key * base + off
    seen[key << 1] = 0

    cdef int p, q, np_
    lo = 0
    hi = 1
    for d in range(1, depth + 1):
        for idx in range(lo, hi):
            p = parity[idx]
            for g in range(G):
                q = gp[g]
                np_ = p * q
                key = 0
                for i in range(nu - 1, -1, -1):
                    a = q * tt[idx * nu + i] + gt[g * nu + i]
                    buf[i] = a
                    key = key * base + (a + off)
                key = (key << 1) | (np_ == -1)
                if seen.count(key):
                    continue
                seen[key] = <int>parity.size()
                parity.push_back(np_)
                for i in range(nu):
                    tt.push_back(buf[i])
                dist.push_back(d)
                parent.push_back(<int>idx)
                via.push_back(<int>g)
        lo = hi
        hi = <Py_ssize_t>parity.size()
        if lo == hi:
            break
    return parity, tt, dist, parent, via


def pi0_lengths(parity_in, t_in, int nu):
    cdef Py_ssize_t n = len(parity_in)
    cdef Py_ssize_t i, j
    cdef int64_t a, plus, minus, h
    cdef vector[int64_t] t
    cdef vector[int64_t] out
    for x in t_in:
        if x >= COORD_LIMIT or x <= -COORD_LIMIT:
            raise OverflowError(f"coordinate {x} exceeds the compiled range")
        t.push_back(x)
    if nu > 64:
        raise OverflowError("nullity exceeds the compiled range")
    out.resize(n)
    for i in range(n):
        plus = 0
        minus = 0
        for j in range(nu):
            a = t[i * nu + j]
            if a > 0:
                plus += a
            else:
                minus += a
        if plus >= -minus:
            h = 1 + 2 * plus
        else:
            h = 1 + 2 * minus
        if parity_in[i] == 1:
            out[i] = (h - 1) if h > 0 else (-h + 1)
        else:
            out[i] = h if h > 0 else -h
    return out
