# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled dense series kernels.

Same contracts as kernels._pure: dense coefficient lists of exact Python
ints.  Arithmetic stays on Python objects so arbitrary precision is
preserved; the speedup comes from compiled loop and list handling.
"""

BACKEND = "cython"


def mul_trunc(list a, list b, Py_ssize_t n):
    """Truncated Cauchy product of two coefficient lists, up to degree n."""
    cdef Py_ssize_t i, j, la, lb
    cdef list out = [0] * (n + 1)
    cdef object ai, bj
    la = len(a)
    if la > n + 1:
        la = n + 1
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        lb = len(b)
        if lb > n + 1 - i:
            lb = n + 1 - i
        if ai == 1:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + bj
        else:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def inv_trunc(list a, Py_ssize_t n):
    """Multiplicative inverse of a up to degree n; a[0] must be +1 or -1."""
    cdef Py_ssize_t k, j, top, la
    cdef object c0, acc, aj
    c0 = a[0]
    if c0 != 1 and c0 != -1:
        raise ValueError("constant term must be a unit (+1 or -1)")
    cdef list out = [0] * (n + 1)
    out[0] = c0
    la = len(a)
    for k in range(1, n + 1):
        acc = 0
        top = k if k < la - 1 else la - 1
        for j in range(1, top + 1):
            aj = a[j]
            if aj:
                acc = acc + aj * out[k - j]
        out[k] = -acc * c0
    return out


def addmul_shifted(list dst, list src, Py_ssize_t shift, object coef, Py_ssize_t n):
    """dst[shift + i] += coef * src[i] for every index kept by truncation n."""
    cdef Py_ssize_t i, top
    cdef object si
    if not coef or shift > n:
        return
    top = len(src)
    if top > n + 1 - shift:
        top = n + 1 - shift
    if coef == 1:
        for i in range(top):
            si = src[i]
            if si:
                dst[shift + i] = dst[shift + i] + si
    elif coef == -1:
        for i in range(top):
            si = src[i]
            if si:
                dst[shift + i] = dst[shift + i] - si
    else:
        for i in range(top):
            si = src[i]
            if si:
                dst[shift + i] = dst[shift + i] + coef * si
