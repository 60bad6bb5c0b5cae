# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops; same contracts as ``fubini._pykernels``.

The exact kernels keep Python integers (coefficients are unbounded); the
modular kernels run in 64-bit arithmetic, valid for moduli below 2**31.
"""

from libc.stdint cimport int64_t


def convolve(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def convolve_mod(list a, list b, int64_t p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef int64_t[::1] av = _as_residues(a, p)
    cdef int64_t[::1] bv = _as_residues(b, p)
    cdef int64_t[::1] acc = _zeros(na + nb - 1)
    cdef int64_t x
    for i in range(na):
        x = av[i]
        if x == 0:
            continue
        for j in range(nb):
            acc[i + j] = (acc[i + j] + x * bv[j]) % p
    return [acc[i] for i in range(na + nb - 1)]


def axpy(list acc, object c, list b):
    cdef Py_ssize_t i, nb = len(b)
    if c == 0:
        return
    for i in range(nb):
        acc[i] = acc[i] + c * b[i]


def horner_mod(list coeffs, object x, int64_t p):
    cdef int64_t r = 0, xv = x % p
    cdef int64_t[::1] cv = _as_residues(coeffs, p)
    cdef Py_ssize_t i
    for i in range(cv.shape[0] - 1, -1, -1):
        r = (r * xv + cv[i]) % p
    return r


cdef int64_t[::1] _zeros(Py_ssize_t n):
    import array
    return array.array("q", bytes(8 * n))


cdef int64_t[::1] _as_residues(list a, int64_t p):
    import array
    return array.array("q", [v % p for v in a])
