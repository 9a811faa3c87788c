# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_pykernels`` exactly.

Residues are held in C ``long long``; the modulus must stay below 2**31 so
that every product fits.  Callers fall back to the Python kernels otherwise.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef long long i64
ctypedef unsigned long long u64

cdef i64 MAX_MOD = 2147483648


cdef inline void _step(i64* state, const i64* rev, int d, i64 m) nogil:
    cdef i64 acc = 0
    cdef int j
    for j in range(d):
        acc = (acc + rev[j] * state[j]) % m
    for j in range(d - 1):
        state[j] = state[j + 1]
    state[d - 1] = acc


cdef inline bint _same(const i64* a, const i64* b, int d) nogil:
    cdef int j
    for j in range(d):
        if a[j] != b[j]:
            return False
    return True


cdef i64* _load(object values, i64 m, bint reverse) except NULL:
    cdef int d = len(values)
    cdef i64* out = <i64*> malloc(d * sizeof(i64))
    if out == NULL:
        raise MemoryError()
    cdef int j
    for j in range(d):
        out[j] = (values[d - 1 - j] if reverse else values[j]) % m
    return out


def _check_mod(m):
    if m >= MAX_MOD:
        raise OverflowError("modulus too large for the compiled kernel")


def residues(coeffs, init, i64 m, Py_ssize_t count):
    _check_mod(m)
    cdef int d = len(coeffs)
    cdef i64* rev = _load(coeffs, m, True)
    cdef i64* state = _load(init, m, False)
    cdef list out = []
    cdef Py_ssize_t n
    try:
        for n in range(min(count, d)):
            out.append(state[n])
        for n in range(d, count):
            _step(state, rev, d, m)
            out.append(state[d - 1])
    finally:
        free(rev)
        free(state)
    return out


def state_cycle(coeffs, init, i64 m):
    _check_mod(m)
    cdef int d = len(coeffs)
    cdef i64* rev = _load(coeffs, m, True)
    cdef i64* x0 = _load(init, m, False)
    cdef i64* tort = <i64*> malloc(d * sizeof(i64))
    cdef i64* hare = <i64*> malloc(d * sizeof(i64))
    cdef u64 power = 1, lam = 1, mu = 0, i
    try:
        if tort == NULL or hare == NULL:
            raise MemoryError()
        with nogil:
            memcpy(tort, x0, d * sizeof(i64))
            memcpy(hare, x0, d * sizeof(i64))
            _step(hare, rev, d, m)
            while not _same(tort, hare, d):
                if power == lam:
                    memcpy(tort, hare, d * sizeof(i64))
                    power *= 2
                    lam = 0
                _step(hare, rev, d, m)
                lam += 1
            memcpy(tort, x0, d * sizeof(i64))
            memcpy(hare, x0, d * sizeof(i64))
            for i in range(lam):
                _step(hare, rev, d, m)
            while not _same(tort, hare, d):
                _step(tort, rev, d, m)
                _step(hare, rev, d, m)
                mu += 1
    finally:
        free(rev)
        free(x0)
        free(tort)
        free(hare)
    return int(mu), int(lam)


def windows_vanish(coeffs, init, i64 m, Py_ssize_t N, Py_ssize_t horizon):
    _check_mod(m)
    cdef int d = len(coeffs)
    cdef Py_ssize_t total = horizon + N
    cdef i64* vals = <i64*> malloc(max(total, d) * sizeof(i64))
    cdef i64* rev = _load(coeffs, m, True)
    cdef i64* state = _load(init, m, False)
    cdef Py_ssize_t n
    cdef i64 acc = 0
    cdef bint ok = True
    try:
        if vals == NULL:
            raise MemoryError()
        with nogil:
            for n in range(d):
                vals[n] = state[n]
            for n in range(d, total):
                _step(state, rev, d, m)
                vals[n] = state[d - 1]
            for n in range(N):
                acc = (acc + vals[n]) % m
            for n in range(horizon + 1):
                if acc != 0:
                    ok = False
                    break
                if n < horizon:
                    acc = ((acc - vals[n] + vals[n + N]) % m + m) % m
    finally:
        free(vals)
        free(rev)
        free(state)
    return ok


cdef u64 _walk(int rem, int omino, int a, int b) nogil:
    if rem == 0:
        return 1
    cdef u64 total = 0
    cdef int c
    for c in range(a):
        total += _walk(rem - 1, omino, a, b)
    if rem >= omino:
        for c in range(b):
            total += _walk(rem - omino, omino, a, b)
    return total


def count_tilings(int n, int k, int a, int b):
    cdef u64 total
    with nogil:
        total = _walk(n, k + 1, a, b)
    return int(total)
