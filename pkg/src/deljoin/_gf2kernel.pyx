# cython: boundscheck=False, wraparound=False, cdivision=True
"""Bit-packed GF(2) elimination kernels (compiled backend).

Same interface and the same algorithm as ``_gf2py`` (lazy row echelon keyed
on leading bits, which exploits the sparsity of boundary matrices), but on
little-endian uint64 words with the GIL released.  Row XOR stops at the
leading word: neither operand has bits above the shared leading bit.
"""

import sys

from cpython.bytes cimport PyBytes_AS_STRING
from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy

if sys.byteorder != "little":
    raise ImportError("compiled GF(2) kernel requires a little-endian host")

NAME = "compiled"

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static inline int gf2_msb64(unsigned long long x) {
        unsigned long i; _BitScanReverse64(&i, x); return (int)i;
    }
    static inline int gf2_popcnt64(unsigned long long x) {
        return (int)__popcnt64(x);
    }
    #else
    static inline int gf2_msb64(unsigned long long x) {
        return 63 - __builtin_clzll(x);
    }
    static inline int gf2_popcnt64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    #endif
    """
    int gf2_msb64(unsigned long long x) noexcept nogil
    int gf2_popcnt64(unsigned long long x) noexcept nogil


cdef uint64_t* _pack(object rows, Py_ssize_t nrows, Py_ssize_t nwords) except NULL:
    cdef uint64_t* buf = <uint64_t*>calloc(max(nrows * nwords, 1), sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t nbytes = nwords * 8
    cdef bytes bb
    for r in rows:
        bb = r.to_bytes(nbytes, "little")
        memcpy(buf + i * nwords, PyBytes_AS_STRING(bb), nbytes)
        i += 1
    return buf


cdef inline Py_ssize_t _lead(uint64_t* row, Py_ssize_t start_word) noexcept nogil:
    """Index of the highest set bit, scanning down from start_word; -1 if 0."""
    cdef Py_ssize_t w = start_word
    while w >= 0:
        if row[w]:
            return (w << 6) + gf2_msb64(row[w])
        w -= 1
    return -1


cdef Py_ssize_t _echelon(uint64_t* M, unsigned char* b, Py_ssize_t* pivot_of,
                         Py_ssize_t nrows, Py_ssize_t nwords,
                         bint* inconsistent) noexcept nogil:
    """Lazy row echelon in place; returns the rank.

    ``pivot_of[col]`` becomes the row index whose leading bit is col, or -1.
    ``b`` (optional) is a per-row rhs bit carried through the reductions;
    with it, ``inconsistent`` is set when a row reduces to 0 = 1.
    """
    cdef Py_ssize_t rk = 0, i, k, w, lead, p
    cdef uint64_t* row
    cdef uint64_t* piv
    for i in range(nrows):
        row = M + i * nwords
        w = nwords - 1
        while True:
            lead = _lead(row, w)
            if lead < 0:
                if b != NULL and b[i]:
                    inconsistent[0] = 1
                    return rk
                break
            p = pivot_of[lead]
            if p < 0:
                pivot_of[lead] = i
                rk += 1
                break
            piv = M + p * nwords
            w = lead >> 6
            for k in range(w + 1):
                row[k] ^= piv[k]
            if b != NULL:
                b[i] ^= b[p]
    return rk


def rank(rows, Py_ssize_t ncols):
    """GF(2) rank of the matrix whose rows are the given int bitsets."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef Py_ssize_t nwords = (ncols + 63) >> 6
    cdef uint64_t* M = _pack(rows, nrows, nwords)
    cdef Py_ssize_t* pivot_of = <Py_ssize_t*>malloc(ncols * sizeof(Py_ssize_t))
    if pivot_of == NULL:
        free(M)
        raise MemoryError()
    cdef Py_ssize_t i, rk
    cdef bint bad = 0
    try:
        with nogil:
            for i in range(ncols):
                pivot_of[i] = -1
            rk = _echelon(M, NULL, pivot_of, nrows, nwords, &bad)
        return rk
    finally:
        free(M)
        free(pivot_of)


def solve(rows, Py_ssize_t ncols, rhs):
    """One solution of A x = rhs (free variables 0), or None."""
    cdef Py_ssize_t nrows = len(rows)
    if ncols == 0:
        return 0 if rhs == 0 else None
    if nrows == 0:
        return 0
    cdef Py_ssize_t nwords = (ncols + 63) >> 6
    cdef uint64_t* M = _pack(rows, nrows, nwords)
    cdef unsigned char* b = <unsigned char*>calloc(nrows, 1)
    cdef Py_ssize_t* pivot_of = <Py_ssize_t*>malloc(ncols * sizeof(Py_ssize_t))
    cdef uint64_t* x = <uint64_t*>calloc(nwords, sizeof(uint64_t))
    if b == NULL or pivot_of == NULL or x == NULL:
        free(M)
        free(b)
        free(pivot_of)
        free(x)
        raise MemoryError()
    cdef Py_ssize_t i, k, lead, p
    cdef bint bad = 0
    cdef int parity
    cdef uint64_t* row
    try:
        for i in range(nrows):
            b[i] = (rhs >> i) & 1
        with nogil:
            for i in range(ncols):
                pivot_of[i] = -1
            _echelon(M, b, pivot_of, nrows, nwords, &bad)
            if not bad:
                # Back substitution in increasing lead order: every lower
                # pivot variable is already final, free variables stay 0,
                # and x has no bit at the current lead yet.
                for lead in range(ncols):
                    p = pivot_of[lead]
                    if p < 0:
                        continue
                    row = M + p * nwords
                    parity = b[p]
                    for k in range((lead >> 6) + 1):
                        parity ^= gf2_popcnt64(row[k] & x[k]) & 1
                    if parity:
                        x[lead >> 6] |= (<uint64_t>1) << (lead & 63)
        if bad:
            return None
        return int.from_bytes((<char*>x)[:nwords * 8], "little")
    finally:
        free(M)
        free(b)
        free(pivot_of)
        free(x)
