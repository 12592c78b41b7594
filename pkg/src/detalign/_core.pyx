# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_core_py`` for the reference semantics."""

from cpython cimport array
import array

cdef extern from *:
    """
    typedef unsigned __int128 detalign_u128;
    """
    ctypedef unsigned long long u128 "detalign_u128"

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline u64 mulmod(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * <u128>b) % <u128>m)


cdef inline u64 powmod(u64 b, u64 e, u64 m) nogil:
    cdef u64 r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = mulmod(r, b, m)
        b = mulmod(b, b, m)
        e >>= 1
    return r


cdef u64[12] _BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_prime_u64(n):
    if n < 2:
        return False
    if n >= 2 ** 64:
        raise OverflowError("is_prime_u64 requires n < 2**64")
    cdef u64 m = n
    cdef u64 d, x, a
    cdef int s, i, r
    cdef bint composite
    for i in range(12):
        if m % _BASES[i] == 0:
            return m == _BASES[i]
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for i in range(12):
        a = _BASES[i]
        x = powmod(a, d, m)
        if x == 1 or x == m - 1:
            continue
        composite = True
        for r in range(s - 1):
            x = mulmod(x, x, m)
            if x == m - 1:
                composite = False
                break
        if composite:
            return False
    return True


cdef array.array _i64(seq):
    if isinstance(seq, array.array) and seq.typecode == 'q':
        return seq
    return array.array('q', seq)


def eval_points_mod(coeffs, exps, int K, points, q):
    cdef i64[:] c = _i64(coeffs)
    cdef i64[:] ex = _i64(exps)
    cdef i64[:] pt = _i64(points)
    cdef u64 m = q
    cdef Py_ssize_t nterms = c.shape[0]
    cdef Py_ssize_t npts = pt.shape[0] // K if K else 0
    cdef array.array res = array.array('q', [0]) * npts
    cdef i64[:] out = res
    cdef Py_ssize_t i, t, k
    cdef u64 acc, v
    cdef i64 e
    with nogil:
        for i in range(npts):
            acc = 0
            for t in range(nterms):
                v = <u64>c[t]
                for k in range(K):
                    e = ex[t * K + k]
                    if e:
                        v = mulmod(v, powmod(<u64>pt[i * K + k], <u64>e, m), m)
                        if v == 0:
                            break
                acc = (acc + v) % m
            out[i] = <i64>acc
    return res.tolist()


def eval_grid_mod(coeffs, exps, int K, q):
    cdef i64[:] c = _i64(coeffs)
    cdef i64[:] ex = _i64(exps)
    cdef u64 m = q
    cdef Py_ssize_t nterms = c.shape[0]
    cdef Py_ssize_t total = q ** K
    cdef Py_ssize_t qq = q
    # pw[(t*K + k) * q + x] = x**exps[t*K+k] mod q
    cdef array.array pwa = array.array('q', [0]) * (nterms * K * qq)
    cdef i64[:] pw = pwa
    cdef array.array res = array.array('q', [0]) * total
    cdef i64[:] out = res
    cdef array.array dga = array.array('q', [0]) * K
    cdef i64[:] digits = dga
    cdef Py_ssize_t idx, t, k, x
    cdef u64 acc, v
    with nogil:
        for t in range(nterms):
            for k in range(K):
                for x in range(qq):
                    pw[(t * K + k) * qq + x] = <i64>powmod(<u64>x, <u64>ex[t * K + k], m)
        for idx in range(total):
            acc = 0
            for t in range(nterms):
                v = <u64>c[t]
                for k in range(K):
                    if ex[t * K + k]:
                        v = mulmod(v, <u64>pw[(t * K + k) * qq + digits[k]], m)
                acc = (acc + v) % m
            out[idx] = <i64>acc
            k = K - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] < qq:
                    break
                digits[k] = 0
                k -= 1
    return res.tolist()


def reconstruction_violations(h_vals, r_vals, q, int K, int j):
    cdef i64[:] hv = _i64(h_vals)
    cdef i64[:] rv = _i64(r_vals)
    cdef Py_ssize_t qq = q
    cdef Py_ssize_t stride = q ** (K - 1 - j)
    cdef Py_ssize_t high = q ** j
    cdef array.array sa = array.array('q', [0]) * qq
    cdef i64[:] seen = sa
    cdef Py_ssize_t hi, lo, x, v, base, idx
    cdef long long violations = 0
    cdef bint bad
    with nogil:
        for hi in range(high):
            for lo in range(stride):
                base = hi * stride * qq + lo
                for v in range(qq):
                    seen[v] = -1
                bad = False
                for x in range(qq):
                    idx = base + x * stride
                    if seen[hv[idx]] == -1:
                        seen[hv[idx]] = rv[idx]
                    elif seen[hv[idx]] != rv[idx]:
                        bad = True
                        break
                if bad:
                    violations += 1
    return violations
