# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled canonical-form kernel.

Hot loop of the census: normalization and divisor-chain form of one weight
vector, entirely in C integers.  Exact arithmetic; any value that would leave
the guarded 64-bit range raises OverflowError so the dispatcher can fall back
to the pure-Python path.

Normalization is computed in closed form instead of by rewriting: at each
prime, subtracting the second-smallest valuation (floored at zero) from every
valuation is exactly what the rewrite moves achieve once no move applies.
The test suite checks this against the move-based implementation.
"""

from libc.stdint cimport uint64_t

cdef enum:
    MAXN = 64

# entries above this would make trial division too slow; weights in scope
# are far smaller
cdef uint64_t MAX_ENTRY = (<uint64_t>1) << 32
cdef uint64_t U64_MAX = <uint64_t>0xFFFFFFFFFFFFFFFF


cdef inline uint64_t mul_checked(uint64_t a, uint64_t b) except? 0:
    if a != 0 and b > U64_MAX / a:
        raise OverflowError("kernel product exceeds 64 bits")
    return a * b


cdef int _apply_prime(uint64_t p, int *val, Py_ssize_t m,
                      uint64_t *normd, uint64_t *star) except -1:
    # fold one prime's valuations into the normalized vector and the
    # divisor-chain form
    cdef int vs[MAXN]
    cdef Py_ssize_t i, j
    cdef int s, e, key

    for i in range(m):
        vs[i] = val[i]
    # insertion sort; m <= 64
    for i in range(1, m):
        key = vs[i]
        j = i - 1
        while j >= 0 and vs[j] > key:
            vs[j + 1] = vs[j]
            j -= 1
        vs[j + 1] = key

    s = vs[1] if m >= 2 else vs[0]  # second-smallest valuation
    for i in range(m):
        e = val[i] - s
        while e > 0:
            normd[i] = mul_checked(normd[i], p)
            e -= 1
        # max(. - s, 0) is monotone, so the sorted valuations stay sorted
        e = vs[i] - s
        while e > 0:
            star[i] = mul_checked(star[i], p)
            e -= 1
    return 0


def canonical_pair(weights):
    """(sorted normalized vector, divisor-chain form) for small inputs.

    Raises OverflowError when the input has more than 64 entries, an entry
    above 2**32, or an intermediate product above 64 bits.
    """
    cdef Py_ssize_t m = len(weights)
    cdef uint64_t rem[MAXN]
    cdef uint64_t normd[MAXN]
    cdef uint64_t star[MAXN]
    cdef int val[MAXN]
    cdef uint64_t d, maxrem, x, key
    cdef Py_ssize_t i, j
    cdef bint any_hit

    if m < 1:
        raise ValueError("weight vector must have at least one entry")
    if m > MAXN:
        raise OverflowError("kernel handles at most 64 weights")
    for i in range(m):
        x = weights[i]
        if x == 0:
            raise ValueError("weights must be positive")
        if x > MAX_ENTRY:
            raise OverflowError("weight exceeds kernel range")
        rem[i] = x
        normd[i] = 1
        star[i] = 1

    d = 2
    while True:
        maxrem = 1
        for i in range(m):
            if rem[i] > maxrem:
                maxrem = rem[i]
        if maxrem == 1:
            break
        if d * d > maxrem:
            # every remaining cofactor is 1 or prime (valuation one each);
            # process each distinct prime once, first index wins
            for i in range(m):
                if rem[i] > 1:
                    for j in range(m):
                        if j < i and rem[j] == rem[i]:
                            break  # already handled with an earlier index
                    else:
                        d = rem[i]
                        for j in range(m):
                            val[j] = 1 if rem[j] == d else 0
                        _apply_prime(d, val, m, normd, star)
            break
        any_hit = False
        for i in range(m):
            val[i] = 0
            while rem[i] % d == 0:
                rem[i] //= d
                val[i] += 1
            if val[i] > 0:
                any_hit = True
        if any_hit:
            _apply_prime(d, val, m, normd, star)
        d += 1 if d == 2 else 2

    # sort the normalized entries for the canonical (order-free) key
    for i in range(1, m):
        key = normd[i]
        j = i - 1
        while j >= 0 and normd[j] > key:
            normd[j + 1] = normd[j]
            j -= 1
        normd[j + 1] = key

    return (
        tuple(normd[i] for i in range(m)),
        tuple(star[i] for i in range(m)),
    )
