# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank-oracle kernels.

The rank oracle is given in min-plus form: ``r(X) = min_i (off[i] + |X - F_i|)``
over pairs ``(F_i, off[i])``.  Cyclic-flat families, and every minor or dual
derived from one, are of this form.
"""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef struct Oracle:
    int m
    uint64_t* masks
    int* offs


cdef inline int _rank(const Oracle* o, uint64_t x) nogil:
    cdef int best = 1 << 30
    cdef int i, v
    for i in range(o.m):
        v = o.offs[i] + popcount64(x & ~o.masks[i])
        if v < best:
            best = v
    return best


cdef class _Buffers:
    cdef vector[uint64_t] masks
    cdef vector[int] offs
    cdef Oracle oracle

    def __init__(self, masks, offsets):
        if len(masks) != len(offsets) or len(masks) == 0:
            raise ValueError("need a nonempty family of (mask, offset) pairs")
        for f, r in zip(masks, offsets):
            self.masks.push_back(<uint64_t>f)
            self.offs.push_back(<int>r)
        self.oracle.m = <int>self.masks.size()
        self.oracle.masks = self.masks.data()
        self.oracle.offs = self.offs.data()


def rank(masks, offsets, x):
    cdef _Buffers b = _Buffers(masks, offsets)
    return _rank(&b.oracle, <uint64_t>x)


def rank_table(int n, masks, offsets):
    """Ranks of all ``2**n`` subsets as a bytes object indexed by mask."""
    if n > 26:
        raise ValueError("rank table limited to 26 elements")
    cdef _Buffers b = _Buffers(masks, offsets)
    cdef uint64_t size = (<uint64_t>1) << n
    cdef bytearray out = bytearray(size)
    cdef unsigned char* p = out
    cdef uint64_t x
    with nogil:
        for x in range(size):
            p[x] = <unsigned char>_rank(&b.oracle, x)
    return bytes(out)


def cyclic_flats_by_subsets(int n, masks, offsets):
    """Cyclic flats found by testing every subset (exponential in ``n``)."""
    table = rank_table(n, masks, offsets)
    cdef const unsigned char* t = table
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t x, bit
    cdef int e, k
    cdef bint ok
    cdef vector[uint64_t] found
    with nogil:
        for x in range(size):
            k = t[x]
            ok = True
            for e in range(n):
                bit = (<uint64_t>1) << e
                if x & bit:
                    if t[x ^ bit] != k:
                        ok = False
                        break
                elif t[x | bit] == k:
                    ok = False
                    break
            if ok:
                found.push_back(x)
    return [(int(f), int(t[f])) for f in found]


def cyclic_flats_by_flats(int n, masks, offsets, long long max_flats=20000000):
    """Cyclic flats found by walking the lattice of flats rank by rank.

    The flats covering a flat ``F`` partition ``E - F``; each is the closure
    of ``F + e`` for one representative ``e``.  Returns ``(cyclic, n_flats)``.
    """
    if n > 64:
        raise ValueError("ground set limited to 64 elements")
    cdef _Buffers b = _Buffers(masks, offsets)
    cdef const Oracle* o = &b.oracle
    cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    cdef uint64_t f, g, rest, scan, bit, cl
    cdef int k, e
    cdef bint cyclic, overflow = False
    cdef long long n_flats = 0
    cdef vector[uint64_t] level, nxt, out_masks
    cdef vector[int] out_ranks
    cdef unordered_set[uint64_t] seen
    cdef size_t i

    with nogil:
        # closure of the empty set: all loops
        cl = 0
        for e in range(n):
            bit = (<uint64_t>1) << e
            if _rank(o, bit) == 0:
                cl |= bit
        level.push_back(cl)
        while level.size() > 0 and not overflow:
            nxt.clear()
            seen.clear()
            for i in range(level.size()):
                f = level[i]
                n_flats += 1
                k = _rank(o, f)
                cyclic = True
                scan = f
                while scan:
                    bit = scan & (~scan + 1)
                    scan ^= bit
                    if _rank(o, f ^ bit) != k:
                        cyclic = False
                        break
                if cyclic:
                    out_masks.push_back(f)
                    out_ranks.push_back(k)
                rest = full & ~f
                while rest:
                    bit = rest & (~rest + 1)
                    g = f | bit
                    cl = g
                    scan = rest ^ bit
                    while scan:
                        bit = scan & (~scan + 1)
                        scan ^= bit
                        if _rank(o, g | bit) == k + 1:
                            cl |= bit
                    rest &= ~cl
                    if seen.find(cl) == seen.end():
                        seen.insert(cl)
                        nxt.push_back(cl)
            level.swap(nxt)
            if n_flats + <long long>level.size() > max_flats:
                overflow = True
    if overflow:
        raise OverflowError(f"more than {max_flats} flats")
    return [(int(out_masks[i]), int(out_ranks[i])) for i in range(out_masks.size())], n_flats
