# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled ant-construction kernel.

Mirror of :mod:`swarmclique._kernel_py`: same SplitMix64 streams, same
float operation order, so both backends produce byte-identical cliques.
Keep the two files in lockstep.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy
from libc.math cimport pow as cpow

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef uint64_t GOLDEN = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t MIX1 = <uint64_t>0xBF58476D1CE4E5B9
cdef uint64_t MIX2 = <uint64_t>0x94D049BB133111EB
cdef double INV_2_53 = 1.0 / 9007199254740992.0
cdef uint64_t ANT_STREAM = 1


cdef inline uint64_t mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


cdef inline uint64_t stream_seed(uint64_t seed, uint64_t kind, uint64_t a,
                                 uint64_t b) nogil:
    cdef uint64_t x = mix64(seed ^ GOLDEN)
    x = mix64(x ^ (kind * MIX1))
    x = mix64(x ^ (a * MIX1))
    x = mix64(x ^ (b * MIX1))
    return x


cdef inline uint64_t sm_next(uint64_t* state) nogil:
    state[0] = state[0] + GOLDEN
    return mix64(state[0])


cdef inline double sm_random(uint64_t* state) nogil:
    return <double>(sm_next(state) >> 11) * INV_2_53


def backend_id():
    return "c"


def run_iteration(int n, int nwords,
                  uint64_t[::1] adj_bits,
                  int64_t[::1] indptr,
                  int32_t[::1] nbrs,
                  int32_t[::1] eids,
                  double[::1] tau,
                  double alpha, int ants, uint64_t seed, uint64_t t):
    """Cliques built by ``ants`` independent ants at iteration ``t``.

    ``adj_bits`` is the n x nwords bitset adjacency matrix (row-major);
    ``indptr``/``nbrs``/``eids`` are CSR neighbor lists carrying the edge
    ids that index ``tau``.
    """
    cdef:
        uint64_t* cand = <uint64_t*> malloc(nwords * sizeof(uint64_t))
        double* score = <double*> malloc(n * sizeof(double))
        double* wbuf = <double*> malloc(n * sizeof(double))
        int32_t* vbuf = <int32_t*> malloc(n * sizeof(int32_t))
        int32_t* members = <int32_t*> malloc(n * sizeof(int32_t))
        uint64_t state, word
        double total, threshold, acc, s, w
        int64_t j
        int k, msize, count, i, q, v, chosen, wi, base
        long alpha_int
        bint integral, empty
    if cand == NULL or score == NULL or wbuf == NULL or vbuf == NULL or members == NULL:
        free(cand); free(score); free(wbuf); free(vbuf); free(members)
        raise MemoryError()

    alpha_int = <long>alpha
    integral = (alpha == <double>alpha_int and 0 <= alpha_int <= 64)
    results = []
    try:
        for k in range(ants):
            state = stream_seed(seed, ANT_STREAM, t, <uint64_t>k)
            v = <int>(sm_random(&state) * n)
            msize = 0
            members[msize] = v
            msize += 1
            memcpy(cand, &adj_bits[v * nwords], nwords * sizeof(uint64_t))
            for j in range(indptr[v], indptr[v + 1]):
                score[nbrs[j]] = tau[eids[j]]
            while True:
                count = 0
                total = 0.0
                for wi in range(nwords):
                    word = cand[wi]
                    while word:
                        v = (wi << 6) + __builtin_ctzll(word)
                        word &= word - 1
                        s = score[v]
                        if integral:
                            w = 1.0
                            for q in range(alpha_int):
                                w *= s
                        else:
                            w = cpow(s, alpha)
                        vbuf[count] = v
                        wbuf[count] = w
                        count += 1
                        total += w
                if count == 0:
                    break
                threshold = sm_random(&state) * total
                chosen = vbuf[count - 1]
                acc = 0.0
                for i in range(count):
                    acc += wbuf[i]
                    if acc > threshold:
                        chosen = vbuf[i]
                        break
                members[msize] = chosen
                msize += 1
                base = chosen * nwords
                for wi in range(nwords):
                    cand[wi] &= adj_bits[base + wi]
                for j in range(indptr[chosen], indptr[chosen + 1]):
                    v = nbrs[j]
                    if (cand[v >> 6] >> (v & 63)) & 1:
                        score[v] += tau[eids[j]]
            results.append([members[i] for i in range(msize)])
    finally:
        free(cand)
        free(score)
        free(wbuf)
        free(vbuf)
        free(members)
    return results
