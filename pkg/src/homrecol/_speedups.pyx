# distutils: language = c++
# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled kernels. Mirrors homrecol._fallback move for move."""

from libcpp.deque cimport deque
from libcpp.string cimport string
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"

BFS_FOUND = 1
BFS_EXHAUSTED = 0
BFS_BUDGET = -1


def reduce_sequence(seq):
    """Collapse a walk to its unique reduced form with one stack pass."""
    cdef vector[long long] out
    out.reserve(len(seq))
    cdef long long x
    cdef size_t m
    for v in seq:
        x = v
        out.push_back(x)
        m = out.size()
        if m >= 2 and out[m - 2] == x:
            out.pop_back()
        elif m >= 3 and out[m - 3] == x:
            out.pop_back()
            out.pop_back()
    return tuple(out[i] for i in range(out.size()))


cdef string _pack(vector[unsigned char]& cols, int n, int bits):
    cdef string s
    cdef int v
    if bits == 4:
        s.resize((n + 1) // 2, 0)
        for v in range(n):
            s[v // 2] = <char>(s[v // 2] | (cols[v] << (4 * (v & 1))))
    else:
        s.resize(n, 0)
        for v in range(n):
            s[v] = <char>cols[v]
    return s


def hom_bfs(g_adj, h_masks, start, target, long long max_states):
    """BFS over single-vertex recolouring moves; exact within the state budget.

    Same contract and visit order as the pure twin: FIFO frontier, vertices
    ascending, candidate colours ascending.
    """
    cdef int n = len(start)
    cdef int nh = len(h_masks)
    if nh > 64:
        raise ValueError("hom_bfs needs at most 64 host vertices")
    cdef int bits = 4 if nh <= 16 else 8

    cdef vector[int] indptr, indices
    cdef int v, u, c
    indptr.push_back(0)
    for v in range(n):
        for u in g_adj[v]:
            indices.push_back(u)
        indptr.push_back(<int>indices.size())

    cdef vector[unsigned long long] masks
    for m in h_masks:
        masks.push_back(<unsigned long long>m)
    cdef unsigned long long full
    if nh == 64:
        full = <unsigned long long>0xFFFFFFFFFFFFFFFF
    else:
        full = (<unsigned long long>1 << nh) - 1

    cdef vector[unsigned char] cols
    cols.resize(n)
    for v in range(n):
        cols[v] = start[v]
    cdef string s0 = _pack(cols, n, bits)
    for v in range(n):
        cols[v] = target[v]
    cdef string t0 = _pack(cols, n, bits)
    if s0 == t0:
        return BFS_FOUND

    cdef unordered_set[string] visited
    if max_states < 50_000_000:
        visited.reserve(<size_t>max_states if max_states > 16 else 16)
    visited.insert(s0)
    cdef deque[string] queue
    queue.push_back(s0)

    cdef string state, nxt
    cdef unsigned long long allowed
    cdef int j, half, shift
    while not queue.empty():
        state = queue.front()
        queue.pop_front()
        if bits == 4:
            for v in range(n):
                cols[v] = (<unsigned char>state[v // 2] >> (4 * (v & 1))) & 0xF
        else:
            for v in range(n):
                cols[v] = <unsigned char>state[v]
        for v in range(n):
            allowed = full
            for j in range(indptr[v], indptr[v + 1]):
                allowed &= masks[cols[indices[j]]]
            allowed &= ~(<unsigned long long>1 << cols[v])
            while allowed:
                c = __builtin_ctzll(allowed)
                allowed &= allowed - 1
                nxt = state
                if bits == 4:
                    half = v // 2
                    shift = 4 * (v & 1)
                    nxt[half] = <char>((<unsigned char>nxt[half] & ~(0xF << shift)) | (c << shift))
                else:
                    nxt[v] = <char>c
                if visited.find(nxt) == visited.end():
                    if nxt == t0:
                        return BFS_FOUND
                    if <long long>visited.size() >= max_states:
                        return BFS_BUDGET
                    visited.insert(nxt)
                    queue.push_back(nxt)
    return BFS_EXHAUSTED
