# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled graph-construction kernels.

Mirrors divgraph._kernels_py exactly; the dominance scan over all node
pairs is the hot loop that motivates compilation.
"""

from libc.stdlib cimport free, malloc


cdef long long _order(list bounds) except -1:
    cdef long long n = 1
    for m in bounds:
        n *= <long long> m + 1
    return n


cdef int* _coords_matrix(list bounds, Py_ssize_t w, Py_ssize_t n) except NULL:
    """Row-major matrix of all exponent vectors in lexicographic order."""
    cdef int* coords = <int*> malloc(n * w * sizeof(int))
    if coords == NULL:
        raise MemoryError()
    cdef int* m = <int*> malloc(w * sizeof(int))
    if m == NULL:
        free(coords)
        raise MemoryError()
    cdef Py_ssize_t i, k
    for k in range(w):
        m[k] = bounds[k]
        coords[k] = 0
    for i in range(1, n):
        for k in range(w):
            coords[i * w + k] = coords[(i - 1) * w + k]
        k = w - 1
        while True:
            if coords[i * w + k] < m[k]:
                coords[i * w + k] += 1
                break
            coords[i * w + k] = 0
            k -= 1
    free(m)
    return coords


def enumerate_nodes(bounds):
    """All exponent vectors below ``bounds``, lexicographic, as tuples."""
    bounds = list(bounds)
    cdef Py_ssize_t w = len(bounds)
    if w == 0:
        return [()]
    cdef Py_ssize_t n = _order(bounds)
    cdef int* coords = _coords_matrix(bounds, w, n)
    cdef Py_ssize_t i, k
    nodes = []
    try:
        for i in range(n):
            nodes.append(tuple([coords[i * w + k] for k in range(w)]))
    finally:
        free(coords)
    return nodes


def closure_arcs(bounds):
    """Transitive-closure arcs by dominance test over all node pairs."""
    bounds = list(bounds)
    cdef Py_ssize_t w = len(bounds)
    if w == 0:
        return []
    cdef Py_ssize_t n = _order(bounds)
    cdef int* coords = _coords_matrix(bounds, w, n)
    cdef Py_ssize_t i, j, k
    cdef int* a
    cdef int* b
    cdef bint dominated
    arcs = []
    append = arcs.append
    try:
        for i in range(n):
            a = coords + i * w
            for j in range(i + 1, n):
                b = coords + j * w
                dominated = True
                for k in range(w):
                    if a[k] > b[k]:
                        dominated = False
                        break
                if dominated:
                    append((i, j))
    finally:
        free(coords)
    return arcs


def hasse_arcs(bounds):
    """Hasse arcs via coordinate strides in the lexicographic numbering."""
    bounds = list(bounds)
    cdef Py_ssize_t w = len(bounds)
    if w == 0:
        return []
    cdef Py_ssize_t n = _order(bounds)
    cdef int* coords = _coords_matrix(bounds, w, n)
    cdef long long* strides = <long long*> malloc(w * sizeof(long long))
    if strides == NULL:
        free(coords)
        raise MemoryError()
    cdef Py_ssize_t i, k
    strides[w - 1] = 1
    for k in range(w - 2, -1, -1):
        strides[k] = strides[k + 1] * (<long long> bounds[k + 1] + 1)
    arcs = []
    append = arcs.append
    try:
        for i in range(n):
            for k in range(w - 1, -1, -1):
                if coords[i * w + k] < <int> bounds[k]:
                    append((i, i + strides[k]))
    finally:
        free(coords)
        free(strides)
    return arcs
