"""Pure-Python graph-construction kernels.

Reference implementations; divgraph._kernels_c holds the compiled
equivalents.  Both lanes must return identical lists for identical input,
which tests/test_kernels.py enforces.

Nodes are exponent vectors below ``bounds``, indexed by their position in
lexicographic order, so every arc (tail, head) satisfies tail < head and
the index order is already topological.
"""

from __future__ import annotations

import itertools


def enumerate_nodes(bounds: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All exponent vectors v with 0 <= v[i] <= bounds[i], lexicographic."""
    if not bounds:
        return [()]
    return list(itertools.product(*(range(m + 1) for m in bounds)))


def closure_arcs(bounds: tuple[int, ...]) -> list[tuple[int, int]]:
    """Arcs of the transitive closure: every ordered pair a < b with a
    componentwise below b, found by direct dominance test over all pairs.

    Quadratic in the node count; this is the hot loop the compiled kernel
    exists for.
    """
    if not bounds:
        return []
    nodes = enumerate_nodes(bounds)
    n = len(nodes)
    arcs: list[tuple[int, int]] = []
    append = arcs.append
    for i in range(n):
        a = nodes[i]
        for j in range(i + 1, n):
            b = nodes[j]
            dominated = True
            for x, y in zip(a, b):
                if x > y:
                    dominated = False
                    break
            if dominated:
                append((i, j))
    return arcs


def hasse_arcs(bounds: tuple[int, ...]) -> list[tuple[int, int]]:
    """Arcs of the Hasse diagram: bump one coordinate by one.

    With lexicographic node order the neighbor index is tail + stride of the
    bumped coordinate, so no pair scan is needed.
    """
    if not bounds:
        return []
    w = len(bounds)
    strides = [1] * w
    for k in range(w - 2, -1, -1):
        strides[k] = strides[k + 1] * (bounds[k + 1] + 1)
    arcs: list[tuple[int, int]] = []
    append = arcs.append
    for i, v in enumerate(enumerate_nodes(bounds)):
        # ks descending gives ascending head indices per tail
        for k in range(w - 1, -1, -1):
            if v[k] < bounds[k]:
                append((i, i + strides[k]))
    return arcs
