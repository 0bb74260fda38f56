"""Closed-form and DP computation of the fourteen divisor-graph invariants.

Everything here is a pure function of the exponent multiset; no graph is
ever built.  Path counts are exact big integers, all other invariants are
checked against a 64-bit bound.  The brute-force counterpart that measures
the same quantities on an explicit graph lives in divgraph.oracle.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, fields
from itertools import combinations_with_replacement
from typing import Iterable

from divgraph.errors import BudgetError
from divgraph.signatures import INT_BOUND, as_signature, big_omega, small_omega

DEFAULT_OMEGA_BUDGET = 40


@dataclass(frozen=True)
class InvariantRecord:
    """The fourteen invariants of one signature class, in table-row order."""

    order: int  # |V|
    hasse_size: int  # |E^H|
    big_omega: int
    small_omega: int
    width_nodes: int  # W_v
    width_arcs: int  # W_e
    degree: int  # max node degree in the Hasse diagram
    hasse_paths: int  # |P^H|, exact
    v_even: int
    v_odd: int
    e_even: int
    e_odd: int
    closure_size: int  # |E^T|
    closure_paths: int  # |P^T|, exact

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _checked(value: int, what: str, bound: int) -> int:
    if value > bound:
        raise ValueError(f"{what} exceeds bound {bound}")
    return value


def order(parts: Iterable[int], *, bound: int = INT_BOUND) -> int:
    """Node count: product of (exponent + 1); 1 for the empty signature."""
    sig = as_signature(parts)
    return _checked(math.prod(m + 1 for m in sig), "order", bound)


def hasse_size(parts: Iterable[int], *, bound: int = INT_BOUND) -> int:
    """Arc count of the Hasse diagram, by the peel-one-exponent recursion.

    The lattice is a Cartesian product of paths, and the size of a product
    is size(A)*order(B) + order(A)*size(B); peeling one exponent at a time
    gives |E(M)| = |E(M - m)|*(m+1) + m*|V(M - m)|, with |E((m))| = m.
    """
    sig = as_signature(parts)
    if not sig:
        return 0
    edges = sig[0]
    nodes = sig[0] + 1
    for m in sig[1:]:
        edges = edges * (m + 1) + m * nodes
        nodes *= m + 1
    return _checked(edges, "hasse size", bound)


def level_node_counts(parts: Iterable[int]) -> list[int]:
    """|V_l| for l = 0..Omega: coefficients of prod_i (1 + x + ... + x^m_i)."""
    sig = as_signature(parts)
    poly = [1]
    for m in sig:
        poly = _conv(poly, [1] * (m + 1))
    return poly


def level_arc_counts(parts: Iterable[int]) -> list[int]:
    """Arcs leaving level l for l = 0..Omega-1 (empty list for Omega = 0).

    An arc leaving level l bumps some coordinate i with v_i < m_i, so the
    count is a sum of polynomial coefficients with coordinate i clamped
    below its bound.
    """
    sig = as_signature(parts)
    if not sig:
        return []
    total = sum(sig)
    prefix = [[1]]
    for m in sig:
        prefix.append(_conv(prefix[-1], [1] * (m + 1)))
    suffix = [[1]]
    for m in reversed(sig):
        suffix.append(_conv(suffix[-1], [1] * (m + 1)))
    suffix.reverse()
    counts = [0] * total
    for i, m in enumerate(sig):
        others = _conv(prefix[i], suffix[i + 1])
        clamped = _conv(others, [1] * m)  # coordinate i ranges over 0..m_i-1
        for l, c in enumerate(clamped):
            counts[l] += c
    return counts


def _conv(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def width_nodes(parts: Iterable[int]) -> int:
    """W_v: largest level by node count."""
    return max(level_node_counts(parts))


def width_arcs(parts: Iterable[int]) -> int:
    """W_e: largest level by leaving-arc count; 0 for the empty signature."""
    counts = level_arc_counts(parts)
    return max(counts) if counts else 0


def degree(parts: Iterable[int]) -> int:
    """Maximum node degree of the Hasse diagram: omega + #exponents above 1."""
    sig = as_signature(parts)
    return len(sig) + sum(1 for m in sig if m > 1)


def hasse_paths(parts: Iterable[int]) -> int:
    """Source-to-sink path count of the Hasse diagram.

    Equals the number of ordered prime factorizations: the multinomial
    (sum m_i)! / prod m_i!.
    """
    sig = as_signature(parts)
    value = math.factorial(sum(sig))
    for m in sig:
        value //= math.factorial(m)
    return value


def hasse_paths_recursive(parts: Iterable[int]) -> int:
    """Same count by the level-peeling recursion, for cross-checking.

    Every source-to-sink path passes through exactly one node on the level
    just below the sink, so P(M) = sum over i of P(M with m_i lowered by 1).
    """
    memo: dict[tuple[int, ...], int] = {}

    def rec(sig: tuple[int, ...]) -> int:
        if sum(sig) <= 1:
            return 1
        cached = memo.get(sig)
        if cached is not None:
            return cached
        total = 0
        for i in range(len(sig)):
            lowered = sig[:i] + (sig[i] - 1,) + sig[i + 1 :]
            total += rec(_canon(lowered))
        memo[sig] = total
        return total

    return rec(as_signature(parts))


def node_parity(parts: Iterable[int]) -> tuple[int, int]:
    """(|V_E|, |V_O|): nodes on even and odd levels; |V_O| = floor(|V|/2)."""
    n = order(parts)
    return n - n // 2, n // 2


def arc_parity(parts: Iterable[int]) -> tuple[int, int]:
    """(|E_E|, |E_O|) by tail-level parity; |E_O| = floor(|E^H|/2)."""
    e = hasse_size(parts)
    return e - e // 2, e // 2


def closure_size(parts: Iterable[int], *, bound: int = INT_BOUND) -> int:
    """Arc count of the transitive closure, in closed form.

    Summing the divisor-count function over the lattice gives
    prod (m_i+1)(m_i+2)/2, and every node contributes its proper divisors
    as incoming arcs, so |E^T| = prod (m_i+1)(m_i+2)/2 - |V|.
    """
    sig = as_signature(parts)
    total = math.prod((m + 1) * (m + 2) // 2 for m in sig)
    return _checked(total - math.prod(m + 1 for m in sig), "closure size", bound)


def closure_size_by_divisor_sum(parts: Iterable[int]) -> int:
    """Literal form of the same count: sum over all divisors v of (tau(v) - 1).

    Kept as an independent cross-check of the closed form.
    """
    sig = as_signature(parts)
    total = 0
    for v in _vectors_below(sig):
        total += math.prod(c + 1 for c in v) - 1
    return total


def closure_paths(parts: Iterable[int], *, omega_budget: int = DEFAULT_OMEGA_BUDGET) -> int:
    """Source-to-sink path count of the transitive closure.

    Recursion: a path to the sink arrives from some proper divisor, so
    f(n) = sum of f(v) over proper divisors v, with f = 1 when Omega <= 1.
    States are memoized on the sorted residual exponent tuple (the count
    only depends on the signature class), and the sum over divisors is
    grouped by residual signature with multiplicities computed
    combinatorially, which keeps the table small and the scan fast.
    """
    sig = as_signature(parts)
    if sum(sig) > omega_budget:
        raise BudgetError(f"Omega {sum(sig)} exceeds DP budget {omega_budget}")
    memo: dict[tuple[int, ...], int] = {}

    def f(t: tuple[int, ...]) -> int:
        if sum(t) <= 1:
            return 1
        cached = memo.get(t)
        if cached is not None:
            return cached
        total = 0
        for sub, mult in _substate_counts(t).items():
            if sub != t:
                total += mult * f(sub)
        memo[t] = total
        return total

    return f(sig)


def _substate_counts(t: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Map residual signature -> number of exponent vectors below ``t`` with it.

    Coordinates sharing the same bound are interchangeable, so choices are
    enumerated per bound value as multisets, weighted by their permutation
    counts, then merged across bound values.
    """
    acc: dict[tuple[int, ...], int] = {(): 1}
    for value, mult in sorted(Counter(t).items()):
        options: list[tuple[tuple[int, ...], int]] = []
        for combo in combinations_with_replacement(range(value + 1), mult):
            options.append((combo, _permutation_count(combo)))
        merged: dict[tuple[int, ...], int] = {}
        for base, base_count in acc.items():
            for combo, combo_count in options:
                key = _canon(base + combo)
                merged[key] = merged.get(key, 0) + base_count * combo_count
        acc = merged
    return acc


def _permutation_count(combo: tuple[int, ...]) -> int:
    count = math.factorial(len(combo))
    for c in Counter(combo).values():
        count //= math.factorial(c)
    return count


def _canon(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted((p for p in parts if p), reverse=True))


def _vectors_below(sig: tuple[int, ...]):
    if not sig:
        yield ()
        return
    yield from itertools.product(*(range(m + 1) for m in sig))


def height(parts: Iterable[int]) -> int:
    """Longest (equivalently shortest) source-to-sink path length: Omega."""
    return big_omega(parts)


def all_invariants(
    parts: Iterable[int],
    *,
    bound: int = INT_BOUND,
    omega_budget: int = DEFAULT_OMEGA_BUDGET,
) -> InvariantRecord:
    """Bundle all fourteen invariants for one signature."""
    sig = as_signature(parts)
    v_even, v_odd = node_parity(sig)
    e_even, e_odd = arc_parity(sig)
    return InvariantRecord(
        order=order(sig, bound=bound),
        hasse_size=hasse_size(sig, bound=bound),
        big_omega=big_omega(sig),
        small_omega=small_omega(sig),
        width_nodes=width_nodes(sig),
        width_arcs=width_arcs(sig),
        degree=degree(sig),
        hasse_paths=hasse_paths(sig),
        v_even=v_even,
        v_odd=v_odd,
        e_even=e_even,
        e_odd=e_odd,
        closure_size=closure_size(sig, bound=bound),
        closure_paths=closure_paths(sig, omega_budget=omega_budget),
    )
