"""Explicit divisor-lattice DAGs over exponent vectors.

A graph is built from a tuple of exponent bounds (a prime signature, in any
coordinate order).  Nodes are all exponent vectors below the bounds, in
lexicographic order; node 0 is the all-zero source and the last node is the
sink.  Two kinds are supported: the Hasse diagram (covering relation, arcs
raise one coordinate by one) and the transitive closure (every dominated
pair).  Graphs are immutable once built.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum

from divgraph import kernels
from divgraph.errors import BudgetError
from divgraph.signatures import INT_BOUND, Factorization

DEFAULT_NODE_BUDGET = 10**6

ExponentVector = tuple[int, ...]


class GraphKind(Enum):
    HASSE = "hasse"
    CLOSURE = "closure"


@dataclass(frozen=True)
class DivisorGraph:
    signature: tuple[int, ...]
    kind: GraphKind
    nodes: list[ExponentVector] = field(repr=False)
    arcs: list[tuple[int, int]] = field(repr=False)

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class LevelProfile:
    node_counts: list[int]  # level l = coordinate sum l, l = 0..Omega
    arc_counts: list[int]  # arcs leaving level l, l = 0..Omega-1


def graph_order(bounds: tuple[int, ...]) -> int:
    return math.prod(m + 1 for m in bounds)


def build_graph(
    bounds: tuple[int, ...],
    kind: GraphKind,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> DivisorGraph:
    """Construct the Hasse diagram or transitive closure for the given bounds.

    ``bounds`` is an exponent tuple; any coordinate order is accepted and
    preserved, so vectors line up with a factorization's prime order.
    """
    bounds = tuple(bounds)
    for m in bounds:
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"exponent bounds must be positive integers, got {bounds!r}")
    n = graph_order(bounds)
    if n > node_budget:
        raise BudgetError(f"graph on {n} nodes exceeds node budget {node_budget}")
    nodes = kernels.enumerate_nodes(bounds)
    if kind is GraphKind.HASSE:
        arcs = kernels.hasse_arcs(bounds)
    elif kind is GraphKind.CLOSURE:
        arcs = kernels.closure_arcs(bounds)
    else:
        raise ValueError(f"unknown graph kind {kind!r}")
    return DivisorGraph(signature=bounds, kind=kind, nodes=nodes, arcs=arcs)


def level_profile(g: DivisorGraph) -> LevelProfile:
    """Per-level node and leaving-arc counts of a Hasse diagram.

    Levels follow the exponent-sum decomposition; every Hasse arc leaves the
    level of its tail.
    """
    if g.kind is not GraphKind.HASSE:
        raise ValueError("level_profile requires a Hasse diagram")
    omega_total = sum(g.signature)
    node_counts = [0] * (omega_total + 1)
    levels = [sum(v) for v in g.nodes]
    for lv in levels:
        node_counts[lv] += 1
    arc_counts = [0] * omega_total
    for a, _ in g.arcs:
        arc_counts[levels[a]] += 1
    return LevelProfile(node_counts=node_counts, arc_counts=arc_counts)


def divisor_value(v: ExponentVector, f: Factorization, *, bound: int = INT_BOUND) -> int:
    """Concrete divisor represented by vector ``v`` against factorization ``f``."""
    if len(v) != len(f):
        raise ValueError(f"vector of length {len(v)} does not match factorization of length {len(f)}")
    value = 1
    for coord, (prime, exponent) in zip(v, f):
        if coord < 0 or coord > exponent:
            raise ValueError(f"coordinate {coord} out of range 0..{exponent}")
        value *= prime**coord
        if value > bound:
            raise ValueError(f"divisor value exceeds bound {bound}")
    return value


def to_dot(g: DivisorGraph) -> str:
    """DOT rendering; node labels are the exponent vectors joined by spaces."""
    lines = [f"digraph {g.kind.value} {{"]
    for i, v in enumerate(g.nodes):
        label = " ".join(str(c) for c in v)
        lines.append(f'  v{i} [label="{label}"];')
    for a, b in g.arcs:
        lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: DivisorGraph) -> str:
    payload = {
        "signature": list(g.signature),
        "kind": g.kind.value,
        "nodes": [list(v) for v in g.nodes],
        "arcs": [list(arc) for arc in g.arcs],
    }
    return json.dumps(payload)
