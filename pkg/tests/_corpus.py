"""Shared signature corpora for the oracle-equivalence and structure suites."""

from divgraph.invariants import order
from divgraph.signatures import partitions_of

# Wide/tall shapes outside the partition sweep, still under the order cap.
STRESS_EXTRAS = [(99,), (19, 19), (9, 9, 9), (4, 4, 4, 4), (5, 4, 3, 2, 1)]


def oracle_corpus(order_cap: int = 5000, omega_cap: int = 13) -> list[tuple[int, ...]]:
    """All partitions with Omega <= omega_cap whose graph fits the order cap,
    plus a few stress shapes; several hundred signatures in total."""
    sigs = [
        s
        for k in range(omega_cap + 1)
        for s in partitions_of(k)
        if order(s) <= order_cap
    ]
    sigs.extend(s for s in STRESS_EXTRAS if order(s) <= order_cap)
    return sigs


def small_corpus(omega_cap: int = 7) -> list[tuple[int, ...]]:
    """Everything up to a small height; cheap enough for quadratic checks."""
    return [s for k in range(omega_cap + 1) for s in partitions_of(k)]
