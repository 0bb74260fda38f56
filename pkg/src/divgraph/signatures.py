"""Integer factorization, prime signatures, and their two standard orderings.

A prime signature is the multiset of exponents in a prime factorization,
held here as a tuple sorted in descending order.  The empty tuple is the
signature of 1.  Signatures index isomorphism classes of divisor-lattice
graphs, so everything downstream (graphs, invariants, sequences) keys on
them.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable

INT_BOUND = 2**63 - 1

Factorization = tuple[tuple[int, int], ...]  # ((prime, exponent), ...), primes ascending
PrimeSignature = tuple[int, ...]  # exponents, descending


class SignatureOrder(Enum):
    GRADED_COLEX = "colex"
    CANONICAL = "canonical"


def factorize(n: int, *, bound: int = INT_BOUND) -> Factorization:
    """Prime factorization of ``n`` as ((p1, m1), (p2, m2), ...) with p1 < p2 < ...

    Deterministic trial division; adequate for desk-scale inputs up to the
    64-bit bound, which is checked up front.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"n must be an integer, got {n!r}")
    if n < 1 or n > bound:
        raise ValueError(f"n out of range [1, {bound}]: {n}")
    pairs = []
    rest = n
    for p in _trial_candidates():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            pairs.append((p, e))
    if rest > 1:
        pairs.append((rest, 1))
    return tuple(pairs)


def _trial_candidates():
    yield 2
    c = 3
    while True:
        yield c
        c += 2


def factorization_value(f: Factorization) -> int:
    prod = 1
    for p, e in f:
        prod *= p**e
    return prod


def signature_of(n: int, *, bound: int = INT_BOUND) -> PrimeSignature:
    """Prime signature of ``n``: the exponent multiset, sorted descending."""
    return tuple(sorted((e for _, e in factorize(n, bound=bound)), reverse=True))


def as_signature(parts: Iterable[int]) -> PrimeSignature:
    """Canonicalize an exponent multiset: validate positivity, sort descending."""
    t = tuple(parts)
    for p in t:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"signature parts must be positive integers, got {t!r}")
    return tuple(sorted(t, reverse=True))


def big_omega(parts: Iterable[int]) -> int:
    """Number of prime factors counted with multiplicity (sum of exponents)."""
    return sum(as_signature(parts))


def small_omega(parts: Iterable[int]) -> int:
    """Number of distinct prime factors (count of exponents)."""
    return len(as_signature(parts))


def partitions_of(k: int) -> list[PrimeSignature]:
    """All partitions of ``k`` as descending tuples, in descending lexicographic order.

    That order is exactly the within-grade order of the canonical signature
    enumeration; partitions_of(0) is [()].
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    out: list[PrimeSignature] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, max_part), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(k, k, [])
    return out


def enumerate_signatures(order: SignatureOrder, count: int) -> list[PrimeSignature]:
    """First ``count`` signatures in the requested total order, starting at ().

    Both orders are graded by the exponent sum.  Within one grade the
    canonical order is descending lexicographic on the descending tuples;
    the graded colexicographic order additionally groups by length first.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    out: list[PrimeSignature] = []
    k = 0
    while len(out) < count:
        grade = partitions_of(k)
        if order is SignatureOrder.GRADED_COLEX:
            grade = sorted(grade, key=len)  # stable: keeps lex-descending within a length
        elif order is not SignatureOrder.CANONICAL:
            raise ValueError(f"unknown order {order!r}")
        out.extend(grade)
        k += 1
    return out[:count]


def least_integer(parts: Iterable[int], *, bound: int = INT_BOUND) -> int:
    """Smallest positive integer whose signature equals the given multiset.

    Largest exponent goes on the smallest prime: 2^s1 * 3^s2 * 5^s3 * ...
    """
    sig = as_signature(parts)
    value = 1
    for prime, exponent in zip(_first_primes(len(sig)), sig):
        value *= prime**exponent
        if value > bound:
            raise ValueError(f"least integer of {sig} exceeds bound {bound}")
    return value


def _first_primes(k: int) -> list[int]:
    primes: list[int] = []
    c = 2
    while len(primes) < k:
        if all(c % p for p in primes if p * p <= c):
            primes.append(c)
        c += 1 if c == 2 else 2
    return primes


def spf_sieve(limit: int) -> list[int]:
    """Smallest-prime-factor table for 0..limit (spf[0] = 0, spf[1] = 1)."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    spf = list(range(limit + 1))
    spf[0] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for multiple in range(p * p, limit + 1, p):
                if spf[multiple] == multiple:
                    spf[multiple] = p
    return spf


def signature_from_sieve(n: int, spf: list[int]) -> PrimeSignature:
    exps = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return tuple(sorted(exps, reverse=True))


def signature_display(sig: PrimeSignature) -> str:
    """Render a signature the way the order tables print it: (2,1); () is (0)."""
    if not sig:
        return "(0)"
    return "(" + ",".join(str(p) for p in sig) + ")"


def signature_key(sig: PrimeSignature) -> str:
    """Dot-joined serialization used by the CLI and CSV output: (2,1) -> "2.1".

    The empty signature serializes as "0", mirroring the (0) display form.
    """
    if not sig:
        return "0"
    return ".".join(str(p) for p in sig)


def parse_signature_key(text: str) -> tuple[int, ...]:
    """Inverse of signature_key. Accepts any positive-integer exponent tuple.

    Order is preserved (an exponent tuple in factorization order is valid
    input everywhere); "0" denotes the empty signature.
    """
    text = text.strip()
    if text == "0":
        return ()
    try:
        parts = tuple(int(piece) for piece in text.split("."))
    except ValueError:
        raise ValueError(f"bad signature syntax {text!r}; expected e.g. 2.3.1") from None
    if any(p < 1 for p in parts):
        raise ValueError(f"signature parts must be >= 1, got {text!r}")
    return parts
