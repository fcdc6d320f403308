"""Shared test oracles, independent of the production code paths."""

from __future__ import annotations

import math

_oracle_cache: list[int] = []


def oracle_primes(m: int) -> list[int]:
    """First m primes by plain trial division (the sieve's independent oracle)."""
    while len(_oracle_cache) < m:
        n = _oracle_cache[-1] + (1 if _oracle_cache[-1] == 2 else 2) if _oracle_cache else 2
        while True:
            isq = math.isqrt(n)
            composite = False
            for p in _oracle_cache:
                if p > isq:
                    break
                if n % p == 0:
                    composite = True
                    break
            if not composite:
                break
            n += 1 if n == 2 else 2
        _oracle_cache.append(n)
    return _oracle_cache[:m]


def direct_weights(edges, vertex_count, labels) -> list[int]:
    """Straight summation of incident labels, for cross-checking reports."""
    weights = [0] * vertex_count
    for (u, v), label in zip(edges, labels):
        weights[u] += label
        weights[v] += label
    return weights
