"""Prime generation and 1-indexed lookup.

The production generator is a segmented, odd-only sieve of Eratosthenes
backed by numpy boolean segments; it scales to the tens of millions of
primes needed by the largest supported trees. Tests hold an independent
trial-division oracle against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

# Default cap on the number of table entries (2^26 uint64 values = 512 MiB).
DEFAULT_PRIME_CAP = 2**26

# Odd numbers per sieve segment; each segment costs one bool per odd.
_SEGMENT_ODDS = 1 << 22

# m-th prime for m = 1..5, below the analytic bound's validity range.
_SMALL_NTH_PRIME = (2, 3, 5, 7, 11)


@dataclass(frozen=True)
class PrimeTable:
    """The first `count` primes, ascending, with 1-indexed lookup."""

    values: np.ndarray  # uint64, read-only

    @property
    def count(self) -> int:
        return len(self.values)

    def nth(self, i: int) -> int:
        """Return the i-th prime, 1-indexed (nth(1) == 2)."""
        if not 1 <= i <= self.count:
            raise IndexError(f"prime index {i} out of range 1..{self.count}")
        return int(self.values[i - 1])

    def first(self, m: int) -> tuple[int, ...]:
        """Return the first m primes as plain ints."""
        if not 0 <= m <= self.count:
            raise IndexError(f"prefix length {m} out of range 0..{self.count}")
        return tuple(self.values[:m].tolist())

    def to_list(self) -> list[int]:
        return self.values.tolist()

    def __len__(self) -> int:
        return len(self.values)


def is_prime(n: int) -> bool:
    """Trial division up to the integer square root."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def sieve_upper_bound(m: int) -> int:
    """Smallest bound B this package sieves to so that [2, B] holds >= m primes.

    Uses B = m*(ln m + ln ln m), valid for m >= 6; exact small cases below.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m <= len(_SMALL_NTH_PRIME):
        return _SMALL_NTH_PRIME[m - 1]
    return int(m * (math.log(m) + math.log(math.log(m)))) + 1


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit via a plain boolean sieve."""
    if limit < 2:
        return np.empty(0, dtype=np.uint64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.uint64)


def first_m_primes(m: int, *, cap: int = DEFAULT_PRIME_CAP) -> PrimeTable:
    """Return exactly the first m primes, ascending.

    Raises CapacityError (with no partial output) when m exceeds `cap`.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > cap:
        raise CapacityError(f"requested {m} primes exceeds cap of {cap} entries")
    if m == 0:
        return _freeze(np.empty(0, dtype=np.uint64))

    bound = sieve_upper_bound(m)
    if bound <= 2 * _SEGMENT_ODDS:
        return _freeze(_simple_sieve(bound)[:m])

    out = np.empty(m, dtype=np.uint64)
    out[0] = 2
    filled = 1

    base = _simple_sieve(math.isqrt(bound) + 1)
    base_odd = base[1:].astype(np.int64)  # skip 2; evens never enter segments

    low = 3
    while filled < m and low <= bound:
        high = min(low + 2 * _SEGMENT_ODDS, bound + 1)  # exclusive, odd span
        odd_count = (high - low + 1) // 2
        mask = np.ones(odd_count, dtype=bool)
        for p in base_odd:
            p = int(p)
            start = max(p * p, ((low + p - 1) // p) * p)
            if start >= high:
                if p * p >= high:
                    break
                continue
            if start % 2 == 0:
                start += p
            mask[(start - low) // 2 :: p] = False
        idx = np.flatnonzero(mask)
        seg = low + 2 * idx.astype(np.uint64)
        take = min(len(seg), m - filled)
        out[filled : filled + take] = seg[:take]
        filled += take
        low = high

    if filled < m:
        # The analytic bound guarantees this cannot happen for m >= 6.
        raise CapacityError(f"sieve bound {bound} produced only {filled} of {m} primes")
    return _freeze(out)


def _freeze(values: np.ndarray) -> PrimeTable:
    values.setflags(write=False)
    return PrimeTable(values=values)
