"""Enumeration streams and exact counts for partitions graded by perimeter.

Perimeter-graded enumeration runs over boundary words: the words of length
n + 1 (first letter E, last letter N, the n - 1 letters in between free) are
exactly the partitions with perimeter n, so sweeping a counter from 0 to
2^(n-1) - 1 visits each such partition once.  Counting never overflows:
everything is a Python int.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import (
    ConstraintClass,
    DISTINCT,
    Partition,
    UNRESTRICTED,
    parts_are_member,
)
from .profile import parts_from_word_bits


class InvalidKeyForClass(ValueError):
    pass


@dataclass(frozen=True)
class LargestPart:
    value: int


@dataclass(frozen=True)
class NumParts:
    value: int


@dataclass(frozen=True)
class Rank:
    value: int


RefinementKey = LargestPart | NumParts | Rank


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside the triangle 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def fibonacci(n: int) -> int:
    """F(0) = 0, F(1) = F(2) = 1; exactly the count of distinct-part
    partitions with perimeter n for n >= 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


_CACHE_PERIMETER_LIMIT = 20


@lru_cache(maxsize=None)
def _parts_by_perimeter_cached(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(_iter_parts_by_perimeter(n), reverse=True))


def _iter_parts_by_perimeter(n: int):
    for bits in range(1 << (n - 1)):
        # middle letters of the word; shift left one for the leading E and
        # set the terminal N
        yield parts_from_word_bits(n + 1, (bits << 1) | (1 << n))


def parts_by_perimeter(n: int) -> tuple[tuple[int, ...], ...]:
    """All parts tuples with perimeter ``n``, reverse-lexicographic.

    Cached for small n so that the many verification sweeps share one pass.
    """
    if n < 1:
        raise ValueError("perimeter must be at least 1")
    if n <= _CACHE_PERIMETER_LIMIT:
        return _parts_by_perimeter_cached(n)
    return tuple(sorted(_iter_parts_by_perimeter(n), reverse=True))


def enumerate_by_perimeter(n: int, c: ConstraintClass = UNRESTRICTED) -> Iterator[Partition]:
    """Each partition with perimeter ``n`` in class ``c``, exactly once, in
    reverse-lexicographic part order."""
    for parts in parts_by_perimeter(n):
        if parts_are_member(parts, c):
            yield Partition(parts)


def _gap_count(d: int, n: int) -> int:
    # c(n) = c(n-1) + c(n-d-1) with c(1) = ... = c(d+1) = 1: the expansion of
    # q / (1 - q - q^{d+1}).
    if n <= d + 1:
        return 1
    vals = [0] * (n + 1)
    for i in range(1, min(d + 1, n) + 1):
        vals[i] = 1
    for i in range(d + 2, n + 1):
        vals[i] = vals[i - 1] + vals[i - d - 1]
    return vals[n]


def count_by_perimeter(n: int, c: ConstraintClass) -> int:
    """Exact count of partitions with perimeter ``n`` in class ``c``.

    Closed forms: 2^(n-1) for the unrestricted class, the Fibonacci number
    F(n) for distinct or odd parts, and the gap recurrence
    c(n) = c(n-1) + c(n-d-1) for the parameterized classes.
    """
    if n < 1:
        raise ValueError("perimeter must be at least 1")
    kind = c.kind
    if kind == "any":
        return 1 << (n - 1)
    if kind in ("distinct", "odd"):
        return fibonacci(n)
    return _gap_count(c.d, n)


def _refined_stat(parts: tuple[int, ...], key: RefinementKey) -> int:
    if isinstance(key, LargestPart):
        return parts[0]
    if isinstance(key, NumParts):
        return len(parts)
    if isinstance(key, Rank):
        return parts[0] - len(parts)
    raise InvalidKeyForClass(f"unsupported refinement key {key!r}")


def count_refined(n: int, key: RefinementKey, c: ConstraintClass) -> int:
    """Count the class-``c`` partitions with perimeter ``n`` and the given
    refined statistic.

    Closed forms used where available (and cross-checked by the test
    suite); other combinations fall back to enumeration.  Out-of-range key
    values count 0 rather than raising.
    """
    if n < 1:
        raise ValueError("perimeter must be at least 1")
    if not isinstance(key, (LargestPart, NumParts, Rank)):
        raise InvalidKeyForClass(f"unsupported refinement key {key!r}")
    v = key.value
    if c.kind == "distinct":
        if isinstance(key, NumParts):
            return binom(n - v, v - 1)
        if isinstance(key, LargestPart):
            return binom(v - 1, n - v)
        if (n - 1 - v) % 2 != 0 or v < 0:
            return 0
        return binom((n + v - 1) // 2, v)
    if c.kind == "any" and isinstance(key, LargestPart):
        # the word has v E's, one fixed at the front: choose the rest among
        # the n - 1 free letters
        return binom(n - 1, v - 1)
    return sum(1 for parts in parts_by_perimeter(n) if parts_are_member(parts, c) and _refined_stat(parts, key) == v)


_PARITY_ENUM_LIMIT = 16


def _parity_split_recurrence(n: int) -> tuple[int, int]:
    even, odd = [0, 0, 0], [0, 1, 1]
    for i in range(3, n + 1):
        even.append(even[i - 1] + odd[i - 2])
        odd.append(odd[i - 1] + even[i - 2])
    return even[n], odd[n]


def _parity_split_binomials(n: int) -> tuple[int, int]:
    even = sum(binom(n - 2 * k - 2, 2 * k + 1) for k in range((n + 1) // 2 + 1))
    odd = sum(binom(n - 2 * k - 1, 2 * k) for k in range((n + 1) // 2 + 1))
    return even, odd


@lru_cache(maxsize=None)
def _parity_split_enumeration(n: int) -> tuple[int, int]:
    even = odd = 0
    for parts in parts_by_perimeter(n):
        if parts_are_member(parts, DISTINCT):
            if len(parts) % 2 == 0:
                even += 1
            else:
                odd += 1
    return even, odd


def count_parity_split(n: int) -> tuple[int, int]:
    """Distinct-part partitions with perimeter ``n``, split by the parity of
    the number of parts: (even count, odd count).

    Computed by the coupled recurrence and by the binomial sums, which must
    agree; brute-force enumeration is checked as well while it stays cheap.
    """
    if n < 1:
        raise ValueError("perimeter must be at least 1")
    rec = _parity_split_recurrence(n)
    assert rec == _parity_split_binomials(n), f"parity-split routes disagree at n={n}"
    if n <= _PARITY_ENUM_LIMIT:
        assert rec == _parity_split_enumeration(n), f"parity-split enumeration disagrees at n={n}"
    return rec


_EXCESS_BY_RESIDUE = (0, -1, -1, 0, 1, 1)


def excess_e(n: int) -> int:
    """Even-length minus odd-length count over distinct-part partitions of
    perimeter ``n``: 0, -1 or +1 according to n mod 6."""
    if n < 1:
        raise ValueError("perimeter must be at least 1")
    return _EXCESS_BY_RESIDUE[n % 6]


@lru_cache(maxsize=None)
def partitions_of_size(n: int, distinct: bool = False) -> tuple[tuple[int, ...], ...]:
    """All parts tuples summing to ``n`` (optionally with strictly
    decreasing parts), reverse-lexicographic."""
    if n < 0:
        raise ValueError("size must be non-negative")
    return tuple(_gen_by_size(n, n, distinct))


def _gen_by_size(remaining: int, cap: int, distinct: bool):
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        nxt = first - 1 if distinct else first
        for rest in _gen_by_size(remaining - first, nxt, distinct):
            yield (first,) + rest


def enumerate_by_size(max_size: int, distinct_only: bool = False) -> Iterator[Partition]:
    """All partitions of every size 1..``max_size``, each exactly once,
    sizes ascending and reverse-lexicographic within a size."""
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    for n in range(1, max_size + 1):
        for parts in partitions_of_size(n, distinct_only):
            yield Partition(parts)


def q_eo(r: int, n: int) -> tuple[int, int]:
    """Distinct-part partitions of size ``n`` with largest part plus number
    of parts equal to ``r``, split by length parity: (even, odd)."""
    if r < 1 or n < 1:
        raise ValueError("r and n must be at least 1")
    even = odd = 0
    for parts in partitions_of_size(n, distinct=True):
        if parts[0] + len(parts) == r:
            if len(parts) % 2 == 0:
                even += 1
            else:
                odd += 1
    return even, odd
