"""Partition values, their statistics, and part-constraint predicates.

A partition is a non-empty, weakly decreasing sequence of positive integers.
The central statistic here is the *perimeter* ``parts[0] + len(parts) - 1``,
which equals the largest hook length of the Young diagram (the hook of the
top-left cell runs along the whole first row and first column).

All values are immutable and all functions are pure, so everything in this
module is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Rejected input to :func:`make_partition`.

    ``index`` points at the first offending entry, or is ``None`` when the
    problem is not tied to a position (empty input).
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class EmptyPartition(PartitionError):
    pass


class NonPositivePart(PartitionError):
    pass


class NotWeaklyDecreasing(PartitionError):
    pass


def _validate_parts(parts: tuple[int, ...]) -> None:
    if not parts:
        raise EmptyPartition("a partition must have at least one part")
    for i, x in enumerate(parts):
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise NonPositivePart(f"part at index {i} is {x!r}, expected a positive integer", index=i)
    for i in range(1, len(parts)):
        if parts[i] > parts[i - 1]:
            raise NotWeaklyDecreasing(
                f"part at index {i} ({parts[i]}) exceeds the previous part ({parts[i - 1]})", index=i
            )


@dataclass(frozen=True)
class Partition:
    """A non-empty weakly decreasing tuple of positive integers.

    Construct through :func:`make_partition` for friendly coercion; direct
    construction also validates.  Parts beyond about 10**6 are not rejected
    but are outside the supported envelope of the counting routines.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_parts(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def perimeter(self) -> int:
        """Largest hook length: ``parts[0] + length - 1``."""
        return self.parts[0] + len(self.parts) - 1

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self.parts))})"


def make_partition(parts: Sequence[int] | Iterable[int]) -> Partition:
    """Validate ``parts`` and return a :class:`Partition`.

    Raises :class:`EmptyPartition`, :class:`NonPositivePart` or
    :class:`NotWeaklyDecreasing`; the latter two carry the first offending
    index on the exception.
    """
    return Partition(tuple(parts))


_PARAMETTERLESS_KINDS = ("any", "distinct", "odd")
_PARAMETERIZED_KINDS = ("ddistinct", "modone", "gclass")


@dataclass(frozen=True)
class ConstraintClass:
    """A family of partitions selected by a condition on the parts.

    kind:
      ``any``        no restriction;
      ``distinct``   strictly decreasing parts;
      ``odd``        all parts odd;
      ``ddistinct``  consecutive parts differ by at least ``d``;
      ``modone``     all parts congruent to 1 mod ``d + 1``;
      ``gclass``     parts congruent to 1 or ``d + 2`` mod ``2d + 1`` with
                     successive gaps at most ``2d + 1`` (counting a virtual
                     trailing 0), the gap bound strict at parts ``== 1``
                     mod ``2d + 1``.

    ``distinct`` and ``ddistinct`` with d=1 select the same partitions, as do
    ``odd`` and ``modone`` with d=1.
    """

    kind: str
    d: int | None = None

    def __post_init__(self) -> None:
        if self.kind in _PARAMETTERLESS_KINDS:
            if self.d is not None:
                raise ValueError(f"class {self.kind!r} takes no parameter")
        elif self.kind in _PARAMETERIZED_KINDS:
            if not isinstance(self.d, int) or self.d < 1:
                raise ValueError(f"class {self.kind!r} needs an integer parameter d >= 1")
        else:
            raise ValueError(f"unknown constraint class {self.kind!r}")

    def __str__(self) -> str:
        return self.kind if self.d is None else f"{self.kind}:{self.d}"


UNRESTRICTED = ConstraintClass("any")
DISTINCT = ConstraintClass("distinct")
ODD = ConstraintClass("odd")


def d_distinct(d: int) -> ConstraintClass:
    return ConstraintClass("ddistinct", d)


def mod_one(d: int) -> ConstraintClass:
    return ConstraintClass("modone", d)


def g_class(d: int) -> ConstraintClass:
    return ConstraintClass("gclass", d)


def parts_are_member(parts: tuple[int, ...], c: ConstraintClass) -> bool:
    """Membership test on a raw parts tuple (assumed valid).

    This is the hot path for bulk enumeration; :func:`is_member` is the
    public wrapper over :class:`Partition`.
    """
    kind = c.kind
    if kind == "any":
        return True
    if kind == "distinct":
        return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))
    if kind == "odd":
        return all(x & 1 for x in parts)
    if kind == "ddistinct":
        d = c.d
        return all(parts[i] - parts[i + 1] >= d for i in range(len(parts) - 1))
    if kind == "modone":
        m = c.d + 1
        return all(x % m == 1 for x in parts)
    # gclass
    d = c.d
    mod = 2 * d + 1
    alt = (d + 2) % mod
    for x in parts:
        r = x % mod
        if r != 1 and r != alt:
            return False
    # gap condition, including the virtual part 0 after the last part
    prev = parts[0]
    for nxt in list(parts[1:]) + [0]:
        gap = prev - nxt
        if prev % mod == 1:
            if gap >= mod:
                return False
        elif gap > mod:
            return False
        prev = nxt
    return True


def is_member(p: Partition, c: ConstraintClass) -> bool:
    """Does ``p`` belong to the constraint class ``c``?"""
    return parts_are_member(p.parts, c)


def rank(p: Partition) -> int:
    """Largest part minus number of parts; may be negative."""
    return p.parts[0] - len(p.parts)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram (column lengths as parts)."""
    parts = p.parts
    out = []
    for j in range(parts[0]):
        count = 0
        for x in parts:
            if x > j:
                count += 1
            else:
                break
        out.append(count)
    return Partition(tuple(out))


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of every cell, as a ragged row-indexed table.

    The hook of cell (i, j) consists of the cell, its arm (cells to the
    right in row i) and its leg (cells below in column j); the hook length
    is arm + leg + 1.  The maximum sits at cell (0, 0) and equals the
    perimeter.
    """
    parts = p.parts
    col_heights = conjugate(p).parts
    table = []
    for i, row_len in enumerate(parts):
        row = []
        for j in range(row_len):
            arm = row_len - j - 1
            leg = col_heights[j] - i - 1
            row.append(arm + leg + 1)
        table.append(row)
    return table
