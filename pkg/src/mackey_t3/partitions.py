"""Young diagrams: parsing, transpose, containment, enumeration and hook lengths."""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class PartitionError(ValueError):
    """Malformed partition text or an invalid sequence of row lengths."""


class Partition(tuple):
    """A Young diagram stored as a weakly decreasing tuple of positive row lengths.

    ``Partition()`` is the empty diagram. Being a tuple, instances hash and
    compare like the row-length tuple, so they work directly as dict keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"row lengths must be integers, got {p!r}")
            if p < 1:
                raise PartitionError(f"row lengths must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise PartitionError(f"rows must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(o <= s for s, o in zip(self, other))

    def to_json(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``"0"`` (the empty diagram) or comma-separated row lengths.

    Trailing zero rows are accepted as padding, so ``"2,0"`` parses as (2).
    """
    text = text.strip()
    if not text:
        raise PartitionError("empty partition text; use '0' for the empty diagram")
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    while values and values[-1] == 0:
        values.pop()
    if any(v < 0 for v in values):
        raise PartitionError(f"negative row length in {text!r}")
    return Partition(values)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"


def transpose(lam: Partition) -> Partition:
    return Partition(lam).transpose()


def size(lam: Partition) -> int:
    return sum(lam)


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``mu`` fits inside the diagram of ``lam``."""
    return Partition(lam).contains(Partition(mu))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        raise PartitionError(f"cannot enumerate partitions of negative n={n}")
    return list(_partitions_cached(n))


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = transpose(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


@lru_cache(maxsize=None)
def _num_syt(lam: Partition) -> int:
    n = size(lam)
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    count, rem = divmod(factorial(n), denom)
    if rem:
        raise ArithmeticError(f"hook product does not divide {n}! for {lam}")
    return count


def num_standard_tableaux(lam: Partition) -> int:
    """Number f^lam of standard Young tableaux of shape ``lam`` (hook length formula).

    Python integers are unbounded, so there is no overflow to detect here.
    """
    return _num_syt(Partition(lam))
