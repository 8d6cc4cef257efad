"""Index posets for the two- and three-diagram categories.

Triples (m, n, p) count tensorands of V*/V_*, V^* and V; pairs (m, n) count
tensorands of V_* and V. The defect between comparable indices is the number
of links in a longest chain, found here by search over cover moves.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple


class DefectUndefinedError(ValueError):
    """Raised when a defect is requested for incomparable indices."""


class TripleIndex(NamedTuple):
    m: int
    n: int
    p: int

    def __str__(self) -> str:
        return f"{self.m},{self.n},{self.p}"


class PairIndex(NamedTuple):
    m: int
    n: int

    def __str__(self) -> str:
        return f"{self.m},{self.n}"


def _check_nonnegative(idx: tuple) -> None:
    if any(x < 0 for x in idx):
        raise ValueError(f"index entries must be nonnegative, got {tuple(idx)}")


def parse_triple(text: str) -> TripleIndex:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse triple {text!r}") from None
    if len(values) != 3:
        raise ValueError(f"expected 'm,n,p', got {text!r}")
    _check_nonnegative(values)
    return TripleIndex(*values)


def parse_pair(text: str) -> PairIndex:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse pair {text!r}") from None
    if len(values) != 2:
        raise ValueError(f"expected 'm,n', got {text!r}")
    _check_nonnegative(values)
    return PairIndex(*values)


def leq3(i: tuple, j: tuple) -> bool:
    """Order on triples; the comparison on the first entry is reversed."""
    m, n, p = i
    m2, n2, p2 = j
    return (
        m >= m2
        and m + n <= m2 + n2
        and n <= n2
        and p <= p2
        and m + n - p == m2 + n2 - p2
    )


def covers3(j: tuple) -> list[TripleIndex]:
    """Indices one move below ``j``: contract a V^* against a V, or collapse a V^* onto V*/V_*."""
    m, n, p = j
    out = []
    if n >= 1 and p >= 1:
        out.append(TripleIndex(m, n - 1, p - 1))
    if n >= 1:
        out.append(TripleIndex(m + 1, n - 1, p))
    return out


@lru_cache(maxsize=None)
def _down_set(i: TripleIndex) -> tuple[TripleIndex, ...]:
    seen = {i}
    stack = [i]
    while stack:
        for c in covers3(stack.pop()):
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return tuple(sorted(seen))


def down_set3(i: tuple) -> list[TripleIndex]:
    """All j <= i, in lexicographic order."""
    i = TripleIndex(*i)
    _check_nonnegative(i)
    return list(_down_set(i))


@lru_cache(maxsize=None)
def _longest_chain(i: TripleIndex, j: TripleIndex) -> int:
    if i == j:
        return 0
    best = -1
    for c in covers3(j):
        if leq3(i, c):
            best = max(best, 1 + _longest_chain(i, c))
    return best


def defect3(i: tuple, j: tuple) -> int:
    """Links in a longest chain i < ... < j."""
    i, j = TripleIndex(*i), TripleIndex(*j)
    if not leq3(i, j):
        raise DefectUndefinedError(f"defect undefined: {tuple(i)} is not <= {tuple(j)}")
    d = _longest_chain(i, j)
    if d < 0:
        # every relation should be reachable by moves; anything else is a bug
        raise AssertionError(f"{tuple(i)} <= {tuple(j)} but no chain of moves joins them")
    return d


def defect3_closed_form(i: tuple, j: tuple) -> int:
    """(m - m') + (p' - p); used only to cross-check the chain search."""
    return (i[0] - j[0]) + (j[2] - i[2])


def is_short3(i: tuple, j: tuple) -> bool:
    """True iff a map X_j -> X_i is short, i.e. i <= j with defect 1."""
    return leq3(i, j) and defect3(i, j) == 1


def leq2(i: tuple, j: tuple) -> bool:
    """Generated by (m, n) >= (m - 1, n - 1)."""
    dm, dn = j[0] - i[0], j[1] - i[1]
    return dm == dn and dm >= 0


def defect2(i: tuple, j: tuple) -> int:
    if not leq2(i, j):
        raise DefectUndefinedError(f"defect undefined: {tuple(i)} is not <= {tuple(j)}")
    return j[0] - i[0]


def triples_up_to(total: int) -> list[TripleIndex]:
    return [
        TripleIndex(m, n, p)
        for s in range(total + 1)
        for m in range(s + 1)
        for n in range(s - m + 1)
        for p in [s - m - n]
    ]
