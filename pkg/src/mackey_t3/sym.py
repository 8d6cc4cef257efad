"""The Hopf algebra Sym of symmetric functions in the Schur basis.

Elements are finite integer combinations of Schur functions s_lam; tensors
are combinations of ordered tuples of partitions. Structure constants all
come from Littlewood-Richardson coefficients: the product expands s_lam*s_mu,
and the coefficient of mu (x) nu in the coproduct of s_lam is N^lam_{mu,nu}.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .partitions import EMPTY, Partition, enumerate_partitions, format_partition


def _clean(terms: Mapping) -> dict:
    return {k: int(v) for k, v in terms.items() if v}


class SymElement:
    """Finite combination sum c_lam * s_lam with exact integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, int] | None = None):
        self.terms: dict[Partition, int] = _clean(
            {Partition(k): v for k, v in (terms or {}).items()}
        )

    @classmethod
    def schur(cls, lam: Iterable[int]) -> "SymElement":
        return cls({Partition(lam): 1})

    @classmethod
    def zero(cls) -> "SymElement":
        return cls()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self.terms, key=_sort_key))

    def items(self) -> list[tuple[Partition, int]]:
        return [(k, self.terms[k]) for k in self]

    def coefficient(self, lam: Iterable[int]) -> int:
        return self.terms.get(Partition(lam), 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymElement") -> "SymElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymElement(out)

    def __neg__(self) -> "SymElement":
        return SymElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymElement({k: other * v for k, v in self.terms.items()})
        if isinstance(other, SymElement):
            return product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def degree_part(self, d: int) -> "SymElement":
        return SymElement({k: v for k, v in self.terms.items() if k.size == d})

    def to_json(self) -> list[dict]:
        return [{"partition": list(k), "coeff": v} for k, v in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SymElement":
        out: dict[Partition, int] = {}
        for entry in data:
            key = Partition(entry["partition"])
            out[key] = out.get(key, 0) + int(entry["coeff"])
        return cls(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.items():
            body = f"s[{format_partition(k)}]"
            parts.append(body if v == 1 else f"{v}*{body}")
        return " + ".join(parts)


class SymTensor:
    """Finite combination of pure tensors lam_1 (x) ... (x) lam_arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple, int] | None = None):
        if arity < 2:
            raise ValueError(f"tensor arity must be at least 2, got {arity}")
        self.arity = arity
        clean = {}
        for key, v in (terms or {}).items():
            key = tuple(Partition(p) for p in key)
            if len(key) != arity:
                raise ValueError(f"term {key} does not have arity {arity}")
            clean[key] = v
        self.terms: dict[tuple[Partition, ...], int] = _clean(clean)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, key=lambda key: tuple(_sort_key(p) for p in key)))

    def items(self) -> list[tuple[tuple[Partition, ...], int]]:
        return [(k, self.terms[k]) for k in self]

    def coefficient(self, *parts: Iterable[int]) -> int:
        return self.terms.get(tuple(Partition(p) for p in parts), 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymTensor):
            return self.arity == other.arity and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other: "SymTensor") -> "SymTensor":
        if other.arity != self.arity:
            raise ValueError(f"cannot add tensors of arity {self.arity} and {other.arity}")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymTensor(self.arity, out)

    def to_json(self) -> list[dict]:
        return [{"partitions": [list(p) for p in k], "coeff": v} for k, v in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SymTensor":
        if not data:
            raise ValueError("cannot infer the arity of an empty tensor")
        arity = len(data[0]["partitions"])
        out: dict = {}
        for entry in data:
            key = tuple(Partition(p) for p in entry["partitions"])
            out[key] = out.get(key, 0) + int(entry["coeff"])
        return cls(arity, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.items():
            body = " (x) ".join(f"[{format_partition(p)}]" for p in k)
            parts.append(body if v == 1 else f"{v}*{body}")
        return " + ".join(parts)


def _sort_key(lam: Partition) -> tuple:
    # by degree, then reverse-lexicographic inside a degree
    return (lam.size, tuple(-x for x in lam))


def product(a: SymElement, b: SymElement) -> SymElement:
    from .lr import lr_expand_product

    out: dict[Partition, int] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in lr_expand_product(lam, mu).terms.items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return SymElement(out)


def coproduct(lam: Iterable[int]) -> SymTensor:
    """Delta(s_lam) = sum over (mu, nu) of N^lam_{mu,nu} mu (x) nu."""
    from .lr import lr_skew

    lam = Partition(lam)
    terms: dict = {}
    for d in range(lam.size + 1):
        for nu in enumerate_partitions(d):
            if not lam.contains(nu):
                continue
            for mu, c in lr_skew(lam, nu).items():
                terms[(mu, nu)] = c
    return SymTensor(2, terms)


def apply_coproduct(t: SymTensor, position: int) -> SymTensor:
    """Apply Delta to the tensor factor at ``position``, raising the arity by one."""
    if not 0 <= position < t.arity:
        raise ValueError(f"position {position} out of range for arity {t.arity}")
    out: dict = {}
    for key, c in t.terms.items():
        for (left, right), d in coproduct(key[position]).terms.items():
            new = key[:position] + (left, right) + key[position + 1:]
            out[new] = out.get(new, 0) + c * d
    return SymTensor(t.arity + 1, out)


def iterated_coproduct(lam: Iterable[int], arity: int) -> SymTensor:
    """(Delta (x) id ... ) o Delta applied to s_lam until the tensor has ``arity`` factors."""
    if arity < 2:
        raise ValueError(f"arity must be at least 2, got {arity}")
    t = coproduct(lam)
    while t.arity < arity:
        t = apply_coproduct(t, 0)
    return t


def graded_component(t: SymTensor, degrees: tuple[int, ...]) -> SymTensor:
    """Keep only the terms whose i-th factor has ``degrees[i]`` boxes."""
    degrees = tuple(degrees)
    if len(degrees) != t.arity:
        raise ValueError(f"{len(degrees)} degrees given for a tensor of arity {t.arity}")
    return SymTensor(
        t.arity,
        {k: v for k, v in t.terms.items() if tuple(p.size for p in k) == degrees},
    )


def pairing(a: SymElement, b: SymElement) -> int:
    """The bilinear form in which the Schur functions are orthonormal."""
    return sum(v * b.terms.get(k, 0) for k, v in a.terms.items())


def tensor_pairing(t: SymTensor, factors: tuple[SymElement, ...]) -> int:
    """Pair a tensor factorwise against a tuple of elements and sum."""
    if len(factors) != t.arity:
        raise ValueError("need one element per tensor factor")
    total = 0
    for key, c in t.terms.items():
        term = c
        for p, f in zip(key, factors):
            term *= f.terms.get(p, 0)
            if not term:
                break
        total += term
    return total


ONE = SymElement.schur(EMPTY)
