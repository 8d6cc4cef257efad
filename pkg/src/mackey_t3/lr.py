"""Littlewood-Richardson coefficients.

The main path enumerates LR skew tableaux by backtracking. ``lr_oracle_product``
is an independent check that never looks at skew tableaux: it expands Schur
polynomials into monomials and peels the product back into Schur functions.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .partitions import Partition, enumerate_partitions
from .sym import SymElement


@lru_cache(maxsize=None)
def _lr_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    inner = list(lam) + [0] * (rows - len(lam))
    # reading order of the reverse reading word: top row first, each row right to left
    cells = [(i, j) for i in range(rows) for j in range(nu[i] - 1, inner[i] - 1, -1)]
    tab = [[0] * nu[i] for i in range(rows)]
    counts = [0] * (len(mu) + 1)
    top = len(mu)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = top
        if j + 1 < nu[i]:
            hi = min(hi, tab[i][j + 1])
        lo = 1
        if i > 0 and j >= inner[i - 1]:
            lo = tab[i - 1][j] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            tab[i][j] = v
            total += fill(idx + 1)
            counts[v] -= 1
        tab[i][j] = 0
        return total

    return fill(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of s_nu in s_lam * s_mu."""
    return _lr_count(Partition(lam), Partition(mu), Partition(nu))


@lru_cache(maxsize=None)
def _product_terms(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    terms = []
    for nu in enumerate_partitions(lam.size + mu.size):
        if nu.contains(lam) and nu.contains(mu):
            c = _lr_count(lam, mu, nu)
            if c:
                terms.append((nu, c))
    return tuple(terms)


def lr_expand_product(lam: Partition, mu: Partition) -> SymElement:
    """Schur expansion of s_lam * s_mu."""
    return SymElement(dict(_product_terms(Partition(lam), Partition(mu))))


@lru_cache(maxsize=None)
def _skew_terms(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    """All (gamma, N^outer_{gamma,inner}) with a nonzero coefficient."""
    if not outer.contains(inner):
        return ()
    terms = []
    for gamma in enumerate_partitions(outer.size - inner.size):
        if outer.contains(gamma):
            c = _lr_count(gamma, inner, outer)
            if c:
                terms.append((gamma, c))
    return tuple(terms)


def lr_skew(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """Map gamma -> N^outer_{gamma,inner}, i.e. the Schur expansion of s_{outer/inner}."""
    return dict(_skew_terms(Partition(outer), Partition(inner)))


# -- oracle -----------------------------------------------------------------


def schur_monomials(lam: Partition, nvars: int) -> Counter:
    """Monomial expansion of the Schur polynomial s_lam(x_1..x_nvars).

    Keys are exponent tuples of length ``nvars``; one count per semistandard tableau.
    """
    lam = Partition(lam)
    result: Counter = Counter()
    if len(lam) > nvars:
        return result
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    tab = [[0] * r for r in lam]
    expo = [0] * nvars

    def fill(idx: int) -> None:
        if idx == len(cells):
            result[tuple(expo)] += 1
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = tab[i][j - 1]
        if i > 0:
            lo = max(lo, tab[i - 1][j] + 1)
        # rows below still need strictly larger entries in this column
        hi = nvars - (sum(1 for r in lam[i + 1:] if r > j))
        for v in range(lo, hi + 1):
            tab[i][j] = v
            expo[v - 1] += 1
            fill(idx + 1)
            expo[v - 1] -= 1

    fill(0)
    return result


def _padded(lam: Partition, nvars: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (nvars - len(lam))


def lr_oracle_product(lam: Partition, mu: Partition, nvars: int) -> SymElement:
    """Schur expansion of s_lam * s_mu via monomial multiplication in ``nvars`` variables.

    Only the dominant monomials (exponent vectors that are partitions) of the
    product are accumulated; a symmetric polynomial is determined by them.
    The product is then peeled apart greedily: the lexicographically largest
    dominant monomial with nonzero coefficient c names the next Schur term
    c * s_kappa, whose monomials are subtracted.
    """
    lam, mu = Partition(lam), Partition(mu)
    total = lam.size + mu.size
    if nvars < total or nvars < 1:
        raise ValueError(f"nvars={nvars} is too small for a product of degree {total}")

    dominant = [_padded(k, nvars) for k in enumerate_partitions(total)]
    left = schur_monomials(lam, nvars)
    right = schur_monomials(mu, nvars)
    product: dict[tuple[int, ...], int] = {}
    for kappa in dominant:
        coeff = 0
        for a, ca in left.items():
            rest = tuple(k - x for k, x in zip(kappa, a))
            if min(rest) < 0:
                continue
            cb = right.get(rest)
            if cb:
                coeff += ca * cb
        if coeff:
            product[kappa] = coeff

    out: dict[Partition, int] = {}
    while product:
        lead = max(product)
        c = product[lead]
        shape = Partition(x for x in lead if x)
        out[shape] = c
        monos = schur_monomials(shape, nvars)
        for kappa in dominant:
            k = monos.get(kappa, 0)
            if k:
                left_over = product.get(kappa, 0) - c * k
                if left_over:
                    product[kappa] = left_over
                else:
                    product.pop(kappa, None)
    return SymElement(out)
