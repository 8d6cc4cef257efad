"""Calculators for the three-diagram tensor category of the Mackey Lie algebra.

Simple objects V_{lam,mu,nu} and indecomposable injectives I_{lam,mu,nu} are
labelled by triples of Young diagrams. Everything here reduces to sums of
products of Littlewood-Richardson coefficients:

* ``socle_layer`` gives the k-th semisimple layer of the socle filtration of
  an injective,
* ``ext_dim`` gives dim Ext^q between simples by the closed four-factor
  formula, and ``ext_via_socle`` reads the same number off a socle layer of a
  transposed injective,
* ``hom_dim`` counts dim Hom(X_i, X_j) through composition multiplicities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Union

from .lr import _product_terms, _skew_terms, lr_coefficient
from .partitions import (
    EMPTY,
    Partition,
    enumerate_partitions,
    format_partition,
    num_standard_tableaux,
    parse_partition,
)
from .poset import TripleIndex
from .sym import coproduct, graded_component


class _Triple(NamedTuple):
    lam: Partition
    mu: Partition
    nu: Partition

    def __str__(self) -> str:
        return ":".join(format_partition(x) for x in self)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "nu": list(self.nu)}

    @property
    def sizes(self) -> TripleIndex:
        return TripleIndex(self.lam.size, self.mu.size, self.nu.size)


class SimpleLabel(_Triple):
    """Names the simple object (V*/V_*)_lam (x) V_{mu,nu}."""

    __slots__ = ()


class InjectiveLabel(_Triple):
    """Names the indecomposable injective (V*/V_*)_lam (x) (V^*)_mu (x) V_nu."""

    __slots__ = ()


class PairLabel(NamedTuple):
    """A simple V_{gamma,phi} of the two-diagram category."""

    mu: Partition
    nu: Partition

    def __str__(self) -> str:
        return f"{format_partition(self.mu)}:{format_partition(self.nu)}"

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu)}


Label = Union[SimpleLabel, InjectiveLabel]
Layer = dict  # label -> positive multiplicity


def simple(lam=(), mu=(), nu=()) -> SimpleLabel:
    return SimpleLabel(Partition(lam), Partition(mu), Partition(nu))


def injective(lam=(), mu=(), nu=()) -> InjectiveLabel:
    return InjectiveLabel(Partition(lam), Partition(mu), Partition(nu))


def _parse_triple_text(text: str) -> tuple[Partition, Partition, Partition]:
    pieces = text.split(":")
    if len(pieces) != 3:
        raise ValueError(f"expected a label 'lam:mu:nu', got {text!r}")
    return tuple(parse_partition(x) for x in pieces)


def parse_simple(text: str) -> SimpleLabel:
    return SimpleLabel(*_parse_triple_text(text))


def parse_injective(text: str) -> InjectiveLabel:
    return InjectiveLabel(*_parse_triple_text(text))


def layer_to_json(layer: Layer) -> list[dict]:
    return [{"simple": s.to_json(), "mult": c} for s, c in sorted_layer(layer)]


def _label_key(label: tuple) -> tuple:
    return tuple((p.size, tuple(-x for x in p)) for p in label)


def sorted_layer(layer: Layer) -> list[tuple]:
    return sorted(layer.items(), key=lambda kv: _label_key(kv[0]))


@dataclass
class Filtration:
    injective: InjectiveLabel
    layers: list[Layer] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "injective": self.injective.to_json(),
            "layers": [layer_to_json(layer) for layer in self.layers],
        }


# -- socle filtrations --------------------------------------------------------


@lru_cache(maxsize=None)
def _socle_layer(inj: InjectiveLabel, k: int) -> tuple:
    lam, mu, nu = inj
    out: Counter = Counter()
    for ell in range(k):
        r = k - 1 - ell
        if ell > mu.size or r > nu.size or r > mu.size - ell:
            continue
        for alpha in enumerate_partitions(ell):
            betas = _skew_terms(mu, alpha)
            if not betas:
                continue
            zetas = _product_terms(lam, alpha)
            for delta in enumerate_partitions(r):
                phis = _skew_terms(nu, delta)
                if not phis:
                    continue
                for beta, c_beta in betas:
                    for gamma, c_gamma in _skew_terms(beta, delta):
                        for zeta, c_zeta in zetas:
                            for phi, c_phi in phis:
                                out[SimpleLabel(zeta, gamma, phi)] += (
                                    c_beta * c_gamma * c_zeta * c_phi
                                )
    return tuple(out.items())


def socle_layer(inj: InjectiveLabel, k: int) -> Layer:
    """Multiplicities of simples in soc^k / soc^(k-1) of ``inj`` (k = 1 is the socle)."""
    if k < 1:
        raise ValueError(f"socle layers are numbered from 1, got k={k}")
    return dict(_socle_layer(InjectiveLabel(*inj), k))


def socle_filtration(inj: InjectiveLabel) -> Filtration:
    inj = InjectiveLabel(*inj)
    # layer k is empty once k - 1 exceeds |mu|
    layers = [socle_layer(inj, k) for k in range(1, inj.mu.size + 2)]
    while layers and not layers[-1]:
        layers.pop()
    return Filtration(inj, layers)


def loewy_length(inj: InjectiveLabel) -> int:
    return len(socle_filtration(inj).layers)


# -- Ext between simples ------------------------------------------------------


def block_index(label: tuple) -> int:
    lam, mu, nu = label
    return Partition(lam).size + Partition(mu).size - Partition(nu).size


def simple_index(s: SimpleLabel) -> TripleIndex:
    return TripleIndex(s[0].size, s[1].size, s[2].size)


def ext_dim_formula(src: SimpleLabel, tgt: SimpleLabel, q: int) -> int:
    """The four-factor closed formula for dim Ext^q(src, tgt), evaluated in full.

    No degree or block shortcut is taken, so the result can be used to test
    those vanishing statements.
    """
    lam, mu, nu = src
    lam2, mu2, nu2 = tgt
    mu_t, mu2_t = mu.transpose(), mu2.transpose()
    total = 0
    for ell in range(q + 1):
        r = q - ell
        if ell > mu2.size:
            continue
        for alpha in enumerate_partitions(ell):
            a1 = lr_coefficient(lam2, alpha, lam)
            if not a1:
                continue
            for beta in enumerate_partitions(mu2.size - ell):
                a2 = lr_coefficient(alpha, beta, mu2_t)
                if not a2:
                    continue
                for delta in enumerate_partitions(r):
                    a3 = lr_coefficient(mu_t, delta, beta)
                    if not a3:
                        continue
                    total += a1 * a2 * a3 * lr_coefficient(nu, delta, nu2)
    return total


def ext_dim(src: SimpleLabel, tgt: SimpleLabel, q: int) -> int:
    """dim Ext^q(src, tgt) between simple objects."""
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    src, tgt = SimpleLabel(*src), SimpleLabel(*tgt)
    if q != tgt.mu.size - src.mu.size or block_index(src) != block_index(tgt):
        return 0
    return ext_dim_formula(src, tgt, q)


def ext_via_socle(src: SimpleLabel, tgt: SimpleLabel, q: int) -> int:
    """dim Ext^q(src, tgt) read off as the multiplicity of V_{lam,mu^T,nu}
    in layer q+1 of the injective I_{lam',mu'^T,nu'}."""
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    lam, mu, nu = src
    lam2, mu2, nu2 = tgt
    layer = socle_layer(InjectiveLabel(lam2, mu2.transpose(), nu2), q + 1)
    return layer.get(SimpleLabel(lam, mu.transpose(), nu), 0)


def two_diagram_ext(mu: Partition, nu: Partition, mu2: Partition, nu2: Partition, q: int) -> int:
    """dim Ext^q(V_{mu,nu}, V_{mu',nu'}) in the two-diagram category."""
    mu_t, mu2_t = Partition(mu).transpose(), Partition(mu2).transpose()
    return sum(
        lr_coefficient(mu_t, delta, mu2_t) * lr_coefficient(nu, delta, nu2)
        for delta in enumerate_partitions(q)
    )


# -- the objects X_{m,n,p} ----------------------------------------------------


@lru_cache(maxsize=None)
def _decompose(i: TripleIndex) -> tuple:
    m, n, p = i
    out = []
    for lam in enumerate_partitions(m):
        for mu in enumerate_partitions(n):
            for nu in enumerate_partitions(p):
                mult = (
                    num_standard_tableaux(lam)
                    * num_standard_tableaux(mu)
                    * num_standard_tableaux(nu)
                )
                out.append((InjectiveLabel(lam, mu, nu), mult))
    return tuple(out)


def decompose_X(i: tuple) -> dict[InjectiveLabel, int]:
    """Indecomposable summands of X_{m,n,p} with their Schur-Weyl multiplicities."""
    return dict(_decompose(TripleIndex(*i)))


@lru_cache(maxsize=None)
def _composition_factors(i: TripleIndex) -> Counter:
    total: Counter = Counter()
    for inj, mult in _decompose(i):
        for layer in socle_filtration(inj).layers:
            for s, c in layer.items():
                total[s] += mult * c
    return total


def composition_factors(i: tuple) -> dict[SimpleLabel, int]:
    return dict(_composition_factors(TripleIndex(*i)))


def composition_multiplicity(i: tuple, s: SimpleLabel) -> int:
    """Jordan-Hoelder multiplicity [X_i : s]."""
    return _composition_factors(TripleIndex(*i)).get(SimpleLabel(*s), 0)


def hom_dim(source: tuple, target: tuple) -> int:
    """dim Hom(X_source, X_target).

    Each summand I of X_target is the injective hull of a simple S with
    End(S) = K, so dim Hom(M, I) = [M : S].
    """
    factors = _composition_factors(TripleIndex(*source))
    total = 0
    for inj, mult in _decompose(TripleIndex(*target)):
        c = factors.get(SimpleLabel(*inj), 0)
        if c:
            total += mult * c
    return total


# -- restrictions from the two-diagram categories ----------------------------


def restrict_W_socle(lam: Partition, mu: Partition, nu: Partition, k: int) -> Layer:
    """Layer k of the socle filtration of (V*/V_*)_lam (x) W_{mu,nu}."""
    if k < 1:
        raise ValueError(f"socle layers are numbered from 1, got k={k}")
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    out: Counter = Counter()
    if k - 1 > mu.size:
        return {}
    for alpha in enumerate_partitions(k - 1):
        gammas = _skew_terms(mu, alpha)
        if not gammas:
            continue
        for zeta, c_zeta in _product_terms(lam, alpha):
            for gamma, c_gamma in gammas:
                out[SimpleLabel(zeta, gamma, nu)] += c_zeta * c_gamma
    return dict(out)


def w_socle_from_coproduct(mu: Partition, nu: Partition, k: int) -> Layer:
    """Layer k of W_{mu,nu} read off the (k-1, |mu|-k+1) component of Delta(s_mu)."""
    mu, nu = Partition(mu), Partition(nu)
    if k < 1 or k - 1 > mu.size:
        return {}
    part = graded_component(coproduct(mu), (k - 1, mu.size - k + 1))
    return {SimpleLabel(a, g, nu): c for (a, g), c in part.terms.items()}


def socle2_layer(mu: Partition, nu: Partition, k: int) -> Layer:
    """Layer k of the two-diagram injective (V_*)_mu (x) V_nu."""
    if k < 1:
        raise ValueError(f"socle layers are numbered from 1, got k={k}")
    mu, nu = Partition(mu), Partition(nu)
    out: Counter = Counter()
    for delta in enumerate_partitions(k - 1):
        phis = _skew_terms(nu, delta)
        if not phis:
            continue
        for gamma, c_gamma in _skew_terms(mu, delta):
            for phi, c_phi in phis:
                out[PairLabel(gamma, phi)] += c_gamma * c_phi
    return dict(out)


def labels_up_to(max_boxes: int, cls=SimpleLabel) -> list:
    """All labels (lam, mu, nu) with |lam| + |mu| + |nu| <= max_boxes."""
    out = []
    for total in range(max_boxes + 1):
        for a in range(total + 1):
            for b in range(total - a + 1):
                c = total - a - b
                for lam in enumerate_partitions(a):
                    for mu in enumerate_partitions(b):
                        for nu in enumerate_partitions(c):
                            out.append(cls(lam, mu, nu))
    return out


TRIVIAL = SimpleLabel(EMPTY, EMPTY, EMPTY)
