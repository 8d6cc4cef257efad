"""Invariant suite over all labels up to a total box count.

Each check walks an exhaustive range and records how many cases it tested and
the first counterexample, if any.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterator, Optional

from . import cat3
from .cat3 import InjectiveLabel, SimpleLabel, labels_up_to
from .partitions import EMPTY, enumerate_partitions
from .poset import defect3, leq3, triples_up_to


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail()

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


@dataclass
class Report:
    max_boxes: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "max_boxes": self.max_boxes,
            "passed": self.passed,
            "invariants": [r.to_json() for r in self.results],
        }


def _filtrations(injectives) -> Iterator[tuple[InjectiveLabel, int, dict]]:
    for inj in injectives:
        for k, layer in enumerate(cat3.socle_filtration(inj).layers, start=1):
            yield inj, k, layer


def check_socle_base(injectives) -> CheckResult:
    res = CheckResult("socle_base")
    for inj in injectives:
        got = cat3.socle_layer(inj, 1)
        res.record(got == {SimpleLabel(*inj): 1}, lambda: f"I={inj}: layer 1 = {got}")
    return res


def check_size_law(injectives) -> CheckResult:
    res = CheckResult("size_law")
    for inj, k, layer in _filtrations(injectives):
        lam, mu, nu = inj
        for s in layer:
            ell = s.lam.size - lam.size
            ok = (
                s.mu.size == mu.size - (k - 1)
                and 0 <= ell <= k - 1
                and nu.size - s.nu.size == (k - 1) - ell
            )
            res.record(ok, lambda: f"I={inj}, k={k}: {s}")
    return res


def check_blocks_in_filtrations(injectives) -> CheckResult:
    res = CheckResult("block_filtration")
    for inj, k, layer in _filtrations(injectives):
        b = cat3.block_index(inj)
        for s in layer:
            res.record(cat3.block_index(s) == b, lambda: f"I={inj}, k={k}: {s}")
    return res


def _q_range(src: SimpleLabel, tgt: SimpleLabel) -> range:
    return range(max(src.mu.size, tgt.mu.size) + 2)


def check_ext(simples) -> list[CheckResult]:
    """Self-duality plus the Koszul, block and poset vanishing statements."""
    dual = CheckResult("self_duality")
    koszul = CheckResult("koszul_degree")
    block = CheckResult("block_obstruction")
    order = CheckResult("poset_obstruction")
    for src in simples:
        for tgt in simples:
            s_idx, t_idx = cat3.simple_index(src), cat3.simple_index(tgt)
            for q in _q_range(src, tgt):
                a = cat3.ext_dim(src, tgt, q)
                b = cat3.ext_via_socle(src, tgt, q)
                dual.record(a == b, lambda: f"Ext^{q}({src}, {tgt}): {a} != {b}")
                raw = cat3.ext_dim_formula(src, tgt, q)
                if not raw:
                    continue
                koszul.record(
                    q == tgt.mu.size - src.mu.size,
                    lambda: f"Ext^{q}({src}, {tgt}) = {raw}",
                )
                block.record(
                    cat3.block_index(src) == cat3.block_index(tgt),
                    lambda: f"Ext^{q}({src}, {tgt}) = {raw}",
                )
                ok = leq3(s_idx, t_idx)
                if ok:
                    d = defect3(s_idx, t_idx)
                    ok = d >= q and (q != 1 or d == 1)
                order.record(ok, lambda: f"Ext^{q}({src}, {tgt}) = {raw}, {s_idx} vs {t_idx}")
    return [dual, koszul, block, order]


def hom_factorial_cases(max_boxes: int) -> Iterator[tuple[str, tuple, tuple, int]]:
    """(rule, source, target, expected dim) for every factorial Hom identity in range."""
    f = factorial
    for m, n, p in triples_up_to(max_boxes):
        src = (m, n, p)
        yield "end", src, src, f(m) * f(n) * f(p)
        if n >= 1 and p >= 1:
            yield "contract", src, (m, n - 1, p - 1), f(m) * f(n) * f(p)
        if n >= 1:
            yield "collapse", src, (m + 1, n - 1, p), f(m + 1) * f(n) * f(p)
        if n >= 2 and p >= 2:
            yield "contract2", src, (m, n - 2, p - 2), f(m) * f(n) * f(p) // 2
        if n >= 2 and p >= 1:
            yield "mixed", src, (m + 1, n - 2, p - 1), f(m + 1) * f(n) * f(p)
        if n >= 2:
            yield "collapse2", src, (m + 2, n - 2, p), f(m + 2) * f(n) * f(p) // 2


def check_hom_factorials(max_boxes: int) -> CheckResult:
    res = CheckResult("hom_factorials")
    for rule, src, tgt, want in hom_factorial_cases(max_boxes):
        got = cat3.hom_dim(src, tgt)
        res.record(got == want, lambda: f"{rule}: Hom(X{src}, X{tgt}) = {got}, want {want}")
    return res


def check_no_upward_homs(max_boxes: int) -> CheckResult:
    res = CheckResult("no_upward_homs")
    triples = triples_up_to(max_boxes)
    for i in triples:
        for j in triples:
            if i != j and leq3(i, j):
                got = cat3.hom_dim(i, j)
                res.record(got == 0, lambda: f"Hom(X{tuple(i)}, X{tuple(j)}) = {got}")
    return res


def check_t2_slice(max_boxes: int) -> CheckResult:
    res = CheckResult("t2_slice")
    for total in range(max_boxes + 1):
        for a in range(total + 1):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(total - a):
                    inj = InjectiveLabel(EMPTY, mu, nu)
                    for k in range(1, mu.size + 3):
                        two = cat3.socle2_layer(mu, nu, k)
                        three = {
                            cat3.PairLabel(s.mu, s.nu): c
                            for s, c in cat3.socle_layer(inj, k).items()
                            if not s.lam
                        }
                        res.record(two == three, lambda: f"mu={mu}, nu={nu}, k={k}")
    return res


def check_derived_ff(simples) -> CheckResult:
    res = CheckResult("derived_full_faithfulness")
    flat = [s for s in simples if not s.lam]
    for src in flat:
        for tgt in flat:
            for q in _q_range(src, tgt):
                a = cat3.ext_dim(src, tgt, q)
                b = cat3.two_diagram_ext(src.mu, src.nu, tgt.mu, tgt.nu, q)
                res.record(a == b, lambda: f"Ext^{q}({src}, {tgt}): {a} != {b}")
    return res


def check_desc(max_boxes: int) -> CheckResult:
    res = CheckResult("desc_consistency")
    for total in range(max_boxes + 1):
        for a in range(total + 1):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(total - a):
                    for k in range(1, mu.size + 3):
                        got = cat3.restrict_W_socle(EMPTY, mu, nu, k)
                        want = cat3.w_socle_from_coproduct(mu, nu, k)
                        res.record(got == want, lambda: f"W[{mu},{nu}] layer {k}")
    return res


def verify_suite(max_boxes: int) -> Report:
    """Run every invariant over labels with at most ``max_boxes`` boxes in total."""
    if max_boxes < 0:
        raise ValueError(f"max_boxes must be nonnegative, got {max_boxes}")
    simples = labels_up_to(max_boxes, SimpleLabel)
    injectives = labels_up_to(max_boxes, InjectiveLabel)
    report = Report(max_boxes)
    report.results.append(check_socle_base(injectives))
    report.results.append(check_size_law(injectives))
    report.results.append(check_blocks_in_filtrations(injectives))
    report.results.extend(check_ext(simples))
    report.results.append(check_hom_factorials(max_boxes))
    report.results.append(check_no_upward_homs(max_boxes))
    report.results.append(check_t2_slice(max_boxes))
    report.results.append(check_derived_ff(simples))
    report.results.append(check_desc(max_boxes))
    return report
