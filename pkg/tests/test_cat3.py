from math import factorial

import pytest

from mackey_t3 import cat3
from mackey_t3.cat3 import (
    PairLabel,
    block_index,
    composition_multiplicity,
    decompose_X,
    ext_dim,
    ext_dim_formula,
    ext_via_socle,
    hom_dim,
    injective,
    labels_up_to,
    loewy_length,
    parse_simple,
    restrict_W_socle,
    simple,
    simple_index,
    socle2_layer,
    socle_filtration,
    socle_layer,
)
from mackey_t3.checks import hom_factorial_cases, verify_suite
from mackey_t3.partitions import EMPTY, enumerate_partitions, num_standard_tableaux

from conftest import P

EXAMPLE_TARGET = simple([1], [1], [1])
EXAMPLE_SOURCES = [simple([2], [], [1]), simple([1, 1], [], [1]), simple([1], [], [])]


def test_socle_layer_examples():
    i111 = injective([1], [1], [1])
    assert socle_layer(i111, 1) == {simple([1], [1], [1]): 1}
    assert socle_layer(i111, 2) == {s: 1 for s in EXAMPLE_SOURCES}
    assert socle_layer(i111, 3) == {}
    for lam, nu in [([], []), ([2], [1]), ([1, 1], [3])]:
        for k in range(2, 5):
            assert socle_layer(injective(lam, [], nu), k) == {}


def test_socle_layer_rejects_k0():
    with pytest.raises(ValueError):
        socle_layer(injective([1], [1], [1]), 0)


def test_socle_filtration_examples():
    assert socle_filtration(injective([], [1], [1])).layers == [
        {simple([], [1], [1]): 1},
        {simple([], [], []): 1, simple([1], [], [1]): 1},
    ]
    assert socle_filtration(injective([2], [], [1, 1])).layers == [{simple([2], [], [1, 1]): 1}]
    assert socle_filtration(injective([], [1], [])).layers == [
        {simple([], [1], []): 1},
        {simple([1], [], []): 1},
    ]
    assert socle_filtration(injective([], [2], [])).layers == [
        {simple([], [2], []): 1},
        {simple([1], [1], []): 1},
        {simple([2], [], []): 1},
    ]


def test_loewy_length():
    assert loewy_length(injective([3], [], [1])) == 1
    assert loewy_length(injective([], [1], [1])) == 2
    assert loewy_length(injective([], [2], [])) == 3
    for inj in labels_up_to(4, cat3.InjectiveLabel):
        assert loewy_length(inj) == inj.mu.size + 1


@pytest.mark.parametrize("src", EXAMPLE_SOURCES)
def test_ext_worked_example(src):
    for q in range(7):
        want = 1 if q == 1 else 0
        assert ext_dim(src, EXAMPLE_TARGET, q) == want
        assert ext_via_socle(src, EXAMPLE_TARGET, q) == want


def test_ext_degree_zero_is_kronecker():
    simples = labels_up_to(3)
    for a in simples:
        for b in simples:
            assert ext_dim(a, b, 0) == int(a == b)
            assert ext_via_socle(a, b, 0) == int(a == b)


def test_ext_rejects_negative_q():
    with pytest.raises(ValueError):
        ext_dim(EXAMPLE_TARGET, EXAMPLE_TARGET, -1)


def test_ext_formula_vanishes_off_degree():
    # the fast path is a shortcut, not a different answer
    simples = labels_up_to(3)
    for a in simples:
        for b in simples:
            for q in range(5):
                assert ext_dim(a, b, q) == ext_dim_formula(a, b, q)


def test_block_index_examples():
    assert block_index(injective([1], [1], [1])) == 1
    assert block_index(simple()) == 0
    assert block_index(injective([], [], [2])) == -2


def test_simple_index_examples():
    assert simple_index(simple([2], [], [1])) == (2, 0, 1)
    assert simple_index(simple()) == (0, 0, 0)
    assert simple_index(EXAMPLE_TARGET) == (1, 1, 1)


def test_decompose_examples():
    assert decompose_X((0, 1, 1)) == {injective([], [1], [1]): 1}
    assert decompose_X((0, 2, 0)) == {injective([], [2], []): 1, injective([], [1, 1], []): 1}
    assert decompose_X((0, 3, 0)) == {
        injective([], [3], []): 1,
        injective([], [2, 1], []): 2,
        injective([], [1, 1, 1], []): 1,
    }


def test_decompose_dimension_count():
    # sum of f^lam f^mu f^nu * (f^lam f^mu f^nu) recovers m! n! p!
    for i in [(2, 1, 0), (1, 2, 1), (0, 0, 3)]:
        total = 0
        for (lam, mu, nu), mult in decompose_X(i).items():
            f = num_standard_tableaux(lam) * num_standard_tableaux(mu) * num_standard_tableaux(nu)
            assert mult == f
            total += mult * f
        assert total == factorial(i[0]) * factorial(i[1]) * factorial(i[2])


def test_composition_multiplicity_examples():
    assert composition_multiplicity((0, 1, 1), simple()) == 1
    assert composition_multiplicity((0, 1, 1), simple([1], [], [1])) == 1
    assert composition_multiplicity((0, 1, 1), simple([1], [], [])) == 0


def test_hom_examples():
    assert hom_dim((0, 1, 1), (0, 0, 0)) == 1
    assert hom_dim((0, 2, 0), (0, 2, 0)) == 2
    assert hom_dim((0, 2, 0), (2, 0, 0)) == 2


def test_hom_factorials():
    for rule, src, tgt, want in hom_factorial_cases(4):
        assert hom_dim(src, tgt) == want, (rule, src, tgt)


def test_no_upward_homs_small():
    assert hom_dim((0, 0, 0), (0, 1, 1)) == 0
    assert hom_dim((1, 0, 1), (0, 1, 1)) == 0


def test_restrict_examples():
    assert restrict_W_socle(EMPTY, P([2]), EMPTY, 3) == {simple([2], [], []): 1}
    lam, mu, nu = P([2, 1]), P([1, 1]), P([1])
    assert restrict_W_socle(lam, mu, nu, 1) == {simple(lam, mu, nu): 1}
    assert restrict_W_socle(P([1]), P([1]), EMPTY, 2) == {
        simple([2], [], []): 1,
        simple([1, 1], [], []): 1,
    }
    assert restrict_W_socle(P([1]), P([1]), EMPTY, 3) == {}


def test_restrict_matches_coproduct_route():
    for n in range(5):
        for mu in enumerate_partitions(n):
            for k in range(1, n + 3):
                assert restrict_W_socle(EMPTY, mu, P([1]), k) == cat3.w_socle_from_coproduct(
                    mu, P([1]), k
                )


def test_socle2_examples():
    assert socle2_layer(P([1]), P([1]), 1) == {PairLabel(P([1]), P([1])): 1}
    assert socle2_layer(P([1]), P([1]), 2) == {PairLabel(EMPTY, EMPTY): 1}
    assert socle2_layer(P([2]), P([1]), 2) == {PairLabel(P([1]), EMPTY): 1}


def test_two_diagram_ext():
    assert cat3.two_diagram_ext(EMPTY, EMPTY, P([1]), P([1]), 1) == 1
    assert cat3.two_diagram_ext(P([1]), EMPTY, P([1]), EMPTY, 0) == 1


def test_label_parsing_and_json():
    s = parse_simple("2,1:0:3")
    assert s == simple([2, 1], [], [3])
    assert str(s) == "2,1:0:3"
    assert s.to_json() == {"lambda": [2, 1], "mu": [], "nu": [3]}
    with pytest.raises(ValueError):
        parse_simple("1:1")


@pytest.mark.parametrize("max_boxes", [0, 3, 4])
def test_verify_suite_passes(max_boxes):
    report = verify_suite(max_boxes)
    assert report.passed, [r for r in report.results if not r.passed]
    names = {r.name for r in report.results}
    assert {"self_duality", "koszul_degree", "hom_factorials", "t2_slice"} <= names


def test_verify_suite_reports_nonvacuous_checks():
    report = verify_suite(3)
    by_name = {r.name: r for r in report.results}
    for name in ["koszul_degree", "poset_obstruction", "hom_factorials", "no_upward_homs"]:
        assert by_name[name].checked > 0
