"""Exact-arithmetic core: SNF, subgroups, annihilators, socles."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edcalc import abelian
from edcalc.abelian import (CyclicDecomposition, GroupElement, annihilator,
                            determinant, element, element_in_span,
                            element_order, mat_mul, pairing_num,
                            smith_normal_form, socle_dual, span_closure,
                            subgroup_elements, subgroup_structure)
from edcalc.errors import MalformedElement, TooLarge, TrivialSocle


def _random_matrix(rng, rows, cols, lo=-50, hi=50):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def _check_snf(a):
    d, u, v = smith_normal_form(a)
    assert mat_mul(mat_mul(u, a), v) == d
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    for i in range(len(d)):
        for j in range(len(d[0])):
            if i != j:
                assert d[i][j] == 0
    for i in range(len(diag) - 1):
        assert diag[i] >= 0
        if diag[i] != 0:
            assert diag[i + 1] % diag[i] == 0
        else:
            assert diag[i + 1] == 0
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1


def test_snf_random_matrices():
    rng = random.Random(20240817)
    for _ in range(200):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        _check_snf(_random_matrix(rng, rows, cols))


@given(st.lists(st.lists(st.integers(-1000, 1000), min_size=1, max_size=5),
                min_size=1, max_size=5).filter(
                    lambda m: len({len(r) for r in m}) == 1))
@settings(max_examples=150, deadline=None)
def test_snf_hypothesis(m):
    _check_snf(m)


def test_snf_known_values():
    d, _, _ = smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]
    d, _, _ = smith_normal_form([[0, 0], [0, 0]])
    assert [d[0][0], d[1][1]] == [0, 0]


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 4)
        m = _random_matrix(rng, n, n, -9, 9)

        def det(mm):
            if len(mm) == 1:
                return mm[0][0]
            return sum((-1) ** j * mm[0][j] *
                       det([row[:j] + row[j + 1:] for row in mm[1:]])
                       for j in range(len(mm)))

        assert determinant(m) == det(m)


def test_element_arithmetic():
    amb = CyclicDecomposition((4, 2))
    a = element(amb, (3, 1))
    b = element(amb, (2, 1))
    assert abelian.add(amb, a, b).coords == (1, 0)
    assert abelian.scale(amb, 3, a).coords == (1, 1)
    assert element_order(amb, a) == 4
    assert element_order(amb, abelian.zero(amb)) == 1
    assert pairing_num(amb, a, b) == (3 * 2 * 1 + 1 * 1 * 2) % 4
    with pytest.raises(MalformedElement):
        element(amb, (1, 2, 3))


@given(st.integers(2, 12), st.integers(2, 12),
       st.integers(0, 200), st.integers(0, 200))
def test_pairing_bilinear(d1, d2, x, y):
    amb = CyclicDecomposition((d1, d2))
    a = element(amb, (x, y))
    b = element(amb, (y, x))
    s = abelian.add(amb, a, b)
    chi = element(amb, (1, 1))
    big = pairing_num(amb, chi, s)
    assert big == (pairing_num(amb, chi, a) + pairing_num(amb, chi, b)) \
        % (amb.orders[0] * amb.orders[1] // __import__("math").gcd(d1, d2))


def test_subgroup_structure_matches_closure():
    rng = random.Random(99)
    for _ in range(60):
        orders = tuple(rng.choice([2, 2, 3, 4, 8, 9]) for _ in range(rng.randint(1, 3)))
        amb = CyclicDecomposition(orders)
        gens = [element(amb, [rng.randrange(d) for d in orders])
                for _ in range(rng.randint(1, 3))]
        s = subgroup_structure(amb, gens)
        closure = span_closure(amb, gens)
        assert s.order == len(closure)
        # basis elements have the advertised orders and generate the subgroup
        for b, d in zip(s.basis, s.structure):
            assert element_order(amb, b) == d
        assert len(span_closure(amb, s.basis)) == len(closure)
        # enumeration is exact and duplicate-free
        elems = subgroup_elements(s)
        assert len(elems) == s.order
        assert {el.coords for _, el in elems} == closure


def test_annihilator_order_law():
    rng = random.Random(7)
    for _ in range(60):
        orders = tuple(rng.choice([2, 3, 4, 9]) for _ in range(rng.randint(1, 3)))
        amb = CyclicDecomposition(orders)
        mu = [element(amb, [rng.randrange(d) for d in orders])
              for _ in range(rng.randint(0, 2))]
        ann = annihilator(amb, mu)
        mu_order = len(span_closure(amb, mu))
        assert ann.order * mu_order == amb.order
        # every annihilator element really pairs to zero with every generator
        for _, chi in subgroup_elements(ann):
            for g in mu:
                assert pairing_num(amb, chi, g) == 0


def test_double_annihilator():
    rng = random.Random(13)
    for _ in range(40):
        orders = tuple(rng.choice([2, 4, 8]) for _ in range(rng.randint(1, 3)))
        amb = CyclicDecomposition(orders)
        if amb.order > 256:
            continue
        mu = [element(amb, [rng.randrange(d) for d in orders])]
        back = annihilator(amb, annihilator(amb, mu).basis)
        assert {el.coords for _, el in subgroup_elements(back)} \
            == span_closure(amb, mu)


def test_element_in_span_agrees_with_closure():
    rng = random.Random(21)
    for _ in range(60):
        orders = tuple(rng.choice([2, 3, 4, 6]) for _ in range(2))
        amb = CyclicDecomposition(orders)
        gens = [element(amb, [rng.randrange(d) for d in orders])
                for _ in range(rng.randint(0, 2))]
        closure = span_closure(amb, gens)
        target = element(amb, [rng.randrange(d) for d in orders])
        assert element_in_span(amb, gens, target) == (target.coords in closure)


def test_socle_dual():
    amb = CyclicDecomposition((4,))
    s = subgroup_structure(amb, [element(amb, (1,))])
    structure, restrict = socle_dual(s, 2)
    assert structure.orders == (2,)
    assert restrict(element(amb, (1,))).coords == (1,)
    assert restrict(element(amb, (2,))).coords == (0,)
    with pytest.raises(TrivialSocle):
        socle_dual(s, 3)


def test_enumeration_cap():
    amb = CyclicDecomposition((2,) * 21)
    gens = [element(amb, tuple(int(i == j) for j in range(21))) for i in range(21)]
    s = subgroup_structure(amb, gens)
    with pytest.raises(TooLarge):
        subgroup_elements(s)
