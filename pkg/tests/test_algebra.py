import pytest
from hypothesis import given, strategies as st

from nappiwitten.algebra import (A, B, C, D, GENERATORS, K, Mode, a, b, bracket,
                                 bracket_combination, c, d, form, mode, mode_from_json,
                                 mode_to_json, parse_mode, rho, sigma, sigma_combination)
from nappiwitten.errors import InvalidMode, NotARationalSquare
from nappiwitten.scalars import Q

modes = st.one_of(st.just(K), st.builds(Mode, st.sampled_from(GENERATORS), st.integers(-4, 4)))


def combo_add(*combos):
    out = {}
    for cmb in combos:
        for k, v in cmb.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def test_bracket_examples():
    assert bracket(a(1), b(-1)) == {c(0): 1, K: 1}
    assert bracket(c(2), d(-2)) == {K: 2}
    assert bracket(d(2), b(3)) == {b(5): -1}
    assert bracket(c(1), a(0)) == {}


def test_form_table_is_symmetric_and_total():
    for x in GENERATORS:
        for y in GENERATORS:
            assert form(x, y) == form(y, x)
    assert form(A, B) == form(C, D) == 1
    assert form(A, A) == form(C, C) == form(A, C) == form(B, D) == 0


@given(modes, modes)
def test_antisymmetry(x, y):
    assert combo_add(bracket(x, y), bracket(y, x)) == {}


@given(modes, modes, modes)
def test_jacobi(x, y, z):
    total = combo_add(bracket_combination({x: 1}, bracket(y, z)),
                      bracket_combination({y: 1}, bracket(z, x)),
                      bracket_combination({z: 1}, bracket(x, y)))
    assert total == {}


@given(modes)
def test_centrality(x):
    assert bracket(K, x) == {} and bracket(x, K) == {}


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_c_modes_commute(m, n):
    assert bracket(c(m), c(n)) == {}


def test_sigma_examples():
    assert sigma(a(3)) == {b(3): 1}
    assert sigma(c(0)) == {c(0): -1}
    assert sigma_combination(sigma(d(-2))) == {d(-2): 1}
    assert sigma(K) == {K: 1}


@given(modes, modes)
def test_sigma_is_an_automorphism(x, y):
    lhs = sigma_combination(bracket(x, y))
    rhs = bracket_combination(sigma(x), sigma(y))
    assert lhs == rhs


@given(modes)
def test_sigma_involution(x):
    assert sigma_combination(sigma(x)) == {x: 1}


def test_rho_examples():
    assert rho(4, [a(-1)]) == (2, (a(-1),))
    assert rho(9, [c(-1), b(-2)]) == (27, (c(-1), b(-2)))
    word = (d(-2), c(-1), a(-1), b(-3))
    assert rho(1, word) == (1, word)
    assert rho(Q(1, 4), [a(-1), b(-1), c(-1)]) == (Q(1, 16), (a(-1), b(-1), c(-1)))


@pytest.mark.parametrize("ell", [2, 3, Q(1, 2), -4, 0])
def test_rho_rejects_non_squares(ell):
    with pytest.raises(NotARationalSquare):
        rho(ell, [a(-1)])


def test_mode_json_and_parse():
    for x in (a(-3), b(0), c(2), d(-1), K):
        assert mode_from_json(mode_to_json(x)) == x
        assert parse_mode(repr(x)) == x
    assert mode_to_json(a(-3)) == ["a", -3]
    assert mode_to_json(K) == "K"
    with pytest.raises(InvalidMode):
        mode_from_json(["e", 1])
    with pytest.raises(InvalidMode):
        mode("a", 1.5)


def test_canonical_order_is_d_c_a_b():
    assert sorted([b(-5), a(-1), c(-3), d(0)]) == [d(0), c(-3), a(-1), b(-5)]
    assert a(-2) < a(-1)
