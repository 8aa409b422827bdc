from fractions import Fraction as F
from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from innercoh.dirichlet import (
    DirichletCharacter,
    conductor,
    deflate,
    enumerate_characters,
    evaluate,
    fiber_size,
    nth_roots,
    primitive_character,
    principal_character,
    unit_group_structure,
)

from oracles import (
    brute_conductor,
    brute_nth_roots,
    brute_order,
    multiplicative_order,
    phi,
    power_fibers,
    units,
)


def test_mod7_structure():
    g = unit_group_structure(7)
    assert g.orders == (6,)
    assert g.factors[0].generator == 3
    assert multiplicative_order(3, 7) == 6


def test_mod8_structure():
    g = unit_group_structure(8)
    assert g.orders == (2, 2)
    assert [f.generator for f in g.factors] == [7, 5]
    assert {g.element(e) for e in [(0, 0), (1, 0), (0, 1), (1, 1)]} == {1, 3, 5, 7}


def test_mod1_structure():
    g = unit_group_structure(1)
    assert g.factors == ()
    assert g.order == 1 == phi(1)


def test_zero_modulus():
    with pytest.raises(ValueError):
        unit_group_structure(0)


@pytest.mark.parametrize("N", range(1, 121))
def test_structure_is_direct_decomposition(N):
    g = unit_group_structure(N)
    assert g.order == phi(N)
    for f in g.factors:
        assert multiplicative_order(f.generator, N) == f.order
    # every unit has exactly one exponent vector
    seen = {g.element(g.dlog(u)) for u in units(N)}
    assert seen == set(units(N))
    assert all(g.element(g.dlog(u)) == u for u in units(N))


@pytest.mark.parametrize("N,count", [(1, 1), (7, 6), (12, 4)])
def test_enumerate(N, count):
    chars = enumerate_characters(N)
    assert len(chars) == count
    assert chars[0].is_principal
    assert len(set(chars)) == count


def test_evaluate_examples():
    assert evaluate(principal_character(7), 3) == 0
    chi = DirichletCharacter(7, (1,))
    assert evaluate(chi, 3) == F(1, 6)
    for chi in enumerate_characters(12):
        assert evaluate(chi, 6) is None


def test_conductor_examples():
    assert conductor(principal_character(8)) == 1
    quad = DirichletCharacter(9, (3,))
    assert quad.order == 2
    assert [a for a in units(9) if evaluate(quad, a) == 0] == [1, 4, 7]
    assert conductor(quad) == 3 == brute_conductor(quad)
    assert conductor(DirichletCharacter(7, (1,))) == 7


@pytest.mark.parametrize("N", range(1, 61))
def test_conductor_and_order_brute_force(N):
    for chi in enumerate_characters(N):
        c = conductor(chi)
        assert c == brute_conductor(chi)
        assert N % c == 0
        assert chi.order == brute_order(chi)


@pytest.mark.parametrize("M,N", [(3, 5), (4, 9), (8, 3), (5, 7), (4, 15)])
def test_conductor_multiplicative(M, N):
    # characters mod MN are products of characters mod M and mod N
    for chi in enumerate_characters(M * N):
        left = [c for c in enumerate_characters(M) if all(
            evaluate(chi, u) == evaluate(c, u % M) for u in units(M * N) if u % N == 1)]
        right = [c for c in enumerate_characters(N) if all(
            evaluate(chi, u) == evaluate(c, u % N) for u in units(M * N) if u % M == 1)]
        assert len(left) == len(right) == 1
        assert conductor(chi) == conductor(left[0]) * conductor(right[0])


@pytest.mark.parametrize("N", [8, 9, 12, 16, 24, 45, 60])
def test_primitive_character_induces(N):
    for chi in enumerate_characters(N):
        prim = primitive_character(chi)
        assert prim.modulus == conductor(chi)
        assert conductor(prim) == prim.modulus
        for a in units(N):
            assert evaluate(chi, a) == evaluate(prim, a)


def test_deflate_bounds():
    chi = DirichletCharacter(7, (1,))
    with pytest.raises(ValueError):
        deflate(chi, 1)


def test_nth_root_examples():
    for chi in enumerate_characters(7):
        assert len(nth_roots(chi, 5)) == 1
    roots = nth_roots(principal_character(7), 3)
    assert sorted(r.exponents for r in roots) == [(0,), (2,), (4,)]
    assert nth_roots(DirichletCharacter(8, (1, 0)), 2) == []


def test_nth_roots_rejects_bad_exponent():
    with pytest.raises(ValueError):
        nth_roots(principal_character(5), 0)


@pytest.mark.parametrize("N", range(1, 61))
@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_nth_roots_partition_and_brute_force(N, n):
    chars = enumerate_characters(N)
    total = 0
    size = prod(gcd(n, m) for m in unit_group_structure(N).orders)
    assert fiber_size(N, n) == size
    fibers = power_fibers(N, n)
    for chi in chars:
        roots = nth_roots(chi, n)
        assert sorted(r.exponents for r in roots) == sorted(
            r.exponents for r in brute_nth_roots(chi, n, fibers))
        assert len(roots) in (0, size)
        total += len(roots)
    assert total == phi(N)


@given(st.integers(1, 80), st.data())
def test_evaluate_multiplicative(N, data):
    chi = data.draw(st.sampled_from(enumerate_characters(N)))
    a = data.draw(st.sampled_from(units(N)))
    b = data.draw(st.sampled_from(units(N)))
    assert evaluate(chi, a * b) == (evaluate(chi, a) + evaluate(chi, b)) % 1


@given(st.integers(1, 80), st.data())
def test_zero_off_units(N, data):
    chi = data.draw(st.sampled_from(enumerate_characters(N)))
    a = data.draw(st.integers(-500, 500))
    assert (evaluate(chi, a) is None) == (gcd(a, N) != 1)


def test_json():
    chi = DirichletCharacter(9, (3,))
    assert chi.to_json() == '{"modulus": 9, "exponents": [3], "conductor": 3, "order": 2}'
    assert DirichletCharacter.from_dict(chi.to_dict()) == chi


def test_exponent_count_checked():
    with pytest.raises(ValueError):
        DirichletCharacter(8, (1,))
