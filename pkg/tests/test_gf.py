import numpy as np
import pytest
from sympy import primefactors

from flagdesigns.core.gf import (
    element_power,
    field_build,
    frobenius_perm,
    galois_field,
    is_square,
    mobius_images,
    pgl2_group,
    primitive_element,
    psl2_group,
)
from flagdesigns.core.permcore import conjugate, perm_order, transitivity_degree
from flagdesigns.utils.arith import prime_power, prime_powers
from flagdesigns.utils.errors import InputError


def test_prime_field():
    fs = field_build(7, 1)
    assert (fs.p, fs.e, fs.q) == (7, 1, 7)
    assert len(galois_field(fs).elements) == 7


def test_gf4_modulus():
    assert field_build(2, 2).modulus == (1, 1, 1)


def test_gf9_multiplicative_group_is_cyclic():
    fs = field_build(3, 2)
    omega = primitive_element(fs)
    powers = {element_power(fs, omega, i) for i in range(8)}
    assert powers == set(range(1, 9))
    assert element_power(fs, omega, 8) == 1


def test_squares():
    fs = field_build(7, 1)
    assert [a for a in range(1, 7) if is_square(fs, a)] == [1, 2, 4]


@pytest.mark.parametrize("p, e", [(4, 1), (6, 2), (2, 0), (2, 17)])
def test_field_build_rejects(p, e):
    with pytest.raises(InputError):
        field_build(p, e)


@pytest.mark.parametrize("p, e, order", [(5, 1, 60), (2, 3, 504), (11, 1, 660), (3, 2, 360)])
def test_psl2_order(p, e, order):
    group = psl2_group(field_build(p, e))
    assert group.degree == p**e + 1
    assert group.order == order


def test_psl2_is_2transitive():
    assert transitivity_degree(psl2_group(field_build(11, 1)), 2) == 2


@pytest.mark.parametrize("p, e, order", [(5, 1, 120), (3, 2, 720), (2, 2, 60)])
def test_pgl2_order(p, e, order):
    assert pgl2_group(field_build(p, e)).order == order


def test_pgl2_equals_psl2_in_characteristic_two():
    fs = field_build(2, 2)
    assert set(pgl2_group(fs).as_sympy().generate()) == set(psl2_group(fs).as_sympy().generate())


def test_small_q_rejected():
    with pytest.raises(InputError):
        psl2_group(field_build(3, 1))


def test_frobenius():
    assert frobenius_perm(field_build(7, 1)).array_form == list(range(8))
    for e in (2, 3):
        sigma = frobenius_perm(field_build(2, e))
        fixed = [x for x, y in enumerate(sigma.array_form) if x == y]
        assert perm_order(sigma) == e
        assert len(fixed) == 3
        assert 2**e in fixed


def test_mobius():
    fs = field_build(5, 1)
    assert mobius_images(fs, 1, 1, 0, 1) == [1, 2, 3, 4, 0, 5]
    assert mobius_images(fs, 0, 4, 1, 0) == [5, 4, 2, 3, 1, 0]
    with pytest.raises(InputError):
        mobius_images(fs, 1, 2, 2, 4)


@pytest.mark.parametrize("q", prime_powers(2, 64))
def test_field_axioms(q):
    fs = field_build(*prime_power(q))
    x = galois_field(fs).elements
    assert len(x) == q
    a, b, c = x[:, None, None], x[None, :, None], x[None, None, :]
    assert np.all(a * (b + c) == a * b + a * c)
    assert np.all((a * b) * c == a * (b * c))
    assert np.all(x + (-x) == 0)
    nonzero = x[1:]
    assert np.all(nonzero * nonzero**-1 == 1)
    omega = primitive_element(fs)
    assert all(element_power(fs, omega, (q - 1) // r) != 1 for r in primefactors(q - 1))


@pytest.mark.parametrize("p, e", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 1)])
def test_frobenius_normalizes_psl2(p, e):
    fs = field_build(p, e)
    sigma = frobenius_perm(fs)
    group = psl2_group(fs)
    for g in group.generators:
        assert group.as_sympy().contains(conjugate(g, sigma))
