import random

import pytest

from flagdesigns.core.permcore import (
    PermGroup,
    block_action,
    compose,
    conjugate,
    make_permutation,
    orbit,
    orbits,
    point_stabilizer,
    set_image,
    transitivity_degree,
)
from flagdesigns.utils.errors import InputError, NotAutomorphismError

CYCLE11 = [(x + 1) % 11 for x in range(11)]


def test_identity_group():
    group = PermGroup(5, [])
    assert group.order == 1
    assert orbit(group, 3) == {3}
    assert point_stabilizer(group, 2).order == 1
    assert transitivity_degree(group, 3) == 0


def test_cycle_is_transitive():
    group = PermGroup(11, [CYCLE11])
    assert orbit(group, 0) == set(range(11))
    assert group.order == 11
    assert orbits(group) == [list(range(11))]


def test_orbits_sorted():
    group = PermGroup(6, [[1, 0, 2, 4, 5, 3]])
    assert orbits(group) == [[0, 1], [2], [3, 4, 5]]


def test_mathieu_orders(m11, m23):
    assert orbit(m11, 0) == set(range(11))
    assert m11.order == 7920
    assert m23.order == 10200960
    assert point_stabilizer(m11, 0).order == 720
    assert point_stabilizer(m23, 0).order == 443520


def test_mathieu_transitivity(m11, m23):
    assert transitivity_degree(m11, 5) == 4
    assert transitivity_degree(m23, 5) == 4


def test_set_image():
    assert set_image(make_permutation(range(5)), [1, 2, 3]) == (1, 2, 3)
    assert set_image(make_permutation(CYCLE11), [0, 1, 2, 3, 4]) == (1, 2, 3, 4, 5)
    assert set_image(make_permutation(CYCLE11), [10, 3]) == (0, 4)


def test_compose_and_conjugate():
    f = make_permutation([1, 2, 0, 3])
    g = make_permutation([0, 1, 3, 2])
    fg = compose(f, g).array_form
    assert fg == [f.array_form[g.array_form[x]] for x in range(4)]
    h = conjugate(g, f).array_form
    assert all(h[f.array_form[x]] == f.array_form[g.array_form[x]] for x in range(4))


def test_block_action_rejects_non_automorphism():
    group = PermGroup(4, [[1, 0, 2, 3]])
    assert block_action(group, [(0, 1), (2, 3)]) == [[0, 1]]
    with pytest.raises(NotAutomorphismError):
        block_action(group, [(0, 2), (1, 3)])


@pytest.mark.parametrize("images", [[0, 0, 1], [1, 2, 3], [0, 2]])
def test_make_permutation_rejects_non_bijection(images):
    with pytest.raises(InputError):
        make_permutation(images)


def test_bad_arguments():
    group = PermGroup(4, [[1, 2, 3, 0]])
    with pytest.raises(InputError):
        orbit(group, 4)
    with pytest.raises(InputError):
        transitivity_degree(group, 5)
    with pytest.raises(InputError):
        PermGroup(5, [[1, 2, 3, 0]])
    with pytest.raises(InputError):
        set_image(make_permutation(range(3)), [3])


AGL17 = PermGroup(7, [[(x + 1) % 7 for x in range(7)], [3 * x % 7 for x in range(7)]])
S5 = PermGroup(5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]])
INTRANSITIVE = PermGroup(6, [[1, 0, 2, 4, 5, 3]])
C11 = PermGroup(11, [CYCLE11])


@pytest.mark.parametrize("seed", range(5))
def test_order_ignores_generator_order(m11, m23, seed):
    rng = random.Random(seed)
    for group in (m11, m23, AGL17):
        gens = list(group.generators)
        rng.shuffle(gens)
        assert PermGroup(group.degree, gens).order == group.order


def test_orbit_stabilizer_every_point(m11):
    for group in (m11, AGL17, S5, INTRANSITIVE, C11):
        for x in range(group.degree):
            assert point_stabilizer(group, x).order * len(orbit(group, x)) == group.order


def _stabilizers_transitive(group: PermGroup) -> bool:
    for x in range(group.degree):
        stabilizer = point_stabilizer(group, x)
        y = 1 if x == 0 else 0
        if len(orbit(stabilizer, y)) != group.degree - 1:
            return False
    return True


@pytest.mark.parametrize("name", ["AGL17", "S5", "INTRANSITIVE", "C11", "M11"])
def test_two_transitive_iff_stabilizers_transitive(m11, name):
    group = {"AGL17": AGL17, "S5": S5, "INTRANSITIVE": INTRANSITIVE, "C11": C11, "M11": m11}[name]
    assert (transitivity_degree(group, 2) >= 2) == _stabilizers_transitive(group)
    assert _stabilizers_transitive(group) == (name in ("AGL17", "S5", "M11"))
