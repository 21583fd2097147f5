import random

import pytest

from flagdesigns.core.designs import (
    block_count_identity,
    cam_bounds_ok,
    derived_design,
    divprop_check,
    first_refutation,
    is_flag_transitive,
    is_point_2transitive,
    k_upper_bound,
    params_from,
    verify_steiner,
    verify_steiner_by_subsets,
)
from flagdesigns.core.permcore import PermGroup
from flagdesigns.models import DesignParams, IncidenceStructure
from flagdesigns.utils.errors import InputError, NotAutomorphismError

TRIVIAL = IncidenceStructure(v=5, blocks=((0, 1, 2, 3, 4),))
S5 = PermGroup(5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]])


def _mutated(design: IncidenceStructure) -> IncidenceStructure:
    first = design.blocks[0]
    outside = next(x for x in range(design.v) if x not in first)
    block = tuple(sorted(first[:-1] + (outside,)))
    return IncidenceStructure(v=design.v, blocks=tuple(sorted((block,) + design.blocks[1:])))


@pytest.mark.parametrize("v, k, b, r, lambda2", [(11, 5, 66, 30, 12), (23, 7, 253, 77, 21)])
def test_witt_parameters(v, k, b, r, lambda2):
    params = params_from(4, v, k)
    assert params.admissible
    assert (params.b, params.r, params.lambda2) == (b, r, lambda2)
    assert params.pair_divisibility_ok


def test_inadmissible_parameters():
    params = params_from(4, 12, 5)
    assert not params.admissible
    assert params.r is None
    assert params.value(1) == "165/4"
    assert params.first_failure() == 3
    assert list(params.failures()) == ["lambda_3", "lambda_1"]


def test_params_order_violation():
    with pytest.raises(InputError):
        params_from(4, 5, 6)
    with pytest.raises(InputError):
        params_from(4, 11, 5, 0)


def test_params_model_is_frozen():
    params = params_from(4, 11, 5)
    assert isinstance(params, DesignParams)
    with pytest.raises(ValueError):
        params.v = 12


@pytest.mark.parametrize("v, k", [(11, 5), (23, 7), (64, 10), (65, 10), (10**6 + 1, 1002)])
def test_k_upper_bound(v, k):
    assert k_upper_bound(v) == k


def test_cameron_equality():
    check = cam_bounds_ok(4, 23, 7)
    assert check.ok and check.equality_case
    assert cam_bounds_ok(5, 24, 8).equality_case
    assert not cam_bounds_ok(4, 11, 5).equality_case
    assert not cam_bounds_ok(4, 20, 8).ok


def test_trivial_design():
    assert verify_steiner(TRIVIAL, 4).passed
    derived = derived_design(TRIVIAL, 0)
    assert derived.v == 4 and derived.blocks == ((0, 1, 2, 3),)
    assert verify_steiner(derived, 3).passed


def test_witt_designs_are_steiner(witt11, witt23):
    assert verify_steiner(witt11, 4).value == 330
    assert verify_steiner(witt23, 4).value == 8855
    assert verify_steiner_by_subsets(witt11, 4).passed


def test_mutation_is_detected(witt11):
    broken = _mutated(witt11)
    verdict = verify_steiner(broken, 4)
    assert not verdict.passed
    assert len(verdict.witness) == 4
    assert verdict.witness == verify_steiner_by_subsets(broken, 4).witness


def test_derived_designs(witt11, witt23):
    derived = derived_design(witt11, 0)
    assert (derived.v, derived.k, derived.b) == (10, 4, 30)
    assert verify_steiner(derived, 3).passed
    derived = derived_design(witt23, 5)
    assert (derived.v, derived.k, derived.b) == (22, 6, 77)
    assert verify_steiner(derived, 3).passed


def test_flag_transitivity_trivial():
    verdict = is_flag_transitive(TRIVIAL, S5)
    assert verdict.passed and verdict.value == 5
    assert is_point_2transitive(S5).passed


def test_flag_transitivity_witt(witt11, m11, witt23, m23):
    assert is_flag_transitive(witt11, m11).value == 330
    assert is_flag_transitive(witt23, m23).value == 1771
    assert is_point_2transitive(m11).passed


def test_flag_transitivity_requires_automorphisms(witt11):
    cycle = PermGroup(11, [[1, 0] + list(range(2, 11))])
    with pytest.raises(NotAutomorphismError):
        is_flag_transitive(witt11, cycle)
    with pytest.raises(InputError):
        is_flag_transitive(witt11, S5)


def test_not_point_2transitive():
    assert not is_point_2transitive(PermGroup(5, [[1, 2, 3, 4, 0]])).passed


@pytest.mark.parametrize(
    "v, k, gx, passed",
    [(11, 5, 720, True), (23, 7, 443520, True), (11, 5, 40, False)],
)
def test_divprop(v, k, gx, passed):
    assert divprop_check(params_from(4, v, k), gx).passed is passed


def test_divprop_requires_integral_r():
    with pytest.raises(InputError):
        divprop_check(params_from(4, 12, 5), 720)


def test_block_count_identity(witt11, m11):
    identity = block_count_identity(witt11, m11)
    assert identity["holds"] == 1
    assert identity["order"] == 7920
    assert identity["block_stabilizer"] == 120
    assert identity["pair_stabilizer"] == 72


def test_first_refutation():
    assert first_refutation(params_from(4, 16, 5))["rule"] == "pair-divisibility"
    assert first_refutation(params_from(4, 12, 5)) == {"rule": "admissibility", "lambda_3": "9/2", "lambda_1": "165/4"}
    assert first_refutation(params_from(4, 15, 5), 168) == {"rule": "divisibility-r", "r": "91", "bound": "168"}
    assert first_refutation(params_from(4, 11, 5), 720) is None


def test_first_refutation_cameron():
    params = params_from(4, 57, 12)
    assert params.admissible and params.pair_divisibility_ok
    assert params.b == 798
    assert not cam_bounds_ok(4, 57, 12).ok
    assert first_refutation(params) == {"rule": "cameron", "v_min": "93"}
    assert first_refutation(params_from(4, 23, 7)) is None
    assert first_refutation(params_from(4, 5, 5)) is None


@pytest.mark.parametrize("v", range(6, 400))
def test_chain_identities(v):
    for k in range(5, min(v, 20)):
        params = params_from(4, v, k)
        if not params.admissible:
            continue
        assert params.b * k == v * params.r
        assert params.r * (k - 1) == params.lambda2 * (v - 1)


def _relabel(design: IncidenceStructure, sigma) -> IncidenceStructure:
    blocks = sorted(tuple(sorted(sigma[x] for x in block)) for block in design.blocks)
    return IncidenceStructure(v=design.v, blocks=tuple(blocks))


@pytest.mark.parametrize("seed", range(4))
def test_verify_steiner_relabel(witt11, witt23, seed):
    rng = random.Random(seed)
    for design in (witt11, witt23, _mutated(witt11)):
        sigma = list(range(design.v))
        rng.shuffle(sigma)
        assert verify_steiner(_relabel(design, sigma), 4).passed == verify_steiner(design, 4).passed
