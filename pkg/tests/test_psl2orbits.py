import pytest

from flagdesigns.core.permcore import PermGroup
from flagdesigns.core.psl2orbits import (
    brute_profile,
    closed_form_profile,
    construct_subgroup,
    format_subgroup,
    parse_subgroup,
    psl2_context,
    subgroup_order,
    valid_specs,
)
from flagdesigns.models import OrbitProfile, SubgroupSpec
from flagdesigns.utils.arith import prime_powers
from flagdesigns.utils.errors import InputError, SubgroupAbsentError


def _agree(q: int) -> None:
    ctx = psl2_context(q)
    for spec in valid_specs(ctx):
        closed = closed_form_profile(ctx, spec)
        brute = brute_profile(construct_subgroup(ctx, spec))
        assert closed == brute, f"q={q} {spec.label}: {closed.format()} != {brute.format()}"
        assert closed.mass == q + 1


@pytest.mark.parametrize("q", prime_powers(4, 81))
def test_closed_form_matches_orbits(q):
    _agree(q)


@pytest.mark.parametrize("q", [121, 125, 128])
def test_closed_form_matches_orbits_large(q):
    _agree(q)


@pytest.mark.parametrize(
    "q, text, counts",
    [
        (7, "dihedral:3", {2: 1, 6: 1}),
        (11, "a5", {12: 1}),
        (9, "pgl2:3", {4: 1, 6: 1}),
        (8, "semi:8:7", {1: 1, 8: 1}),
        (13, "cyclic:7", {7: 2}),
        (13, "cyclic:3", {1: 2, 3: 4}),
        (16, "ea:4", {1: 1, 4: 4}),
    ],
)
def test_closed_form_examples(q, text, counts):
    assert closed_form_profile(psl2_context(q), parse_subgroup(text, q)).counts == counts


def test_constructed_orders():
    assert construct_subgroup(psl2_context(9), SubgroupSpec(kind="a5")).order == 60
    assert construct_subgroup(psl2_context(8), SubgroupSpec(kind="semi", qbar=8, c=7)).order == 56


def test_identity_subgroup_profile():
    assert brute_profile(PermGroup(6, [])) == OrbitProfile(counts={1: 6})


@pytest.mark.parametrize("q, text", [(11, "s4"), (8, "a4"), (13, "cyclic:5"), (9, "ea:27"), (9, "pgl2:9")])
def test_absent_subgroups(q, text):
    ctx = psl2_context(q)
    spec = parse_subgroup(text, q)
    with pytest.raises(SubgroupAbsentError):
        closed_form_profile(ctx, spec)
    with pytest.raises(SubgroupAbsentError):
        construct_subgroup(ctx, spec)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 16, 25, 27, 49, 64, 81])
def test_fixed_points(q):
    ctx = psl2_context(q)
    for spec in valid_specs(ctx):
        profile = closed_form_profile(ctx, spec)
        if spec.kind == "cyclic" and ctx.plus_half % spec.c:
            assert profile.fixed_points == 2
        if spec.kind == "ea":
            assert profile.fixed_points == 1


def test_valid_specs_parse_back():
    ctx = psl2_context(81)
    for spec in valid_specs(ctx):
        assert parse_subgroup(format_subgroup(spec), 81) == spec
        assert subgroup_order(ctx, spec) > 1


@pytest.mark.parametrize("text", ["foo", "cyclic", "cyclic:x", "semi:8", "a5:1"])
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_subgroup(text, 8)


@pytest.mark.parametrize("q", [2, 3, 6, 12])
def test_context_rejects(q):
    with pytest.raises(InputError):
        psl2_context(q)


def test_context_fields():
    ctx = psl2_context(11)
    assert (ctx.n, ctx.plus_half, ctx.minus_half) == (2, 6, 5)
    assert (ctx.three, ctx.five) == ("plus", "minus")
