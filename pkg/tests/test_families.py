import pytest

from flagdesigns.classifier.families import (
    check_affine_gammaL1,
    check_psl3,
    check_psl3_range,
    check_psld_reduction,
    check_psu3,
    check_ree,
    check_small_cases,
    check_sp2d2,
    check_sz,
    cited_entries,
    default_d_max,
    default_e_max,
    gl_order,
    mathieu_entries,
    psl3_candidates,
)
from flagdesigns.classifier.tables import citations, family_cases, known_nonexistent, nonexistence_table
from flagdesigns.utils.errors import InputError


def _eliminated(entries):
    return all(entry.verdict != "Survivor" for entry in entries)


def test_gl_order():
    assert gl_order(3, 2) == 168
    assert gl_order(4, 2) == 20160
    assert gl_order(4, 3) == 24261120


def test_affine_gamma_window():
    entries = check_affine_gammaL1(243)
    assert _eliminated(entries)
    fifth = next(entry for entry in entries if entry.params == {"d": 5})
    tested = [(case["v"], case["k"], case["rule"]) for case in fifth.witness["tested"]]
    assert tested == [(32, 7, "gammaL1-divisibility"), (32, 8, "gammaL1-divisibility")]
    assert fifth.witness["max_v"] == "243"
    assert fifth.witness["empty_window"] == 1


def test_affine_gamma_full_range():
    assert _eliminated(check_affine_gammaL1(10**6))


def test_small_cases():
    entries = {(entry.family, entry.params["v"]): entry for entry in check_small_cases()}
    assert _eliminated(entries.values())
    sp = entries[("AffineSp", 16)].witness["refutations"]
    assert [(r["k"], r["rule"]) for r in sp] == [(5, "pair-divisibility"), (6, "pair-divisibility")]
    assert [r["k"] for r in entries[("AffineG2", 64)].witness["refutations"]] == list(range(5, 11))
    assert [r["k"] for r in entries[("Mathieu", 22)].witness["refutations"]] == [5, 6, 7]
    a7 = entries[("A7_15", 15)].witness["refutations"]
    assert a7[0] == {"k": 5, "rule": "divisibility-r", "r": "91", "bound": "168"}


def test_psl3_q7():
    entry = check_psl3(7)
    assert entry.verdict == "EliminatedMechanized"
    first, second = entry.witness["refutations"]
    assert (first["k"], first["rule"]) == (6, "pair-divisibility")
    assert (second["k"], second["rule"]) == (8, "admissibility")
    assert second["derived_failures"] == {"lambda_2": "54/5"}


def test_psl3_endpoints():
    assert psl3_candidates(13) == [8, 12]
    entry = check_psl3(13)
    assert entry.verdict == "EliminatedMechanized"
    assert entry.citation == "psl3-translation-group"
    assert check_psl3(4).verdict == "EliminatedCited"
    assert check_psl3(5).rule == "psl3-congruence"
    with pytest.raises(InputError):
        check_psl3(6)


def test_psl3_range():
    entries = check_psl3_range(10**6)
    assert entries[-1].params["q"] == 997
    assert all(entry.citation in citations() for entry in entries if entry.citation)
    assert check_psld_reduction().citation == "psld-induction"


def test_psu3():
    entries = check_psu3(10**6)
    assert entries[0].params == {"q": 3}
    assert entries[0].witness["divisor"] == "325"
    assert entries[0].witness["divisible"] == []
    assert entries[-1].params == {"q": 97}
    assert _eliminated(entries)


def test_suzuki():
    entry = check_sz(1)[0]
    assert entry.params == {"q": 8}
    assert (entry.witness["triple"], entry.witness["bound"]) == ("504", "558")
    entries = check_sz(6)
    assert len(entries) == 6
    assert _eliminated(entries)
    assert all(entry.witness["general_bound_holds"] for entry in entries)


def test_ree():
    entries = check_ree(default_e_max(10**6, 3, 3))
    assert [entry.params["q"] for entry in entries] == [27]
    assert _eliminated(check_ree(3))


def test_default_ceilings():
    assert default_e_max(10**6, 2, 2) == 4
    assert default_e_max(10**6, 3, 3) == 1
    assert default_d_max(10**6) == 10
    assert default_e_max(64, 2, 2) == 0
    assert default_e_max(65, 2, 2) == 1
    assert default_e_max(19683, 3, 3) == 0
    assert default_d_max(35) == 0
    assert default_d_max(36) == 3


def test_sp2d2():
    entries = check_sp2d2(10)
    assert entries[0].verdict == "EliminatedCited"
    assert len(entries) == 1 + 2 * 8
    assert _eliminated(entries)
    minus4 = next(entry for entry in entries if entry.params == {"d": 4, "sign": -1})
    assert minus4.witness["v"] == "120"
    assert minus4.witness["failures"]["lambda_1"] == "273819/4"


@pytest.mark.parametrize("call", [lambda: check_sz(0), lambda: check_ree(0), lambda: check_sp2d2(2)])
def test_bad_ranges(call):
    with pytest.raises(InputError):
        call()


def test_cited_entries():
    for entry in cited_entries():
        assert entry.verdict == "EliminatedCited"
        assert entry.citation in citations()


def test_mathieu_entries():
    entries = {entry.params["v"]: entry for entry in mathieu_entries()}
    assert entries[11].verdict == entries[23].verdict == "Survivor"
    assert entries[11].witness["flag_orbit"] == 330
    assert entries[23].witness["flag_orbit"] == 1771
    assert entries[12].verdict == entries[24].verdict == "EliminatedMechanized"


def test_tables():
    assert known_nonexistent(4, 18, 6) == "nonexistence-4-18-6-1"
    assert known_nonexistent(4, 23, 7) is None
    assert set(nonexistence_table().values()) <= set(citations())
    assert len(family_cases()) == 18
