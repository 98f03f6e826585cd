import pytest

import lefschetz as lz


def test_default_scenario_round_trips_through_validate():
    s = lz.default_scenario(1, 2)
    assert s["a"] == 1 and s["n"] == 2
    report = lz.validate(s)
    assert report["valid"]


def test_invalid_scenario_raises_with_kind():
    bad = {"R_roots": [0, 2], "S_roots": [0, 3], "g_roots": [-1, 3], "h_roots": [1, 4]}
    with pytest.raises(lz.LefschetzError) as info:
        lz.validate(bad)
    assert lz.error_detail(info.value)["error"] == "ConditionViolation"


def test_gram_is_skew_for_joins_and_symmetric_in_dim_zero():
    s = lz.default_scenario(2, 2)
    g0 = lz.gram(s, "gR")["matrix"]
    assert all(g0[i][j] == g0[j][i] for i in range(len(g0)) for j in range(len(g0)))
    q = lz.gram(s, "fF")
    m = q["matrix"]
    assert len(q["labels"]) == 25
    assert all(m[i][j] == -m[j][i] for i in range(25) for j in range(25))


def test_kernel_nullity():
    r = lz.kernel_report(lz.default_scenario(1, 2))
    assert r["nullity"] == 8


def test_simplicity():
    r = lz.simplicity(lz.default_scenario(2, 2))
    assert r["verdict"] == "simple"
    assert [o["orbit_rank"] for o in r["orbits"]] == [4, 4, 4, 4]


def test_petrov_decompose_x_dy():
    form = {"P": {"terms": []}, "Q": {"terms": [[1, 0, 1]]}}
    l = {"terms": [[2, 0, 1], [0, 2, 1]]}
    d = lz.decompose(form, l)
    assert d["reconstructs"]


def test_tangent_cone_exact_form_is_member():
    form = {"P": {"terms": [[0, 1, 1]]}, "Q": {"terms": [[1, 0, 1]]}}
    assert lz.tangent_cone(form, lz.default_scenario(1, 2))["member"]


def test_bounds():
    assert lz.pullback_cyclicity(2, 2) == 17
    assert lz.cyclicity_bound(5, 2) == 17
    table = lz.best_factorization(12)
    assert table["rows"]
    assert all(row["n"] * row["a_plus_1"] == 12 for row in table["rows"])
    with pytest.raises(lz.LefschetzError):
        lz.best_factorization(13)
