import json

import pytest

import tridess


def test_field_cubic():
    f = tridess.field(2, 3, 7)
    assert f["degree"] == 3
    assert f["k_minpoly"]["num"] == ["1", "-2", "-1", "1"]
    assert f["signature"] == [2, 3, 7]
    assert f["galois_group"]["order"] == 3


def test_field_rational_case():
    f = tridess.field(2, 3, "inf")
    assert f["degree"] == 1
    assert f["signature"] == [2, 3, "inf"]


def test_field_validation():
    with pytest.raises(tridess.ValidationError):
        tridess.field(2, 3, 6)


def test_splits():
    s = tridess.splits(2, 3, 7, 13)
    assert [p["g"] for p in s["primes"]] == [[7, 1], [8, 1], [10, 1]]
    assert all(p["f"] == 1 for p in s["primes"])
    inert = tridess.splits(2, 3, 7, 2)
    assert len(inert["primes"]) == 1
    assert inert["primes"][0]["f"] == 3


def test_splits_unsupported_prime():
    with pytest.raises(tridess.UnsupportedPrimeError):
        tridess.splits(2, 3, 7, 7)


def test_dessin_modular():
    d = tridess.dessin(2, 3, "inf", 5)
    assert d["group_order"] == 60
    assert d["report"]["genus"] == 0
    assert d["report"]["cusps"] == 12
    assert d["report"]["theta_degree"] == 5
    assert d["passport"]["over0"] == [[2, 30]]


def test_dessin_byte_determinism():
    a = tridess.dessin_bytes(2, 3, 7, 13, ideal_index=0)
    b = tridess.dessin_bytes(2, 3, 7, 13, ideal_index=0)
    assert a == b
    assert json.loads(a)["report"]["genus"] == 14


def test_dessin_resource_limit():
    with pytest.raises(tridess.ResourceError):
        tridess.dessin(2, 3, "inf", 5, max_group_order=10)


def test_dessin_cache(tmp_path):
    cold = tridess.dessin_bytes(2, 3, "inf", 5, cache_dir=str(tmp_path))
    hit = tridess.dessin_bytes(2, 3, "inf", 5, cache_dir=str(tmp_path))
    assert cold == hit
    assert len(list(tmp_path.iterdir())) == 1


def test_orbit_hurwitz():
    o = tridess.orbit(2, 3, 7, 13)
    assert o["verdict"] is True
    assert o["orbits"] == [[0, 1, 2]]
    assert [rec["group_order"] for rec in o["per_ideal"]] == [1092, 1092, 1092]
    iso = o["iso_matrix"][0]
    assert all(iso[i][j] == (i == j) for i in range(3) for j in range(3))
