from fractions import Fraction

import pytest

from atomlen.affine_data import (
    FAMILIES,
    AffineType,
    fold_root,
    fold_weight,
    parse_type,
    reconstructed_cartan,
    registry,
)


def test_rank_bounds():
    with pytest.raises(ValueError):
        AffineType("D1", 3)
    with pytest.raises(ValueError):
        AffineType("G21", 3)
    with pytest.raises(ValueError):
        AffineType("A1", 1)
    assert parse_type("G21").n == 2
    assert parse_type("B1", 3).label == "B1.3"


def test_registry_examples():
    c2 = registry(AffineType("C1", 2))
    assert c2.v == (1, 2, 1)
    assert c2.v_dual == (1, 1, 1)
    assert (c2.eta, c2.eta_dual, c2.eta_tilde) == (4, 3, 6)
    assert c2.norm_factor == Fraction(1, 2)

    a3 = registry(AffineType("A1", 4))
    assert a3.v == a3.v_dual == (1, 1, 1, 1)
    assert a3.eta == a3.eta_dual == 4

    g = registry(AffineType("G21", 2))
    assert g.v == (1, 2, 3)
    assert g.v_dual == (1, 2, 1)
    assert (g.eta, g.eta_dual) == (6, 4)
    assert g.norm_factor == Fraction(1, 3)


def test_eta_values_per_family():
    expected = {
        "A1": lambda n: (n, n),
        "B1": lambda n: (2 * n, 2 * n - 1),
        "C1": lambda n: (2 * n, n + 1),
        "D1": lambda n: (2 * n - 2, 2 * n - 2),
        "A2o": lambda n: (2 * n - 1, 2 * n),
        "A2": lambda n: (2 * n + 1, 2 * n + 1),
        "D2": lambda n: (n + 1, 2 * n),
        "G21": lambda n: (6, 4),
        "D43": lambda n: (4, 6),
    }
    for fam, fn in expected.items():
        n = 4 if fam == "D1" else 3 if fam not in ("G21", "D43") else 2
        data = registry(AffineType(fam, n))
        assert (data.eta, data.eta_dual) == fn(n), fam


def test_mstar_membership():
    b3 = registry(AffineType("B1", 3))
    assert not b3.mstar_contains([0, 0, 1])
    assert b3.mstar_contains([0, 0, 0])
    assert b3.mstar_contains([1, 1, 2])

    g = registry(AffineType("G21", 2))
    assert not g.mstar_contains([0, 1])
    assert g.mstar_contains([0, 3])
    assert g.mstar_contains([1, 0])

    a2 = registry(AffineType("A2", 2))
    assert a2.mstar_contains([1, Fraction(1, 2)])
    assert not a2.mstar_contains([Fraction(1, 2), 0])

    c3 = registry(AffineType("C1", 3))
    assert c3.mstar_contains([2, 2, 1])
    assert not c3.mstar_contains([1, 2, 1])


def test_fold_expressions():
    assert fold_root(AffineType("C1", 2), 1) == (0, 1, 0, 1)
    assert fold_root(AffineType("C1", 2), 0) == (2, 0, 0, 0)
    assert fold_root(AffineType("D43", 2), 2) == (0, 1, 0, 2, 0, 1)
    assert fold_root(AffineType("A2p", 2), 0) == (2, 0, 0, 0)
    assert fold_weight(AffineType("B1", 3), 1) == (-1, 1, 0, 0, 0, 1)


def test_cartan_reconstruction_all_ranks():
    for fam in FAMILIES:
        lo = {"D1": 4}.get(fam, 2)
        hi = {"G21": 2, "D43": 2}.get(fam, 6)
        for n in range(lo, hi + 1):
            data = registry(AffineType(fam, n))
            A = reconstructed_cartan(AffineType(fam, n))
            m = data.num_nodes
            for i in range(m):
                assert A[i][i] == 2
                assert sum(A[i][j] * data.v[j] for j in range(m)) == 0
            for j in range(m):
                assert sum(data.v_dual[i] * A[i][j] for i in range(m)) == 0


def test_known_cartan_matrices():
    assert reconstructed_cartan(AffineType("G21", 2)) == [[2, -1, 0], [-1, 2, -1], [0, -3, 2]]
    assert reconstructed_cartan(AffineType("D43", 2)) == [[2, -1, 0], [-1, 2, -3], [0, -1, 2]]
    assert reconstructed_cartan(AffineType("A2", 2)) == [[2, -2, 0], [-1, 2, -2], [0, -1, 2]]


def test_json_dump():
    row = registry(AffineType("D2", 3)).to_json()
    assert row["type"] == "D2.3"
    assert row["finite_type"] == "B3"
    assert row["core_model"] == "sc-cores"
