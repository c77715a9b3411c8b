import random
from fractions import Fraction

import pytest

from atomlen.charges import (
    Multicharge,
    a_from_beta,
    beta_from_residues,
    dd_charge_check,
    ddbeta_parts,
    ddprime_quotient_shape,
    n_cores_of_weight,
    phi,
    phi_inv,
    sc_charge_check,
    weight_from_charge,
)
from atomlen.partitions import (
    Partition,
    distinct_hooks_tr,
    distinct_partitions_up_to,
    double_distinct,
    is_n_core,
    residue_counts,
)


def test_phi_examples():
    assert phi(Partition([3, 2, 1]), 4) == Multicharge([1, -1, 1, -1])
    assert phi(Partition(), 5) == Multicharge([0] * 5)
    assert phi(Partition([10, 6, 6, 4, 3, 3, 1, 1, 1, 1]), 6) == Multicharge([1, -1, -2, 2, 1, -1])


def test_phi_inv_examples():
    assert phi_inv(Multicharge([0, 1, -1, 0, 1, -1])) == Partition([5, 3, 1, 1])
    assert phi_inv(Multicharge([0, 1, -1, 1, -1])) == Partition([4, 3, 1])
    assert phi_inv(Multicharge([1, -1, 0, 1, -1])) == Partition([4, 2, 1, 1])


def test_phi_rejects():
    with pytest.raises(ValueError):
        phi(Partition([2]), 2)
    with pytest.raises(ValueError):
        Multicharge([1, 0, 0])


def test_weight_from_charge():
    assert weight_from_charge(Multicharge([1, -1, 1, -1])) == 6
    assert weight_from_charge(Multicharge([0, 0, 0])) == 0
    big = Partition([10, 6, 6, 4, 3, 3, 1, 1, 1, 1])
    assert weight_from_charge(Multicharge([1, -1, -2, 2, 1, -1])) == big.weight() == 36


def test_phi_roundtrip_and_weight_exhaustive():
    for n in range(2, 7):
        for group in n_cores_of_weight(n, 16):
            for core in group:
                m = phi(core, n)
                assert phi_inv(m) == core
                assert weight_from_charge(m) == core.weight()


def test_beta_dictionaries():
    beta = beta_from_residues(Partition([3, 2, 1]), 4)
    assert beta == (1, -1, 1, -1)
    assert a_from_beta(beta) == (2, 1, 2, 1)
    assert beta_from_residues(Partition(), 3) == (0, 0, 0)
    rng = random.Random(7)
    pool = [c for n in (3, 4, 5) for g in n_cores_of_weight(n, 14) for c in g]
    picks = rng.sample(pool, min(200, len(pool)))
    for core in picks:
        for n in (3, 4, 5):
            if not is_n_core(core, n):
                continue
            beta = beta_from_residues(core, n)
            a = residue_counts(core, n)
            assert a_from_beta(beta) == a
            assert a[0] == Fraction(sum(b * b for b in beta), 2)
            # the multicharge reads the same data: m_i = beta_{i+1}
            assert tuple(phi(core, n).m) == beta


def test_conjugation_on_charges():
    for n in (2, 3, 4, 5):
        for group in n_cores_of_weight(n, 14):
            for core in group:
                m = phi(core, n).m
                mt = phi(core.conjugate(), n).m
                assert mt == tuple(-x for x in reversed(m))


def test_sc_charge_check():
    rep = sc_charge_check(Partition([3, 2, 1]), 4)
    assert rep["is_sc"] and rep["weight_ok"]
    assert rep["charge"].m == (1, -1, 1, -1)
    with pytest.raises(ValueError):
        sc_charge_check(Partition([2]), 2)
    for n in (4, 6):
        for group in n_cores_of_weight(n, 24):
            for core in group:
                rep = sc_charge_check(core, n)
                assert rep["is_sc"] == (core == core.conjugate())
                if rep["is_sc"]:
                    assert rep["weight_ok"]


def test_dd_charge_check():
    for n in (4, 5, 6):
        for group in n_cores_of_weight(n, 20):
            for core in group:
                rep = dd_charge_check(core, n)
                d = core.durfee()
                is_dd = all(core.part(i) == core.conjugate().part(i) + 1 for i in range(1, d + 1))
                assert rep["is_dd"] == is_dd
                if is_dd:
                    assert rep["weight_ok"]


def test_ddbeta_parts_examples():
    assert ddbeta_parts(Partition([4, 1]), 6) == (4, 1)
    assert ddbeta_parts(Partition([3, 1]), 5) == (3, 1)
    assert ddbeta_parts(Partition(), 5) == ()
    with pytest.raises(ValueError):
        ddbeta_parts(Partition([2, 1]), 3)


def test_ddbeta_parts_exhaustive():
    for g in (5, 6, 7):
        for bar in distinct_partitions_up_to(20):
            if is_n_core(double_distinct(bar), g):
                assert ddbeta_parts(bar, g) == bar.parts


def test_ddprime_quotient_shape_examples():
    rep = ddprime_quotient_shape(Partition([10, 5, 4]), 6)
    assert rep["in_family_restricted"] and rep["weight_ok"]
    assert rep["weight_formula"] == 19
    rep = ddprime_quotient_shape(Partition([8, 4, 3]), 5)
    assert rep["in_family_restricted"] and rep["weight_ok"]
    assert rep["weight_formula"] == 15
    rep = ddprime_quotient_shape(Partition([1]), 4)
    assert rep["in_family"] and rep["m"] == 1 and rep["weight_ok"]
    with pytest.raises(ValueError):
        ddprime_quotient_shape(Partition([2, 2]), 4)


def test_ddprime_membership_matches_hooks():
    for g in (3, 4, 5, 6):
        for bar in distinct_partitions_up_to(16):
            rep = ddprime_quotient_shape(bar, g)
            assert rep["family_matches_hooks"], (bar, g)
            assert rep["restricted_matches_hooks"], (bar, g)
            if rep["in_family"]:
                assert rep["weight_ok"], (bar, g)
            # membership is the small-hook condition on the transposed diagram
            assert rep["in_family"] == (g not in distinct_hooks_tr(bar))
