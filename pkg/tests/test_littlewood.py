import random

import pytest

from atomlen.littlewood import (
    LittlewoodData,
    compose,
    ddtr_decompose_check,
    decompose,
    hook_quotient_multiset,
    quotient_hooks_scaled,
    rim_hook_core,
)
from atomlen.partitions import Partition, ddtr_from_distinct, is_n_core, partitions_up_to


def test_golden_example():
    d = decompose(Partition([4, 4, 3, 2]), 3)
    assert d.core == Partition([1])
    assert d.quotient == (Partition([1, 1]), Partition(), Partition([2]))
    assert compose(d) == Partition([4, 4, 3, 2])


def test_core_fixed_point():
    for core in [Partition(), Partition([1]), Partition([4, 2, 1, 1])]:
        d = decompose(core, 3)
        if is_n_core(core, 3):
            assert d.core == core
            assert all(q == Partition() for q in d.quotient)


def test_two_core_of_single_row():
    d = decompose(Partition([2]), 2)
    assert d.core == Partition()
    assert sum(q.weight() for q in d.quotient) == 1


def test_compose_rejects_non_core():
    with pytest.raises(ValueError):
        LittlewoodData(Partition([2]), (Partition(), Partition()), 2)


def test_roundtrip_and_weight_exhaustive():
    for lam in partitions_up_to(16):
        for n in range(2, 7):
            d = decompose(lam, n)
            assert compose(d) == lam
            assert lam.weight() == d.core.weight() + n * sum(q.weight() for q in d.quotient)


def test_core_against_rim_hook_oracle():
    for lam in partitions_up_to(14):
        for n in (2, 3, 4, 5):
            assert decompose(lam, n).core == rim_hook_core(lam, n)


def test_hook_quotient_multiset():
    assert hook_quotient_multiset(Partition([2]), 2) == (2,)
    assert hook_quotient_multiset(Partition([4, 2, 1, 1]), 3) == ()
    d = decompose(Partition([4, 4, 3, 2]), 3)
    assert hook_quotient_multiset(Partition([4, 4, 3, 2]), 3) == quotient_hooks_scaled(d)
    for lam in partitions_up_to(14):
        for n in (2, 3, 4):
            assert hook_quotient_multiset(lam, n) == quotient_hooks_scaled(decompose(lam, n))


def test_conjugate_decomposes_dually():
    # core conjugated, quotient reversed and conjugated
    for lam in partitions_up_to(14):
        for n in (2, 3, 4):
            d = decompose(lam, n)
            dt = decompose(lam.conjugate(), n)
            assert dt.core == d.core.conjugate()
            assert dt.quotient == tuple(d.quotient[n - 1 - k].conjugate() for k in range(n))


def test_ddtr_check_small():
    assert ddtr_decompose_check(Partition([1, 1]), 2)["ok"]
    assert ddtr_decompose_check(Partition([5, 3, 3, 3, 1, 1]), 3)["ok"]
    with pytest.raises(ValueError):
        ddtr_decompose_check(Partition([2]), 2)


def test_ddtr_check_random():
    rng = random.Random(20240817)
    for _ in range(150):
        n = rng.randint(2, 6)
        k = rng.randint(0, 5)
        parts = sorted(rng.sample(range(1, 16), k), reverse=True)
        lam = ddtr_from_distinct(Partition(parts))
        if lam.weight() <= 30:
            report = ddtr_decompose_check(lam, n)
            assert report["ok"], (lam, n, report["checks"])
