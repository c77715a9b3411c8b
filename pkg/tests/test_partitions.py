from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from atomlen.partitions import (
    BoundaryWord,
    Partition,
    dd_hook_multiset,
    distinct_from_dd,
    distinct_from_ddtr,
    distinct_from_sc,
    distinct_partitions_up_to,
    double_distinct,
    ddtr_from_distinct,
    hook_index_pairs,
    hooks_split_by_diagonal,
    is_dd,
    is_dd_word,
    is_ddtr,
    is_ddtr_word,
    is_n_core,
    is_sc,
    is_sc_word,
    partitions_up_to,
    psi,
    psi_inv,
    residue_counts,
    sc_from_distinct,
    shifted_hooks,
    distinct_hooks_tr,
)


@st.composite
def partition_strategy(draw, max_total=24):
    n = draw(st.integers(min_value=0, max_value=max_total))
    parts = []
    while n > 0:
        p = draw(st.integers(min_value=1, max_value=n))
        if parts and p > parts[-1]:
            p = parts[-1]
        parts.append(p)
        n -= p
    return Partition(parts)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    assert Partition([3, 2, 0, 0]) == Partition([3, 2])
    assert Partition().weight() == 0


def test_conjugate_examples():
    assert Partition([5, 3, 3, 1, 1]).conjugate() == Partition([5, 3, 3, 1, 1])
    assert Partition().conjugate() == Partition()
    assert Partition([4, 4, 3, 2]).conjugate() == Partition([4, 4, 3, 2])
    assert Partition([2]).conjugate() == Partition([1, 1])


def test_conjugate_involution_exhaustive():
    for lam in partitions_up_to(20):
        assert lam.conjugate().conjugate() == lam


def test_hooks_examples():
    assert Partition([5, 3, 3, 1, 1]).hooks() == tuple(
        sorted([9, 6, 5, 2, 1, 6, 3, 2, 5, 2, 1, 2, 1]))
    assert Partition([1]).hooks() == (1,)
    assert Partition([2, 1]).hooks() == (1, 1, 3)


def test_boundary_word_golden():
    # (4,4,3,2): letters 001101 | 010011 around the origin
    w = psi(Partition([4, 4, 3, 2]))
    assert [w.letter(k) for k in range(-6, 6)] == [0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1]
    assert psi(Partition()) == BoundaryWord()
    assert psi_inv(BoundaryWord()) == Partition()


def test_boundary_word_from_definition():
    # letters read off the two defining index sets
    for lam in [Partition([5, 5, 3, 2]), Partition([3, 1]), Partition([6])]:
        w = psi(lam)
        zeros = {lam.part(i) - i for i in range(1, lam.length() + 12)}
        span = max(abs(w.lo), w.hi) + 4
        for k in range(-span, span):
            assert w.letter(k) == (0 if k in zeros else 1)


def test_boundary_word_balance_rejected():
    with pytest.raises(ValueError):
        psi_inv(BoundaryWord(0, [1, 1, 0]))


def test_psi_roundtrip_exhaustive():
    for lam in partitions_up_to(25):
        assert psi_inv(psi(lam)) == lam


def test_conjugate_word_relation():
    # c^tr_k = 1 - c_{-k-1}
    for lam in partitions_up_to(20):
        w, wt = psi(lam), psi(lam.conjugate())
        span = max(abs(w.lo), w.hi, abs(wt.lo), wt.hi) + 2
        assert all(wt.letter(k) == 1 - w.letter(-k - 1) for k in range(-span, span))


def test_hook_index_pairs():
    assert hook_index_pairs(Partition([1])) == [(-1, 0, False)]
    assert hook_index_pairs(Partition()) == []
    assert len(hook_index_pairs(Partition([5, 5, 3, 2]))) == 15
    for lam in partitions_up_to(14):
        pairs = hook_index_pairs(lam)
        assert len(pairs) == lam.weight()
        assert tuple(sorted(j - i for i, j, _ in pairs)) == lam.hooks()
        above, _, _ = hooks_split_by_diagonal(lam)
        assert tuple(sorted(j - i for i, j, a in pairs if a)) == above
        w = psi(lam)
        assert all(w.letter(i) == 1 and w.letter(j) == 0 for i, j, _ in pairs)


def test_residue_counts():
    assert residue_counts(Partition([3, 2, 1]), 4) == (2, 1, 2, 1)
    assert residue_counts(Partition(), 5) == (0,) * 5
    # direct content scan for the 3-core (4,2,1,1)
    lam = Partition([4, 2, 1, 1])
    counts = Counter((j - i) % 3 for i, j in lam.cells())
    assert residue_counts(lam, 3) == tuple(counts[r] for r in range(3))
    assert sum(residue_counts(lam, 3)) == lam.weight()


def test_is_n_core():
    assert is_n_core(Partition([2, 1]), 2)
    assert not is_n_core(Partition([2]), 2)
    assert is_n_core(Partition([4, 2, 1, 1]), 3)


def test_doubling_examples():
    bar = Partition([5, 2, 1])
    assert double_distinct(bar) == Partition([6, 4, 4, 1, 1])
    assert sc_from_distinct(bar) == Partition([5, 3, 3, 1, 1])
    assert ddtr_from_distinct(bar) == Partition([5, 3, 3, 3, 1, 1])
    assert double_distinct(Partition([1])) == Partition([2])
    assert ddtr_from_distinct(Partition([1])) == Partition([1, 1])


def test_doubling_inverses():
    for bar in distinct_partitions_up_to(16):
        assert distinct_from_dd(double_distinct(bar)) == bar
        assert distinct_from_sc(sc_from_distinct(bar)) == bar
        assert distinct_from_ddtr(ddtr_from_distinct(bar)) == bar


def test_durfee_equals_length_of_half():
    # d_mu = number of parts of the halved distinct partition
    for bar in distinct_partitions_up_to(14):
        ell = bar.length()
        assert sc_from_distinct(bar).durfee() == ell
        assert double_distinct(bar).durfee() == ell
        assert ddtr_from_distinct(bar).durfee() == ell


def test_family_predicates_word_vs_diagram():
    for lam in partitions_up_to(20):
        assert is_sc(lam) == is_sc_word(lam)
        assert is_dd(lam) == is_dd_word(lam)
        assert is_ddtr(lam) == is_ddtr_word(lam)


def test_shifted_hooks_figure():
    # shifted hooks of (5,2,1) fill the doubled diagram above its diagonal
    bar = Partition([5, 2, 1])
    assert shifted_hooks(bar) == tuple(sorted([7, 6, 5, 2, 1, 3, 2, 1]))
    above, diag, below = hooks_split_by_diagonal(double_distinct(bar))
    assert shifted_hooks(bar) == above
    assert diag == tuple(sorted(2 * p for p in bar.parts))
    assert distinct_hooks_tr(bar) == below


def test_dd_hook_multiset():
    assert dd_hook_multiset(Partition([5, 2, 1])) == Partition([6, 4, 4, 1, 1]).hooks()
    assert dd_hook_multiset(Partition([1])) == (1, 2)
    assert dd_hook_multiset(Partition()) == ()
    for bar in distinct_partitions_up_to(18):
        assert dd_hook_multiset(bar) == double_distinct(bar).hooks()


@settings(max_examples=120, deadline=None)
@given(partition_strategy())
def test_psi_roundtrip_property(lam):
    assert psi_inv(psi(lam)) == lam


@settings(max_examples=120, deadline=None)
@given(partition_strategy())
def test_hook_pair_gaps_property(lam):
    pairs = hook_index_pairs(lam)
    assert tuple(sorted(j - i for i, j, _ in pairs)) == lam.hooks()
