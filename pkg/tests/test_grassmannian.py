import random
from fractions import Fraction

import pytest

from atomlen.affine_data import AffineType, registry
from atomlen.grassmannian import (
    CoreElement,
    atomic_length,
    atomic_length_fold,
    atomic_length_pi,
    beta_of_core,
    decompose,
    dominant_weight,
    dual_atomic_length,
    element_of_core,
    in_model,
    lattice_atomic_length,
    orbit,
    orbit_bfs,
    reflect,
    toggle_residue,
    translation_length,
)
from atomlen.partitions import Partition

SMALL_TYPES = [("A1", 2), ("A1", 3), ("B1", 2), ("B1", 3), ("C1", 2), ("C1", 3),
               ("A2o", 2), ("A2o", 3), ("A2", 2), ("A2", 3), ("A2p", 2), ("A2p", 3),
               ("D2", 2), ("D2", 3), ("D1", 4), ("G21", 2), ("D43", 2)]


def test_reflect_type_a():
    t = AffineType("A1", 3)
    assert reflect(t, 0, CoreElement(t, Partition())).core == Partition([1])
    # the 3-core (4,2,1,1): removing 0-cells, adding 1-cells
    c = CoreElement(t, Partition([4, 2, 1, 1]))
    assert reflect(t, 0, c).core.weight() < c.core.weight()
    assert reflect(t, 1, c).core.weight() > c.core.weight()


def test_toggle_mixed_rejected():
    # (2,1) has both an addable and a removable 0-cell mod 2... build one that does
    with pytest.raises(ValueError):
        toggle_residue(Partition([2]), 0, 2)


def test_reflect_involutive():
    rng = random.Random(3)
    for fam, n in SMALL_TYPES:
        t = AffineType(fam, n)
        els = orbit(t, 10)
        for el in rng.sample(els, min(12, len(els))):
            for i in range(registry(t).num_nodes):
                other = reflect(t, i, el)
                assert in_model(t, other.core)
                assert reflect(t, i, other) == el


def test_orbit_staircases():
    t = AffineType("A1", 2)
    got = [el.core for el in orbit(t, 6)]
    assert got == [Partition(k and list(range(k, 0, -1)) or []) for k in (0, 1, 2, 3)]
    assert orbit(t, 0) == [CoreElement(t, Partition())]


def test_orbit_matches_bfs():
    for fam, n in SMALL_TYPES:
        t = AffineType(fam, n)
        assert set(orbit(t, 10)) == set(orbit_bfs(t, 10))


def test_orbit_c2_model_filter():
    t = AffineType("C1", 2)
    from atomlen.partitions import is_n_core, is_sc, partitions_up_to

    expected = {lam.parts for lam in partitions_up_to(6) if is_n_core(lam, 4) and is_sc(lam)}
    got = {el.core.parts for el in orbit(t, 6)}
    assert got == expected


def test_atomic_length_worked_examples():
    staircase = Partition([3, 2, 1])
    assert atomic_length(AffineType("C1", 2), staircase) == 6
    assert atomic_length(AffineType("D2", 2), staircase) == 5
    assert atomic_length(AffineType("A2", 2), staircase) == 4
    assert atomic_length(AffineType("A2p", 2), staircase) == 8
    big = Partition([10, 6, 6, 4, 3, 3, 1, 1, 1, 1])
    assert atomic_length(AffineType("B1", 3), big) == 19
    assert atomic_length(AffineType("A2o", 3), big) == 15


def test_atomic_length_routes_agree():
    for fam, n in SMALL_TYPES:
        t = AffineType(fam, n)
        for el in orbit(t, 12):
            L = atomic_length(t, el.core)
            assert L == atomic_length_pi(t, el.core)
            assert L == atomic_length_fold(t, el.core)
            assert L == lattice_atomic_length(t, beta_of_core(t, el.core))


def test_coxeter_length_matches_bfs_distance():
    for fam, n in SMALL_TYPES:
        t = AffineType(fam, n)
        for el, dist in orbit_bfs(t, 9).items():
            assert element_of_core(t, el.core).length == dist


def test_signature_parity():
    for fam, n in SMALL_TYPES:
        t = AffineType(fam, n)
        for el, dist in orbit_bfs(t, 9).items():
            gel = element_of_core(t, el.core)
            assert gel.signature == (-1) ** dist


def test_dual_length_simply_laced():
    for fam, n in [("A1", 2), ("A1", 3), ("A1", 4), ("D1", 4)]:
        t = AffineType(fam, n)
        for el in orbit(t, 15):
            beta = beta_of_core(t, el.core)
            assert dual_atomic_length(t, beta) == atomic_length(t, el.core)


def test_dual_length_swaps_with_transpose():
    pairs = [("C1", "D2", 2), ("C1", "D2", 3), ("B1", "A2o", 2), ("B1", "A2o", 3),
             ("G21", "D43", 2)]
    for famA, famB, n in pairs:
        tA, tB = AffineType(famA, n), AffineType(famB, n)
        for el in orbit(tA, 15):
            c = el.core
            assert dual_atomic_length(tA, beta_of_core(tA, c)) == atomic_length(tB, c)
            assert dual_atomic_length(tB, beta_of_core(tB, c)) == atomic_length(tA, c)


def test_dual_length_a2_pair_scales():
    for n in (2, 3):
        tA, tB = AffineType("A2", n), AffineType("A2p", n)
        for el in orbit(tA, 12):
            c = el.core
            assert dual_atomic_length(tA, beta_of_core(tA, c)) == Fraction(atomic_length(tB, c), 2)
            assert dual_atomic_length(tB, beta_of_core(tB, c)) == 2 * atomic_length(tA, c)


def test_dual_length_rejects_outside_lattice():
    t = AffineType("C1", 2)
    with pytest.raises(ValueError):
        dual_atomic_length(t, (1, 0))


def test_translation_length():
    t = AffineType("C1", 2)
    assert translation_length(t, (), (0, 0)) == 0
    data = registry(t)
    # translations are minimal in their coset exactly off the dominant cone
    for el in orbit(t, 12):
        beta = beta_of_core(t, el.core)
        gel = decompose(t, beta)
        pure = translation_length(t, (), beta)
        assert (pure == gel.length) == data.roots.is_antidominant(beta)


def test_decompose_minimality_exhaustive_rank2():
    t = AffineType("C1", 2)
    data = registry(t)
    rs = data.roots
    for el in orbit(t, 12):
        beta = beta_of_core(t, el.core)
        gel = decompose(t, beta)
        assert rs.act(gel.u, gel.nu) == beta
        assert rs.is_antidominant(gel.nu)
        # scan the whole finite group for anything shorter in the coset
        best = min(len(word) for word, _ in rs.weyl_elements()
                   if rs.act(word, gel.nu) == beta)
        assert rs.length(gel.u) == best


def test_orbit_cardinality_matches_lattice():
    # every translation vector with bounded dual length appears exactly once
    from atomlen.qseries import _lattice_vectors

    for fam, n in [("C1", 2), ("D2", 2), ("A2", 2), ("B1", 2)]:
        t = AffineType(fam, n)
        vectors = set(_lattice_vectors(t, 12))
        cores = [el for el in orbit(t, 40)
                 if dual_atomic_length(t, beta_of_core(t, el.core)) <= 12]
        betas = {beta_of_core(t, el.core) for el in cores}
        assert betas == vectors


def test_dominant_weight():
    for fam, n in SMALL_TYPES:
        t = AffineType(fam, n)
        for el in orbit(t, 10):
            gel = element_of_core(t, el.core)
            w = gel.dominant_weight()      # raises if not dominant
            assert len(w) == registry(t).roots.dim
    gel = decompose(AffineType("C1", 2), (0, 0))
    assert all(x == 0 for x in gel.dominant_weight())
