from itertools import combinations

import pytest

from nccount.necklace import (
    Subgon,
    count_subgon_classes,
    count_subgon_classes_brute,
    count_subgon_classes_burnside,
    seq_to_subgon,
    subgon,
)
from nccount.typea import count_orbits_brute, enum_seqs, monotone_seq, serre_step


def test_anchor_values():
    assert count_subgon_classes(6, 3) == 4
    assert count_subgon_classes(7, 4) == 5
    assert count_subgon_classes(6, 2) == 3
    for m in range(1, 10):
        assert count_subgon_classes(m, m) == 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        count_subgon_classes(5, 0)
    with pytest.raises(ValueError):
        count_subgon_classes(5, 6)
    with pytest.raises(ValueError):
        subgon(6, [1, 7])  # 7 == 1 mod 6


def test_canonical_form():
    g = subgon(6, [5, 0, 2])
    assert g.vertices == (0, 2, 5)
    assert g.canonical().vertices == (0, 1, 3)


def test_burnside_equals_brute_small_slow_path():
    # plain-python cross-check of the vectorized canonicalization
    for m in range(1, 9):
        for s in range(1, m + 1):
            classes = {subgon(m, c).canonical() for c in combinations(range(m), s)}
            assert len(classes) == count_subgon_classes_brute(m, s), (m, s)
            assert len(classes) == count_subgon_classes_burnside(m, s), (m, s)


def test_burnside_equals_brute_full_range():
    for m in range(1, 25):
        for s in range(1, m + 1):
            assert count_subgon_classes_burnside(m, s) == count_subgon_classes_brute(
                m, s
            ), (m, s)


def test_matches_serre_orbit_counts():
    # (k+1)-subgons of the (n+2)-gon up to rotation = orbit count for
    # A_k-type subcategories of the category on n+1 vertices
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert count_subgon_classes(n + 2, k + 1) == count_orbits_brute(
                k, n + 1
            ), (n, k)


def test_seq_to_subgon_zero_seq():
    seq = monotone_seq(2, 2, (0, 0, 0))
    assert seq_to_subgon(seq) == Subgon(4, (0, 1, 2))


def test_seq_to_subgon_bijective():
    from math import comb

    for n in range(1, 9):
        for k in range(1, n + 1):
            images = {seq_to_subgon(s) for s in enum_seqs(n, k)}
            assert len(images) == comb(n + 2, k + 1)
            assert all(len(g.vertices) == k + 1 for g in images)


def test_seq_to_subgon_conjugates_serre_to_rotation():
    for n in range(1, 9):
        for k in range(1, n + 1):
            for seq in enum_seqs(n, k):
                assert seq_to_subgon(serre_step(seq)) == seq_to_subgon(seq).rotate(1)
