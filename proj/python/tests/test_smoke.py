import collections

import pytest

import irs_sampling as irs


def brute_force(l, r, ql, qr):
    return sorted(i for i in range(len(l)) if l[i] <= qr and ql <= r[i])


def test_counts_match_scan():
    l, r, _ = irs.generate_dataset(2000, domain_max=10_000, mean_length=0.01, seed=3)
    tree = irs.AIT(l, r)
    base = irs.IntervalTree(l, r)
    for ql, qr in irs.generate_queries(100, 0.05, 0, 10_000, seed=4):
        expected = brute_force(l, r, ql, qr)
        assert tree.range_count(ql, qr) == len(expected)
        assert base.range_count(ql, qr) == len(expected)
        assert sorted(tree.covered_ids(ql, qr)) == expected


def test_records_are_one_based_runs():
    tree = irs.AIT([1, 2, 3, 4, 5, 6], [100] * 6)
    assert tree.query_records(0, 4) == [(0, 0, 1, 4)]


def test_sampling_is_inside_the_range():
    l, r, w = irs.generate_dataset(3000, domain_max=10_000, mean_length=0.01, weighted=True, seed=5)
    rng = irs.Rng(7)
    ql, qr = 4000, 4500
    inside = set(brute_force(l, r, ql, qr))
    assert set(irs.AIT(l, r).sample(ql, qr, 500, rng)) <= inside
    assert set(irs.AWIT(l, r, w).sample(ql, qr, 500, rng)) <= inside
    ids, attempts = irs.AITV(l, r).sample(ql, qr, 500, rng)
    assert len(ids) == 500 and attempts >= 500
    assert set(ids) <= inside


def test_weighted_frequencies():
    tree = irs.AWIT([0, 2], [4, 6], [1.0, 3.0])
    counts = collections.Counter(tree.sample(3, 3, 200_000, irs.Rng(1)))
    assert abs(counts[1] / 200_000 - 0.75) < 0.01


def test_updates():
    tree = irs.AIT()
    for i in range(200):
        tree.insert(i, i + 5, i)
    for i in range(200, 250):
        tree.enqueue(i, i + 5, i)
    assert len(tree) == 250
    assert tree.range_count(0, 1000) == 250
    tree.erase(10)
    assert 10 not in tree
    assert tree.range_count(10, 10) == 5


def test_primitives():
    alias = irs.AliasTable([1.0, 3.0])
    assert alias.tau == 2.0
    cs = irs.CumulativeSum([1.0, 2.0, 3.0])
    assert cs.values() == [1.0, 3.0, 6.0]
    assert cs.sample_range(2, 2, irs.Rng(0)) == 2


def test_errors():
    with pytest.raises(irs.IrsError, match="InvalidInterval"):
        irs.AIT([5], [1])
    with pytest.raises(irs.IrsError, match="EmptyWeights"):
        irs.AliasTable([])
    with pytest.raises(ValueError):
        irs.AIT([1], [2]).range_count(3, 2)
    with pytest.raises(irs.IrsError, match="InvalidSampleSize"):
        irs.AIT([1], [2]).sample(0, 5, -1, irs.Rng(0))


def test_float_coordinates():
    tree = irs.AITFloat([0.1, 0.2, 0.7], [0.3, 0.25, 0.9])
    assert tree.range_count(0.24, 0.26) == 2
