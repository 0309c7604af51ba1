import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tverberg.errors import NotGeneralPosition
from tverberg.geometry import (Membership, Point, PointSet, convex_hull,
                               region_contains)
from tverberg.instances import gen_extremal_clusters, gen_random
from tverberg.oracle import (Partition, Shape, Witness, candidate_partitions,
                             count_by_shape, enumerate_all, is_tverberg,
                             offshape_partitions, shape_specific_witness)

P = Point.of

NESTED = PointSet.of([(0, 0), (4, 0), (2, 4), (1, 1), (3, 1), (2, 3), (2, 1)])


def test_partition_canonical_form():
    part = Partition.of([[6], [5, 3, 0], [2, 1, 4]])
    assert part.parts == ((0, 3, 5), (1, 2, 4), (6,))
    assert part.sizes == (3, 3, 1)
    assert Partition.of([(1, 0), (3, 2), (6, 5, 4)]).parts == ((4, 5, 6), (0, 1), (2, 3))


def test_partition_rejects_overlap_and_empty():
    with pytest.raises(ValueError):
        Partition.of([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Partition.of([[0], []])


@given(st.permutations(list(range(7))))
def test_partition_canonical_form_is_order_free(perm):
    parts = [perm[:3], perm[3:5], perm[5:]]
    expected = Partition.of(parts)
    for shuffled in itertools.permutations(parts):
        assert Partition.of([list(reversed(p)) for p in shuffled]) == expected


def test_candidate_space_sizes():
    candidates = candidate_partitions()
    assert len(candidates) == 175
    sizes = [p.sizes for p in candidates]
    assert sizes.count((3, 3, 1)) == 70
    assert sizes.count((3, 2, 2)) == 105
    assert len(set(candidates)) == 175
    others = offshape_partitions()
    assert len(others) == 126
    assert len(set(candidates) | set(others)) == 301  # all 3-part set partitions


def test_is_tverberg_nested_triangles():
    part = Partition.of([{0, 1, 2}, {3, 4, 5}, {6}])
    witness = is_tverberg(NESTED, part)
    assert witness == Witness(P(2, 1), Shape.S331)
    for triple in ((0, 1, 2), (3, 4, 5)):
        hull = convex_hull([NESTED[i] for i in triple])
        assert region_contains(hull, P(2, 1)) is not Membership.OUTSIDE


def test_is_tverberg_disjoint_hulls():
    ps = PointSet.of([(0, 0), (2, 0), (1, 2),
                      (100, 100), (102, 100), (101, 102),
                      (-100, -100)])
    assert is_tverberg(ps, Partition.of([{0, 1, 2}, {3, 4, 5}, {6}])) is None


def test_is_tverberg_511_is_never_valid():
    ps = gen_random(3, 7, 1000)
    part = Partition.of([{0, 1, 2, 3, 4}, {5}, {6}])
    assert is_tverberg(ps, part) is None


def test_is_tverberg_322_witness_is_crossing_point():
    ps = PointSet.of([(0, 0), (4, 0), (2, 4),   # outer triangle
                      (1, 1), (3, 3), (1, 3), (3, 1)])
    part = Partition.of([{0, 1, 2}, {3, 4}, {5, 6}])
    witness = is_tverberg(ps, part)
    assert witness is not None
    assert witness.shape is Shape.S322
    assert witness.point == P(2, 2)


def test_is_tverberg_validates_arguments():
    with pytest.raises(ValueError):
        is_tverberg(NESTED, Partition.of([{0, 1, 2}, {3, 4, 5, 6}]))
    with pytest.raises(ValueError):
        is_tverberg(NESTED, Partition.of([{0, 1}, {2, 3}, {4, 5}]))


def test_enumerate_all_requires_seven_general_position_points():
    with pytest.raises(ValueError):
        enumerate_all(PointSet.of([(0, 0), (1, 0), (0, 1)]))
    bad = PointSet.of([(0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 1), (5, 5)])
    with pytest.raises(NotGeneralPosition):
        enumerate_all(bad)


@pytest.mark.parametrize("seed", range(10))
def test_enumerate_all_is_sound_and_canonical(seed):
    ps = gen_random(seed, 7, 1000)
    results = enumerate_all(ps)
    assert len(results) >= 4
    assert [p.parts for p, _ in results] == sorted(p.parts for p, _ in results)
    for partition, witness in results:
        for part in partition.parts:
            hull = convex_hull([ps[i] for i in part])
            assert region_contains(hull, witness.point) is not Membership.OUTSIDE


@pytest.mark.parametrize("seed", range(30))
def test_dual_route_agreement(seed):
    ps = gen_random(seed, 7, 1000)
    for partition in candidate_partitions():
        generic = is_tverberg(ps, partition)
        specialized = shape_specific_witness(ps, partition)
        assert (generic is None) == (specialized is None)
        if generic is not None:
            assert generic.point == specialized


@pytest.mark.parametrize("seed", range(15))
def test_no_other_shape_is_ever_valid(seed):
    ps = gen_random(seed, 7, 1000)
    for partition in offshape_partitions():
        assert is_tverberg(ps, partition) is None


def test_enumerate_equivariance_under_relabeling():
    ps = gen_random(11, 7, 1000)
    perm = [3, 6, 0, 5, 1, 4, 2]
    relabeled = PointSet(ps[perm[i]] for i in range(7))
    # index i of `relabeled` is point perm[i] of `ps`
    base = {p for p, _ in enumerate_all(ps)}
    moved = {p for p, _ in enumerate_all(relabeled)}
    inverse = {perm[i]: i for i in range(7)}
    mapped = {Partition.of([[inverse[i] for i in part] for part in p.parts])
              for p in base}
    assert mapped == moved


def test_count_by_shape():
    assert count_by_shape([]) == (0, 0)
    ps = gen_random(2, 7, 1000)
    results = enumerate_all(ps)
    c331, c322 = count_by_shape(results)
    assert c331 + c322 == len(results)


def test_extremal_clusters_hit_the_conjectured_minimum():
    ps = gen_extremal_clusters(0)
    results = enumerate_all(ps)
    assert len(results) == 4
    assert count_by_shape(results) == (4, 0)
    for partition, witness in results:
        assert partition.parts[2] == (6,)  # the center point is the singleton
        assert witness.point == ps[6]
