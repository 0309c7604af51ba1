from math import factorial

import pytest

from tverberg.constructive import case4_partitions, find_covering_halfplanes
from tverberg.errors import NotCase4, ShapeError
from tverberg.generalized import (MAX_R, case4_general, sector_decomposition,
                                  validate_general_partition)
from tverberg.geometry import PointSet
from tverberg.instances import gen_case4, gen_random
from tverberg.oracle import Partition


@pytest.mark.parametrize("r", [2, 3, 4])
def test_case4_general_counts(r):
    ps = gen_case4(0, r)
    partitions = case4_general(ps, r)
    assert len(partitions) == len(set(partitions)) == factorial(r - 1) ** 2
    x_idx = 0
    for partition in partitions:
        assert validate_general_partition(ps, partition, x_idx)


def test_case4_general_r2_is_a_radon_partition():
    ps = gen_case4(3, 2)
    (partition,) = case4_general(ps, 2)
    assert partition.sizes == (3, 1)
    assert partition.parts[1] == (0,)


@pytest.mark.parametrize("seed", range(6))
def test_case4_general_matches_specialized_r3_path(seed):
    ps = gen_case4(seed, 3)
    general = set(case4_general(ps, 3))
    sd = find_covering_halfplanes(0, ps)
    assert general == set(case4_partitions(sd, ps))


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_counting_identity(r):
    ps = gen_case4(1, r)
    sd = sector_decomposition(ps, r)
    ys = [i for i in range(len(ps)) if ps[i] != sd.center]
    total = sum(sum(1 for i in ys if h.contains(ps[i])) for h in sd.halfplanes)
    assert total == 2 * len(ys)
    assert tuple(len(s) for s in sd.sectors) == (r - 1,) * 3
    for h in sd.halfplanes:
        assert sum(1 for p in ps if h.contains(p)) == 2 * r - 1


def test_validate_general_partition_rejects_bad_shapes():
    ps = gen_case4(0, 3)
    with pytest.raises(ShapeError):
        validate_general_partition(ps, Partition.of([(0, 1), (2, 3), (4, 5, 6)]), 0)
    with pytest.raises(ShapeError):
        # wrong singleton
        validate_general_partition(ps, Partition.of([(0, 2, 3), (4, 5, 6), (1,)]), 0)


def test_validate_general_partition_detects_broken_transversal():
    ps = gen_case4(0, 3)
    sd = sector_decomposition(ps, 3)
    s1, s2, s3 = sd.sectors
    bad = Partition.of([(s1[0], s1[1], s2[0]), (s2[1], s3[0], s3[1]), (0,)])
    assert not validate_general_partition(ps, bad, 0)


def test_case4_general_rejects_non_case4_instances():
    ps = gen_random(0, 7, 1000)  # case 1: depth-3 region is a polygon
    with pytest.raises(NotCase4):
        case4_general(ps, 3)
    with pytest.raises(ValueError):
        case4_general(gen_case4(0, 3), 4)  # wrong point count for r
    with pytest.raises(ValueError):
        case4_general(gen_case4(0, 3), MAX_R + 1)
