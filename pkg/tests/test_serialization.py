import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tverberg.depth import depth_region
from tverberg.errors import ParseError
from tverberg.geometry import Point, PointSet
from tverberg.instances import gen_random
from tverberg.oracle import enumerate_all
from tverberg.serialization import (ResultDocument, depth_region_to_json,
                                    dumps, format_rational, instance_to_json,
                                    parse_instance, parse_instance_document,
                                    parse_partitions, parse_rational,
                                    parse_region, record_for, region_to_json)

from conftest import rationals


def test_format_rational():
    assert format_rational(Fraction(3, 7)) == "3/7"
    assert format_rational(Fraction(-2)) == "-2"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q), "x") == q


def test_parse_rational_accepts_ints_and_strings():
    assert parse_rational(5, "x") == Fraction(5)
    assert parse_rational("1/3", "x") == Fraction(1, 3)
    assert parse_rational("-7/2", "x") == Fraction(-7, 2)


@pytest.mark.parametrize("bad", ["0/0", "1/0", "a", "1.5.2", None, [], True])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad, "points[0][0]")


def test_parse_instance_example():
    text = '{"schema_version":1,"points":[["0","0"],["1","0"],["0","1"]]}'
    ps = parse_instance(text)
    assert ps == PointSet.of([(0, 0), (1, 0), (0, 1)])


def test_parse_instance_accepts_bare_integers():
    text = '{"schema_version":1,"points":[[0,0],[1,0],["1/3","2"]]}'
    ps = parse_instance(text)
    assert ps[2] == Point.of("1/3", 2)


def test_parse_instance_positional_errors():
    with pytest.raises(ParseError, match=r"points\[1\]"):
        parse_instance('{"schema_version":1,"points":[["0","0"],["1","0/0"]]}')
    with pytest.raises(ParseError, match=r"points\[2\].*duplicate"):
        parse_instance('{"schema_version":1,"points":[["0","0"],["1","1"],["0","0"]]}')
    with pytest.raises(ParseError, match="malformed JSON"):
        parse_instance("{nope")
    with pytest.raises(ParseError, match="schema_version"):
        parse_instance('{"schema_version":2,"points":[["0","0"]]}')
    with pytest.raises(ParseError, match="points"):
        parse_instance('{"schema_version":1,"points":[]}')


@given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=9,
                unique=True))
def test_instance_round_trip(coords):
    ps = PointSet.of(coords)
    doc = dumps(instance_to_json(ps, {"kind": "test"}))
    back, meta = parse_instance_document(doc)
    assert back == ps
    assert meta == {"kind": "test"}


def test_region_round_trip():
    ps = gen_random(0, 7, 1000)
    dr = depth_region(ps, 3)
    raw = json.loads(dumps(depth_region_to_json(dr)))
    assert parse_region(raw["region"]) == dr.region
    assert raw["k"] == 3
    assert len(raw["constraints"]) == len(dr.constraints)
    assert all(set(h) == {"a", "b", "c"} for h in raw["constraints"])


def test_result_document_counts_are_consistent():
    ps = gen_random(0, 7, 1000)
    results = enumerate_all(ps)
    doc = ResultDocument(
        instance=ps,
        partitions=tuple(record_for(p, w) for p, w in results)).to_json()
    assert doc["counts"]["total"] == len(results)
    assert doc["counts"]["s331"] + doc["counts"]["s322"] == len(results)
    assert len(doc["partitions"]) == len(results)
    for rec in doc["partitions"]:
        assert isinstance(rec["witness"], list)


def test_parse_partitions():
    text = '{"partitions":[{"parts":[[0,1,2],[3,4],[5,6]]},{"parts":[[6],[0,1,2],[3,4,5]]}]}'
    parts = parse_partitions(text)
    assert parts[0].sizes == (3, 2, 2)
    assert parts[1].parts == ((0, 1, 2), (3, 4, 5), (6,))
    with pytest.raises(ParseError):
        parse_partitions('{"partitions":[{"parts":[[0,1],[1,2]]}]}')
    with pytest.raises(ParseError):
        parse_partitions('[1,2]')


def test_dumps_is_deterministic():
    ps = gen_random(4, 7, 1000)
    a = dumps(instance_to_json(ps, {"b": "2", "a": "1"}))
    b = dumps(instance_to_json(ps, {"a": "1", "b": "2"}))
    assert a == b
    assert a.endswith("\n")
