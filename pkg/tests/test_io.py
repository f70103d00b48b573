import json

import pytest

from termpair.constructions import bipartite_one_factor_demand, one_factor_demand, triangle_demand
from termpair.graph import HostGraph, PathSystem
from termpair.io import (
    FormatError,
    format_demand,
    format_host,
    parse_demand,
    parse_host,
    parse_host_arg,
    paths_from_json,
    paths_to_json,
)


@pytest.mark.parametrize(
    "demand", [triangle_demand(6, 4), one_factor_demand(8, 3), bipartite_one_factor_demand(6)]
)
def test_demand_round_trip_is_byte_exact(demand):
    text = format_demand(demand)
    parsed = parse_demand(text)
    assert parsed == demand
    assert format_demand(parsed) == text


def test_demand_comments_and_errors():
    assert parse_demand("# hi\n3 1\n# edge\n0 2 5\n").edges == ((0, 2, 5),)
    for bad in ["", "3 2\n0 1 1\n", "3 1\n1 0 1\n", "3 1\n0 1 x\n", "3 2\n0 1 1\n0 1 2\n", "3 1\n0 1 0\n"]:
        with pytest.raises(FormatError):
            parse_demand(bad)


@pytest.mark.parametrize(
    "host", [HostGraph.complete(5), HostGraph.bipartite(2, 3), HostGraph.explicit(4, [(0, 1), (1, 2), (0, 3)])]
)
def test_host_round_trip(host):
    assert parse_host(format_host(host)) == host


def test_host_args():
    assert parse_host_arg("complete:7") == HostGraph.complete(7)
    assert parse_host_arg("bipartite:3,4") == HostGraph.bipartite(3, 4)
    with pytest.raises(FormatError):
        parse_host_arg("complete:x")
    with pytest.raises(FormatError):
        parse_host("wheel 5\n")
    with pytest.raises(FormatError):
        parse_host("explicit 3\n0 0\n")


def test_paths_json_round_trip_and_reordering():
    d = triangle_demand(3, 2)
    ps = PathSystem(((0, 1), (0, 2), (1, 2)))
    doc = paths_to_json(d, ps)
    assert doc["paths"][1] == {"demand": [0, 2], "copy": 0, "path": [0, 2]}
    doc2 = json.loads(json.dumps(doc))
    doc2["paths"].reverse()
    assert paths_from_json(doc2, d) == ps
    with pytest.raises(FormatError):
        paths_from_json({"paths": [{"demand": [0, 1], "copy": 3, "path": [0, 1]}]}, d)
    with pytest.raises(FormatError):
        paths_from_json({"nope": []}, d)
