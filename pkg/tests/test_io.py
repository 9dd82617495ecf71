import json

import pytest
from hypothesis import given, settings

from setramsey import FormatError
from setramsey.codes import greedy_gv_code
from setramsey.constructions import AffineParams, affine_partition_family, pentagon_coloring
from setramsey.io import (
    dumps_code,
    dumps_coloring,
    dumps_partitions,
    loads_code,
    loads_coloring,
    loads_partitions,
)
from strategies import colorings


def test_header_and_edge_order():
    text = dumps_coloring(pentagon_coloring())
    lines = text.splitlines()
    assert json.loads(lines[0]) == {"format_version": 1, "k": 2, "N": 5, "r": 2, "s": 1, "slack": False}
    assert [json.loads(x)["v"] for x in lines[1:4]] == [[0, 1], [0, 2], [1, 2]]


@settings(max_examples=60, deadline=None)
@given(colorings(slack=True))
def test_coloring_round_trip_is_byte_identical(c):
    text = dumps_coloring(c)
    back = loads_coloring(text)
    assert back == c
    assert dumps_coloring(back) == text


def test_code_and_partition_round_trips():
    code = greedy_gv_code(3, 4, 2)
    text = dumps_code(code)
    assert loads_code(text) == code and dumps_code(loads_code(text)) == text
    pf = affine_partition_family(AffineParams(2, 3, 1))
    text = dumps_partitions(pf)
    assert loads_partitions(text) == pf and dumps_partitions(loads_partitions(text)) == text


def _lines(c):
    return dumps_coloring(c).splitlines()


@pytest.mark.parametrize("mutate", [
    lambda ls: ls[:-1],
    lambda ls: [ls[0].replace('"format_version": 1', '"format_version": 9')] + ls[1:],
    lambda ls: [ls[0], ls[2], ls[1]] + ls[3:],
    lambda ls: ls[:1] + ['{"v": [0, 1], "c": [1, 0]}'] + ls[2:],
    lambda ls: ls[:1] + ['{"v": [0, 1], "c": [0, 1]}'] + ls[2:],
    lambda ls: ls[:1] + ['{"v": [0, 1], "c": [7]}'] + ls[2:],
    lambda ls: ls[:1] + ['{"v": [0, 1]}'] + ls[2:],
    lambda ls: ls[:1] + ["not json"] + ls[2:],
    lambda ls: [ls[0].replace('"slack": false', '"slack": 0')] + ls[1:],
    lambda ls: [],
])
def test_reader_rejects_invalid_files(mutate):
    with pytest.raises(FormatError):
        loads_coloring("\n".join(mutate(_lines(pentagon_coloring()))))


def test_code_reader_rejects_close_words():
    with pytest.raises(FormatError):
        loads_code('{"q": 2, "m": 3, "d": 2}\n0 0 0\n0 0 1\n')
    with pytest.raises(FormatError):
        loads_code('{"q": 2, "m": 3, "d": 2}\n0 0 x\n')
    with pytest.raises(FormatError):
        loads_code('{"q": 2, "m": 3, "d": 2}\n0 0\n')


def test_partition_reader_rejects_bad_labels():
    with pytest.raises(FormatError):
        loads_partitions('{"num_vertices": 2, "num_partitions": 1, "parts_per_partition": 2, "assignment": [[0, 5]]}')
