import json

import pytest
from hypothesis import given

from knotiu.diagram import LinkDiagram
from knotiu.io import ParseError, diagram_to_json, dumps, from_pd_text, loads, read_diagram, to_pd_text

from strategies import diagrams


@given(diagrams())
def test_json_round_trip(d):
    text = dumps(d)
    assert loads(text) == d
    assert dumps(loads(text)) == text


@given(diagrams())
def test_pd_round_trip(d):
    text = to_pd_text(d)
    assert from_pd_text(text) == d
    assert to_pd_text(from_pd_text(text)) == text


def test_free_loops_round_trip():
    d = LinkDiagram.unknot(3)
    assert diagram_to_json(d)["free_loops"] == 3
    assert loads(dumps(d)) == d


def test_pd_text_example():
    d = read_diagram("components: 1-6\nX(1,5,2,4) X(3,1,4,6)\nX(5,3,6,2)\n")
    assert d.c == 3 and d.n == 1


@pytest.mark.parametrize("text, where", [
    ("components: 1-6\nX(1,5,2,4)\nX(3,1,4,6\n", "3:1"),
    ("components: (1,6)\n", "1:13"),
    ("X(1,2,3,4)\n", "1:1"),
    ("components: 1-2\nsigns: + x\n", "2:"),
])
def test_pd_errors_carry_position(text, where):
    with pytest.raises(ParseError) as exc:
        from_pd_text(text)
    assert str(exc.value).startswith(where)


def test_json_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        loads('{"crossings": [[1,2,3')
    assert exc.value.line == 1


@pytest.mark.parametrize("obj", [[], {"crossings": [[1, "a", 2, 3]], "components": [[1, 4]]},
                                 {"crossings": [], "components": []}, {"components": [[1]]},
                                 {"crossings": [], "components": [], "free_loops": -1}])
def test_json_shape_errors(obj):
    with pytest.raises(ParseError):
        loads(json.dumps(obj))
