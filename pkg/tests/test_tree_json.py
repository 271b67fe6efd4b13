import json

import pytest

from logic.dyck import EMPTY_WORD, enumerate_words
from logic.errors import TreeError
from logic.tree import SINGLE_VERTEX, from_dyck, to_dyck
from parsers.tree_json import decode_projection, encode_json, tree_from_json, tree_to_json
from parsers.word_parser import parse_text, render_text


def test_decode_projection_example():
    projection = decode_projection(parse_text("(2 (1 ) ) (3 )"))
    assert projection['passport'] == {'black': [5, 1], 'white': [3, 3]}
    assert projection['n'] == 6
    assert projection['m'] == 3
    assert projection['aut_order'] == 1
    assert projection['weight_distribution'] == [3, 2, 1]
    assert projection['tree'] == {
        'color': 'black',
        'edges': [
            {'weight': 2, 'child': {'color': 'white', 'edges': [
                {'weight': 1, 'child': {'color': 'black', 'edges': []}},
            ]}},
            {'weight': 3, 'child': {'color': 'white', 'edges': []}},
        ],
    }


def test_decode_projection_of_single_vertex():
    projection = decode_projection(EMPTY_WORD)
    assert projection['n'] == 0
    assert projection['passport'] is None
    assert projection['tree'] == {'color': None, 'edges': []}
    assert tree_from_json(projection) is SINGLE_VERTEX


@pytest.mark.parametrize("n", range(0, 9))
def test_json_round_trip(n):
    for w in enumerate_words(n):
        assert parse_text(render_text(w)) == w
        assert to_dyck(tree_from_json(tree_to_json(from_dyck(w)))) == w


@pytest.mark.parametrize("n", range(0, 7))
def test_encode_inverts_decode(n):
    for w in enumerate_words(n):
        payload = json.loads(json.dumps(decode_projection(w)))
        assert encode_json(payload) == w


@pytest.mark.parametrize("payload", [
    [],
    {'color': 'white', 'edges': [{'weight': 1, 'child': {'color': 'black', 'edges': []}}]},
    {'color': 'black', 'edges': [{'weight': 0, 'child': {'color': 'white', 'edges': []}}]},
    {'color': 'black', 'edges': [{'weight': True, 'child': {'color': 'white', 'edges': []}}]},
    {'color': 'black', 'edges': [{'weight': 1, 'child': {'color': 'black', 'edges': []}}]},
    {'color': 'black', 'edges': [{'weight': 1}]},
    {'color': 'black', 'edges': []},
])
def test_malformed_tree_json(payload):
    with pytest.raises(TreeError):
        tree_from_json(payload)
