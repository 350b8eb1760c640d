import json

import pytest

from tanglemoves.io import (DocumentError, MoveDocument, parse_batch, parse_documents, parse_move_document,
                            serialize_move_document)
from tanglemoves.moves import ArcDecomposition, standard_move
from tanglemoves.ops import parse_word

THREE = {"n": 3, "top": [[1, 2], [3, 4], [5, 6]], "bottom": [[2, 3], [4, 5], [6, 1]], "initial": [1, 3, 5]}


def test_round_trip():
    doc = MoveDocument(standard_move(ArcDecomposition.of(1, 2)), parse_word("s1 S2"), parse_word("s3 c2"))
    back = parse_move_document(serialize_move_document(doc))
    assert back == doc


def test_missing_initial_names_field():
    data = dict(THREE)
    del data["initial"]
    with pytest.raises(DocumentError) as err:
        parse_move_document(json.dumps(data))
    assert err.value.field == "initial"
    assert "initial" in str(err.value)


def test_word_index_beyond_2n():
    data = dict(THREE, word=[{"index": 7, "sign": 1}])
    with pytest.raises(DocumentError) as err:
        parse_move_document(json.dumps(data))
    assert err.value.field == "word[0]"


def test_label_out_of_range():
    data = dict(THREE, top=[[1, 2], [3, 4], [5, 9]])
    with pytest.raises(DocumentError) as err:
        parse_move_document(json.dumps(data))
    assert err.value.field == "top"


def test_invalid_move_reported():
    data = dict(THREE, top=[[1, 3], [2, 4], [5, 6]])
    with pytest.raises(DocumentError, match="crossing"):
        parse_move_document(json.dumps(data))


def test_syntax_error_has_line():
    with pytest.raises(DocumentError) as err:
        parse_batch(json.dumps(THREE) + "\n{bad\n")
    assert err.value.line == 2


def test_batch_and_array_forms():
    line = json.dumps(THREE)
    assert len(parse_batch(f"{line}\n\n{line}\n")) == 2
    assert len(parse_documents(f"[{line}, {line}]")) == 2
    assert len(parse_documents(line)) == 1


def test_sequence_tracks_size_after_connect():
    data = dict(THREE, sequence=[{"op": "con", "index": 2}, {"op": "braid", "index": 5, "sign": 1}])
    with pytest.raises(DocumentError):
        parse_move_document(json.dumps(data))
