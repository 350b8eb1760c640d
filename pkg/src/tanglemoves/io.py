"""
JSON move documents.

A document looks like

    {"n": 2, "top": [[1, 2], [3, 4]], "bottom": [[2, 3], [4, 1]],
     "initial": [1, 3], "word": [{"index": 1, "sign": 1}],
     "sequence": [{"op": "braid", "index": 2, "sign": -1}, {"op": "con", "index": 4}]}

where "word" (a braid word already applied to the move) and "sequence" (an
operation sequence to apply) are optional.  Batches hold one document per line.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .moves import LocalMove, MoveError, validate_move
from .ops import BraidLetter, Connect, OpSequence


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.field = field


@dataclass(frozen=True)
class MoveDocument:
    move: LocalMove
    word: OpSequence | None = None
    sequence: OpSequence | None = None


def _int(value, field: str, line: int | None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"expected an integer, got {value!r}", line, field)
    return value


def _pairs(data: dict, key: str, line: int | None) -> list[tuple[int, int]]:
    raw = data[key]
    if not isinstance(raw, list):
        raise DocumentError("expected a list of label pairs", line, key)
    out = []
    for pos, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != 2:
            raise DocumentError(f"entry {pos} is not a pair", line, key)
        out.append((_int(p[0], key, line), _int(p[1], key, line)))
    return out


def _word(raw, n: int, line: int | None) -> OpSequence:
    if not isinstance(raw, list):
        raise DocumentError("expected a list of letters", line, "word")
    ops = []
    for pos, item in enumerate(raw):
        field = f"word[{pos}]"
        if not isinstance(item, dict) or "index" not in item:
            raise DocumentError("letter needs an 'index'", line, field)
        idx = _int(item["index"], field, line)
        sign = _int(item.get("sign", 1), field, line)
        if not 1 <= idx <= 2 * n:
            raise DocumentError(f"index {idx} exceeds 2n = {2 * n}", line, field)
        if sign not in (1, -1):
            raise DocumentError("sign must be 1 or -1", line, field)
        ops.append(BraidLetter(idx, sign))
    return OpSequence(ops)


def _sequence(raw, n: int, line: int | None) -> OpSequence:
    if not isinstance(raw, list):
        raise DocumentError("expected a list of operations", line, "sequence")
    ops = []
    size = n
    for pos, item in enumerate(raw):
        field = f"sequence[{pos}]"
        if not isinstance(item, dict) or "op" not in item or "index" not in item:
            raise DocumentError("operation needs 'op' and 'index'", line, field)
        idx = _int(item["index"], field, line)
        if not 1 <= idx <= 2 * size:
            raise DocumentError(f"index {idx} exceeds 2n = {2 * size}", line, field)
        if item["op"] == "braid":
            sign = _int(item.get("sign", 1), field, line)
            if sign not in (1, -1):
                raise DocumentError("sign must be 1 or -1", line, field)
            ops.append(BraidLetter(idx, sign))
        elif item["op"] == "con":
            ops.append(Connect(idx))
            size -= 1
            if size < 1:
                raise DocumentError("too many connections", line, field)
        else:
            raise DocumentError(f"unknown op {item['op']!r}", line, field)
    return OpSequence(ops)


def document_from_data(data, line: int | None = None) -> MoveDocument:
    if not isinstance(data, dict):
        raise DocumentError("a move document must be a JSON object", line)
    for key in ("n", "top", "bottom", "initial"):
        if key not in data:
            raise DocumentError("missing", line, key)
    n = _int(data["n"], "n", line)
    if n < 1:
        raise DocumentError("n must be positive", line, "n")
    top = _pairs(data, "top", line)
    bottom = _pairs(data, "bottom", line)
    if not isinstance(data["initial"], list):
        raise DocumentError("expected a list of labels", line, "initial")
    initial = [_int(x, "initial", line) for x in data["initial"]]
    for key, labels in (("top", [x for p in top for x in p]),
                        ("bottom", [x for p in bottom for x in p]), ("initial", initial)):
        bad = [x for x in labels if not 1 <= x <= 2 * n]
        if bad:
            raise DocumentError(f"label {bad[0]} outside 1..{2 * n}", line, key)
    try:
        move = validate_move(top, bottom, initial, n)
    except MoveError as exc:
        raise DocumentError(f"{exc.kind}: {exc}", line) from exc
    word = _word(data["word"], n, line) if "word" in data else None
    seq = _sequence(data["sequence"], n, line) if "sequence" in data else None
    return MoveDocument(move, word, seq)


def parse_move_document(text: str) -> MoveDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg} (column {exc.colno})", exc.lineno) from exc
    return document_from_data(data)


def parse_batch(text: str) -> list[MoveDocument]:
    """One document per non-empty line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"syntax error: {exc.msg} (column {exc.colno})", lineno) from exc
        out.append(document_from_data(data, lineno))
    return out


def parse_documents(text: str) -> list[MoveDocument]:
    """A single JSON document, or JSON lines when that fails to parse as one."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return parse_batch(text)
    if isinstance(data, list):
        return [document_from_data(d, pos + 1) for pos, d in enumerate(data)]
    return [document_from_data(data)]


def move_to_data(move: LocalMove) -> dict:
    return {"n": move.n,
            "top": [list(p) for p in move.top.pairs],
            "bottom": [list(p) for p in move.bottom.pairs],
            "initial": sorted(move.initial)}


def ops_to_data(seq: OpSequence) -> list[dict]:
    out = []
    for op in seq:
        if isinstance(op, BraidLetter):
            out.append({"op": "braid", "index": op.index, "sign": op.sign})
        else:
            out.append({"op": "con", "index": op.index})
    return out


def serialize_move_document(doc: MoveDocument) -> str:
    data = move_to_data(doc.move)
    if doc.word is not None:
        data["word"] = [{"index": op.index, "sign": op.sign} for op in doc.word]
    if doc.sequence is not None:
        data["sequence"] = ops_to_data(doc.sequence)
    return json.dumps(data, sort_keys=True)
