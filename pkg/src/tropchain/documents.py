"""JSON interchange documents.

One document per file, always a JSON object with a ``kind`` field::

    {"kind": "tableau", "rows": [[1, 3, 4], [2, 5, 6]]}
    {"kind": "graph", "loops": [["10", "1"], ...]}
    {"kind": "path", "r": 2, "points": [[2, 1], [3, 1], ...]}
    {"kind": "divisor", "graph": {...}, "head": 2,
     "underline": [2, 3, 1, 0, 1, 0], "raw": ["3", "4", "2", "0", "2", "0"]}

Rationals are strings ``"p/q"`` or integer strings; integers are accepted on
input too.  Floats are rejected everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .divisors import DivisorSeq, UnderlineSeq, underline_to_raw
from .graph_core import ChainOfLoops, make_chain
from .paths import LatticePath
from .tableaux import RectTableau, validate

KINDS = ("tableau", "path", "divisor", "graph")

Payload = Union[RectTableau, LatticePath, DivisorSeq, UnderlineSeq, ChainOfLoops]


@dataclass
class Document:
    kind: str
    payload: Payload
    meta: dict[str, Any] = field(default_factory=dict)


def _rational(value: Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"rational must be an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {value!r}") from exc


def _integer(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"integer expected, got {value!r}")
    return value


def graph_to_json(graph: ChainOfLoops) -> dict:
    return {"kind": "graph", "loops": [[str(loop.ell), str(loop.m)] for loop in graph.loops]}


def graph_from_json(obj: dict) -> ChainOfLoops:
    loops = obj.get("loops")
    if not isinstance(loops, list) or not loops:
        raise ValueError("graph document needs a nonempty 'loops' list")
    pairs = []
    for pair in loops:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"loop must be a [ell, m] pair, got {pair!r}")
        pairs.append((_rational(pair[0]), _rational(pair[1])))
    return make_chain(pairs)


def to_json(doc: Document) -> dict:
    p = doc.payload
    if doc.kind == "tableau":
        out = {"kind": "tableau", "rows": p.to_lists()}
    elif doc.kind == "path":
        out = {"kind": "path", "r": p.r, "points": [list(pt) for pt in p.points]}
    elif doc.kind == "graph":
        out = graph_to_json(p)
    elif doc.kind == "divisor":
        # raw payloads stay raw so that loading gives back the same type
        under = p if isinstance(p, UnderlineSeq) else None
        raw = underline_to_raw(p) if under is not None else p
        out = {"kind": "divisor", "graph": graph_to_json(raw.graph), "head": raw.d0}
        if under is not None:
            out["underline"] = list(under.xu)
        out["raw"] = [str(x) for x in raw.x]
    else:
        raise ValueError(f"unknown document kind {doc.kind!r}")
    if doc.meta:
        out["meta"] = doc.meta
    return out


def from_json(obj: Any) -> Document:
    if not isinstance(obj, dict):
        raise ValueError("document must be a JSON object")
    kind = obj.get("kind")
    meta = obj.get("meta") or {}
    if not isinstance(meta, dict):
        raise ValueError("'meta' must be an object")
    if kind == "tableau":
        rows = obj.get("rows")
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("tableau document needs 'rows' as a list of lists")
        tableau = RectTableau.from_rows([[_integer(a) for a in row] for row in rows])
        if not validate(tableau):
            raise ValueError("rows do not form a standard rectangular tableau")
        return Document("tableau", tableau, meta)
    if kind == "path":
        r = _integer(obj.get("r"))
        points = obj.get("points")
        if not isinstance(points, list) or not all(isinstance(pt, list) for pt in points):
            raise ValueError("path document needs 'points' as a list of lists")
        path = LatticePath(r, tuple(tuple(_integer(a) for a in pt) for pt in points))
        return Document("path", path, meta)
    if kind == "graph":
        return Document("graph", graph_from_json(obj), meta)
    if kind == "divisor":
        graph_obj = obj.get("graph")
        if not isinstance(graph_obj, dict):
            raise ValueError("divisor document needs an embedded 'graph' object")
        graph = graph_from_json(graph_obj)
        head = _integer(obj.get("head"))
        if "underline" in obj:
            divisor = UnderlineSeq(graph, head, tuple(_integer(v) for v in obj["underline"]))
            if "raw" in obj:
                raw = DivisorSeq(graph, head, tuple(_rational(v) for v in obj["raw"]))
                if raw != underline_to_raw(divisor):
                    raise ValueError("'raw' and 'underline' describe different divisors")
            return Document("divisor", divisor, meta)
        if "raw" in obj:
            raw = DivisorSeq(graph, head, tuple(_rational(v) for v in obj["raw"]))
            return Document("divisor", raw, meta)
        raise ValueError("divisor document needs 'underline' or 'raw'")
    raise ValueError(f"unknown document kind {kind!r}; expected one of {', '.join(KINDS)}")


def dumps(doc: Document) -> str:
    return json.dumps(to_json(doc), separators=(", ", ": "))


def loads(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return from_json(obj)
