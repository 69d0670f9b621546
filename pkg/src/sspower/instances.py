"""Instance files: parsing, printing and the bundled games.

Two text formats are accepted:

* compact, as games are usually written: ``50; 40, 30, 20, 10``.  Square
  brackets and a leading ``name:`` are optional, e.g. ``figure1: [50; 40, 30, 20, 10]``.
* JSON: ``{"name": "figure1", "quota": 50, "weights": [40, 30, 20, 10]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, UnknownInstance
from .game import WeightedMajorityGame, new_game


@dataclass(frozen=True)
class InstanceFile:
    name: str | None
    quota: int
    weights: tuple[int, ...]

    def game(self) -> WeightedMajorityGame:
        return new_game(self.quota, self.weights)


_US_WEIGHTS = (
    [45, 41, 27, 26, 26, 25, 21, 17, 17, 14, 13, 13, 12, 12, 12, 11]
    + [10] * 4 + [9] * 4 + [8, 8] + [7] * 4 + [6] * 4 + [5] + [4] * 9 + [3] * 7
)

BUILTINS = {
    "figure1": InstanceFile("figure1", 50, (40, 30, 20, 10)),
    "eu_council": InstanceFile(
        "eu_council",
        255,
        (29, 29, 29, 29, 27, 27, 14, 13, 12, 12, 12, 12, 12, 10, 10, 10,
         7, 7, 7, 7, 7, 4, 4, 4, 4, 4, 3),
    ),
    "us_electoral": InstanceFile("us_electoral", 270, tuple(_US_WEIGHTS)),
}


def builtin_instance(name: str) -> InstanceFile:
    try:
        return BUILTINS[name]
    except KeyError:
        raise UnknownInstance(
            f"unknown instance {name!r}; choose from {', '.join(sorted(BUILTINS))}"
        ) from None


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


_NAME = re.compile(r"\s*([A-Za-z_][\w.-]*)\s*:")
_INT = re.compile(r"\s*([+-]?\d+)")


def _parse_compact(text: str) -> InstanceFile:
    pos = 0
    name = None
    m = _NAME.match(text, pos)
    if m:
        name, pos = m.group(1), m.end()

    def skip_ws(p):
        while p < len(text) and text[p].isspace():
            p += 1
        return p

    def expect(p, ch):
        p = skip_ws(p)
        if p >= len(text) or text[p] != ch:
            found = repr(text[p]) if p < len(text) else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", *_position(text, p))
        return p + 1

    def integer(p):
        m = _INT.match(text, p)
        if not m:
            p = skip_ws(p)
            found = repr(text[p]) if p < len(text) else "end of input"
            raise ParseError(f"expected an integer, found {found}", *_position(text, p))
        return int(m.group(1)), m.end()

    pos = skip_ws(pos)
    bracket = pos < len(text) and text[pos] == "["
    if bracket:
        pos += 1
    quota, pos = integer(pos)
    pos = expect(pos, ";")
    weights = []
    while True:
        w, pos = integer(pos)
        weights.append(w)
        nxt = skip_ws(pos)
        if nxt < len(text) and text[nxt] == ",":
            pos = nxt + 1
            continue
        pos = nxt
        break
    if bracket:
        pos = expect(pos, "]")
    pos = skip_ws(pos)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r}", *_position(text, pos))
    return InstanceFile(name, quota, tuple(weights))


def _parse_json(text: str) -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "quota" not in doc or "weights" not in doc:
        raise ParseError("JSON instance needs 'quota' and 'weights'")
    quota, weights = doc["quota"], doc["weights"]
    if not isinstance(quota, int) or isinstance(quota, bool):
        raise ParseError("'quota' must be an integer")
    if not isinstance(weights, list) or not all(
        isinstance(w, int) and not isinstance(w, bool) for w in weights
    ):
        raise ParseError("'weights' must be a list of integers")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    return InstanceFile(name, quota, tuple(weights))


def parse_instance(text: str, validate: bool = True) -> InstanceFile:
    """Parse either instance format; validates the game unless told not to."""
    body = text.lstrip("﻿")
    if not body.strip():
        raise ParseError("empty instance text")
    inst = _parse_json(body) if body.lstrip().startswith("{") else _parse_compact(body)
    if validate:
        inst.game()
    return inst


def format_compact(inst: InstanceFile) -> str:
    head = f"{inst.name}: " if inst.name else ""
    return f"{head}{inst.quota}; {', '.join(map(str, inst.weights))}"


def format_json(inst: InstanceFile) -> str:
    return json.dumps({"name": inst.name, "quota": inst.quota, "weights": list(inst.weights)})


def load_instance(source: str) -> InstanceFile:
    """Resolve a builtin name, a file path or inline instance text."""
    if source in BUILTINS:
        return BUILTINS[source]
    path = Path(source)
    if path.is_file():
        inst = parse_instance(path.read_text(encoding="utf-8"))
        return inst if inst.name else InstanceFile(path.stem, inst.quota, inst.weights)
    if any(ch in source for ch in ";{"):
        return parse_instance(source)
    raise UnknownInstance(
        f"{source!r} is neither a builtin ({', '.join(sorted(BUILTINS))}) nor a file"
    )
