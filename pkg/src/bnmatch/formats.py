"""Flat file formats: instance files (JSON or CSV) and matching files (JSON).

Floats are serialized with 17 significant digits so IEEE doubles round-trip
exactly; matching-file keys always appear in the same order.
"""
from __future__ import annotations

import json
from typing import Sequence


class ParseError(Exception):
    """Unreadable or malformed input file."""


def fmt17(v: float) -> str:
    return format(float(v), ".17g")


def instance_to_json(points: Sequence[tuple[float, float]]) -> str:
    rows = ",\n  ".join(f"[{fmt17(x)}, {fmt17(y)}]" for x, y in points)
    return '{"points": [\n  ' + rows + "\n]}\n"


def instance_to_csv(points: Sequence[tuple[float, float]]) -> str:
    return "".join(f"{fmt17(x)},{fmt17(y)}\n" for x, y in points)


def parse_instance(text: str) -> list[tuple[float, float]]:
    """Accept either the JSON form or bare "x,y" CSV lines."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty instance file")
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from e
        if not isinstance(obj, dict) or "points" not in obj:
            raise ParseError('instance JSON must be an object with a "points" key')
        raw = obj["points"]
    else:
        raw = []
        for ln, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            cells = line.split(",")
            if len(cells) != 2:
                raise ParseError(f"line {ln}: expected 'x,y', got {line!r}")
            raw.append(cells)
    out = []
    try:
        for p in raw:
            x, y = p
            out.append((float(x), float(y)))
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad point entry: {e}") from e
    return out


def matching_to_json(
    n: int,
    value: float,
    pairs: Sequence[tuple[int, int]],
    structure: str,
    cascades: int,
    candidates: int | None,
) -> str:
    pair_rows = ", ".join(f"[{int(a)}, {int(b)}]" for a, b in pairs)
    cand = "null" if candidates is None else str(int(candidates))
    return (
        "{"
        f'"n": {int(n)}, '
        f'"value": {fmt17(value)}, '
        f'"pairs": [{pair_rows}], '
        f'"structure": "{structure}", '
        f'"cascades": {int(cascades)}, '
        f'"candidates": {cand}'
        "}\n"
    )


def parse_matching(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad JSON: {e}") from e
    if not isinstance(obj, dict):
        raise ParseError("matching file must be a JSON object")
    for key in ("n", "value", "pairs"):
        if key not in obj:
            raise ParseError(f"matching file missing key {key!r}")
    try:
        obj["n"] = int(obj["n"])
        obj["value"] = float(obj["value"])
        obj["pairs"] = [(int(a), int(b)) for a, b in obj["pairs"]]
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad matching entry: {e}") from e
    return obj
