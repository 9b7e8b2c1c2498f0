"""Reading and writing point configurations.

Two formats:

* plain text: one "x y" pair per line, blank lines and '#' comments ignored;
* JSON document: {"n": ..., "k": ..., "points": [["x", "y"], ...], "metadata": {...}}
  with coordinates kept as strings.

Both round-trip coordinate strings verbatim. A path ending in ".json" selects
the document format.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import ParseError
from .geometry import Configuration


def _parse_coord(token: str, path, lineno: int) -> float:
    try:
        v = float(token)
    except ValueError:
        raise ParseError(f"{path}:{lineno}: not a number: {token!r}") from None
    if not math.isfinite(v):
        raise ParseError(f"{path}:{lineno}: non-finite coordinate {token!r}")
    return v


def _check_duplicates(points: list[tuple[float, float]], lines: list[int], path) -> None:
    seen: dict[tuple[float, float], int] = {}
    for pt, lineno in zip(points, lines):
        if pt in seen:
            raise ParseError(
                f"{path}:{lineno}: duplicate point {pt} (first at line {seen[pt]})")
        seen[pt] = lineno


def load_points_text(path) -> Configuration:
    points: list[tuple[float, float]] = []
    strings: list[tuple[str, str]] = []
    lines: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError(f"{path}:{lineno}: expected 'x y', got {raw.strip()!r}")
            x = _parse_coord(tokens[0], path, lineno)
            y = _parse_coord(tokens[1], path, lineno)
            points.append((x, y))
            strings.append((tokens[0], tokens[1]))
            lines.append(lineno)
    if not points:
        raise ParseError(f"{path}: no points found")
    _check_duplicates(points, lines, path)
    return Configuration(points, coord_strings=strings)


def load_document(path) -> tuple[Configuration, dict[str, Any]]:
    """Load the JSON document format; returns the configuration and metadata."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError(f"{path}: expected an object with a 'points' list")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{path}: 'points' must be a non-empty list")
    points: list[tuple[float, float]] = []
    strings: list[tuple[str, str]] = []
    lines: list[int] = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"{path}: point {i} must be an [x, y] pair")
        sx, sy = str(pair[0]), str(pair[1])
        points.append((_parse_coord(sx, path, i), _parse_coord(sy, path, i)))
        strings.append((sx, sy))
        lines.append(i)
    _check_duplicates(points, lines, path)
    if "n" in doc and int(doc["n"]) != len(points):
        raise ParseError(f"{path}: document says n={doc['n']} but has {len(points)} points")
    metadata = {key: doc[key] for key in doc if key != "points"}
    config = Configuration(points, coord_strings=strings)
    return config, metadata


def load_points(path) -> Configuration:
    """Load a configuration from a text or JSON points file (by extension)."""
    if str(path).endswith(".json"):
        config, _ = load_document(path)
        return config
    return load_points_text(path)


def save_points(config: Configuration, path, k: int | None = None,
                metadata: dict[str, Any] | None = None) -> None:
    """Write a configuration, preserving original coordinate strings.

    Text format by default; a ".json" path selects the document format where
    k and extra metadata can be recorded.
    """
    strings = config.coord_strings or tuple(
        (repr(x), repr(y)) for x, y in config.points)
    if str(path).endswith(".json"):
        doc: dict[str, Any] = {"n": len(config)}
        if k is not None:
            doc["k"] = k
        doc["points"] = [[sx, sy] for sx, sy in strings]
        if metadata:
            doc["metadata"] = metadata
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            for sx, sy in strings:
                fh.write(f"{sx} {sy}\n")
