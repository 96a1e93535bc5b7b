"""Plain-text data files for embedding figures.

Point files are two whitespace-separated numeric columns, one point per line;
heatmap files are a whitespace-separated numeric matrix, one row per line.
Values are plotting data, so floats are fine here.
"""

from __future__ import annotations

import os


def load_points(path: str | os.PathLike) -> tuple[tuple[float, float], ...]:
    points = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            fields = line.split()
            if not fields:
                continue
            if len(fields) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 columns, got {len(fields)}")
            try:
                points.append((float(fields[0]), float(fields[1])))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: non-numeric value") from exc
    return tuple(points)


def save_points(path: str | os.PathLike, points) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for x, y in points:
            fh.write(f"{x!r} {y!r}\n")


def load_matrix(path: str | os.PathLike) -> tuple[tuple[float, ...], ...]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            fields = line.split()
            if not fields:
                continue
            try:
                rows.append(tuple(float(v) for v in fields))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: non-numeric value") from exc
    if not rows:
        raise ValueError(f"{path}: empty matrix")
    if any(len(row) != len(rows[0]) for row in rows):
        raise ValueError(f"{path}: rows have unequal lengths")
    return tuple(rows)


def save_matrix(path: str | os.PathLike, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")
