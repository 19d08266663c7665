"""Growth series container and the b-file text format (``"n value"`` lines)."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable


KINDS = ("elements", "geodesics")
SOURCES = ("algorithm_a", "algorithm_b", "bfs_oracle", "file")


@dataclass
class GrowthSeries:
    values: list[int]
    kind: str = "elements"
    source: str = "file"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")
        self.values = [int(v) for v in self.values]
        if self.kind == "elements" and self.values and self.values[0] != 1:
            raise ValueError("an element series must start with f(0) = 1")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


def format_bfile(values: Iterable[int]) -> str:
    return "".join(f"{n} {v}\n" for n, v in enumerate(values))


def write_bfile(values: Iterable[int], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_bfile(values))


def parse_bfile(text: str) -> list[int]:
    """Read ``n value`` lines; ``#`` comments and blank lines are skipped.

    Indices must run 0, 1, 2, ... without gaps.
    """
    values: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'n value', got {line!r}")
        n, v = int(parts[0]), int(parts[1])
        if n != len(values):
            raise ValueError(f"line {lineno}: expected index {len(values)}, got {n}")
        values.append(v)
    return values


def read_bfile(path: str | os.PathLike, kind: str = "elements") -> GrowthSeries:
    with open(path, encoding="ascii") as fh:
        values = parse_bfile(fh.read())
    return GrowthSeries(values, kind, "file", {"path": str(path)})
