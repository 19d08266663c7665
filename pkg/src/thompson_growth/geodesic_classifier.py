"""Which generators shorten or lengthen a word.

All relators of F have even length, so every generator either shortens or
lengthens; there is no neutral direction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .forest_core import GENERATORS, ForestDiagram, Generator, diagram_of, multiply, weight


@dataclass(frozen=True)
class GeneratorPartition:
    down: frozenset[Generator]
    up: frozenset[Generator]

    def __post_init__(self):
        if self.down & self.up or len(self.down | self.up) != len(GENERATORS):
            raise ValueError("down/up must partition the generators")


class NeutralGeneratorError(RuntimeError):
    """A generator left the length unchanged; impossible for even relators."""


def classify_incremental(d: ForestDiagram, length: int) -> GeneratorPartition:
    down, up = [], []
    for g in GENERATORS:
        delta = weight(multiply(d, g)) - length
        if delta == -1:
            down.append(g)
        elif delta == 1:
            up.append(g)
        else:
            raise NeutralGeneratorError(f"generator {g.name} changes length by {delta}")
    return GeneratorPartition(frozenset(down), frozenset(up))


def classify(word) -> GeneratorPartition:
    d = diagram_of(word)
    return classify_incremental(d, weight(d))
