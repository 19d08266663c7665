"""Sphere and geodesic counts by depth-first traversal of geodesic words.

Every geodesic word of length n is visited once, in lexicographic order
under a < A < b < B.  Each word contributes the product of 1/|d-(w_i)| over
its non-empty prefixes w_i; these rational weights add up to exactly one per
group element, so their total is the sphere size.  Counting the words
themselves gives the geodesic growth.

Memory is linear in n: only the current path of diagrams is kept.
"""
from __future__ import annotations

import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .forest_core import (
    GENERATORS, IDENTITY, ForestDiagram, Generator, Word, diagram_of, multiply, weight,
)
from .geodesic_classifier import classify_incremental
from .series import GrowthSeries

WARN_DEPTH = 16
PRACTICAL_DEPTH = 22


class IntegralityError(ArithmeticError):
    """A sphere sum was not an integer: the length test or multiplication is wrong."""


@dataclass
class TraversalFrame:
    word: Word
    diagram: ForestDiagram
    length: int
    down_counts: tuple[int, ...] = field(default=())  # |d-(w_i)| for i = 1..length


def _expand(d: ForestDiagram, length: int, last: int):
    """|d-| of ``d`` and the lengthening generators with their diagrams.

    The inverse of the last letter always shortens, so it is not tested.
    """
    down = 0
    up = []
    skip = last ^ 1 if last >= 0 else -1
    for g in GENERATORS:
        if g == skip:
            down += 1
            continue
        e = multiply(d, g)
        if weight(e) < length:
            down += 1
        else:
            up.append((g, e))
    return down, up


def _warn_depth(n: int) -> None:
    if n > WARN_DEPTH:
        warnings.warn(f"geodesic traversal to depth {n} is exponential; "
                      f"expect long runtimes beyond {WARN_DEPTH}", RuntimeWarning, stacklevel=3)


def _traverse(n_max: int, prefix: Word = ()):
    """Denominator histograms and word counts for every length up to ``n_max``.

    Only words extending ``prefix`` (itself assumed geodesic) are counted,
    at lengths >= len(prefix).
    """
    dens = [Counter() for _ in range(n_max + 1)]
    counts = [0] * (n_max + 1)

    d = IDENTITY
    den = 1
    last = -1
    for i, g in enumerate(prefix):
        down, up = _expand(d, i, last)
        if i:
            den *= down
        nxt = dict(up)
        if g not in nxt:
            return dens, counts
        d, last = nxt[g], g
    k0 = len(prefix)

    def visit(d, length, last, den):
        down, up = _expand(d, length, last)
        if length:
            den *= down
        dens[length][den] += 1
        counts[length] += 1
        if length < n_max:
            for g, e in up:
                visit(e, length + 1, g, den)

    if k0 <= n_max:
        visit(d, k0, last, den)
    return dens, counts


def _fraction_total(hist: Counter) -> Fraction:
    return sum((Fraction(c, den) for den, c in hist.items()), Fraction(0))


def _finish(dens, counts) -> tuple[list[int], list[int], list[Fraction]]:
    totals = [_fraction_total(h) for h in dens]
    spheres = []
    for n, t in enumerate(totals):
        if t.denominator != 1:
            raise IntegralityError(f"sphere {n} accumulated to non-integer {t}")
        spheres.append(t.numerator)
    return spheres, counts, totals


def _traverse_prefix(args):
    n_max, prefix = args
    return _traverse(n_max, prefix)


def sphere_and_geodesic_counts(n_max: int, workers: int = 1) -> tuple[list[int], list[int]]:
    """(f(0..n_max), g(0..n_max)) from one traversal.

    With ``workers > 1`` the tree is split at its length-2 prefixes and the
    pieces are summed exactly.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    _warn_depth(n_max)
    if workers <= 1 or n_max < 2:
        spheres, counts, _ = _finish(*_traverse(n_max))
        return spheres, counts

    dens, counts = _traverse(1)
    dens += [Counter() for _ in range(n_max - 1)]
    counts += [0] * (n_max - 1)
    prefixes = [(a, b) for a in GENERATORS for b in GENERATORS]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part_dens, part_counts in pool.map(_traverse_prefix, [(n_max, p) for p in prefixes]):
            for n in range(2, n_max + 1):
                dens[n].update(part_dens[n])
                counts[n] += part_counts[n]
    spheres, counts, _ = _finish(dens, counts)
    return spheres, counts


def exact_totals(n_max: int) -> tuple[list[Fraction], list[int]]:
    """Raw rational sphere sums and geodesic counts, before the integrality check."""
    _warn_depth(n_max)
    dens, counts = _traverse(n_max)
    return [_fraction_total(h) for h in dens], counts


def sphere_accumulators(n_max: int) -> list[Fraction]:
    """The exact rational sums before the integrality check."""
    return exact_totals(n_max)[0]


def count_sphere(n: int) -> int:
    return sphere_and_geodesic_counts(n)[0][n]


def count_geodesics(n: int) -> int:
    return sphere_and_geodesic_counts(n)[1][n]


def growth_series(n_max: int, workers: int = 1) -> tuple[GrowthSeries, GrowthSeries]:
    f, g = sphere_and_geodesic_counts(n_max, workers)
    return (GrowthSeries(f, "elements", "algorithm_a"),
            GrowthSeries(g, "geodesics", "algorithm_a"))


def walk_geodesics(n: int, order: tuple[Generator, ...] = GENERATORS) -> Iterator[TraversalFrame]:
    """Frames of all geodesics of length exactly ``n``, in lexicographic order.

    ``order`` fixes the generator order used for the traversal.
    """
    def rec(frame: TraversalFrame):
        part = classify_incremental(frame.diagram, frame.length)
        downs = frame.down_counts + ((len(part.down),) if frame.length else ())
        if frame.length == n:
            yield TraversalFrame(frame.word, frame.diagram, frame.length, downs)
            return
        for g in order:
            if g in part.up:
                yield from rec(TraversalFrame(frame.word + (g,), multiply(frame.diagram, g),
                                              frame.length + 1, downs))

    yield from rec(TraversalFrame((), IDENTITY, 0))


def enumerate_geodesics(n: int, visit: Callable[[Word], None]) -> None:
    """Call ``visit`` on every geodesic word of length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(word, d, length, last):
        if length == n:
            visit(word)
            return
        _, up = _expand(d, length, last)
        for g, e in up:
            rec(word + (g,), e, length + 1, g)

    rec((), IDENTITY, 0, -1)


def weighted_geodesics(n: int) -> Iterator[tuple[Word, Fraction]]:
    """Each geodesic of length ``n`` with its weight prod 1/|d-(w_i)|."""
    for frame in walk_geodesics(n):
        p = Fraction(1)
        for c in frame.down_counts:
            p /= c
        yield frame.word, p


class Exhausted:
    """Sentinel returned when no geodesic follows."""

    def __repr__(self) -> str:
        return "Exhausted"


EXHAUSTED = Exhausted()


def _up_set(word: Word, n: int) -> list[Generator]:
    if len(word) >= n:
        return []
    d = diagram_of(word)
    return sorted(classify_incremental(d, len(word)).up)


def next_geodesic(word: Word, n: int) -> Word | Exhausted:
    """Successor of ``word`` among geodesics of length <= n, in preorder.

    Extends by the first lengthening generator when possible, otherwise
    backtracks to the nearest prefix with a later lengthening generator.
    """
    word = tuple(word)
    up = _up_set(word, n)
    if up:
        return word + (up[0],)
    while word:
        x = word[-1]
        word = word[:-1]
        later = [y for y in _up_set(word, n) if y > x]
        if later:
            return word + (later[0],)
    return EXHAUSTED


def iter_geodesics(n: int) -> Iterator[Word]:
    """All geodesics of length <= n via repeated :func:`next_geodesic`."""
    w: Optional[Word] = ()
    while w is not EXHAUSTED:
        yield w
        w = next_geodesic(w, n)
