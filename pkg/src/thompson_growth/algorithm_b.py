"""Polynomial-time enumeration of forest diagrams by weight.

Diagrams are grown one column at a time.  Each forest's last column is
summarised by a half-state ``(label, side, excess)``: its gap label, whether
the pointer has been passed, and how far the current tree is from complete.
A pair of half-states plus the weight so far is all the information needed
to append the next column.

Counting starts from one ``[L/L]`` column (weight 2) and reads complete
diagrams at ``[R/R]``.  These padded counts ``h_n`` include any number of
empty boundary columns; ``correct_series`` removes them.

Two engines are provided.  :func:`enumerate_padded_reference` keeps a
dictionary per weight in the plainest way and checks the
structural invariants as it goes.  :func:`enumerate_padded` groups states by
(label, side) pair and stores counts in 2-d object arrays indexed by the
two excesses, so that every transition becomes one shifted slice addition.
Both hold Python integers and only the five weights that can still receive
contributions.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

import numpy as np

from .forest_core import column_weight
from .series import GrowthSeries

LEFT, RIGHT = "left", "right"


class InvalidStateError(ValueError):
    pass


class NegativeCountError(ArithmeticError):
    """A corrected coefficient came out negative: the transition table is wrong."""


class HalfState(NamedTuple):
    label: str
    side: str
    excess: int

    def validate(self) -> None:
        lab, side, h = self
        if side not in (LEFT, RIGHT) or h < 0:
            raise InvalidStateError(f"bad state {self}")
        if lab == "L" and not (side == LEFT and h == 0):
            raise InvalidStateError(f"L must be (L, left, 0), got {self}")
        if lab in ("R", "X") and not (side == RIGHT and h == 0):
            raise InvalidStateError(f"{lab} must be ({lab}, right, 0), got {self}")
        if lab == "N" and h < 1:
            raise InvalidStateError(f"N needs excess >= 1, got {self}")
        if lab not in "LNIRX" or len(lab) != 1:
            raise InvalidStateError(f"unknown label in {self}")


def _continue_tree(side: str, h: int) -> list[HalfState]:
    if h == 0:
        return [HalfState("N", side, 1), HalfState("I", side, 0)]
    return [HalfState("N", side, h + 1), HalfState("N", side, h),
            HalfState("I", side, h), HalfState("I", side, h - 1)]


def transitions_left(s: HalfState) -> frozenset[HalfState]:
    s.validate()
    if s.side != LEFT:
        raise InvalidStateError(f"{s} is not left of the pointer")
    lab, _, h = s
    if lab == "L":
        return frozenset([
            HalfState("L", LEFT, 0),
            HalfState("N", LEFT, 1), HalfState("I", LEFT, 0),
            HalfState("N", RIGHT, 1), HalfState("I", RIGHT, 0),
            HalfState("R", RIGHT, 0), HalfState("X", RIGHT, 0),
        ])
    out = _continue_tree(LEFT, h)
    if lab == "I" and h == 0:
        # a finished tree left of the pointer is followed by an L gap only
        out.append(HalfState("L", LEFT, 0))
    return frozenset(out)


def transitions_right(s: HalfState) -> frozenset[HalfState]:
    s.validate()
    if s.side != RIGHT:
        raise InvalidStateError(f"{s} is not right of the pointer")
    lab, _, h = s
    if lab == "R":
        return frozenset([HalfState("R", RIGHT, 0), HalfState("X", RIGHT, 0)])
    if lab == "X":
        return frozenset([HalfState("N", RIGHT, 1), HalfState("I", RIGHT, 0)])
    out = _continue_tree(RIGHT, h)
    if lab == "I" and h == 0:
        out += [HalfState("R", RIGHT, 0), HalfState("X", RIGHT, 0)]
    return frozenset(out)


def successors(s: HalfState) -> frozenset[HalfState]:
    return transitions_left(s) if s.side == LEFT else transitions_right(s)


def creates_common_caret(top: HalfState, bottom: HalfState,
                         new_top: HalfState, new_bottom: HalfState) -> bool:
    return (new_top.label == "I" and new_bottom.label == "I"
            and top.label != "I" and bottom.label != "I")


SEED = (HalfState("L", LEFT, 0), HalfState("L", LEFT, 0))
SINK = (HalfState("R", RIGHT, 0), HalfState("R", RIGHT, 0))
WINDOW = 5


class WindowViolation(AssertionError):
    pass


def iter_padded_reference(M: int, prune: bool = False) -> Iterator[tuple[int, int]]:
    """Yield ``(n, h_n)`` for n = 0..M using one dictionary per weight."""
    if M < 4:
        raise ValueError("M must be >= 4")
    totals: dict[int, dict[tuple[HalfState, HalfState], int]] = {2: {SEED: 1}}
    yield 0, 0
    yield 1, 0
    for n in range(2, M):
        level = totals.pop(n, {})
        yield n, level.get(SINK, 0)
        if len(totals) > WINDOW - 1:
            raise WindowViolation(f"{len(totals) + 1} live weights at {n}")
        for (s, t), c in level.items():
            if max(s.excess, t.excess) > n:
                raise WindowViolation(f"excess above weight at {n}: {s}, {t}")
            if prune and max(s.excess, t.excess) > M - n:
                continue
            for s2 in successors(s):
                for t2 in successors(t):
                    if creates_common_caret(s, t, s2, t2):
                        continue
                    w = n + column_weight(s2.label, t2.label)
                    if not n + 1 <= w <= n + 4:
                        raise WindowViolation(f"write to weight {w} from {n}")
                    if w > M:
                        continue
                    bucket = totals.setdefault(w, {})
                    bucket[(s2, t2)] = bucket.get((s2, t2), 0) + c
    yield M, totals.get(M, {}).get(SINK, 0)


def enumerate_padded_reference(M: int, prune: bool = False) -> list[int]:
    return [h for _, h in iter_padded_reference(M, prune)]


# --- array engine -------------------------------------------------------------

CLASSES = (("L", LEFT), ("N", LEFT), ("I", LEFT), ("R", RIGHT),
           ("X", RIGHT), ("N", RIGHT), ("I", RIGHT))
_CLASS_INDEX = {c: k for k, c in enumerate(CLASSES)}
_HAS_EXCESS = tuple(lab in "NI" for lab, _ in CLASSES)
_SINK_CLASSES = (_CLASS_INDEX[("R", RIGHT)], _CLASS_INDEX[("R", RIGHT)])


def _moves(cls: int, h: int) -> list[tuple[int, int]]:
    lab, side = CLASSES[cls]
    return sorted((_CLASS_INDEX[(t.label, t.side)], t.excess - h)
                  for t in successors(HalfState(lab, side, h)))


def _vector_transitions():
    """Per class: [(selector, [(target class, excess shift)])].

    The selector is "zero" for excess 0 and "pos" for excess >= 1; for
    positive excess the moves are the same at every height.
    """
    table = []
    for cls, (lab, _) in enumerate(CLASSES):
        entries = []
        if lab != "N":
            entries.append(("zero", _moves(cls, 0)))
        if _HAS_EXCESS[cls]:
            pos = _moves(cls, 1)
            if pos != _moves(cls, 2):  # pragma: no cover - guards the derivation
                raise AssertionError("excess-dependent transitions beyond h = 1")
            entries.append(("pos", pos))
        table.append(entries)
    return table


def _label_weights():
    return [[column_weight(CLASSES[a][0], CLASSES[b][0]) for b in range(len(CLASSES))]
            for a in range(len(CLASSES))]


def iter_padded(M: int, prune: bool = False) -> Iterator[tuple[int, int]]:
    """Yield ``(n, h_n)`` for n = 0..M as soon as each weight is complete.

    With ``prune`` set, states whose excess exceeds the remaining weight
    budget ``M - n`` are dropped; they can never be completed in time.
    """
    if M < 4:
        raise ValueError("M must be >= 4")
    moves = _vector_transitions()
    weights = _label_weights()
    labels = [lab for lab, _ in CLASSES]
    size = M // 2 + 3  # excess at weight n is at most (n - 2) / 2

    def shape(c1, c2):
        return (size if _HAS_EXCESS[c1] else 1, size if _HAS_EXCESS[c2] else 1)

    ring: dict[int, dict[tuple[int, int], np.ndarray]] = {}

    def target(w, c1, c2):
        lvl = ring.setdefault(w, {})
        arr = lvl.get((c1, c2))
        if arr is None:
            arr = lvl[(c1, c2)] = np.zeros(shape(c1, c2), dtype=object)
        return arr

    seed = _CLASS_INDEX[("L", LEFT)]
    target(2, seed, seed)[0, 0] = 1
    yield 0, 0
    yield 1, 0
    for n in range(2, M):
        level = ring.pop(n, {})
        sink = level.get(_SINK_CLASSES)
        yield n, int(sink[0, 0]) if sink is not None else 0
        bound = (n - 2) // 2 + 1
        if prune:
            bound = min(bound, M - n + 1)
        for (c1, c2), src in level.items():
            for sel1, moves1 in moves[c1]:
                r0, r1 = (0, 1) if sel1 == "zero" else (1, bound)
                if r0 >= r1:
                    continue
                for sel2, moves2 in moves[c2]:
                    q0, q1 = (0, 1) if sel2 == "zero" else (1, bound)
                    if q0 >= q1:
                        continue
                    block = src[r0:r1, q0:q1]
                    if not block.any():
                        continue
                    for d1, s1 in moves1:
                        for d2, s2 in moves2:
                            if (labels[d1] == "I" and labels[d2] == "I"
                                    and labels[c1] != "I" and labels[c2] != "I"):
                                continue
                            w = n + weights[d1][d2]
                            if w > M:
                                continue
                            dst = target(w, d1, d2)
                            dst[r0 + s1:r1 + s1, q0 + s2:q1 + s2] += block
    last = ring.get(M, {}).get(_SINK_CLASSES)
    yield M, int(last[0, 0]) if last is not None else 0


def estimate_memory(M: int) -> int:
    """Rough upper estimate, in bytes, of the peak footprint of ``iter_padded(M)``.

    Sixteen class pairs carry a 2-d excess array; five weight levels are live.
    Each cell is a pointer plus, when nonzero, an integer of about M/2 bits.
    """
    size = M // 2 + 3
    return 25_000_000 + 5 * 16 * size * size * (16 + M // 10)


def enumerate_padded(M: int, prune: bool = False) -> list[int]:
    """Padded coefficients h_0..h_M."""
    return [h for _, h in iter_padded(M, prune)]


def correct_series(h: list[int]) -> list[int]:
    """Remove boundary [L/L] and [R/R] columns: f_n = h_{n+4} - 2 h_{n+2} + h_n."""
    f = []
    for n in range(len(h) - 4):
        v = h[n + 4] - 2 * h[n + 2] + h[n]
        if v < 0:
            raise NegativeCountError(f"f_{n} = {v}")
        f.append(v)
    return f


def iter_growth(N: int, prune: bool = False) -> Iterator[tuple[int, int]]:
    """Stream ``(n, f(n))`` for n = 0..N, each as soon as h_{n+4} is known."""
    h: list[int] = []
    for n, hn in iter_padded(N + 4, prune):
        h.append(hn)
        k = n - 4
        if k >= 0:
            v = h[k + 4] - 2 * h[k + 2] + h[k]
            if v < 0:
                raise NegativeCountError(f"f_{k} = {v}")
            yield k, v


def growth_series(N: int, prune: bool = False) -> GrowthSeries:
    if N < 0:
        raise ValueError("N must be >= 0")
    return GrowthSeries([v for _, v in iter_growth(N, prune)], "elements", "algorithm_b")
