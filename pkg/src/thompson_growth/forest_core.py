"""Reduced forest diagrams for elements of Thompson's group F.

A diagram is a top and a bottom binary forest whose leaves are identified
along a shared row.  Each forest has one pointed tree.  Between consecutive
leaves sits a gap; the gap labels of both forests form the columns whose
weights sum to the word length of the element.

Internally a forest is stored as a tuple of *gap depths*: entry ``g``
describes the gap between leaves ``g`` and ``g + 1``.  It is ``-1`` when
the gap lies between two trees and otherwise the depth of the caret whose
two subtrees meet at that gap (the in-order depth sequence determines each
tree).  The pointer is the index of the first leaf of the pointed tree.
Only the window of leaves between the outermost non-trivial or pointed
trees is stored; trivial trees continue forever on both sides.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .tree_codec import BinaryTree, Caret, encode_tree


class Generator(enum.IntEnum):
    """Generators ordered x0 < x0^-1 < x1 < x1^-1."""

    X0 = 0
    X0_INV = 1
    X1 = 2
    X1_INV = 3

    @property
    def inverse(self) -> Generator:
        return Generator(self ^ 1)

    @property
    def letter(self) -> str:
        return "aAbB"[self]


GENERATORS: tuple[Generator, ...] = tuple(Generator)
Word = tuple  # tuple[Generator, ...]

_LETTERS = {"a": Generator.X0, "A": Generator.X0_INV, "b": Generator.X1, "B": Generator.X1_INV}
_VERBOSE = {
    "x0": Generator.X0, "x0^-1": Generator.X0_INV,
    "x1": Generator.X1, "x1^-1": Generator.X1_INV,
}


class WordSyntaxError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse ``"abAB"`` style words, or space separated ``x0 x1^-1 ...``."""
    text = text.strip()
    if not text:
        return ()
    if "x" in text:
        out = []
        for tok in text.replace("*", " ").split():
            if tok not in _VERBOSE:
                raise WordSyntaxError(f"unknown generator {tok!r}")
            out.append(_VERBOSE[tok])
        return tuple(out)
    try:
        return tuple(_LETTERS[ch] for ch in text)
    except KeyError as exc:
        raise WordSyntaxError(f"invalid letter {exc.args[0]!r} in {text!r}") from None


def format_word(word: Iterable[Generator]) -> str:
    return "".join(g.letter for g in word)


class GapLabel(str, enum.Enum):
    L = "L"
    N = "N"
    I = "I"  # noqa: E741
    R = "R"
    X = "X"


# label codes used on the hot path
_L, _N, _I, _R, _X = range(5)
_CODE_TO_LABEL = (GapLabel.L, GapLabel.N, GapLabel.I, GapLabel.R, GapLabel.X)

WEIGHT_TABLE: dict[str, dict[str, int]] = {
    "I": {"I": 2, "N": 4, "L": 2, "R": 1, "X": 3},
    "N": {"I": 4, "N": 4, "L": 2, "R": 3, "X": 3},
    "L": {"I": 2, "N": 2, "L": 2, "R": 1, "X": 1},
    "R": {"I": 1, "N": 3, "L": 1, "R": 2, "X": 2},
    "X": {"I": 3, "N": 3, "L": 1, "R": 2, "X": 2},
}


def column_weight(top: str, bottom: str) -> int:
    return WEIGHT_TABLE[str(top.value if isinstance(top, GapLabel) else top)][
        str(bottom.value if isinstance(bottom, GapLabel) else bottom)]


def _flat_table() -> tuple[int, ...]:
    return tuple(WEIGHT_TABLE[a][b] for a in "LNIRX" for b in "LNIRX")


_FLAT = _flat_table()


def refresh_weight_table() -> None:
    """Re-read :data:`WEIGHT_TABLE` after it has been modified in place."""
    global _FLAT
    _FLAT = _flat_table()


@dataclass(frozen=True)
class Forest:
    """A finite window of a pointed forest: trees in order and the pointed index."""

    trees: tuple[BinaryTree, ...]
    pointer: int

    def __post_init__(self):
        if not 0 <= self.pointer < len(self.trees):
            raise ValueError("pointer out of range")

    @property
    def leaves(self) -> int:
        return sum(_count_carets(t) + 1 for t in self.trees)


def _count_carets(t: BinaryTree) -> int:
    return 0 if t is None else 1 + _count_carets(t.left) + _count_carets(t.right)


class ForestDiagram(NamedTuple):
    """Reduced forest diagram in gap-depth form (see module docstring)."""

    top_gaps: tuple[int, ...]
    top_ptr: int
    bottom_gaps: tuple[int, ...]
    bottom_ptr: int

    @property
    def columns(self) -> int:
        return len(self.top_gaps)

    @property
    def top(self) -> Forest:
        return _to_forest(self.top_gaps, self.top_ptr)

    @property
    def bottom(self) -> Forest:
        return _to_forest(self.bottom_gaps, self.bottom_ptr)

    @classmethod
    def from_forests(cls, top: Forest, bottom: Forest) -> ForestDiagram:
        tg, tp = _from_forest(top)
        bg, bp = _from_forest(bottom)
        if len(tg) != len(bg):
            raise ValueError("top and bottom forests have different leaf counts")
        return cls(tg, tp, bg, bp)

    def swapped(self) -> ForestDiagram:
        """Top/bottom exchange; represents the inverse element."""
        return ForestDiagram(self.bottom_gaps, self.bottom_ptr, self.top_gaps, self.top_ptr)


def _tree_gaps(t: BinaryTree, depth: int, out: list[int]) -> None:
    if t is None:
        return
    _tree_gaps(t.left, depth + 1, out)
    out.append(depth)
    _tree_gaps(t.right, depth + 1, out)


def _from_forest(f: Forest) -> tuple[tuple[int, ...], int]:
    gaps: list[int] = []
    ptr = 0
    for k, t in enumerate(f.trees):
        if k:
            gaps.append(-1)
        if k == f.pointer:
            ptr = len(gaps)
        _tree_gaps(t, 0, gaps)
    return tuple(gaps), ptr


def _build_tree(depths: Sequence[int]) -> BinaryTree:
    if not depths:
        return None
    r = min(range(len(depths)), key=depths.__getitem__)
    return Caret(_build_tree(depths[:r]), _build_tree(depths[r + 1:]))


def _split_trees(gaps: Sequence[int]) -> list[tuple[int, list[int]]]:
    """(first leaf, interior gap depths) for each tree of the window."""
    out = []
    start, cur = 0, []
    for g, d in enumerate(gaps):
        if d < 0:
            out.append((start, cur))
            start, cur = g + 1, []
        else:
            cur.append(d)
    out.append((start, cur))
    return out


def _to_forest(gaps: Sequence[int], ptr: int) -> Forest:
    parts = _split_trees(gaps)
    index = [s for s, _ in parts].index(ptr)
    return Forest(tuple(_build_tree(ds) for _, ds in parts), index)


IDENTITY = ForestDiagram((), 0, (), 0)
_make = ForestDiagram._make


def identity_diagram() -> ForestDiagram:
    return IDENTITY


def _tree_end(gaps: Sequence[int], start: int) -> int:
    e = start
    n = len(gaps)
    while e < n and gaps[e] >= 0:
        e += 1
    return e


def _tree_start(gaps: Sequence[int], end: int) -> int:
    s = end
    while s > 0 and gaps[s - 1] >= 0:
        s -= 1
    return s


def _is_leaf_caret(gaps: Sequence[int], g: int) -> bool:
    """True when gap ``g`` sits under a caret whose two children are leaves."""
    d = gaps[g]
    if d < 0:
        return False
    if g > 0 and gaps[g - 1] > d:
        return False
    if g + 1 < len(gaps) and gaps[g + 1] > d:
        return False
    return True


def _remove_gap(top, tp, bot, bp, g):
    top = top[:g] + top[g + 1:]
    bot = bot[:g] + bot[g + 1:]
    if tp > g:
        tp -= 1
    if bp > g:
        bp -= 1
    return top, tp, bot, bp


def _trim(top, tp, bot, bp):
    while top and top[0] < 0 and bot[0] < 0 and tp and bp:
        top, bot = top[1:], bot[1:]
        tp -= 1
        bp -= 1
    n = len(top)
    while n and top[-1] < 0 and bot[-1] < 0 and tp != n and bp != n:
        top, bot = top[:-1], bot[:-1]
        n -= 1
    return top, tp, bot, bp


def multiply(d: ForestDiagram, g: Generator) -> ForestDiagram:
    """Reduced diagram of ``d * g``.

    x0 and x0^-1 move the top pointer one tree right or left, x1 puts a caret
    over the pointed tree and its right neighbour, x1^-1 removes the root
    caret of the pointed tree or, when that tree is a single leaf, splits the
    leaf by a new caret in the bottom forest.  Trivial trees are added at the
    ends of the window as needed.  Only x1 can create a common caret, and
    only at its new root.
    """
    top, tp, bot, bp = d
    if g == 0:
        e = tp
        n = len(top)
        while e < n and top[e] >= 0:
            e += 1
        if e == n:
            top += (-1,)
            bot += (-1,)
        tp = e + 1
    elif g == 1:
        if tp == 0:
            top = (-1,) + top
            bot = (-1,) + bot
            bp += 1
        else:
            tp = _tree_start(top, tp - 1)
    elif g == 2:
        e = _tree_end(top, tp)
        if e == len(top):
            top += (-1,)
            bot += (-1,)
        e2 = _tree_end(top, e + 1)
        if e == tp and e2 == e + 1 and _is_leaf_caret(bot, e):
            # the new caret would be common with a bottom caret: cancel both
            top = top[:e] + top[e + 1:]
            bot = bot[:e] + bot[e + 1:]
            if bp > e:
                bp -= 1
        else:
            top = (top[:tp] + tuple([x + 1 for x in top[tp:e]]) + (0,)
                   + tuple([x + 1 for x in top[e + 1:e2]]) + top[e2:])
    else:
        e = _tree_end(top, tp)
        if e > tp:
            seg = top[tp:e]
            r = seg.index(0)
            top = (top[:tp] + tuple([x - 1 for x in seg[:r]]) + (-1,)
                   + tuple([x - 1 for x in seg[r + 1:]]) + top[e:])
        else:
            left = bot[tp - 1] if tp > 0 else -1
            right = bot[tp] if tp < len(bot) else -1
            top = top[:tp] + (-1,) + top[tp:]
            bot = bot[:tp] + (max(left, right) + 1,) + bot[tp:]
            if bp > tp:
                bp += 1
    if top and ((top[0] < 0 and bot[0] < 0 and tp and bp)
                or (top[-1] < 0 and bot[-1] < 0 and tp != len(top) and bp != len(top))):
        return _make(_trim(top, tp, bot, bp))
    return _make((top, tp, bot, bp))


def apply_unreduced(d: ForestDiagram, g: Generator) -> ForestDiagram:
    """Generator action with the caret added but not cancelled and no trimming.

    Used to exhibit diagrams that :func:`reduce` must clean up.
    """
    top, tp, bot, bp = d
    if g == 2:
        e = _tree_end(top, tp)
        if e == len(top):
            top += (-1,)
            bot += (-1,)
        e2 = _tree_end(top, e + 1)
        top = (top[:tp] + tuple(x + 1 for x in top[tp:e]) + (0,)
               + tuple(x + 1 for x in top[e + 1:e2]) + top[e2:])
        return ForestDiagram(top, tp, bot, bp)
    if g == 0:
        e = _tree_end(top, tp)
        if e == len(top):
            top += (-1,)
            bot += (-1,)
        return ForestDiagram(top, e + 1, bot, bp)
    if g == 1 and tp == 0:
        return ForestDiagram((-1,) + top, 0, (-1,) + bot, bp + 1)
    return multiply(d, g)


def has_common_caret(d: ForestDiagram) -> bool:
    return any(_is_leaf_caret(d.top_gaps, g) and _is_leaf_caret(d.bottom_gaps, g)
               for g in range(d.columns))


def is_reduced(d: ForestDiagram) -> bool:
    return (not has_common_caret(d)
            and _trim(d.top_gaps, d.top_ptr, d.bottom_gaps, d.bottom_ptr)
            == (d.top_gaps, d.top_ptr, d.bottom_gaps, d.bottom_ptr))


def reduce(d: ForestDiagram) -> ForestDiagram:
    """Cancel every common caret pair and drop empty boundary columns."""
    top, tp, bot, bp = d.top_gaps, d.top_ptr, d.bottom_gaps, d.bottom_ptr
    while True:
        found = next((g for g in range(len(top))
                      if _is_leaf_caret(top, g) and _is_leaf_caret(bot, g)), None)
        if found is None:
            break
        top, tp, bot, bp = _remove_gap(top, tp, bot, bp, found)
    return ForestDiagram(*_trim(top, tp, bot, bp))


def _label_codes(gaps: Sequence[int], ptr: int) -> list[int]:
    n = len(gaps)
    out = []
    for g in range(n):
        d = gaps[g]
        nxt = gaps[g + 1] if g + 1 < n else -1
        if d >= 0:
            out.append(_N if nxt > d else _I)
        elif g < ptr:
            out.append(_L)
        elif nxt >= 0:
            out.append(_X)
        else:
            out.append(_R)
    return out


def label_gaps(d: ForestDiagram) -> list[tuple[GapLabel, GapLabel]]:
    """(top, bottom) label for every column, left to right."""
    top = _label_codes(d.top_gaps, d.top_ptr)
    bot = _label_codes(d.bottom_gaps, d.bottom_ptr)
    return [(_CODE_TO_LABEL[a], _CODE_TO_LABEL[b]) for a, b in zip(top, bot)]


def weight(d: ForestDiagram) -> int:
    """Sum of column weights; the word length of the element."""
    top, tp, bot, bp = d
    if not top:
        return 0
    table = _FLAT
    total = 0
    g = 0
    # a label needs the gap to its right as well
    for t, tn, b, bn in zip(top, top[1:] + (-1,), bot, bot[1:] + (-1,)):
        if t >= 0:
            lt = 5 if tn > t else 10
        elif g < tp:
            lt = 0
        elif tn >= 0:
            lt = 20
        else:
            lt = 15
        if b >= 0:
            lb = 1 if bn > b else 2
        elif g < bp:
            lb = 0
        elif bn >= 0:
            lb = 4
        else:
            lb = 3
        total += table[lt + lb]
        g += 1
    return total


def diagram_of(word: Iterable[Generator] | str) -> ForestDiagram:
    if isinstance(word, str):
        word = parse_word(word)
    d = IDENTITY
    for g in word:
        d = multiply(d, g)
    return d


def geodesic_length(word: Iterable[Generator] | str) -> int:
    return weight(diagram_of(word))


def canonical_key(d: ForestDiagram) -> bytes:
    """Injective ASCII serialisation: pointer indices then length-prefixed tree codes."""
    parts = []
    for gaps, ptr in ((d.top_gaps, d.top_ptr), (d.bottom_gaps, d.bottom_ptr)):
        trees = _split_trees(gaps)
        index = [s for s, _ in trees].index(ptr)
        codes = [encode_tree(_build_tree(ds)) for _, ds in trees]
        parts.append(f"{index}:" + ",".join(f"{len(c)}.{c}" for c in codes))
    return "|".join(parts).encode("ascii")


class ResourceLimitError(RuntimeError):
    pass


ORACLE_MAX_N = 10
ORACLE_BUDGET = 10 ** 7


def bfs_ball(n_max: int, budget: int = ORACLE_BUDGET) -> list[dict[bytes, tuple[ForestDiagram, Word]]]:
    """Spheres of radius 0..n_max as ``{key: (diagram, witness word)}``."""
    spheres = [{canonical_key(IDENTITY): (IDENTITY, ())}]
    seen = set(spheres[0])
    for _ in range(n_max):
        nxt: dict[bytes, tuple[ForestDiagram, Word]] = {}
        for d, w in spheres[-1].values():
            for g in GENERATORS:
                e = multiply(d, g)
                k = canonical_key(e)
                if k in seen:
                    continue
                seen.add(k)
                nxt[k] = (e, w + (g,))
                if len(seen) > budget:
                    raise ResourceLimitError(
                        f"ball exceeds the oracle budget of {budget} elements")
        spheres.append(nxt)
    return spheres


def bfs_sphere_counts(n_max: int, budget: int = ORACLE_BUDGET, max_n: int = ORACLE_MAX_N):
    """Sphere sizes by breadth-first search over canonical diagrams."""
    from .series import GrowthSeries

    if n_max > max_n:
        raise ResourceLimitError(f"oracle is limited to n <= {max_n}")
    return GrowthSeries([len(s) for s in bfs_ball(n_max, budget)], "elements", "bfs_oracle")
