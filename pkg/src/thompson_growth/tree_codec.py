"""Binary trees and their {n, N, i, I} code words.

A tree with k carets is read left to right in-order.  Internal nodes and
leaves alternate; each internal node is labelled ``n`` if it is the root or a
left child and ``i`` otherwise, each leaf ``N`` if it is a left child and
``I`` otherwise.  The left-most leaf is not labelled, so a k-caret tree gives
a word of length 2k.  The single caret is ``"nI"``.

The *excess* of an even-length prefix is half the surplus of ``n``/``N``
letters over ``i``/``I`` letters.  A word is a complete tree exactly when it
is admissible and its excess is zero.

Trivial trees (a single leaf, no carets) encode as the empty word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass(frozen=True)
class Caret:
    left: BinaryTree
    right: BinaryTree

    def __repr__(self) -> str:
        return f"({_fmt(self.left)} {_fmt(self.right)})"


# A leaf is represented by None.
BinaryTree = Optional[Caret]
LEAF: BinaryTree = None


def _fmt(t: BinaryTree) -> str:
    return "." if t is None else repr(t)


class CodeWordError(ValueError):
    """Raised for a word that violates one of the admissibility conditions."""

    def __init__(self, word: str, condition: str, position: int | None = None):
        self.word = word
        self.condition = condition
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{word!r}: {condition}{where}")


def carets(t: BinaryTree) -> int:
    if t is None:
        return 0
    return 1 + carets(t.left) + carets(t.right)


def leaves(t: BinaryTree) -> int:
    return carets(t) + 1


def all_trees(k: int) -> Iterator[BinaryTree]:
    """Yield every binary tree with exactly ``k`` carets."""
    if k == 0:
        yield None
        return
    for j in range(k):
        for left in all_trees(j):
            for right in all_trees(k - 1 - j):
                yield Caret(left, right)


def encode_tree(t: BinaryTree) -> str:
    if t is None:
        return ""
    out: list[str] = []

    def walk(node: BinaryTree, is_left: bool, first: bool) -> None:
        # ``first`` marks the subtree containing the left-most leaf
        if node is None:
            if not first:
                out.append("N" if is_left else "I")
            return
        walk(node.left, True, first)
        out.append("n" if is_left else "i")
        walk(node.right, False, False)

    walk(t, True, True)
    return "".join(out)


def check_admissible(word: str) -> None:
    """Raise :class:`CodeWordError` naming the first violated condition."""
    if word == "":
        return
    bad = set(word) - set("nNiI")
    if bad:
        raise CodeWordError(word, f"letters outside alphabet: {''.join(sorted(bad))}")
    if word[0] != "n":
        raise CodeWordError(word, "does not start with 'n'", 0)
    for pos, ch in enumerate(word):
        if (pos % 2 == 0) != ch.islower():
            raise CodeWordError(word, "cases do not alternate", pos)
    balance = 0
    for pos, ch in enumerate(word):
        balance += 1 if ch in "nN" else -1
        if balance < 0:
            raise CodeWordError(word, "prefix has more i/I than n/N", pos)
    if len(word) % 2 == 0 and balance != 0:
        raise CodeWordError(word, f"incomplete: excess {balance // 2}")
    if word[-1] != "I":
        raise CodeWordError(word, "does not end with 'I'", len(word) - 1)


def excess_of(word: str) -> int:
    """Excess of an even-length, case-alternating word starting lower-case."""
    if len(word) % 2:
        raise ValueError(f"odd-length word {word!r}")
    balance = 0
    for pos, ch in enumerate(word):
        if (pos % 2 == 0) != ch.islower() or ch not in "nNiI":
            raise ValueError(f"{word!r} is not case-alternating at {pos}")
        balance += 1 if ch in "nN" else -1
        if balance < 0:
            raise CodeWordError(word, "negative excess", pos)
    return balance // 2


def decode_word(word: str) -> BinaryTree:
    """Inverse of :func:`encode_tree`.

    Works by repeatedly contracting an ``N a I`` factor of the word (with
    the implicit left-most leaf written as a leading ``N``) back into a leaf.
    """
    check_admissible(word)
    if word == "":
        return None
    # symbols: upper-case leaves carry a subtree, lower-case letters are nodes
    items: list[tuple[str, BinaryTree]] = [("N", None)]
    items += [(ch, None) for ch in word]
    while len(items) > 1:
        for j in range(len(items) - 2):
            a, b, c = items[j], items[j + 1], items[j + 2]
            if a[0] == "N" and b[0].islower() and c[0] == "I":
                merged = (b[0].upper(), Caret(a[1], c[1]))
                items[j:j + 3] = [merged]
                break
        else:  # pragma: no cover - excluded by admissibility
            raise CodeWordError(word, "no contractible factor")
    return items[0][1]


def upper_case_view(word: str) -> str:
    return "".join(ch for ch in word if ch.isupper())


def count_trees(n_max: int) -> list[int]:
    """Catalan numbers c_{l,0} for l = 1..n_max via the excess recurrence.

    Iterates forward: each count at (size, excess) is pushed into the
    entries of size + 1 it can reach.  Only two sizes are held at once.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    words = [1]  # words[h] at the current size; size 1 holds "nI"
    complete = [words[0]]
    for _ in range(1, n_max):
        nxt = [0] * (len(words) + 1)
        for h, c in enumerate(words):
            if not c:
                continue
            if h == 0:
                nxt[1] += c   # nN
                nxt[0] += c   # nI
            else:
                nxt[h + 1] += c      # nN
                nxt[h] += 2 * c      # nI, iN
                nxt[h - 1] += c      # iI
        words = nxt
        complete.append(words[0])
    return complete


def count_words_by_excess(n_max: int) -> list[list[int]]:
    """Full table c_{l,h} for l = 1..n_max (row l-1), used for checks."""
    rows = [[1]]
    for _ in range(1, n_max):
        prev = rows[-1]
        row = [0] * (len(prev) + 1)
        for h, c in enumerate(prev):
            if h == 0:
                row[1] += c
                row[0] += c
            else:
                row[h + 1] += c
                row[h] += 2 * c
                row[h - 1] += c
        rows.append(row)
    return rows
