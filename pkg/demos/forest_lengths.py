"""Word lengths from forest diagrams.

Run with ``python demos/forest_lengths.py``.
"""
from thompson_growth.forest_core import (
    GENERATORS, column_weight, diagram_of, format_word, label_gaps, multiply, parse_word, weight,
)

# A word is read left to right; each letter acts on the current diagram.
word = parse_word("abbABaBa")
d = diagram_of(word)
print("word        ", format_word(word))
print("top forest  ", d.top)
print("bottom      ", d.bottom)

# Each gap between leaves gets a label in both forests, and each
# (top, bottom) pair costs between 1 and 4.
labels = label_gaps(d)
print("labels      ", " ".join(f"{t.value}/{b.value}" for t, b in labels))
print("weights     ", [column_weight(t, b) for t, b in labels])
print("length      ", weight(d), "(the word had", len(word), "letters)")

# Walking downhill: some generator always shortens a nontrivial element,
# so repeatedly taking one spells out a geodesic for it.
path = []
e = d
while weight(e):
    g = next(g for g in GENERATORS if weight(multiply(e, g)) < weight(e))
    path.append(g.inverse)
    e = multiply(e, g)
geodesic = tuple(reversed(path))
print("a geodesic  ", format_word(geodesic))
assert diagram_of(geodesic) == d
