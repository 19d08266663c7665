"""Binary trees as words over n, N, i, I, and counting them by excess."""
from thompson_growth.tree_codec import (
    all_trees, count_trees, count_words_by_excess, decode_word, encode_tree, excess_of,
    upper_case_view,
)

for t in all_trees(3):
    print(f"{encode_tree(t):<8} {t}")

w = "nInNiInNnIiI"
t = decode_word(w)
print()
print(w, "->", t)
print("upper-case letters only:", upper_case_view(w))

# Prefixes that are not yet complete trees carry a positive excess.
for cut in range(2, len(w) + 1, 2):
    print(f"{w[:cut]:<14} excess {excess_of(w[:cut])}")

print()
print("trees by size:", count_trees(12))
for row in count_words_by_excess(6):
    print(row)
