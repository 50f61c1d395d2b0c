"""Restricting codeword lengths: to a given set, or to a budget of g values.

Decoders get faster when only a few distinct lengths occur.  The first
solver takes the permitted set; the second finds the best set of at most g
lengths on its own.

Run:  PYTHONPATH=src python demos/03_reserved_lengths.py
"""

from prefixcodes import (
    GLengthsSpec,
    ReservedSpec,
    huffman_greedy,
    normalize_weights,
    solve_reserved_g,
    solve_reserved_given,
)

w = normalize_weights(list(range(1, 17)))  # weights 16, 15, ..., 1 after sorting

print("given lengths {1, 3, 6}:")
res = solve_reserved_given(w, ReservedSpec(2, (1, 3, 6)))
print(f"  cost {res.codebook.cost}, lengths used {sorted(set(res.codebook.lengths))}")

print()
print("best <= g distinct lengths (binary):")
unrestricted = huffman_greedy(w, 2)
for g in range(1, 6):
    res = solve_reserved_g(w, GLengthsSpec(2, g))
    used = sorted(set(res.codebook.lengths))
    print(f"  g={g}:  cost {res.codebook.cost:<4} lengths {used}")
print(f"  unrestricted Huffman cost: {unrestricted}")
print()
print("The cost envelope is non-increasing in g and flattens onto the")
print("unrestricted optimum once g covers the lengths Huffman wants anyway.")
