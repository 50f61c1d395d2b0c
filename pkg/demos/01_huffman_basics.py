"""Build an optimal binary code and sanity-check it against the greedy merge.

Run:  PYTHONPATH=src python demos/01_huffman_basics.py
"""

from prefixcodes import (
    check_prefix_free,
    huffman_greedy,
    normalize_weights,
    solve_huffman_reference_adapter,
)

weights = [31, 12, 9, 5, 2, 1]
w = normalize_weights(weights)

result = solve_huffman_reference_adapter(w, r=2)
book = result.codebook

print(f"weights (input order):  {weights}")
print(f"total cost:             {book.cost}")
print(f"greedy merge cross-check: {huffman_greedy(w, 2)}")
print(f"prefix-free:            {check_prefix_free(book.words)}")
print()
print("word        length  weight")
for k, word in enumerate(book.words):
    text = "".join(str(s) for s in word)
    print(f"{text:<12}{len(word):<8}{w.weights[k]}")

# the DP also exposes how the tree was grown, level by level
print()
print("expansion chain (leaves placed, nodes kept internal):", result.dp.expansions)
