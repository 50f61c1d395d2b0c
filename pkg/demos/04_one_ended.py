"""Binary codes in which every word ends with a 1.

Useful for self-synchronizing streams: a decoder that wakes up mid-stream can
re-anchor on the trailing 1s.  Only 1-children may carry weights, which makes
the trees deeper and the optimization genuinely different from Huffman.

Run:  PYTHONPATH=src python demos/04_one_ended.py
"""

from prefixcodes import huffman_greedy, normalize_weights, solve_one_ended

for weights in [[1, 1], [4, 3, 2, 1], [10, 6, 2, 1, 1, 1]]:
    w = normalize_weights(weights)
    res = solve_one_ended(w)
    words = ["".join(str(s) for s in word) for word in res.codebook.words]
    print(f"weights {str(weights):<22} cost {res.cost:<4} words {words}")
    print(f"{'':<30} plain Huffman would cost {huffman_greedy(w, 2)}")

print()
print("Every emitted word ends in 1; the premium over plain Huffman is the")
print("price of the synchronization anchor.")
