"""Codes whose alphabet size depends on the symbol position.

The first symbol might be stored in a wide field (say 4 values) while later
symbols ride a binary channel; the optimal tree then has per-level arity.

Run:  PYTHONPATH=src python demos/02_mixed_radix.py
"""

from prefixcodes import MixedRadixSpec, normalize_weights, solve_mixed_radix

weights = [20, 17, 6, 3, 2, 2, 1]
w = normalize_weights(weights)

for arities in [(2,), (4, 2), (4, 2, 3), (3,)]:
    result = solve_mixed_radix(w, MixedRadixSpec(arities))
    words = ["".join(str(s) for s in word) for word in result.codebook.words]
    print(f"arities {str(arities):<12} cost {result.codebook.cost:<4} words {words}")

print()
print("Wider early levels shorten the popular words; the cost reflects the")
print("trade against the deeper, narrower levels.")
