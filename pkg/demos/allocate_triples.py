"""Walkthrough: picking k disjoint resource 3-tuples at minimum cost.

Each 3-tuple is charged (B - A)**p over its two smallest amounts, so the
solver pairs near-equal amounts and spends the rest as third members.
"""

import random

from combopt import (ResourceInstance, min_cost_backward,
                     min_cost_incomplete_dp, oracle_triples,
                     reconstruct_selection)

rng = random.Random(42)
amounts = tuple(rng.randrange(100) for _ in range(12))
inst = ResourceInstance(amounts, k=3, p=2)

print("sorted amounts:", inst.amounts)
print("k =", inst.k, " p =", inst.p)

cost = min_cost_backward(inst)
print("\nminimum total cost:", cost)
print("forward recursion agrees:", min_cost_incomplete_dp(inst) == cost)
print("exhaustive oracle agrees:", oracle_triples(inst) == cost)

selection = reconstruct_selection(inst)
print("\none optimal selection (indices into the sorted amounts):")
for ia, ib, ic in selection.triples:
    a, b, c = (inst.amounts[i] for i in (ia, ib, ic))
    print(f"  specials {a} and {b} (cost {(b - a) ** inst.p}), third member {c}")

# the special pair is always adjacent in sorted order; spreading a pair
# apart can only grow |B - A|
wide = ResourceInstance((1, 3, 4), 1, 1)
print("\n(1, 3, 4) with one triple costs", min_cost_backward(wide),
      "- the cheap pair (3, 4) is unusable because nothing remains above 4")
