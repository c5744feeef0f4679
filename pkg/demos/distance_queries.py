"""Walkthrough: exact distance selection and packing on integer points.

Everything runs on integers: the k-th distance query binary searches on the
pair count nd(D), 2-D L1 questions become Linf questions through the
(x+y, x-y) map, and weighted L1 becomes unweighted Linf through the 2^d
sign-tuple embedding.
"""

import random
from fractions import Fraction
from itertools import combinations

from combopt import (PointSet, count_pairs_in_range, count_pairs_within,
                     diameter_l1, diameter_linf, kth_smallest_distance,
                     l1_to_linf_embed, max_packing_factor, oracle_kth_distance,
                     oracle_packing, rotate45)

rng = random.Random(7)
ps = PointSet(
    tuple((rng.randrange(-50, 51), rng.randrange(-50, 51)) for _ in range(40)),
    weights=(2, 3))

pairs = ps.n * (ps.n - 1) // 2
print(f"{ps.n} points, {pairs} pairs, weights {ps.weights}")
print("weighted Linf diameter:", diameter_linf(ps))

for k in (1, pairs // 2, pairs):
    dk = kth_smallest_distance(ps, k)
    print(f"rank {k:>3}: distance {dk:>3}",
          "(oracle agrees)" if oracle_kth_distance(ps, k) == dk else "(!)")

median = kth_smallest_distance(ps, pairs // 2)
print("pairs within the median distance:", count_pairs_within(ps, median))
print("pairs in [median, diameter]:",
      count_pairs_in_range(ps, median, diameter_linf(ps)))

# 2-D L1 reduces to unweighted Linf on rotated points
flat = PointSet(ps.points, (1, 1))
rot = rotate45(flat)
a, b = flat.points[0], flat.points[1]
print("\nL1 distance of first two points:",
      abs(a[0] - b[0]) + abs(a[1] - b[1]),
      "= Linf after rotation:",
      max(abs(x - y) for x, y in zip(rot.points[0], rot.points[1])))

# weighted L1 reduces to unweighted Linf in 2^d dimensions
emb = l1_to_linf_embed(ps)
pa, pb = ps.points[0], ps.points[1]
print("weighted L1 of the same pair:",
      sum(w * abs(x - y) for x, y, w in zip(pa, pb, ps.weights)),
      "= Linf of their embeddings:",
      max(abs(x - y) for x, y in zip(emb.points[0], emb.points[1])))
print("weighted L1 diameter:", diameter_l1(ps))

# grow boxes around every point until two interiors would collide
factor = max_packing_factor(ps)
print("\nlargest non-overlap packing factor:", factor,
      "(closed form agrees)" if oracle_packing(ps) == factor else "(!)")
closest = min(max(Fraction(abs(x - y), w) for x, y, w in zip(a, b, ps.weights))
              for a, b in combinations(ps.points, 2))
print("for comparison, min over pairs of max_j |dx_j|/w_j =", closest)
