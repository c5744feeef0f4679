"""Independent brute-force baselines for validating the optimized modules.

Everything here enumerates; nothing shares logic with the fast paths beyond
the domain types.  Hard size guards keep the factorial blow-ups honest.
"""

from fractions import Fraction
from itertools import combinations, permutations

from .collector import PileGame
from .errors import GuardError, InvalidInstanceError
from .metrics import METRIC_L1, METRIC_LINF, PointSet
from .allocation import ResourceInstance

ORACLE_TRIPLES_MAX_N = 12
ORACLE_COLLECTOR_MAX_M = 8
ORACLE_DISTANCE_MAX_N = 500
ORACLE_PACKING_MAX_N = 2000
ORACLE_MATCHING_MAX_N = 8


def oracle_triples(inst: ResourceInstance) -> int:
    """Exhaustive minimum over every family of k disjoint index triples.

    Costs come from the two smallest members of each triple; no assumption
    about special pairs being adjacent in sorted order.
    """
    if inst.n > ORACLE_TRIPLES_MAX_N:
        raise GuardError(f"oracle_triples supports N <= {ORACLE_TRIPLES_MAX_N}")
    if inst.k == 0:
        return 0
    x = inst.amounts
    p = inst.p
    best = None

    def split(indices, partial):
        nonlocal best
        if best is not None and partial >= best:
            return
        if not indices:
            best = partial
            return
        first = indices[0]
        rest = indices[1:]
        for other in combinations(rest, 2):
            trio = sorted((first,) + other)
            cost = (x[trio[1]] - x[trio[0]]) ** p
            remaining = tuple(i for i in rest if i not in other)
            split(remaining, partial + cost)

    for chosen in combinations(range(inst.n), 3 * inst.k):
        split(chosen, 0)
    return best


def oracle_collector(game: PileGame) -> int:
    """Depth-first search over every move sequence under the literal rules."""
    if game.num_recipients > ORACLE_COLLECTOR_MAX_M:
        raise GuardError(
            f"oracle_collector supports M <= {ORACLE_COLLECTOR_MAX_M}")
    decay = game.decay_enabled
    disappear = game.disappear_enabled

    def search(piles, t):
        if decay and disappear:
            piles = tuple(tuple(r for r in pile if r[0] >= t) for pile in piles)
        best = 0
        for i, pile in enumerate(piles):
            if not pile:
                continue
            z, c = pile[-1]
            if not decay:
                gain = z * c
            else:
                gain = c * (z - t + 1)
                if gain < 0:
                    gain = 0
            rest = piles[:i] + (pile[:-1],) + piles[i + 1:]
            value = gain + search(rest, t + 1)
            if value > best:
                best = value
        return best

    return search(game.piles, 1)


def _pair_distance(a, b, weights, metric):
    if metric == METRIC_LINF:
        return max(w * abs(x - y) for x, y, w in zip(a, b, weights))
    return sum(w * abs(x - y) for x, y, w in zip(a, b, weights))


def oracle_kth_distance(ps: PointSet, k: int, metric: str = METRIC_LINF) -> int:
    """Sort all N(N-1)/2 pairwise distances and index the k-th."""
    if ps.n > ORACLE_DISTANCE_MAX_N:
        raise GuardError(
            f"oracle_kth_distance supports N <= {ORACLE_DISTANCE_MAX_N}")
    if metric not in (METRIC_LINF, METRIC_L1):
        raise InvalidInstanceError("metric must be 'linf' or 'l1'")
    n_pairs = ps.n * (ps.n - 1) // 2
    if not 1 <= k <= n_pairs:
        raise InvalidInstanceError("rank k must satisfy 1 <= k <= N(N-1)/2")
    dists = sorted(
        _pair_distance(a, b, ps.weights, metric)
        for a, b in combinations(ps.points, 2))
    return dists[k - 1]


def oracle_packing(ps: PointSet) -> Fraction:
    """Closed form: the optimum is min over pairs of max_j |dx_j| / w(j)."""
    if ps.n > ORACLE_PACKING_MAX_N:
        raise GuardError(f"oracle_packing supports N <= {ORACLE_PACKING_MAX_N}")
    if ps.n < 2:
        raise InvalidInstanceError("N >= 2 points required for packing")
    best = None
    for a, b in combinations(ps.points, 2):
        worst_axis = max(
            Fraction(abs(x - y), w) for x, y, w in zip(a, b, ps.weights))
        if best is None or worst_axis < best:
            best = worst_axis
    return best


def oracle_matching(cost) -> int:
    """Minimum assignment cost by trying all n! permutations."""
    n = len(cost)
    if n > ORACLE_MATCHING_MAX_N:
        raise GuardError(f"oracle_matching supports n <= {ORACLE_MATCHING_MAX_N}")
    if n == 0 or any(len(row) != n for row in cost):
        raise InvalidInstanceError("cost matrix must be square and non-empty")
    return min(
        sum(cost[i][perm[i]] for i in range(n))
        for perm in permutations(range(n)))
