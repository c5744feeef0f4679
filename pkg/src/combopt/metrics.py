"""Distance selection and packing queries under weighted L1/Linf metrics.

Coordinates and weights are integers, so every weighted Linf distance is an
integer and every selection runs as an exact integer binary search; no
floating point is involved anywhere.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .errors import GuardError, InvalidInstanceError
from .rangetree import RangeCountTree

TREE_MAX_DIM = 4        # sweep-backed pair counting uses a (d-1)-dim tree
EMBED_MAX_DIM = 16      # the embedding emits 2^d coordinates per point
SPAN_LIMIT = 2**62      # cap on any weighted per-axis distance

METRIC_LINF = "linf"
METRIC_L1 = "l1"


@dataclass(frozen=True)
class PointSet:
    """N integer points in d dimensions plus per-dimension positive weights."""

    points: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        points = tuple(tuple(pt) for pt in self.points)
        weights = tuple(self.weights)
        if len(points) < 1:
            raise InvalidInstanceError("N >= 1 points required")
        d = len(weights)
        if d < 1:
            raise InvalidInstanceError("d >= 1 dimensions required")
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidInstanceError("weights must be positive integers")
        for pt in points:
            if len(pt) != d:
                raise InvalidInstanceError("every point needs exactly d coordinates")
            for c in pt:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise InvalidInstanceError("coordinates must be integers")
        for j, w in enumerate(weights):
            col = [pt[j] for pt in points]
            if w * (max(col) - min(col)) > SPAN_LIMIT:
                raise InvalidInstanceError(
                    "weighted per-axis distances must stay within 2^62")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return len(self.weights)


def _check_metric(metric):
    if metric not in (METRIC_LINF, METRIC_L1):
        raise InvalidInstanceError("metric must be 'linf' or 'l1'")


class _PairCounter:
    """Reusable nd(D) evaluator: pairs of one point set within distance D.

    1-D instances use two binary searches per point on the sorted
    coordinates.  Higher dimensions sweep dimension d with entrance, query
    and exit events (ties resolved in that order) over a (d-1)-dimensional
    RangeCountTree whose box half-widths follow from w*|dx| <= D, i.e.
    |dx| <= D // w for integer coordinates.
    """

    def __init__(self, ps: PointSet):
        self.ps = ps
        if ps.dim == 1:
            self.xs = sorted(pt[0] for pt in ps.points)
        else:
            if ps.dim > TREE_MAX_DIM:
                raise GuardError(
                    f"tree-backed pair counting supports d <= {TREE_MAX_DIM}")
            wd = ps.weights[-1]
            order = sorted(range(ps.n), key=lambda i: ps.points[i][-1])
            self.order = order
            self.scaled = [ps.points[i][-1] * wd for i in order]
            self.tree = RangeCountTree([pt[:-1] for pt in ps.points])

    def count(self, dist: int) -> int:
        if dist < 0:
            return 0
        n = self.ps.n
        if self.ps.dim == 1:
            xs = self.xs
            reach = dist // self.ps.weights[0]
            total = 0
            for x in xs:
                total += bisect_right(xs, x + reach) - bisect_left(xs, x - reach)
            return (total - n) // 2
        points = self.ps.points
        radii = [dist // w for w in self.ps.weights[:-1]]
        span = range(len(radii))
        scaled = self.scaled
        order = self.order
        tree = self.tree
        fence = scaled[-1] + 2 * dist + 1
        enter = query = leave = 0
        total = 0
        while leave < n:
            v_in = scaled[enter] if enter < n else fence
            v_q = scaled[query] + dist if query < n else fence
            v_out = scaled[leave] + 2 * dist
            if v_in <= v_q and v_in <= v_out:
                tree.set_weight(order[enter], 1)
                enter += 1
            elif v_q <= v_out:
                pt = points[order[query]]
                total += tree.box_sum(
                    [(pt[j] - radii[j], pt[j] + radii[j]) for j in span])
                query += 1
            else:
                tree.set_weight(order[leave], 0)
                leave += 1
        return (total - n) // 2


def count_pairs_within(ps: PointSet, dist: int) -> int:
    """Number of unordered pairs at weighted Linf distance <= dist."""
    if not isinstance(dist, int) or isinstance(dist, bool) or dist < 0:
        raise InvalidInstanceError("dist must be a non-negative integer")
    return _PairCounter(ps).count(dist)


def count_pairs_in_range(ps: PointSet, lo: int, hi: int) -> int:
    """Unordered pairs with weighted Linf distance in the inclusive [lo, hi]."""
    for bound in (lo, hi):
        if not isinstance(bound, int) or isinstance(bound, bool):
            raise InvalidInstanceError("range bounds must be integers")
    if not 0 <= lo <= hi:
        raise InvalidInstanceError("range must satisfy 0 <= lo <= hi")
    counter = _PairCounter(ps)
    below = counter.count(lo - 1) if lo > 0 else 0
    return counter.count(hi) - below


def rotate45(ps: PointSet) -> PointSet:
    """Map (x, y) -> (x+y, x-y); Linf distances of images equal L1 originals."""
    if ps.dim != 2 or ps.weights != (1, 1):
        raise InvalidInstanceError("rotate45 requires d = 2 with unit weights")
    return PointSet(tuple((x + y, x - y) for x, y in ps.points), (1, 1))


def kth_smallest_distance(ps: PointSet, k: int, metric: str = METRIC_LINF) -> int:
    """Exact k-th smallest pairwise distance via binary search on nd(D).

    nd(D) >= k exactly when D >= the k-th distance, so the search settles on
    the smallest D with nd(D) >= k.
    """
    _check_metric(metric)
    if ps.n < 2:
        raise InvalidInstanceError("N >= 2 points required for distance ranks")
    n_pairs = ps.n * (ps.n - 1) // 2
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n_pairs:
        raise InvalidInstanceError("rank k must satisfy 1 <= k <= N(N-1)/2")
    work = ps
    if metric == METRIC_L1:
        if ps.dim == 2:
            work = rotate45(ps)
        elif ps.dim != 1:
            raise InvalidInstanceError("l1 distance selection supports d <= 2")
    counter = _PairCounter(work)
    lo, hi = 0, diameter_linf(work)
    while lo < hi:
        mid = (lo + hi) // 2
        if counter.count(mid) >= k:
            hi = mid
        else:
            lo = mid + 1
    return lo


def diameter_linf(ps: PointSet) -> int:
    """Maximum weighted Linf distance: the widest weighted per-axis span."""
    if ps.n < 2:
        raise InvalidInstanceError("N >= 2 points required for a diameter")
    best = 0
    for j, w in enumerate(ps.weights):
        col = [pt[j] for pt in ps.points]
        span = w * (max(col) - min(col))
        if span > best:
            best = span
    return best


def l1_to_linf_embed(ps: PointSet) -> PointSet:
    """Spread each point over all 2^d sign tuples of its weighted coordinates.

    Coordinate T of the image is sum_j w(j)*s(j)*x(j) for the T-th sign tuple
    (s in {-1,+1}^d, ascending lexicographic).  Unweighted Linf distances
    between images equal weighted L1 distances between originals.
    """
    d = ps.dim
    if d > EMBED_MAX_DIM:
        raise GuardError(f"embedding supports d <= {EMBED_MAX_DIM}")
    ws = ps.weights
    embedded = []
    for pt in ps.points:
        coords = []

        def gen(axis, partial):
            if axis == d:
                coords.append(partial)
                return
            term = ws[axis] * pt[axis]
            gen(axis + 1, partial - term)
            gen(axis + 1, partial + term)

        gen(0, 0)
        embedded.append(tuple(coords))
    return PointSet(tuple(embedded), (1,) * (1 << d))


def diameter_l1(ps: PointSet) -> int:
    """Maximum weighted L1 distance, via the sign-tuple embedding."""
    return diameter_linf(l1_to_linf_embed(ps))


def _neighbor_offsets(d):
    return tuple(off for off in product((-1, 0, 1), repeat=d) if any(off))


def is_packing_feasible(ps: PointSet, factor) -> bool:
    """Can boxes of side w(j)*factor centred on the points avoid overlapping?

    Touching boundaries are allowed.  Points are bucketed on a grid with cell
    lengths w(j)*factor; any overlap happens within a cell or between
    neighbouring cells, checked by exact cross-multiplied comparisons.
    """
    factor = Fraction(factor)
    if factor < 0:
        raise InvalidInstanceError("packing factor must be >= 0")
    points = ps.points
    if factor == 0:
        return len(set(points)) == len(points)
    num = factor.numerator
    den = factor.denominator
    weights = ps.weights
    cells = {}
    keys = []
    for i, pt in enumerate(points):
        key = tuple((c * den) // (w * num) for c, w in zip(pt, weights))
        if key in cells:
            return False  # same cell: strict overlap in every dimension
        cells[key] = i
        keys.append(key)
    for i, pt in enumerate(points):
        base = keys[i]
        for off in _neighbor_offsets(ps.dim):
            j = cells.get(tuple(z + s for z, s in zip(base, off)))
            if j is None:
                continue
            other = points[j]
            if all(abs(a - b) * den < w * num
                   for a, b, w in zip(pt, other, weights)):
                return False
    return True


def max_packing_factor(ps: PointSet) -> Fraction:
    """Largest factor keeping all centred boxes interior-disjoint.

    The optimum equals |dx_j| / w(j) for some pair and axis, so scaled by
    lcm(weights) it is an integer and the binary search is exact.
    """
    if ps.n < 2:
        raise InvalidInstanceError("N >= 2 points required for packing")
    if len(set(ps.points)) < ps.n:
        return Fraction(0)
    scale = lcm(*ps.weights)
    hi = 0
    for j, w in enumerate(ps.weights):
        col = [pt[j] for pt in ps.points]
        hi = max(hi, (max(col) - min(col)) * (scale // w))
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if is_packing_feasible(ps, Fraction(mid, scale)):
            lo = mid
        else:
            hi = mid - 1
    return Fraction(lo, scale)
