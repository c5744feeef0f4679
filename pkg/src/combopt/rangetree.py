"""Orthogonal range counting over fixed sites with mutable 0/1 weights.

The index nests one layer per dimension: every layer orders its sites by the
current coordinate, inner layers are segment trees of sub-indexes, and the
final layer is a Fenwick array holding the weight sums.  Box queries touch
O(log^d N) nodes; weight updates touch the nodes on each layer's leaf path.
"""

from bisect import bisect_left, bisect_right

from .errors import InvalidInstanceError


class _Layer:
    __slots__ = ("xs", "n", "pos", "bit", "subs")

    def __init__(self, entries, axis, last):
        entries = sorted(entries, key=lambda e: (e[0][axis], e[1]))
        self.xs = [e[0][axis] for e in entries]
        self.n = n = len(entries)
        self.pos = {e[1]: i for i, e in enumerate(entries)}
        if axis == last:
            self.bit = [0] * (n + 1)
            self.subs = None
        else:
            self.bit = None
            buckets = [None] * (2 * n)
            for i, e in enumerate(entries):
                buckets[n + i] = [e]
            for node in range(n - 1, 0, -1):
                buckets[node] = buckets[2 * node] + buckets[2 * node + 1]
            self.subs = [None] + [
                _Layer(buckets[node], axis + 1, last) for node in range(1, 2 * n)
            ]

    def add(self, site, delta):
        if self.bit is not None:
            i = self.pos[site] + 1
            bit = self.bit
            n = self.n
            while i <= n:
                bit[i] += delta
                i += i & (-i)
        else:
            node = self.pos[site] + self.n
            subs = self.subs
            while node >= 1:
                subs[node].add(site, delta)
                node >>= 1

    def _prefix(self, count):
        bit = self.bit
        acc = 0
        while count > 0:
            acc += bit[count]
            count -= count & (-count)
        return acc

    def box_sum(self, bounds, axis):
        lo, hi = bounds[axis]
        a = bisect_left(self.xs, lo)
        b = bisect_right(self.xs, hi)
        if a >= b:
            return 0
        if self.bit is not None:
            return self._prefix(b) - self._prefix(a)
        total = 0
        left = a + self.n
        right = b + self.n
        subs = self.subs
        nxt = axis + 1
        while left < right:
            if left & 1:
                total += subs[left].box_sum(bounds, nxt)
                left += 1
            if right & 1:
                right -= 1
                total += subs[right].box_sum(bounds, nxt)
            left >>= 1
            right >>= 1
        return total


class RangeCountTree:
    """Weighted point-count index over fixed integer sites.

    Weights live in {0, 1} and start at 0; box_sum returns the weight total
    inside an inclusive axis-aligned box.
    """

    def __init__(self, sites):
        sites = [tuple(s) for s in sites]
        if not sites:
            raise InvalidInstanceError("at least one site required")
        dims = len(sites[0])
        if dims < 1:
            raise InvalidInstanceError("sites need at least one coordinate")
        for s in sites:
            if len(s) != dims:
                raise InvalidInstanceError("all sites must share one dimensionality")
            for c in s:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise InvalidInstanceError("site coordinates must be integers")
        self._dims = dims
        self._weights = [0] * len(sites)
        self._root = _Layer(list(zip(sites, range(len(sites)))), 0, dims - 1)

    @property
    def dims(self) -> int:
        return self._dims

    @property
    def n_sites(self) -> int:
        return len(self._weights)

    def weight(self, site: int) -> int:
        return self._weights[site]

    def set_weight(self, site: int, w: int) -> None:
        if w not in (0, 1):
            raise InvalidInstanceError("point weights are restricted to {0, 1}")
        if not 0 <= site < len(self._weights):
            raise InvalidInstanceError("site index out of range")
        delta = w - self._weights[site]
        if delta:
            self._weights[site] = w
            self._root.add(site, delta)

    def box_sum(self, bounds) -> int:
        bounds = tuple((lo, hi) for lo, hi in bounds)
        if len(bounds) != self._dims:
            raise InvalidInstanceError("bounds must list one (lo, hi) pair per dimension")
        return self._root.box_sum(bounds, 0)
