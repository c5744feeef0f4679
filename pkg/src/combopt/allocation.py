"""Minimum-cost selection of disjoint resource 3-tuples.

A 3-tuple with member amounts A <= B <= C costs (B - A)**p; A and B are its
special values.  An optimal selection can always use special pairs that sit
on consecutive positions in the sorted amount order, which both dynamic
programs below exploit.
"""

from dataclasses import dataclass

from .errors import InvalidInstanceError

MAX_AMOUNT = 10**6
_INF = float("inf")


@dataclass(frozen=True)
class ResourceInstance:
    """Sorted resource amounts plus the tuple count k and cost exponent p."""

    amounts: tuple[int, ...]
    k: int
    p: int

    def __post_init__(self):
        amounts = tuple(sorted(self.amounts))
        for a in amounts:
            if not isinstance(a, int) or isinstance(a, bool):
                raise InvalidInstanceError("amounts must be integers")
            if a < 0 or a > MAX_AMOUNT:
                raise InvalidInstanceError(
                    "amounts must satisfy 0 <= amount <= 10^6")
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise InvalidInstanceError("k must be an integer")
        if not 0 <= self.k <= len(amounts) // 3:
            raise InvalidInstanceError("k must satisfy 0 <= k <= floor(N/3)")
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise InvalidInstanceError("p must be an integer")
        if not 1 <= self.p <= 10:
            raise InvalidInstanceError("p must satisfy 1 <= p <= 10")
        object.__setattr__(self, "amounts", amounts)

    @property
    def n(self) -> int:
        return len(self.amounts)


@dataclass(frozen=True)
class TripleSelection:
    """k index triples (ia, ib, ic) into the sorted amounts, plus their cost."""

    triples: tuple[tuple[int, int, int], ...]
    total_cost: int

    def validate(self, inst: ResourceInstance) -> None:
        """Raise unless this selection is a valid k-triple family for inst."""
        x = inst.amounts
        if len(self.triples) != inst.k:
            raise InvalidInstanceError("selection must contain exactly k triples")
        used = [i for t in self.triples for i in t]
        if len(set(used)) != 3 * inst.k:
            raise InvalidInstanceError("all 3k selected indices must be distinct")
        if used and not all(0 <= i < inst.n for i in used):
            raise InvalidInstanceError("selected indices must lie in [0, N)")
        cost = 0
        for ia, ib, ic in self.triples:
            if ib != ia + 1:
                raise InvalidInstanceError(
                    "special pair must use consecutive sorted positions")
            if not x[ia] <= x[ib] <= x[ic]:
                raise InvalidInstanceError(
                    "triple members must satisfy amount(ia) <= amount(ib) <= amount(ic)")
            cost += (x[ib] - x[ia]) ** inst.p
        if cost != self.total_cost:
            raise InvalidInstanceError("total_cost must equal the sum of pair costs")


def _backward_table(inst: ResourceInstance) -> list[list[int]]:
    # rows[i][j] = minimum cost of j tuples using only amounts[i:].
    # A suffix shorter than 3j cannot host j full triples (specials plus a
    # third member above each pair), hence the feasibility cutoff.
    x = inst.amounts
    n, k, p = inst.n, inst.k, inst.p
    rows = [[_INF] * (k + 1) for _ in range(n + 2)]
    for row in rows:
        row[0] = 0
    for i in range(n - 1, -1, -1):
        row = rows[i]
        nxt = rows[i + 1]
        nxt2 = rows[i + 2]
        for j in range(1, k + 1):
            if n - i < 3 * j:
                break
            pair = (x[i + 1] - x[i]) ** p + nxt2[j - 1]
            skip = nxt[j]
            row[j] = skip if skip <= pair else pair
    return rows


def min_cost_backward(inst: ResourceInstance) -> int:
    """Minimum total cost of k disjoint triples; O(N*k) suffix recursion."""
    if inst.k == 0:
        return 0
    best = _backward_table(inst)[0][inst.k]
    assert best != _INF  # construction guarantees N >= 3k
    return best


def min_cost_incomplete_dp(inst: ResourceInstance) -> int:
    """Same optimum via the forward recursion with a pending-triple counter.

    State (i, j, r): first i sorted amounts consumed, j special pairs placed,
    r of them still missing their third member.  O(N*k^2); kept as an
    independent cross-check of min_cost_backward.
    """
    x = inst.amounts
    n, k, p = inst.n, inst.k, inst.p
    if k == 0:
        return 0
    width = k + 1
    prev2 = [[_INF] * width for _ in range(width)]  # i - 2 elements consumed
    prev2[0][0] = 0
    # with one element consumed it can only have been skipped
    prev1 = [row[:] for row in prev2]
    for i in range(2, n + 1):
        cost = (x[i - 1] - x[i - 2]) ** p
        cur = [[_INF] * width for _ in range(width)]
        for j in range(width):
            row = cur[j]
            p1 = prev1[j]
            for r in range(j + 1):
                best = p1[r]  # skip x[i-1]
                if r + 1 <= j and p1[r + 1] < best:
                    best = p1[r + 1]  # x[i-1] completes a pending triple
                if j >= 1 and r >= 1:
                    cand = prev2[j - 1][r - 1] + cost  # new special pair
                    if cand < best:
                        best = cand
                row[r] = best
        prev2, prev1 = prev1, cur
    best = prev1[k][0]
    assert best != _INF
    return best


def reconstruct_selection(inst: ResourceInstance) -> TripleSelection:
    """Recover one optimal selection from the suffix recursion.

    Ties break toward skipping the current element; third members are handed
    out largest-index-first, starting with the highest special pair.
    """
    rows = _backward_table(inst)
    x = inst.amounts
    pairs = []
    i, j = 0, inst.k
    while j > 0:
        if rows[i][j] == rows[i + 1][j]:
            i += 1
        else:
            pairs.append(i)
            j -= 1
            i += 2
    used = set()
    for a in pairs:
        used.add(a)
        used.add(a + 1)
    free = [q for q in range(inst.n) if q not in used]
    triples = []
    for a in reversed(pairs):
        triples.append((a, a + 1, free.pop()))
    triples.reverse()
    total = sum((x[a + 1] - x[a]) ** inst.p for a in pairs)
    selection = TripleSelection(tuple(triples), total)
    selection.validate(inst)
    return selection
