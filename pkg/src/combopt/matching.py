"""Exact minimum-cost perfect assignment for square integer matrices."""

from .errors import InvalidInstanceError

_INF = float("inf")


def min_cost_assignment(cost) -> tuple[int, list[int]]:
    """Return (total, assignment) minimising sum(cost[i][assignment[i]]).

    Potential-based shortest augmenting paths, O(n^3); the row/column scan
    order makes the result deterministic when optima tie.
    """
    n = len(cost)
    if n == 0 or any(len(row) != n for row in cost):
        raise InvalidInstanceError("cost matrix must be square and non-empty")
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)   # p[j] = row currently matched to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [_INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = _INF
            j1 = 0
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assignment = [0] * n
    for j in range(1, n + 1):
        if p[j]:
            assignment[p[j] - 1] = j - 1
    total = sum(cost[i][assignment[i]] for i in range(n))
    return total, assignment
