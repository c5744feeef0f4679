"""Two-parameter forward recursion that ignores third-member feasibility.

Deliberately kept out of the library: it may pick special pairs that leave
no remaining resource to act as a third member, so it can undershoot the
true optimum.  Tests use it to demonstrate exactly that flaw.
"""

_INF = float("inf")


def flawed_forward_cost(inst):
    x = inst.amounts
    n, k, p = inst.n, inst.k, inst.p
    if k == 0:
        return 0
    prev2 = [_INF] * (k + 1)  # zero elements consumed
    prev2[0] = 0
    prev1 = list(prev2)       # one element consumed
    for i in range(2, n + 1):
        cost = (x[i - 1] - x[i - 2]) ** p
        cur = [_INF] * (k + 1)
        cur[0] = 0
        for j in range(1, k + 1):
            best = prev1[j]
            cand = prev2[j - 1] + cost
            if cand < best:
                best = cand
            cur[j] = best
        prev2, prev1 = prev1, cur
    return prev1[k]
