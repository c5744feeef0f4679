"""Adaptive engine for the permutation guessing game with signed feedback.

Every probe permutation p earns one sign per position: 0 when p(i) hits the
secret, -1 when p(i) is below it, +1 when above.  The engine keeps a value
interval per position and always asks the probe minimising the worst-case
total interval length, found as a minimum-cost perfect assignment.
"""

from dataclasses import dataclass

from .errors import InconsistentAnswerError, InvalidInstanceError
from .matching import min_cost_assignment


def up_new(a: int, b: int, j: int) -> int:
    """Worst-case residual interval length of [a, b] when probed with j."""
    if j < a or j > b or a == b:
        return b - a
    if j == a or j == b:
        return b - a - 1
    return max(0, b - j - 1, j - 1 - a)


@dataclass(frozen=True)
class GuessState:
    """Per-position candidate intervals plus the question history."""

    n: int
    intervals: tuple[tuple[int, int], ...]
    history: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInstanceError("n >= 1 required")
        if len(self.intervals) != self.n:
            raise InvalidInstanceError("one interval per position required")
        for a, b in self.intervals:
            if not 1 <= a <= b <= self.n:
                raise InvalidInstanceError("intervals must satisfy 1 <= a <= b <= n")

    @classmethod
    def initial(cls, n: int) -> "GuessState":
        return cls(n, tuple((1, n) for _ in range(n)))

    @property
    def uncertainty(self) -> int:
        return sum(b - a for a, b in self.intervals)

    @property
    def unresolved(self) -> int:
        return sum(1 for a, b in self.intervals if a < b)

    def solved_permutation(self) -> list[int]:
        if self.uncertainty:
            raise InvalidInstanceError("state still has uncertainty")
        values = [a for a, _ in self.intervals]
        if sorted(values) != list(range(1, self.n + 1)):
            # intervals alone cannot flag this earlier; a truthful referee
            # can never resolve two positions to the same value
            raise InconsistentAnswerError(
                "resolved values do not form a permutation")
        return values


def _check_permutation(p, n):
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise InvalidInstanceError("probe must be a permutation of 1..n")


def choose_question(state: GuessState) -> list[int]:
    """Probe permutation minimising the worst-case total uncertainty."""
    n = state.n
    cost = [[up_new(a, b, j) for j in range(1, n + 1)]
            for a, b in state.intervals]
    _, assignment = min_cost_assignment(cost)
    return [col + 1 for col in assignment]


def apply_answer(state: GuessState, p, ans) -> GuessState:
    """Shrink the intervals according to one answer vector.

    Updates are clipped so an answer can never widen an interval; an interval
    running empty means the referee contradicted itself.
    """
    _check_permutation(p, state.n)
    if len(ans) != state.n or any(s not in (-1, 0, 1) for s in ans):
        raise InvalidInstanceError("answer needs one sign in {-1, 0, 1} per position")
    intervals = []
    for (a, b), pi, sign in zip(state.intervals, p, ans):
        if sign == 0:
            a, b = max(a, pi), min(b, pi)
        elif sign < 0:
            a = max(a, pi + 1)
        else:
            b = min(b, pi - 1)
        if a > b:
            raise InconsistentAnswerError(
                "answer leaves no candidate value for a position")
        intervals.append((a, b))
    return GuessState(state.n, tuple(intervals),
                      state.history + ((tuple(p), tuple(ans)),))


def play(referee, n: int) -> tuple[list[int], int]:
    """Ask questions until the intervals pin down the permutation.

    Returns the identified permutation and the number of questions asked; no
    confirmation question is spent once the uncertainty reaches zero.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidInstanceError("n >= 1 required")
    state = GuessState.initial(n)
    questions = 0
    while state.uncertainty > 0:
        p = choose_question(state)
        ans = referee.answer(p)
        state = apply_answer(state, p, ans)
        questions += 1
        assert questions <= n * n, "uncertainty failed to decrease"
    return state.solved_permutation(), questions


def answer_for_secret(secret, p) -> list[int]:
    """The truthful sign vector for probe p against a fixed secret."""
    return [0 if pi == si else (-1 if pi < si else 1)
            for pi, si in zip(p, secret)]


class FixedReferee:
    """Answers truthfully for one fixed secret permutation."""

    def __init__(self, secret):
        secret = list(secret)
        _check_permutation(secret, len(secret))
        self.secret = secret
        self.history = []

    def answer(self, p):
        ans = answer_for_secret(self.secret, p)
        self.history.append((tuple(p), tuple(ans)))
        return ans


def has_consistent_secret(intervals) -> bool:
    """True iff some permutation picks a distinct value inside every interval."""
    n = len(intervals)
    match = [0] * (n + 1)  # value -> matched position + 1

    def try_assign(i, seen):
        a, b = intervals[i]
        for v in range(a, b + 1):
            if not seen[v]:
                seen[v] = True
                if match[v] == 0 or try_assign(match[v] - 1, seen):
                    match[v] = i + 1
                    return True
        return False

    for i in range(n):
        if not try_assign(i, [False] * (n + 1)):
            return False
    return True


def _candidate_answers(a, b, pi):
    # every legal sign with the interval it would leave, worst (longest)
    # first; ties keep the order -1, +1, 0
    out = []
    lo = max(a, pi + 1)
    if lo <= b:
        out.append((-1, (lo, b)))
    hi = min(b, pi - 1)
    if a <= hi:
        out.append((1, (a, hi)))
    if a <= pi <= b:
        out.append((0, (pi, pi)))
    out.sort(key=lambda item: item[1][0] - item[1][1])
    return out


def adversarial_answer(intervals, p) -> list[int]:
    """Worst consistent answer vector for probe p given current intervals.

    Positions are fixed in index order; each takes the answer leaving the
    longest interval among those that still admit a full consistent secret,
    so the final vector always keeps at least one candidate permutation.
    """
    intervals = list(intervals)
    ans = []
    for i, pi in enumerate(p):
        a, b = intervals[i]
        for sign, shrunk in _candidate_answers(a, b, pi):
            intervals[i] = shrunk
            if has_consistent_secret(intervals):
                ans.append(sign)
                break
        else:
            raise AssertionError("no consistent answer exists; referee state broken")
    return ans


class AdversarialReferee:
    """Keeps the candidate set as large as possible while never lying."""

    def __init__(self, n: int):
        self.n = n
        self.intervals = [(1, n) for _ in range(n)]
        self.history = []

    def answer(self, p):
        _check_permutation(p, self.n)
        ans = adversarial_answer(self.intervals, p)
        updated = []
        for (a, b), pi, sign in zip(self.intervals, p, ans):
            if sign == 0:
                a, b = pi, pi
            elif sign < 0:
                a = max(a, pi + 1)
            else:
                b = min(b, pi - 1)
            updated.append((a, b))
        self.intervals = updated
        self.history.append((tuple(p), tuple(ans)))
        return ans
