"""Multi-pile collection game with per-move decay and vanishing containers.

Each recipient (z, c) starts with z*c resource units, loses c after every
move, and vanishes from its pile the moment it reaches zero.  Taking the top
recipient of a pile at move t therefore collects c*(z - t + 1).
"""

from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import GuardError, InvalidInstanceError

STATE_GUARD = 10**8


@dataclass(frozen=True)
class PileGame:
    """Piles of (z, c) recipients listed bottom-to-top, plus rule toggles."""

    piles: tuple[tuple[tuple[int, int], ...], ...]
    decay_enabled: bool = True
    disappear_enabled: bool = True

    def __post_init__(self):
        if len(self.piles) < 1:
            raise InvalidInstanceError("N >= 1 piles required")
        piles = []
        for pile in self.piles:
            rows = []
            for rec in pile:
                z, c = rec
                if not isinstance(z, int) or not isinstance(c, int) \
                        or isinstance(z, bool) or isinstance(c, bool):
                    raise InvalidInstanceError("z and c must be integers")
                if z < 1 or c < 1:
                    raise InvalidInstanceError("z >= 1 and c >= 1 for every recipient")
                rows.append((z, c))
            piles.append(tuple(rows))
        object.__setattr__(self, "piles", tuple(piles))

    @property
    def num_piles(self) -> int:
        return len(self.piles)

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.piles)

    @property
    def num_recipients(self) -> int:
        return sum(len(p) for p in self.piles)


@dataclass
class GameValueTable:
    """Best collectable quantity per state (t, b1..bN), densely stored.

    Layer t holds one value per top-index tuple; an extra all-zero layer
    backs take transitions evaluated at unreachable border states.
    """

    tops: tuple[int, ...]
    strides: tuple[int, ...]
    layers: list[list[int]]

    def value(self, t: int, tops) -> int:
        if not 1 <= t <= len(self.layers):
            raise InvalidInstanceError("move index t out of range")
        idx = 0
        for b, m, s in zip(tops, self.tops, self.strides):
            if not 0 <= b <= m:
                raise InvalidInstanceError("top index out of range")
            idx += b * s
        return self.layers[t - 1][idx]


def _check_guard(game: PileGame) -> tuple[tuple[int, ...], int, int]:
    m = game.tops
    states = prod(mi + 1 for mi in m)
    total = game.num_recipients
    if (total + 1) * states * game.num_piles > STATE_GUARD:
        raise GuardError(
            "state space (M+1) * prod(m_i+1) * N exceeds the 10^8 guard")
    return m, states, total


def solve_value_table(game: PileGame) -> GameValueTable:
    """Evaluate every state bottom-up, honouring the game's rule toggles."""
    m, n_states, total = _check_guard(game)
    n_piles = game.num_piles
    strides = [0] * n_piles
    acc = 1
    for i in range(n_piles - 1, -1, -1):
        strides[i] = acc
        acc *= m[i] + 1
    piles = game.piles
    decay = game.decay_enabled
    disappear = game.disappear_enabled
    # ascending flat index == ascending lexicographic top tuples, so the
    # same-move transitions below only read already-filled entries
    states = list(product(*(range(mi + 1) for mi in m)))
    layers = [[0] * n_states for _ in range(total + 2)]
    for t in range(total + 1, 0, -1):
        cur = layers[t - 1]
        nxt = layers[t]
        for si in range(1, n_states):
            tops = states[si]
            best = 0
            for i in range(n_piles):
                b = tops[i]
                if b == 0:
                    continue
                z, c = piles[i][b - 1]
                target = si - strides[i]
                if decay and disappear and t > z:
                    v = cur[target]  # already vanished; free removal
                else:
                    if not decay:
                        gain = z * c
                    else:
                        gain = c * (z - t + 1)
                        if gain < 0:
                            gain = 0  # only reachable with vanishing disabled
                    v = nxt[target] + gain
                if v > best:
                    best = v
            cur[si] = best
    return GameValueTable(m, tuple(strides), layers[: total + 1])


def max_collect(game: PileGame) -> int:
    """Largest total quantity collectable from the initial position."""
    return solve_value_table(game).value(1, game.tops)


def optimal_strategy(game: PileGame) -> list[int]:
    """A pile-index move sequence achieving max_collect(game).

    Vanished recipients are skipped silently (they cost no move); among
    equally good takes the lowest pile index wins.
    """
    table = solve_value_table(game)
    piles = game.piles
    decay = game.decay_enabled
    disappear = game.disappear_enabled
    tops = list(game.tops)
    moves = []
    t = 1
    while True:
        if decay and disappear:
            for i in range(len(tops)):
                while tops[i] > 0 and t > piles[i][tops[i] - 1][0]:
                    tops[i] -= 1
        if not any(tops):
            return moves
        target = table.value(t, tops)
        for i in range(len(tops)):
            b = tops[i]
            if b == 0:
                continue
            z, c = piles[i][b - 1]
            if not decay:
                gain = z * c
            else:
                gain = c * (z - t + 1)
                if gain < 0:
                    gain = 0
            tops[i] -= 1
            if gain + table.value(t + 1, tops) == target:
                moves.append(i)
                break
            tops[i] += 1
        else:
            raise AssertionError("value table admits no matching move")
        t += 1


def replay_strategy(game: PileGame, moves) -> int:
    """Collect along a move sequence under the literal game rules."""
    piles = [list(p) for p in game.piles]
    decay = game.decay_enabled
    disappear = game.disappear_enabled
    total = 0
    t = 1
    for move in moves:
        if decay and disappear:
            # decay empties recipients anywhere in a pile, not just on top
            piles = [[r for r in pile if r[0] >= t] for pile in piles]
        if not 0 <= move < len(piles) or not piles[move]:
            raise InvalidInstanceError("move targets an empty or unknown pile")
        z, c = piles[move].pop()
        if not decay:
            gain = z * c
        else:
            gain = c * (z - t + 1)
            if gain < 0:
                gain = 0
        total += gain
        t += 1
    return total


def max_collect_no_decay(game: PileGame) -> int:
    """With decay off every recipient is eventually taken at full content."""
    if game.decay_enabled:
        raise InvalidInstanceError("decay_enabled must be false for this variant")
    return sum(z * c for pile in game.piles for z, c in pile)


def max_collect_no_disappear(game: PileGame) -> int:
    """Variant without vanishing: the move index is implied by the tops.

    Every move removes exactly one recipient, so t = 1 + sum(m_i - b_i) and
    the state reduces to the top tuple alone.  Collected amounts floor at 0.
    """
    if game.disappear_enabled:
        raise InvalidInstanceError("disappear_enabled must be false for this variant")
    m, n_states, total = _check_guard(game)
    n_piles = game.num_piles
    strides = [0] * n_piles
    acc = 1
    for i in range(n_piles - 1, -1, -1):
        strides[i] = acc
        acc *= m[i] + 1
    piles = game.piles
    decay = game.decay_enabled
    values = [0] * n_states
    states = list(product(*(range(mi + 1) for mi in m)))
    for si in range(1, n_states):
        tops = states[si]
        t = 1 + (total - sum(tops))
        best = 0
        for i in range(n_piles):
            b = tops[i]
            if b == 0:
                continue
            z, c = piles[i][b - 1]
            gain = z * c if not decay else max(0, c * (z - t + 1))
            v = values[si - strides[i]] + gain
            if v > best:
                best = v
        values[si] = best
    return values[n_states - 1]
