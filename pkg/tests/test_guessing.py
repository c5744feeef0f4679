import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combopt import (AdversarialReferee, FixedReferee, GuessState,
                     InconsistentAnswerError, InvalidInstanceError,
                     adversarial_answer, answer_for_secret, apply_answer,
                     choose_question, has_consistent_secret,
                     min_cost_assignment, oracle_matching, play, up_new)


def consistent_secrets(intervals):
    n = len(intervals)
    return [p for p in permutations(range(1, n + 1))
            if all(a <= v <= b for v, (a, b) in zip(p, intervals))]


# --- up_new ------------------------------------------------------------------


def test_up_new_examples():
    assert up_new(1, 5, 3) == 1
    assert up_new(2, 2, 7) == 0
    assert up_new(1, 5, 1) == 3


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_up_new_is_the_worst_case_over_answers(data):
    n = data.draw(st.integers(1, 12))
    a = data.draw(st.integers(1, n))
    b = data.draw(st.integers(a, n))
    j = data.draw(st.integers(1, n))
    # residual lengths for every answer some secret value in [a, b] could give
    outcomes = []
    for secret in range(a, b + 1):
        if j == secret:
            lo, hi = j, j
        elif j < secret:
            lo, hi = max(a, j + 1), b
        else:
            lo, hi = a, min(b, j - 1)
        outcomes.append(hi - lo)
    assert up_new(a, b, j) == max(outcomes)


# --- choose_question ---------------------------------------------------------


def test_choose_question_n1():
    assert choose_question(GuessState.initial(1)) == [1]


def test_choose_question_fresh_n2_costs_nothing():
    state = GuessState.initial(2)
    p = choose_question(state)
    assert sorted(p) == [1, 2]
    assert sum(up_new(a, b, pi)
               for (a, b), pi in zip(state.intervals, p)) == 0


def random_state(rng, n):
    intervals = []
    for _ in range(n):
        a = rng.randrange(1, n + 1)
        b = rng.randrange(a, n + 1)
        intervals.append((a, b))
    return GuessState(n, tuple(intervals))


def test_question_cost_matches_factorial_minimum():
    rng = random.Random(600)
    for _ in range(25):
        n = rng.randrange(1, 7)
        state = random_state(rng, n)
        cost = [[up_new(a, b, j) for j in range(1, n + 1)]
                for a, b in state.intervals]
        total, _ = min_cost_assignment(cost)
        assert total == oracle_matching(cost)
        p = choose_question(state)
        assert sum(up_new(a, b, pi)
                   for (a, b), pi in zip(state.intervals, p)) == total


# --- apply_answer ------------------------------------------------------------


def test_apply_answer_rules():
    state = GuessState(5, tuple((1, 5) for _ in range(5)))
    nxt = apply_answer(state, [3, 1, 2, 4, 5], [-1, -1, 0, -1, 1])
    assert nxt.intervals == ((4, 5), (2, 5), (2, 2), (5, 5), (1, 4))
    assert len(nxt.history) == 1


def test_apply_answer_contradiction_raises():
    state = GuessState(3, tuple((1, 3) for _ in range(3)))
    with pytest.raises(InconsistentAnswerError):
        apply_answer(state, [2, 1, 3], [0, 1, -1])  # nothing is below 1


def test_apply_answer_all_zero_resolves():
    state = GuessState.initial(4)
    nxt = apply_answer(state, [2, 4, 1, 3], [0, 0, 0, 0])
    assert nxt.uncertainty == 0
    assert nxt.solved_permutation() == [2, 4, 1, 3]


def test_apply_answer_never_widens():
    state = GuessState(3, ((2, 2), (1, 2), (2, 3)))
    nxt = apply_answer(state, [1, 2, 3], [-1, 1, 1])
    assert nxt.intervals == ((2, 2), (1, 1), (2, 2))


# --- play --------------------------------------------------------------------


def test_play_n1_needs_no_questions():
    assert play(FixedReferee([1]), 1) == ([1], 0)


def test_play_finds_fixed_secret_quickly():
    secret, questions = play(FixedReferee([2, 1]), 2)
    assert secret == [2, 1]
    assert questions <= 2


def test_play_small_sweep_with_decrease_invariant():
    rng = random.Random(601)
    for n in range(2, 7):
        for _ in range(10):
            secret = list(range(1, n + 1))
            rng.shuffle(secret)
            referee = FixedReferee(secret)
            state = GuessState.initial(n)
            questions = 0
            while state.uncertainty:
                before, unresolved = state.uncertainty, state.unresolved
                p = choose_question(state)
                state = apply_answer(state, p, referee.answer(p))
                questions += 1
                assert state.uncertainty <= before - unresolved
                # the secret must survive every update
                assert all(a <= s <= b
                           for s, (a, b) in zip(secret, state.intervals))
            assert state.solved_permutation() == secret
            assert questions <= n * (n - 1)
            assert play(FixedReferee(secret), n) == (secret, questions)


# --- adversarial referee -----------------------------------------------------


def test_adversarial_answer_n1():
    assert adversarial_answer([(1, 1)], [1]) == [0]


def test_adversarial_answer_fresh_n2():
    ans = adversarial_answer([(1, 2), (1, 2)], [1, 2])
    state = apply_answer(GuessState.initial(2), [1, 2], ans)
    assert consistent_secrets(state.intervals)


def test_adversarial_answers_stay_consistent_under_random_probes():
    rng = random.Random(602)
    for n in range(1, 6):
        for _ in range(20):
            referee = AdversarialReferee(n)
            probes = 0
            while consistent_secrets(referee.intervals) and probes < 2 * n * n:
                if len(consistent_secrets(referee.intervals)) == 1:
                    break
                p = list(range(1, n + 1))
                rng.shuffle(p)
                referee.answer(p)
                assert consistent_secrets(referee.intervals), \
                    "adversary contradicted every permutation"
                probes += 1


def test_play_against_adversary_terminates_and_is_consistent():
    for n in range(1, 6):
        referee = AdversarialReferee(n)
        secret, questions = play(referee, n)
        assert questions <= n * (n - 1)
        for p, ans in referee.history:
            assert tuple(answer_for_secret(secret, list(p))) == ans


def test_has_consistent_secret_matches_enumeration():
    rng = random.Random(603)
    for _ in range(40):
        n = rng.randrange(1, 6)
        intervals = []
        for _ in range(n):
            a = rng.randrange(1, n + 1)
            b = rng.randrange(a, n + 1)
            intervals.append((a, b))
        assert has_consistent_secret(intervals) == \
            bool(consistent_secrets(intervals))


# --- validation --------------------------------------------------------------


def test_state_validation():
    with pytest.raises(InvalidInstanceError):
        GuessState(2, ((0, 2), (1, 2)))
    with pytest.raises(InvalidInstanceError):
        GuessState(2, ((1, 3), (1, 2)))
    with pytest.raises(InvalidInstanceError):
        GuessState(2, ((1, 2),))


def test_play_rejects_bad_n():
    with pytest.raises(InvalidInstanceError):
        play(FixedReferee([1]), 0)


def test_duplicate_resolution_flags_lying_referee():
    state = GuessState.initial(2)
    # answers sending both positions to value 2 cannot come from a secret
    state = apply_answer(state, [1, 2], [-1, 0])
    assert state.uncertainty == 0
    with pytest.raises(InconsistentAnswerError):
        state.solved_permutation()


def test_apply_answer_rejects_bad_probe():
    state = GuessState.initial(3)
    with pytest.raises(InvalidInstanceError):
        apply_answer(state, [1, 1, 2], [0, 0, 0])
    with pytest.raises(InvalidInstanceError):
        apply_answer(state, [1, 2, 3], [0, 0, 2])
