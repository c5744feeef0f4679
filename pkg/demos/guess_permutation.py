"""Walkthrough: guessing a secret permutation from signed feedback.

Every question is a full permutation; each position answers below/hit/above.
The engine tracks a candidate interval per position and always asks the
probe minimising the worst-case total interval length (a min-cost perfect
assignment over up_new values).
"""

import random

from combopt import (AdversarialReferee, FixedReferee, GuessState,
                     apply_answer, choose_question, play, up_new)

n = 6
rng = random.Random(11)
secret = list(range(1, n + 1))
rng.shuffle(secret)
referee = FixedReferee(secret)

print("secret:", secret)
state = GuessState.initial(n)
step = 0
while state.uncertainty:
    probe = choose_question(state)
    worst = sum(up_new(a, b, pi) for (a, b), pi in zip(state.intervals, probe))
    ans = referee.answer(probe)
    state = apply_answer(state, probe, ans)
    step += 1
    print(f"  q{step}: ask {probe}  answers {ans}  "
          f"worst-case residual {worst}, actual {state.uncertainty}")
print("resolved to", state.solved_permutation(), "in", step, "questions")
print("(bound is n(n-1) =", n * (n - 1), "questions)")

# the packaged loop does the same thing in one call
found, questions = play(FixedReferee(secret), n)
print("\nplay() finds", found, "in", questions, "questions")

# an adversary answers worst-case but must stay consistent with some secret
adversary = AdversarialReferee(n)
found, questions = play(adversary, n)
print("against the adversarial referee:", found, "in", questions, "questions")
