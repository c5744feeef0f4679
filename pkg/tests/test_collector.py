import random

import pytest

from combopt import (GuardError, InvalidInstanceError, PileGame, max_collect,
                     max_collect_no_decay, max_collect_no_disappear,
                     optimal_strategy, oracle_collector, replay_strategy,
                     solve_value_table)


def random_game(rng, max_piles=3, max_recipients=8, **flags):
    n = rng.randrange(1, max_piles + 1)
    budget = rng.randrange(0, max_recipients + 1)
    sizes = [0] * n
    for _ in range(budget):
        sizes[rng.randrange(n)] += 1
    piles = tuple(
        tuple((rng.randrange(1, 7), rng.randrange(1, 6)) for _ in range(s))
        for s in sizes)
    return PileGame(piles, **flags)


def test_single_recipient_examples():
    assert max_collect(PileGame((((1, 4),),))) == 4
    assert max_collect(PileGame((((3, 2),),))) == 6  # full content z*c


def test_two_pile_example():
    game = PileGame((((1, 10),), ((5, 1),)))
    assert max_collect(game) == 14
    moves = optimal_strategy(game)
    assert moves == [0, 1]
    assert replay_strategy(game, moves) == 14


def test_empty_game():
    game = PileGame(((),))
    assert max_collect(game) == 0
    assert optimal_strategy(game) == []


def test_matches_exhaustive_oracle():
    rng = random.Random(0xC011)
    for _ in range(80):
        game = random_game(rng)
        assert max_collect(game) == oracle_collector(game)


def test_strategy_replays_to_optimum():
    rng = random.Random(0xC012)
    for _ in range(60):
        game = random_game(rng)
        moves = optimal_strategy(game)
        assert len(moves) <= game.num_recipients
        assert replay_strategy(game, moves) == max_collect(game)


def test_single_pile_strategy_replays():
    rng = random.Random(0xC013)
    for _ in range(30):
        game = random_game(rng, max_piles=1)
        assert replay_strategy(game, optimal_strategy(game)) == max_collect(game)


def test_no_decay_examples():
    game = PileGame((((2, 3), (1, 5)),), decay_enabled=False)
    assert max_collect_no_decay(game) == 11
    assert max_collect_no_decay(PileGame(((),), decay_enabled=False)) == 0


def test_no_decay_matches_dp_and_oracle():
    rng = random.Random(0xC014)
    for _ in range(40):
        game = random_game(rng, decay_enabled=False)
        closed = max_collect_no_decay(game)
        assert closed == max_collect(game)  # same rules through the full DP
        assert closed == oracle_collector(game)
        assert closed == sum(z * c for pile in game.piles for z, c in pile)


def test_no_disappear_examples():
    assert max_collect_no_disappear(
        PileGame((((1, 4),),), disappear_enabled=False)) == 4
    assert max_collect_no_disappear(
        PileGame((((1, 1), (1, 1)),), disappear_enabled=False)) == 1


def test_no_disappear_matches_explicit_dp_and_oracle():
    rng = random.Random(0xC015)
    for _ in range(40):
        game = random_game(rng, disappear_enabled=False)
        derived = max_collect_no_disappear(game)
        assert derived == max_collect(game)  # explicit-move-index DP, no vanish
        assert derived == oracle_collector(game)


def test_collect_bounded_by_initial_content():
    rng = random.Random(0xC016)
    for _ in range(40):
        game = random_game(rng)
        assert max_collect(game) <= sum(
            z * c for pile in game.piles for z, c in pile)


def test_value_table_invariants():
    game = PileGame((((2, 2), (1, 3)), ((4, 1),)))
    table = solve_value_table(game)
    for t in range(1, game.num_recipients + 2):
        assert table.value(t, (0, 0)) == 0
    assert table.value(1, game.tops) == max_collect(game)


def test_state_space_guard():
    huge = PileGame((tuple((1, 1) for _ in range(10**4)),))
    with pytest.raises(GuardError):
        max_collect(huge)
    with pytest.raises(GuardError):
        max_collect_no_disappear(
            PileGame((tuple((1, 1) for _ in range(10**4)),),
                     disappear_enabled=False))


def test_variant_preconditions():
    game = PileGame((((1, 1),),))
    with pytest.raises(InvalidInstanceError):
        max_collect_no_decay(game)
    with pytest.raises(InvalidInstanceError):
        max_collect_no_disappear(game)


def test_replay_rejects_illegal_move():
    game = PileGame((((1, 2),),))
    with pytest.raises(InvalidInstanceError):
        replay_strategy(game, [0, 0])
    with pytest.raises(InvalidInstanceError):
        replay_strategy(game, [1])


@pytest.mark.parametrize("piles", [
    (),                      # no piles at all
    (((0, 1),),),            # z below 1
    (((1, 0),),),            # c below 1
    (((1, 1.5),),),          # non-integer
])
def test_invalid_games_rejected(piles):
    with pytest.raises(InvalidInstanceError):
        PileGame(piles)
