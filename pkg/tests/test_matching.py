import random

import pytest

from combopt import InvalidInstanceError, min_cost_assignment, oracle_matching


def test_two_by_two():
    total, assignment = min_cost_assignment([[1, 2], [3, 0]])
    assert total == 1
    assert assignment == [0, 1]


def test_zero_diagonal():
    cost = [[0 if i == j else 5 for j in range(4)] for i in range(4)]
    total, assignment = min_cost_assignment(cost)
    assert total == 0
    assert assignment == [0, 1, 2, 3]


def test_single_cell():
    assert min_cost_assignment([[7]]) == (7, [0])


def test_assignment_is_permutation():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(1, 8)
        cost = [[rng.randrange(50) for _ in range(n)] for _ in range(n)]
        total, assignment = min_cost_assignment(cost)
        assert sorted(assignment) == list(range(n))
        assert total == sum(cost[i][assignment[i]] for i in range(n))


def test_matches_factorial_oracle():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randrange(1, 7)
        cost = [[rng.randrange(100) for _ in range(n)] for _ in range(n)]
        assert min_cost_assignment(cost)[0] == oracle_matching(cost)


def test_negative_costs_supported():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randrange(2, 6)
        cost = [[rng.randrange(-50, 50) for _ in range(n)] for _ in range(n)]
        assert min_cost_assignment(cost)[0] == oracle_matching(cost)


def test_rejects_non_square():
    with pytest.raises(InvalidInstanceError):
        min_cost_assignment([[1, 2], [3]])
    with pytest.raises(InvalidInstanceError):
        min_cost_assignment([])
