"""Walkthrough: the decaying-pile collection game.

Recipients hold z*c units, lose c per move, and vanish at zero, so taking a
recipient at move t yields c*(z - t + 1): early moves matter most for
fast-decaying, rich recipients.
"""

from combopt import (PileGame, max_collect, max_collect_no_decay,
                     max_collect_no_disappear, optimal_strategy,
                     oracle_collector, replay_strategy)

game = PileGame((
    ((2, 4), (1, 10)),   # pile 0, bottom-to-top: (z, c)
    ((5, 1), (3, 3)),    # pile 1
))

print("piles (bottom-to-top):")
for i, pile in enumerate(game.piles):
    print(f"  pile {i}:", ", ".join(f"z={z} c={c} (holds {z * c})" for z, c in pile))

best = max_collect(game)
print("\nbest collectable quantity:", best)
print("exhaustive search agrees:", oracle_collector(game) == best)

moves = optimal_strategy(game)
print("optimal move order (pile indices):", moves)
print("replaying those moves collects:", replay_strategy(game, moves))

upper = sum(z * c for pile in game.piles for z, c in pile)
print("initial content bound:", upper)

# variant where nothing decays: everything is eventually collected
frozen = PileGame(game.piles, decay_enabled=False)
print("\nwithout decay the take order stops mattering:",
      max_collect_no_decay(frozen), "==", upper)

# variant where empty recipients linger and block their piles
sticky = PileGame(game.piles, disappear_enabled=False)
print("with empties blocking their piles:", max_collect_no_disappear(sticky))
