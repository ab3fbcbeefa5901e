"""Analyze the bundled three-player payoff tables.

The quarter-weight mixed quantum strategy pays each player the average of
their eight outcome payoffs no matter what the others do, which makes it an
equilibrium for every table.  The bundled tables also illustrate two data
defects worth seeing end to end: the "printed" poker table breaks its own
zero-sum claim in two cells, and the dilemma table repeats the poker numbers
outright.
"""

import numpy as np

from hypergames.equilibria import (
    BUILTIN_GAME_NAMES,
    builtin_game_file,
    classical_mixed_payoff,
    classical_pure_scan,
    expected_payoff_mixture,
    indifference_check,
    special_distribution,
)


def analyze(name):
    game = builtin_game_file(name).game3()
    print("== %s ==" % name)
    defects = game.zero_sum_defects()
    if game.zero_sum_claimed:
        if defects:
            print(
                "zero-sum claim violated:",
                ", ".join("%s sums to %g" % d for d in defects),
            )
        else:
            print("zero-sum claim holds")
    mixtures = [special_distribution(k) for k in (1, 2, 3)]
    payoffs = [expected_payoff_mixture(k, *mixtures, game=game) for k in (1, 2, 3)]
    print("quarter-weight mixture pays: (%g, %g, %g)" % tuple(payoffs))
    rng = np.random.default_rng(7)
    worst = max(
        indifference_check(k, game, samples=500, tol=1e-10, rng=rng)["max_deviation"]
        for k in (1, 2, 3)
    )
    print("largest payoff change over 1500 unilateral deviations: %.3e" % worst)
    pure = classical_pure_scan(game)
    if pure:
        for label, row in pure:
            print("classical pure equilibrium: %s paying (%g, %g, %g)" % ((label,) + row))
    else:
        print("no classical pure equilibrium")
    print()


def classical_mixed_point():
    """The corrected table also has a fully mixed classical equilibrium."""
    game = builtin_game_file("poker_zero_sum_corrected").game3()
    p = np.sqrt(1.4) - 1.0
    r = (4.0 * p + 8.0) / (5.0 * p + 12.0)
    value = classical_mixed_payoff(game, p, p, r)
    print("corrected table, mixed point p = q = %.6f, r = %.6f" % (p, r))
    print("value: (%.12f, %.12f, %.12f)" % tuple(value))
    nudged = classical_mixed_payoff(game, p + 1e-6, p, r)
    print("player-1 payoff under a 1e-6 nudge moves by %.3e" % abs(nudged[0] - value[0]))


def main():
    for name in BUILTIN_GAME_NAMES:
        analyze(name)
    classical_mixed_point()


if __name__ == "__main__":
    main()
