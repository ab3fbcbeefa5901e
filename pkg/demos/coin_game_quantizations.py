"""Coin games whose losing parts combine into winning wholes.

Shows the capital-dependent and history-dependent chains, the multiplexer
quantization reproducing the classical gain exactly, the two randomized
sequence constructions agreeing with each other, and the effect window in
the bias parameter.
"""

import numpy as np

from hypergames.parrondo import (
    TYPE1,
    TYPE2,
    CoinEmbedding,
    capital_game_stationary,
    capital_p_gain,
    classify_gain,
    hd_p_gain,
    hd_params_reversed,
    hd_stationary,
    mux_from_coins,
    parrondo_effect_check,
    proper_initial_state,
    quantized_p_gain,
    superpose_mux,
)


def capital_game():
    print("== capital-dependent game ==")
    pi = capital_game_stationary(0.1, 0.75)
    print("coins (0.1, 0.75): stationary (%g, %g, %g), p_gain %g (%s)"
          % (*pi, capital_p_gain(0.1, 0.75), classify_gain(capital_p_gain(0.1, 0.75))))
    pi = capital_game_stationary(0.3, 0.625)
    print("half-half coin mixture (0.3, 0.625): stationary (%.6f, %.6f, %.6f), p_gain %.6f (%s)"
          % (*pi, capital_p_gain(0.3, 0.625), classify_gain(capital_p_gain(0.3, 0.625))))
    print()


def history_game():
    print("== history-dependent game, proper quantization ==")
    coins = (0.9, 0.25, 0.25, 0.7)
    tau = hd_stationary(coins)
    classical = hd_p_gain(coins)
    init = proper_initial_state(tau)
    print("coins %s: stationary (%.6f, %.6f, %.6f, %.6f)" % ((coins,) + tuple(tau)))
    for kind in (TYPE1, TYPE2):
        quantum = quantized_p_gain(mux_from_coins(coins, CoinEmbedding(kind)), init, 0)
        print("  %s embedding: quantum p_gain %.15f vs classical %.15f (diff %.1e)"
              % (kind, quantum, classical, abs(quantum - classical)))
    print()


def randomized_sequences():
    print("== randomized sequence of two games, three routes ==")
    rng = np.random.default_rng(11)
    r = 0.5
    pa = tuple(rng.uniform(0.1, 0.9, size=4))
    pb = tuple(rng.uniform(0.1, 0.9, size=4))
    mixed = tuple(r * x + (1 - r) * y for x, y in zip(pa, pb))
    tau = hd_stationary(mixed)
    init = proper_initial_state(tau)
    classical = hd_p_gain(mixed)
    sup = superpose_mux(
        r,
        mux_from_coins(pa, CoinEmbedding(TYPE2)),
        mux_from_coins(pb, CoinEmbedding(TYPE1)),
    )
    second = mux_from_coins(mixed, CoinEmbedding(TYPE1))
    print("classical mixture p_gain:        %.15f" % classical)
    print("superposed multiplexers:         %.15f" % quantized_p_gain(sup, init, 0))
    print("mixed-coin second quantization:  %.15f" % quantized_p_gain(second, init, 0))
    print()


def effect_window():
    print("== effect window in the bias epsilon ==")
    for eps in (0.0, 1 / 500, 1 / 200, 1 / 168, 1 / 100):
        report = parrondo_effect_check(eps)
        print("eps %-10.6f A %.6f  B %.6f  mixture %.6f  effect: %s"
              % (eps, report["p_gain_a"], report["p_gain_b"],
                 report["p_gain_mixture"], "YES" if report["effect"] else "no"))
    alpha = (0.9, 0.25, 0.25, 0.7)
    print("(B coins reversed into the gain-first order: %s)" %
          (tuple(hd_params_reversed(alpha)),))


def main():
    capital_game()
    history_game()
    randomized_sequences()
    effect_window()


if __name__ == "__main__":
    main()
