"""Walk through the closed-form outcome distributions and their oracle.

Three entangled players apply SU(2) pairs (A, B); the closed form reads the
outcome probabilities off squared coordinates of an octonion triple product,
and the state-vector route measures the evolved state in the action basis.
The two must agree to rounding error for every strategy choice.
"""

import numpy as np

from hypergames.coordgame import embed3, landsburg_probs, theorem1_distribution
from hypergames.qstate import (
    ACTION_LABELS3,
    ETA3,
    game_state3,
    measure,
    oracle_distribution2,
    to_action_basis3,
)


def show(title, dist):
    print(title)
    for label, p in dist.as_dict().items():
        if p > 1e-12:
            print("  %s  %.12f" % (label, p))


def oracle3(a, b, p, q, e, f):
    return measure(to_action_basis3(game_state3(a, b, p, q, e, f), ETA3), ACTION_LABELS3)


def random_pair(rng):
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return v[0] + 1j * v[1], v[2] + 1j * v[3]


def main():
    show(
        "identity strategies (everyone stands pat):",
        theorem1_distribution(embed3(1, 1, 0), embed3(2, 1, 0), embed3(3, 1, 0)),
    )
    show(
        "all three flip:",
        theorem1_distribution(embed3(1, 0, 1), embed3(2, 0, 1), embed3(3, 0, 1)),
    )

    rng = np.random.default_rng(2026)
    (a, b), (p, q), (e, f) = random_pair(rng), random_pair(rng), random_pair(rng)
    closed = theorem1_distribution(embed3(1, a, b), embed3(2, p, q), embed3(3, e, f))
    oracle = oracle3(a, b, p, q, e, f)
    show("a random strategy triple (closed form):", closed)
    print("max deviation from the state-vector oracle: %.3e" % closed.max_deviation(oracle))

    print()
    (a, b), (p, q) = random_pair(rng), random_pair(rng)
    closed2 = landsburg_probs(a, b, p, q)
    oracle2 = oracle_distribution2(a, b, p, q)
    show("two-player quaternion route, random strategies:", closed2)
    print("max deviation from the 2-player oracle: %.3e" % closed2.max_deviation(oracle2))


if __name__ == "__main__":
    main()
