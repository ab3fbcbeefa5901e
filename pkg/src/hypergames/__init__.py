"""Hypercomplex coordinatizations of quantized two- and three-player games.

The package has three layers. `hypercomplex` supplies exact-rule quaternion
and octonion arithmetic over an oriented Fano table. `qstate` is a dense
state-vector engine that serves as the brute-force oracle. `coordgame`,
`equilibria`, and `parrondo` build the coordinatized game formulas, the mixed
quantum equilibrium checks, and the Parrondo quantizations on top, each
cross-checked against the oracle. `cli` exposes the lot as a command line.
"""

__version__ = "0.1.0"
