"""Exact arithmetic for q-commuting algebras.

Skew Laurent series over a twisted rational-function field, rationality
detection with left-fraction reconstruction, term-by-term construction of
q-commuting and conjugating elements, a commutative Poisson engine for
matrix coordinate rings, monomial SL2(Z) actions, and named identity suites.
"""

__version__ = "0.1.0"
