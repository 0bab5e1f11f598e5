"""Exact base sizes and regular-orbit counts of permutation groups.

The formula lane computes base sizes and regular-orbit counts of
symmetric-group actions from exact character inner products; the oracle
lane recomputes the same quantities by brute force on explicit small
permutation groups.  Every formula is cross-validated against the oracle
in the test suite.
"""

__version__ = "0.1.0"
