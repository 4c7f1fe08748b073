"""Exact and numeric verification of q-analogues of power sums and q-Bernoulli closed forms."""

__version__ = "0.1.0"
