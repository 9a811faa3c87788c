"""Exact window-sum identities for Pell, Fibonacci and related recurrences."""

__version__ = "0.1.0"
