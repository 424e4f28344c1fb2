"""Exact E-polynomials of twisted Sl_n character varieties, with brute-force cross-checks."""

__version__ = "0.1.0"
