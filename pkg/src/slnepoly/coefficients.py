"""Rational coefficients attached to pure types.

``c0(tau)`` is the weight a type receives in the logarithm of the
generating function of all characters; ``c_t(tau, t)`` is its twisted
version, which collects the characters fixed by tensoring with a
character of order ``t``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .chartypes import PureType, enumerate_pure_types, quotient_type
from .exactmath import divisors, mobius


@lru_cache(maxsize=None)
def c0(tau: PureType) -> Fraction:
    """``(-1)^(m-1) (mu(d)/d) (m-1)! / prod_lam m_lam!`` with ``m = sum m_lam``."""
    m = tau.m
    denom = 1
    for _, k in tau.mults:
        denom *= factorial(k)
    sign = -1 if (m - 1) % 2 else 1
    return Fraction(sign * mobius(tau.d) * factorial(m - 1), tau.d * denom)


def quotient_triples(tau: PureType, t: int):
    """Yield ``(k, t_d, t_m, tau_hat)`` entering ``c_t(tau, t)``.

    ``k`` runs over divisors of ``n / t`` and ``t_d t_m = t k``; the
    quotient type must exist and its degree must be prime to ``t_d t_m``.
    """
    n = tau.n
    for k in divisors(n // t):
        for t_d in divisors(t * k):
            t_m = t * k // t_d
            hat = quotient_type(tau, t_d, t_m)
            if hat is None or gcd(hat.d, t_d * t_m) != 1:
                continue
            yield k, t_d, t_m, hat


@lru_cache(maxsize=None)
def c_t(tau: PureType, t: int) -> Fraction:
    """Twisted coefficient ``C_tau^t`` for ``t | n``."""
    if tau.n % t:
        raise ValueError(f"t={t} does not divide n={tau.n}")
    total = Fraction(0)
    for k, t_d, _, hat in quotient_triples(tau, t):
        total += Fraction(mobius(k), k) * mobius(t_d) * c0(hat)
    return total


def c_t_all(n: int) -> list[tuple[PureType, int, Fraction]]:
    """Every ``(tau, t, C_tau^t)`` with ``|tau| = n`` and ``t | n``, zeros included."""
    return [(tau, t, c_t(tau, t)) for tau in enumerate_pure_types(n) for t in divisors(n)]
