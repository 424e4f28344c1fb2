"""E-polynomials of twisted Sl_n character varieties.

Two independent summations are provided: one over ``(tau, t)`` using the
twisted coefficients, one over ``(tau, t_d, t_m)`` using torsion counts.
Both divide by powers of ``q - 1`` exactly and must land in ``Z[q]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .chartypes import PureType, degree_quotient, enumerate_pure_types, quotient_type
from .coefficients import c0, c_t
from .exactmath import LaurentPoly, Q, divisors, mobius, torsion_count


def _check_ng(n: int, g: int) -> None:
    if n < 1 or g < 1:
        raise ValueError(f"need n >= 1 and g >= 1, got n={n}, g={g}")


@lru_cache(maxsize=None)
def _reduced_quotient(tau: PureType) -> LaurentPoly:
    return degree_quotient(tau).exact_div(Q - 1)


def _term(args: tuple[PureType, int]) -> LaurentPoly:
    tau, g = args
    base = _reduced_quotient(tau) ** (2 * g - 2)
    acc = Fraction(0)
    for t in divisors(tau.n):
        c = c_t(tau, t)
        if c:
            acc += c * t ** (2 * g - 1)
    return base * acc if acc else LaurentPoly()


@lru_cache(maxsize=None)
def n_poly(n: int, g: int, jobs: int = 1) -> LaurentPoly:
    """E-polynomial via ``sum_{tau, t | n} (|Gl_n|/(chi(1)(q-1)))^(2g-2) t^(2g-1) C_tau^t``."""
    _check_ng(n, g)
    work = [(tau, g) for tau in enumerate_pure_types(n)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            terms = list(ex.map(_term, work, chunksize=8))
    else:
        terms = [_term(w) for w in work]
    total = LaurentPoly()
    for term in terms:
        total = total + term
    return total.as_integral()


@lru_cache(maxsize=None)
def n_poly_alt(n: int, g: int) -> LaurentPoly:
    """Same polynomial from ``sum mu(t_d) O^(2g)(t_d t_m)/(t_d t_m) C0(tau_hat) quot^(2g-2)``,
    divided by ``(q-1)^(2g-2)`` once at the end."""
    _check_ng(n, g)
    total = LaurentPoly()
    for tau in enumerate_pure_types(n):
        acc = Fraction(0)
        for t_d in divisors(tau.d):
            mu_d = mobius(t_d)
            if not mu_d:
                continue
            for t_m in divisors(n // t_d):
                hat = quotient_type(tau, t_d, t_m)
                if hat is None or gcd(hat.d, t_d * t_m) != 1:
                    continue
                tt = t_d * t_m
                acc += mu_d * Fraction(torsion_count(2 * g, tt), tt) * c0(hat)
        if acc:
            total = total + degree_quotient(tau) ** (2 * g - 2) * acc
    return total.exact_div((Q - 1) ** (2 * g - 2)).as_integral()


def assemble(n: int, g: int, coeff) -> LaurentPoly:
    """The ``(tau, t)`` summation with ``coeff(tau, t)`` in place of the closed formula.

    Useful for feeding in coefficients measured some other way.  The result
    is not forced to be integral.
    """
    _check_ng(n, g)
    total = LaurentPoly()
    for tau in enumerate_pure_types(n):
        acc = sum((coeff(tau, t) * t ** (2 * g - 1) for t in divisors(n)), Fraction(0))
        if acc:
            total = total + _reduced_quotient(tau) ** (2 * g - 2) * acc
    return total


def euler_characteristic(n: int, g: int) -> int:
    """Closed form of the value at ``q = 1``: 1 for ``g = 1``, else ``mu(n) n^(4g-3)``."""
    _check_ng(n, g)
    return 1 if g == 1 else mobius(n) * n ** (4 * g - 3)


def expected_degree(n: int, g: int) -> int:
    return 2 * (g - 1) * (n * n - 1)


def oddity_holds(n: int, q: int) -> bool:
    """``q = 1 mod n`` for odd ``n``, ``q = 1 mod 2n`` for even ``n``."""
    m = n if n % 2 else 2 * n
    return (q - 1) % m == 0


def n2_closed_form(q: int, g: int) -> int:
    """Point count of the n=2 variety at an odd prime power ``q``.

    Quasi-polynomial with ``|H| = q(q^2-1)``; for ``q = 1 mod 4`` it agrees
    with ``n_poly(2, g)`` evaluated at ``q``.
    """
    if q % 2 == 0 or q < 3:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    _check_ng(2, g)
    H = q * (q * q - 1)
    e = 2 * g - 2
    s_minus = 1 if ((q - 1) // 2) % 2 == 0 else -1
    s_plus = 1 if ((q + 1) // 2) % 2 == 0 else -1
    two = 2 ** (2 * g - 1)
    return (
        (s_minus * two - (1 + s_minus) // 2) * (H // (q + 1)) ** e
        + (s_plus * two - (1 + s_plus) // 2) * (H // (q - 1)) ** e
        + H**e
        + (H // q) ** e
    )


@dataclass(frozen=True)
class EPolyResult:
    n: int
    g: int
    poly: LaurentPoly

    @property
    def euler(self) -> int:
        return int(self.poly(1))

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def palindromic(self) -> bool:
        return self.poly.is_palindromic() and self.poly.valuation == 0

    @property
    def monic(self) -> bool:
        return self.poly.is_monic()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "variable": "q",
            "coeffs": [[e, str(c)] for e, c in self.poly.items()],
            "euler": self.euler,
            "degree": self.degree,
            "palindromic": self.palindromic,
            "monic": self.monic,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EPolyResult":
        poly = LaurentPoly({int(e): int(c) for e, c in obj["coeffs"]})
        return cls(int(obj["n"]), int(obj["g"]), poly)


def compute(n: int, g: int, alt: bool = False, jobs: int = 1) -> EPolyResult:
    poly = n_poly_alt(n, g) if alt else n_poly(n, g, jobs)
    return EPolyResult(n, g, poly)
