"""Exact arithmetic: integer Laurent polynomials, cyclotomic integers and
the small number-theoretic functions used throughout the package.

Rationals are plain :class:`fractions.Fraction` values. Nothing in here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping

Scalar = int | Fraction


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


# ---------------------------------------------------------------------------
# number theory


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n >= 1`` as ``((p, e), ...)``, primes ascending."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    """Arithmetic Moebius function."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n``, ascending."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def torsion_count(N: int, t: int) -> int:
    """Number of elements of exact order ``t`` in ``(Z/t)^N``.

    This is ``sum_{d | t} mu(t/d) d^N``.
    """
    if t < 1 or N < 0:
        raise ValueError("torsion_count needs t >= 1 and N >= 0")
    return sum(mobius(t // d) * d**N for d in divisors(t))


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Laurent polynomial in one variable with exact rational coefficients.

    Coefficients are ``int`` wherever possible; ``Fraction`` only appears
    while an intermediate sum still carries denominators.  Instances are
    immutable and hash by content.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: dict[int, Scalar] = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = _norm(v)
        self._c = c
        self._hash: int | None = None

    # constructors
    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def var(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar], shift: int = 0) -> "LaurentPoly":
        """``coeffs[i]`` is the coefficient of ``q^(i + shift)``."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    # inspection
    @property
    def coeffs(self) -> dict[int, Scalar]:
        return dict(self._c)

    def items(self) -> list[tuple[int, Scalar]]:
        """(exponent, coefficient) pairs, exponent descending."""
        return sorted(self._c.items(), reverse=True)

    def __getitem__(self, e: int) -> Scalar:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    @property
    def leading_coeff(self) -> Scalar:
        return self._c[self.degree]

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def is_polynomial(self) -> bool:
        return not self._c or self.valuation >= 0

    def is_monic(self) -> bool:
        return bool(self._c) and self.leading_coeff == 1

    def is_palindromic(self) -> bool:
        """Coefficients read the same from both ends (about the midpoint of
        valuation and degree)."""
        if not self._c:
            return True
        lo, hi = self.valuation, self.degree
        return all(self._c.get(lo + hi - e, 0) == v for e, v in self._c.items())

    # arithmetic
    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other) -> "LaurentPoly":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, Scalar] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                k = e1 + e2
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._c) == 1:
                ((e, v),) = self._c.items()
                return LaurentPoly({e * k: Fraction(1, 1) / Fraction(v) ** (-k)})
            raise ValueError("negative powers only for monomials")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division by ``divisor``, returning ``(quotient, remainder)``.

        The divisor's power of ``q`` is split off and negative powers of the
        dividend are cleared first, so for ordinary polynomials this is the
        usual division with ``deg(remainder) < deg(divisor)``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        dv = divisor.valuation
        dd = divisor.degree - dv
        lead = divisor.leading_coeff
        sv = min(self.valuation, 0)
        rem = {e - sv: v for e, v in self._c.items()}
        dvec = {e - dv: v for e, v in divisor._c.items()}
        quot: dict[int, Scalar] = {}
        top = max(rem)
        for k in range(top, dd - 1, -1):
            v = rem.get(k, 0)
            if not v:
                continue
            if isinstance(v, int) and isinstance(lead, int) and v % lead == 0:
                qc = v // lead
            else:
                qc = _norm(Fraction(v) / lead)
            quot[k - dd] = qc
            for e, c in dvec.items():
                j = k - dd + e
                rem[j] = rem.get(j, 0) - qc * c
                if not rem[j]:
                    del rem[j]
        q = LaurentPoly(quot).shift(sv - dv)
        r = LaurentPoly(rem).shift(sv)
        return q, r

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient of an exact division; raises if the remainder is nonzero."""
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"division not exact: remainder {r}")
        return q

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate at an exact integer or rational point."""
        if not self._c:
            return 0
        if self.valuation < 0:
            x = Fraction(x)
            if not x:
                raise ZeroDivisionError("Laurent polynomial evaluated at 0")
        lo = self.valuation
        acc: Scalar = 0
        for e in range(self.degree, lo - 1, -1):
            acc = acc * x + self._c.get(e, 0)
        return _norm(acc * (Fraction(x) ** lo if lo < 0 else x**lo))

    def reverse(self, d: int | None = None) -> "LaurentPoly":
        """``q^d * P(1/q)``; ``d`` defaults to valuation + degree."""
        if not self._c:
            return LaurentPoly()
        if d is None:
            d = self.valuation + self.degree
        return LaurentPoly({d - e: v for e, v in self._c.items()})

    def as_integral(self) -> "LaurentPoly":
        """Return self after checking every coefficient is an integer."""
        if not self.is_integral():
            bad = {e: v for e, v in self._c.items() if not isinstance(v, int)}
            raise ArithmeticError(f"non-integral coefficients: {bad}")
        return self

    # rendering
    def to_plain(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (e, v) in enumerate(self.items()):
            sign = "-" if v < 0 else "+"
            a = -v if v < 0 else v
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_latex(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (e, v) in enumerate(self.items()):
            sign = "-" if v < 0 else "+"
            a = -v if v < 0 else v
            if isinstance(a, Fraction):
                coef = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            else:
                coef = str(a)
            if e == 0:
                body = coef
            else:
                mono = var if e == 1 else f"{var}^{{{e}}}"
                body = mono if a == 1 else f"{coef}{mono}"
            parts.append((("-" if sign == "-" else "") if i == 0 else f" {sign} ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_plain()})"

    __str__ = to_plain


Q = LaurentPoly.var()
ONE = LaurentPoly.const(1)


def gl_order(n: int) -> LaurentPoly:
    """``|Gl_n(F_q)| = q^(n choose 2) prod_{i=1..n} (q^i - 1)``."""
    out = Q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out = out * (Q**i - 1)
    return out


def sl_order(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q**i - 1
    return out


def pgl_order(n: int, q: int) -> int:
    """``|PGl_n(F_q)|``, which equals ``|Sl_n(F_q)|`` as a number."""
    return gl_order(n)(q) // (q - 1)


# ---------------------------------------------------------------------------
# cyclotomic integers


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of the N-th cyclotomic polynomial, constant term first."""
    num = LaurentPoly({N: 1, 0: -1})
    for d in divisors(N)[:-1]:
        num = num.exact_div(LaurentPoly.from_list(cyclotomic_poly(d)))
    deg = num.degree
    return tuple(int(num[e]) for e in range(deg + 1))


def _reduce_mod_cyclotomic(vec: list[int], N: int) -> tuple[int, ...]:
    phi = cyclotomic_poly(N)
    dphi = len(phi) - 1
    v = list(vec)
    for k in range(len(v) - 1, dphi - 1, -1):
        c = v[k]
        if c:
            # phi is monic
            for i, pc in enumerate(phi):
                v[k - dphi + i] -= c * pc
    out = v[:dphi] + [0] * max(0, dphi - len(v))
    return tuple(out)


class CycloInt:
    """Element of ``Z[zeta_N]`` stored as its reduced coefficient vector
    (degree below ``phi(N)``) in powers of ``zeta_N = exp(2 pi i / N)``."""

    __slots__ = ("N", "vec")

    def __init__(self, N: int, vec: tuple[int, ...]):
        self.N = N
        self.vec = vec

    @classmethod
    def from_exponent_counts(cls, N: int, counts: Mapping[int, int] | Iterable[int]) -> "CycloInt":
        """``sum_k counts[k] * zeta_N^k``; exponents taken mod N."""
        full = [0] * N
        items = counts.items() if isinstance(counts, Mapping) else enumerate(counts)
        for k, c in items:
            full[k % N] += c
        return cls(N, _reduce_mod_cyclotomic(full, N))

    @classmethod
    def root(cls, N: int, k: int = 1) -> "CycloInt":
        return cls.from_exponent_counts(N, {k % N: 1})

    @classmethod
    def integer(cls, N: int, a: int) -> "CycloInt":
        return cls.from_exponent_counts(N, {0: a})

    def _check(self, other: "CycloInt") -> None:
        if other.N != self.N:
            raise ValueError(f"mixing orders {self.N} and {other.N}")

    def __add__(self, other) -> "CycloInt":
        if isinstance(other, int):
            other = CycloInt.integer(self.N, other)
        self._check(other)
        return CycloInt(self.N, tuple(a + b for a, b in zip(self.vec, other.vec)))

    __radd__ = __add__

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.N, tuple(-a for a in self.vec))

    def __sub__(self, other) -> "CycloInt":
        return self + (-other if isinstance(other, CycloInt) else -other)

    def __mul__(self, other) -> "CycloInt":
        if isinstance(other, int):
            return CycloInt(self.N, tuple(a * other for a in self.vec))
        self._check(other)
        full = [0] * (2 * len(self.vec))
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    full[i + j] += a * b
        return CycloInt(self.N, _reduce_mod_cyclotomic(full, self.N))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycloInt":
        out = CycloInt.integer(self.N, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloInt.integer(self.N, other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.N == other.N and self.vec == other.vec

    def __hash__(self) -> int:
        return hash((self.N, self.vec))

    def is_rational(self) -> bool:
        return not any(self.vec[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ArithmeticError(f"{self} is not a rational integer")
        return self.vec[0] if self.vec else 0

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self.vec) if c]
        return f"CycloInt[{self.N}](" + (" + ".join(terms) or "0") + ")"


def as_fraction(x) -> Fraction:
    """Coerce an exact scalar (int, Fraction or rational CycloInt)."""
    if isinstance(x, CycloInt):
        return Fraction(x.to_int())
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")
