"""Types of irreducible characters of Gl_n(F_q).

A pure type of degree ``d`` records, for each partition ``lam``, how many
Frobenius orbits of degree ``d`` carry ``lam``.  General types glue pure
types of distinct degrees; they are only needed to exercise the vanishing
statements for non-pure characters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exactmath import LaurentPoly, Q, divisors
from .partitions import Partition, conjugate, hook_poly, n_stat, partitions_of


def _support_key(lam: Partition):
    return (-lam.size, lam.parts)


@dataclass(frozen=True)
class PureType:
    d: int
    mults: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be positive")
        merged: dict[Partition, int] = {}
        for lam, m in self.mults:
            if not isinstance(lam, Partition):
                lam = Partition(tuple(lam))
            if m < 0 or lam.size == 0:
                raise ValueError(f"bad multiplicity entry ({lam}, {m})")
            if m:
                merged[lam] = merged.get(lam, 0) + m
        if not merged:
            raise ValueError("a type needs non-empty support")
        object.__setattr__(self, "mults", tuple(sorted(merged.items(), key=lambda kv: _support_key(kv[0]))))

    @classmethod
    def make(cls, d: int, mults: dict | list) -> "PureType":
        items = mults.items() if isinstance(mults, dict) else mults
        return cls(d, tuple((lam if isinstance(lam, Partition) else Partition(tuple(lam)), m) for lam, m in items))

    @property
    def n(self) -> int:
        return self.d * sum(m * lam.size for lam, m in self.mults)

    @property
    def m(self) -> int:
        """Number of Frobenius orbits in the support."""
        return sum(m for _, m in self.mults)

    def to_json(self) -> dict:
        return {"d": self.d, "mults": [[list(lam.parts), m] for lam, m in self.mults]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict | str) -> "PureType":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.make(int(obj["d"]), [(tuple(p), int(m)) for p, m in obj["mults"]])

    def __str__(self) -> str:
        inner = ", ".join(f"{lam}^{m}" if m > 1 else str(lam) for lam, m in self.mults)
        return f"[d={self.d}: {inner}]"


@dataclass(frozen=True)
class CharType:
    """Type with possibly several degrees; components have distinct degrees."""

    components: tuple[PureType, ...]

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda t: t.d))
        ds = [t.d for t in comps]
        if len(set(ds)) != len(ds):
            raise ValueError("components must have distinct degrees")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return sum(t.n for t in self.components)

    @property
    def is_pure(self) -> bool:
        return len(self.components) == 1

    def terms(self):
        """Yield (d, lam, m)."""
        for t in self.components:
            for lam, m in t.mults:
                yield t.d, lam, m

    def __str__(self) -> str:
        return " + ".join(map(str, self.components))


def as_char_type(tau: PureType | CharType) -> CharType:
    return tau if isinstance(tau, CharType) else CharType((tau,))


def type_size(tau: PureType | CharType) -> int:
    return tau.n


@lru_cache(maxsize=None)
def _multisets(total: int) -> tuple[tuple[tuple[Partition, int], ...], ...]:
    """Multisets of partitions with sizes adding to ``total``."""
    pool = [lam for k in range(total, 0, -1) for lam in partitions_of(k)]
    out = []

    def rec(i: int, left: int, acc: list):
        if left == 0:
            out.append(tuple(acc))
            return
        if i == len(pool):
            return
        lam = pool[i]
        for m in range(left // lam.size, -1, -1):
            if m:
                acc.append((lam, m))
            rec(i + 1, left - m * lam.size, acc)
            if m:
                acc.pop()

    rec(0, total, [])
    return tuple(out)


def enumerate_pure_types(n: int) -> list[PureType]:
    """All pure types of size ``n``: degree ``d | n`` and a multiset of
    partitions of total size ``n / d``."""
    if n < 1:
        raise ValueError("n must be positive")
    return [PureType(d, ms) for d in divisors(n) for ms in _multisets(n // d)]


def enumerate_types(n: int) -> list[CharType]:
    """All types of size ``n``, pure or not."""
    out: list[CharType] = []

    def rec(min_d: int, left: int, acc: list):
        if left == 0:
            out.append(CharType(tuple(acc)))
            return
        for d in range(min_d, left + 1):
            for k in range(left // d, 0, -1):
                for ms in _multisets(k):
                    acc.append(PureType(d, ms))
                    rec(d + 1, left - d * k, acc)
                    acc.pop()

    rec(1, n, [])
    return out


def degree_quotient(tau: PureType | CharType) -> LaurentPoly:
    """``|Gl_n(F_q)| / chi(1)`` for a character of type ``tau``.

    Equals ``q^(C(n,2) - sum d m_lam n(lam')) * prod hook_poly(lam, d)^m_lam``.
    """
    ct = as_char_type(tau)
    n = ct.n
    e = comb(n, 2)
    out = LaurentPoly.const(1)
    for d, lam, m in ct.terms():
        e -= d * m * n_stat(conjugate(lam))
        out = out * hook_poly(lam, d) ** m
    if e < 0:
        raise ArithmeticError("negative q-power in degree quotient")
    return out * Q**e


def quotient_type(tau: PureType, t_d: int, t_m: int) -> PureType | None:
    """``tau / (t_d, t_m)``: degree ``d / t_d`` and multiplicities ``m / t_m``.

    Returns ``None`` when ``t_d`` does not divide ``d`` or ``t_m`` misses
    some multiplicity.
    """
    if tau.d % t_d or any(m % t_m for _, m in tau.mults):
        return None
    return PureType(tau.d // t_d, tuple((lam, m // t_m) for lam, m in tau.mults))
