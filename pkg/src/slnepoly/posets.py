"""Finite posets, their Moebius functions, and the set-partition lattice.

Moebius values come from inverting the zeta matrix by exact integer
back-substitution along a linear extension.  Partitions of a set are
ordered by reversed refinement: the finer partition is the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Hashable, Sequence

import numpy as np

from .exactmath import mobius as arith_mobius

_AXIOM_CHECK_LIMIT = 400


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """Elements plus a boolean matrix ``leq[i, j]`` meaning ``elements[i] <= elements[j]``."""

    elements: tuple
    leq: np.ndarray = field(repr=False)

    def __post_init__(self):
        L = np.asarray(self.leq, dtype=bool)
        P = len(self.elements)
        if L.shape != (P, P):
            raise ValueError("leq must be |P| x |P|")
        object.__setattr__(self, "leq", L)
        if P <= _AXIOM_CHECK_LIMIT:
            if not L.diagonal().all():
                raise ValueError("not reflexive")
            if (L & L.T & ~np.eye(P, dtype=bool)).any():
                raise ValueError("not antisymmetric")
            Li = L.astype(np.int64)
            if ((Li @ Li > 0) & ~L).any():
                raise ValueError("not transitive")

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable], leq) -> "FinitePoset":
        els = tuple(elements)
        M = np.array([[bool(leq(a, b)) for b in els] for a in els], dtype=bool)
        return cls(els, M)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def linear_extension(self) -> np.ndarray:
        """Indices sorted so that ``a < b`` implies ``a`` comes first."""
        # the number of elements below is strictly monotone along <
        return np.argsort(self.leq.sum(axis=0), kind="stable")

    def bottom(self) -> int:
        cand = np.flatnonzero(self.leq.all(axis=1))
        if len(cand) != 1:
            raise ValueError("poset has no least element")
        return int(cand[0])

    def top(self) -> int:
        cand = np.flatnonzero(self.leq.all(axis=0))
        if len(cand) != 1:
            raise ValueError("poset has no greatest element")
        return int(cand[0])

    def zeta_matrix(self) -> np.ndarray:
        return self.leq.astype(np.int64)


def mobius_row(p: FinitePoset, a: int) -> np.ndarray:
    """Row ``a`` of the inverse zeta matrix: ``mu(a, b)`` for all ``b``.

    Uses ``mu(a, a) = 1`` and ``mu(a, b) = -sum_{a <= c < b} mu(a, c)``.
    """
    L = p.leq
    mu = np.zeros(len(p), dtype=np.int64)
    up = L[a]
    order = [int(i) for i in p.linear_extension if up[i]]
    mu[a] = 1
    seen = np.zeros(len(p), dtype=bool)
    seen[a] = True
    for b in order:
        if b == a:
            continue
        below = L[:, b] & seen
        mu[b] = -int(mu[below].sum())
        seen[b] = True
    return mu


def mobius_matrix(p: FinitePoset) -> np.ndarray:
    """The full inverse of the zeta matrix, exact in int64."""
    return np.vstack([mobius_row(p, a) for a in range(len(p))])


def mobius_value(p: FinitePoset, a, b) -> int:
    ia = p.index[a] if not isinstance(a, (int, np.integer)) else int(a)
    ib = p.index[b] if not isinstance(b, (int, np.integer)) else int(b)
    return int(mobius_row(p, ia)[ib])


def divisor_poset(N: int) -> FinitePoset:
    from .exactmath import divisors

    return FinitePoset.from_relation(divisors(N), lambda a, b: b % a == 0)


# ---------------------------------------------------------------------------
# set partitions


@dataclass(frozen=True, order=True)
class SetPartition:
    """Blocks of a partition of ``{0, ..., N-1}``, each sorted, ordered by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks) -> "SetPartition":
        bl = sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0])
        return cls(tuple(bl))

    @property
    def N(self) -> int:
        return sum(len(b) for b in self.blocks)

    def labels(self) -> tuple[int, ...]:
        lab = [0] * self.N
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x] = k
        return tuple(lab)

    def block_type(self) -> dict[int, int]:
        """``{block size: count}``."""
        out: dict[int, int] = {}
        for b in self.blocks:
            out[len(b)] = out.get(len(b), 0) + 1
        return out

    def __str__(self) -> str:
        return "|".join("".join(str(x + 1) for x in b) for b in self.blocks)


def set_partitions(N: int) -> list[SetPartition]:
    """All set partitions of ``{0..N-1}`` via restricted growth strings."""
    out = []

    def rec(i: int, rgs: list, k: int):
        if i == N:
            blocks = [[] for _ in range(k)]
            for x, b in enumerate(rgs):
                blocks[b].append(x)
            out.append(SetPartition(tuple(tuple(b) for b in blocks)))
            return
        for b in range(k + 1):
            rgs.append(b)
            rec(i + 1, rgs, max(k, b + 1))
            rgs.pop()

    if N == 0:
        return [SetPartition(())]
    rec(0, [], 0)
    return out


def refinement_leq(nu: SetPartition, pi: SetPartition) -> bool:
    """``nu <= pi`` iff every block of ``nu`` sits inside a block of ``pi``."""
    lab = pi.labels()
    return all(len({lab[x] for x in b}) == 1 for b in nu.blocks)


def _refinement_matrix(parts: Sequence[SetPartition]) -> np.ndarray:
    labels = np.array([p.labels() for p in parts], dtype=np.int64)
    # representative (block minimum) of each point, per partition
    reps = np.array([[p.blocks[k][0] for k in p.labels()] for p in parts], dtype=np.int64)
    P = len(parts)
    M = np.zeros((P, P), dtype=bool)
    for i in range(P):
        # nu_i <= pi_j iff pi_j's label is constant on nu_i's blocks
        M[i] = (labels[:, reps[i]] == labels).all(axis=1)
    return M


def partition_lattice(N: int) -> FinitePoset:
    parts = set_partitions(N)
    return FinitePoset(tuple(parts), _refinement_matrix(parts))


def mobius_partition_lattice(nu: SetPartition, pi: SetPartition) -> int:
    """Closed form ``(-1)^(s-r) prod_i ((i-1)!)^(r_i)`` on ``[nu, pi]``.

    ``s``, ``r`` are block counts of ``nu``, ``pi``; ``r_i`` counts blocks of
    ``pi`` that are unions of exactly ``i`` blocks of ``nu``.
    """
    if not refinement_leq(nu, pi):
        return 0
    lab = pi.labels()
    merged: dict[int, int] = {}
    for b in nu.blocks:
        merged[lab[b[0]]] = merged.get(lab[b[0]], 0) + 1
    s, r = len(nu.blocks), len(pi.blocks)
    out = -1 if (s - r) % 2 else 1
    for i in merged.values():
        out *= factorial(i - 1)
    return out


def _apply_perm(rho: Sequence[int], p: SetPartition) -> SetPartition:
    return SetPartition.from_blocks([[rho[x] for x in b] for b in p.blocks])


def fixed_subposet(N: int, rho: Sequence[int]) -> FinitePoset:
    """Partitions of ``{0..N-1}`` fixed by the permutation ``rho`` (as a map ``x -> rho[x]``)."""
    rho = tuple(rho)
    if sorted(rho) != list(range(N)):
        raise ValueError(f"not a permutation of range({N}): {rho}")
    parts = [p for p in set_partitions(N) if _apply_perm(rho, p) == p]
    return FinitePoset(tuple(parts), _refinement_matrix(parts))


def cycle_permutation(d: int, m: int) -> tuple[int, ...]:
    """Product of ``m`` disjoint ``d``-cycles on ``{0..dm-1}``."""
    return tuple(k * d + (i + 1) % d for k in range(m) for i in range(d))


def permutation_from_cycles(cycle_lengths: Sequence[int]) -> tuple[int, ...]:
    out, start = [], 0
    for c in cycle_lengths:
        out.extend(start + (i + 1) % c for i in range(c))
        start += c
    return tuple(out)


def hanlon_mu(d: int, m: int) -> int:
    """Closed form of ``mu(0, 1)`` on the lattice of partitions fixed by ``m``
    disjoint ``d``-cycles: ``mu(d) (-d)^(m-1) (m-1)!``."""
    return arith_mobius(d) * (-d) ** (m - 1) * factorial(m - 1)


def fixed_lattice_mu(rho: Sequence[int]) -> int:
    """``mu(0, 1)`` of the rho-fixed partition lattice, by inverting its zeta matrix."""
    p = fixed_subposet(len(rho), rho)
    return int(mobius_row(p, p.bottom())[p.top()])
