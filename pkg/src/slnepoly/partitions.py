"""Integer partitions and the hook statistics attached to them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactmath import Q, LaurentPoly


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts. The empty partition is allowed."""

    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive: {p}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"parts must be weakly decreasing: {p}")
        object.__setattr__(self, "parts", p)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def cells(self):
        """Yield (i, j) for every box, 1-based row and column."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(lam: Partition) -> Partition:
    """``lam'_i = #{j : lam_j >= i}``."""
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for x in lam.parts if x >= i) for i in range(1, lam.parts[0] + 1)))


def hook_length(lam: Partition, i: int, j: int) -> int:
    """``h(i, j) = lam_i + lam'_j - i - j + 1`` for a box (i, j) of ``lam``."""
    if not (1 <= i <= len(lam.parts) and 1 <= j <= lam.parts[i - 1]):
        raise ValueError(f"box ({i},{j}) not in {lam}")
    conj = conjugate(lam).parts
    return lam.parts[i - 1] + conj[j - 1] - i - j + 1


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam).parts
    return [lam.parts[i - 1] + conj[j - 1] - i - j + 1 for i, j in lam.cells()]


def n_stat(lam: Partition) -> int:
    """``n(lam) = sum (i-1) lam_i``."""
    return sum(i * x for i, x in enumerate(lam.parts))


def inner_self(lam: Partition) -> int:
    """``<lam, lam> = sum_j (lam'_j)^2``."""
    return sum(x * x for x in conjugate(lam).parts)


def hook_poly(lam: Partition, d: int = 1) -> LaurentPoly:
    """``prod_{boxes} (q^(d h) - 1)``."""
    out = LaurentPoly.const(1)
    for h in hook_lengths(lam):
        out = out * (Q ** (d * h) - 1)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, reverse lexicographic (``(n)`` first)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]
