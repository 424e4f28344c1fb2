"""Brute-force point counts over finite fields.

Everything here is an oracle for the polynomial side: it enumerates
``Sl_n(F_q)`` explicitly and counts tuples ``(A_1, B_1, ..., A_g, B_g)``
whose product of commutators equals a central element ``z``.

Three routes are available and are meant to agree:

* ``commutator_fiber_count``: for each ``A`` the equation ``AB = zBA`` is
  linear in ``B``; solve it over ``F_q``, enumerate the kernel and keep
  the ``det B = 1`` solutions.  The count only depends on the conjugacy
  class of ``A``, so it is done once per class representative.
* ``genus_count``: convolve the commutator distribution ``g`` times in the
  class algebra.
* ``frobenius_from_table``: the character-sum formula, fed with the
  central values of the irreducible characters of ``Sl_2(F_q)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .exactmath import CycloInt, as_fraction, factorize, pgl_order, sl_order

KERNEL_BUDGET = 10**6
GROUP_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""


# ---------------------------------------------------------------------------
# finite fields


def _poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(len(prod) - 1, k - 1, -1):
        c = prod[top]
        if c:
            for i, m in enumerate(modulus):
                prod[top - k + i] = (prod[top - k + i] - c * m) % p
    return (prod + [0] * k)[:k]


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _irreducible_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k in order of the integer encoding
    of its lower coefficients; low degree first."""
    if k == 1:
        return (0, 1)
    for code in range(1, p**k):
        low = _digits(code, p, k)
        poly = tuple(low) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise ArithmeticError(f"no irreducible polynomial of degree {k} over F_{p}")


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    # trial division by every monic polynomial of degree <= k/2
    k = len(poly) - 1
    for dk in range(1, k // 2 + 1):
        for code in range(p**dk):
            cand = _digits(code, p, dk) + [1]
            if _poly_divides(cand, list(poly), p):
                return False
    return True


def _poly_divides(d: list[int], f: list[int], p: int) -> bool:
    f = list(f)
    dk = len(d) - 1
    for top in range(len(f) - 1, dk - 1, -1):
        c = f[top]
        if c:
            for i, m in enumerate(d):
                f[top - dk + i] = (f[top - dk + i] - c * m) % p
    return not any(f[:dk])


@dataclass(frozen=True, eq=False)
class FqField:
    """``F_q`` with ``q = p^k``.  Elements are integers ``0..q-1`` whose base-p
    digits are polynomial coefficients modulo ``modulus``; 0 and 1 are the
    usual constants."""

    p: int
    k: int
    modulus: tuple[int, ...]
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)
    generator: int

    @property
    def q(self) -> int:
        return self.p**self.k

    @cached_property
    def add_flat(self) -> np.ndarray:
        return self.add.reshape(-1)

    @cached_property
    def mul_flat(self) -> np.ndarray:
        return self.mul.reshape(-1)

    @cached_property
    def add_list(self) -> list[list[int]]:
        return self.add.tolist()

    @cached_property
    def mul_list(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """``1, x, ..., x^(k-1)`` as an F_p basis."""
        return tuple(self.p**i for i in range(self.k))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        out = 1
        for _ in range(e % (self.q - 1)):
            out = int(self.mul[out, a])
        return out

    def root_of_unity(self, n: int, j: int = 1) -> int:
        """``zeta_n^j`` where ``zeta_n = generator^((q-1)/n)``."""
        if (self.q - 1) % n:
            raise ValueError(f"F_{self.q} has no primitive {n}-th root of unity")
        return self.power(self.generator, ((self.q - 1) // n) * j)

    def vadd(self, a, b):
        return self.add_flat[a.astype(np.int32) * self.q + b]

    def vmul(self, a, b):
        return self.mul_flat[a.astype(np.int32) * self.q + b]

    def vneg(self, a):
        return self.neg[a]


@lru_cache(maxsize=None)
def gf(q: int) -> FqField:
    """Build ``F_q`` with addition, multiplication and inverse tables."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, k),) = fac
    if q > 512:
        raise ValueError("field tables are limited to q <= 512")
    modulus = _irreducible_modulus(p, k)
    digs = [_digits(x, p, k) for x in range(q)]
    enc = lambda ds: sum(d * p**i for i, d in enumerate(ds))  # noqa: E731
    add = np.array([[enc([(a + b) % p for a, b in zip(digs[x], digs[y])]) for y in range(q)] for x in range(q)])
    mul = np.array([[enc(_poly_mulmod(digs[x], digs[y], modulus, p)) for y in range(q)] for x in range(q)])
    neg = np.array([enc([(-a) % p for a in digs[x]]) for x in range(q)])
    inv = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inv[x] = int(np.flatnonzero(mul[x] == 1)[0])
    gen = None
    for cand in range(1, q):
        y, order = cand, 1
        while y != 1:
            y = int(mul[y, cand])
            order += 1
        if order == q - 1:
            gen = cand
            break
    dt = np.uint8 if q <= 256 else np.uint16
    return FqField(p, k, modulus, add.astype(dt), mul.astype(dt), neg.astype(dt), inv.astype(dt), gen)


# ---------------------------------------------------------------------------
# vectorised matrix arithmetic over F_q, on arrays shaped (..., n, n)


def _perm_sign(perm) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def batch_det(f: FqField, X: np.ndarray) -> np.ndarray:
    """Determinants by the Leibniz formula; fine for n <= 3."""
    n = X.shape[-1]
    total = None
    for perm in itertools.permutations(range(n)):
        term = X[..., 0, perm[0]]
        for i in range(1, n):
            term = f.vmul(term, X[..., i, perm[i]])
        if _perm_sign(perm) < 0:
            term = f.vneg(term)
        total = term if total is None else f.vadd(total, term)
    return total


def batch_matmul(f: FqField, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    n = X.shape[-1]
    shape = np.broadcast_shapes(X.shape, Y.shape)
    out = np.empty(shape, dtype=f.add.dtype)
    for i in range(n):
        for j in range(n):
            acc = f.vmul(X[..., i, 0], Y[..., 0, j])
            for k in range(1, n):
                acc = f.vadd(acc, f.vmul(X[..., i, k], Y[..., k, j]))
            out[..., i, j] = acc
    return out


def batch_adjugate(f: FqField, X: np.ndarray) -> np.ndarray:
    n = X.shape[-1]
    out = np.empty_like(X)
    if n == 1:
        out[..., 0, 0] = 1
        return out
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != i]
            cols = [c for c in range(n) if c != j]
            minor = X[..., rows, :][..., :, cols]
            c = batch_det(f, minor)
            if (i + j) % 2:
                c = f.vneg(c)
            out[..., j, i] = c
    return out


def batch_inverse(f: FqField, X: np.ndarray) -> np.ndarray:
    det = batch_det(f, X)
    if (det == 0).any():
        raise ZeroDivisionError("singular matrix")
    adj = batch_adjugate(f, X)
    return f.vmul(adj, f.inv[det][..., None, None])


def encode(f: FqField, X: np.ndarray) -> np.ndarray:
    """Row-major base-q code of each matrix, most significant entry first."""
    n = X.shape[-1]
    flat = X.reshape(X.shape[:-2] + (n * n,)).astype(np.int64)
    code = np.zeros(flat.shape[:-1], dtype=np.int64)
    for i in range(n * n):
        code = code * f.q + flat[..., i]
    return code


def decode(f: FqField, codes: np.ndarray, n: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty(codes.shape + (n * n,), dtype=f.add.dtype)
    c = codes.copy()
    for i in range(n * n - 1, -1, -1):
        out[..., i] = c % f.q
        c //= f.q
    return out.reshape(codes.shape + (n, n))


def _all_vectors(q: int, length: int, dtype) -> np.ndarray:
    """Every vector of F_q^length in lexicographic order, shape (q^length, length)."""
    if length == 0:
        return np.zeros((1, 0), dtype=dtype)
    grids = np.indices((q,) * length, dtype=np.int32).reshape(length, -1).T
    return grids.astype(dtype)


# ---------------------------------------------------------------------------
# the group table


@dataclass(eq=False)
class GroupTable:
    """All elements of ``Sl_n(F_q)`` sorted by code, with conjugacy classes."""

    field: FqField
    n: int
    elements: np.ndarray = field(repr=False)
    codes: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.codes)

    @property
    def q(self) -> int:
        return self.field.q

    def index_of(self, X: np.ndarray) -> np.ndarray:
        c = encode(self.field, X)
        idx = np.searchsorted(self.codes, c)
        idx = np.minimum(idx, len(self.codes) - 1)
        if not (self.codes[idx] == c).all():
            raise KeyError("matrix not in the group")
        return idx

    def identity_index(self) -> int:
        return int(self.index_of(np.eye(self.n, dtype=self.elements.dtype))[()])

    def scalar(self, z: int) -> np.ndarray:
        return (np.eye(self.n, dtype=np.int64) * z).astype(self.elements.dtype)

    def generators(self) -> list[np.ndarray]:
        """Elementary transvections ``I + c E_ij`` with ``c`` an F_p basis element."""
        gens = []
        for i in range(self.n):
            for j in range(self.n):
                if i != j:
                    for c in self.field.basis:
                        g = np.eye(self.n, dtype=self.elements.dtype)
                        g[i, j] = c
                        gens.append(g)
        return gens

    @cached_property
    def _class_data(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        from scipy.sparse import coo_matrix
        from scipy.sparse.csgraph import connected_components

        f, n, X = self.field, self.n, self.elements
        N = self.order
        cols = []
        src = np.arange(N, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for c in f.basis:
                    # Y = (I + c E_ij) X (I - c E_ij): row op then column op
                    Y = X.copy()
                    cc = np.full(N, c, dtype=X.dtype)
                    for col in range(n):
                        Y[:, i, col] = f.vadd(Y[:, i, col], f.vmul(cc, Y[:, j, col]))
                    for row in range(n):
                        Y[:, row, j] = f.vadd(Y[:, row, j], f.vneg(f.vmul(cc, Y[:, row, i])))
                    cols.append(self.index_of(Y).astype(np.int32))
                    del Y
        if not cols:
            cols.append(src.astype(np.int32))
        c = np.concatenate(cols)
        r = np.tile(src.astype(np.int32), len(cols))
        del cols
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(N, N)).tocsr()
        del r, c
        ncomp, labels = connected_components(graph, directed=True, connection="weak")
        # order classes by their smallest member
        first = np.full(ncomp, N, dtype=np.int64)
        np.minimum.at(first, labels, src)
        order = np.argsort(first)
        relabel = np.empty(ncomp, dtype=np.int64)
        relabel[order] = np.arange(ncomp)
        class_of = relabel[labels]
        reps = first[order]
        sizes = np.bincount(class_of, minlength=ncomp)
        return class_of, reps, sizes

    @property
    def class_of(self) -> np.ndarray:
        return self._class_data[0]

    @property
    def class_reps(self) -> np.ndarray:
        return self._class_data[1]

    @property
    def class_sizes(self) -> np.ndarray:
        return self._class_data[2]

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    @cached_property
    def inverse_index(self) -> np.ndarray:
        # det = 1, so the inverse is the adjugate
        return self.index_of(batch_adjugate(self.field, self.elements))

    def class_index(self, X: np.ndarray) -> int:
        return int(self.class_of[self.index_of(X)])

    def is_central(self, z: np.ndarray) -> bool:
        return self.class_sizes[self.class_index(z)] == 1


def enumerate_sln(n: int, q: int, budget: int = GROUP_BUDGET) -> GroupTable:
    """Every matrix of ``Sl_n(F_q)``, in increasing code order."""
    f = gf(q)
    expected = sl_order(n, q)
    if expected > budget:
        raise BudgetExceeded(f"|Sl_{n}({q})| = {expected} exceeds budget {budget}")
    dt = f.add.dtype
    if n == 1:
        X = np.ones((1, 1, 1), dtype=dt)
        return GroupTable(f, 1, X, encode(f, X))
    rest = _all_vectors(q, n * (n - 1), dt).reshape(-1, n - 1, n)
    firsts = _all_vectors(q, n, dt)
    keep = []
    for r in firsts:
        X = np.empty((len(rest), n, n), dtype=dt)
        X[:, 0, :] = r
        X[:, 1:, :] = rest
        ok = batch_det(f, X) == 1
        if ok.any():
            keep.append(X[ok])
    X = np.concatenate(keep)
    if len(X) != expected:
        raise AssertionError(f"enumerated {len(X)} elements, expected {expected}")
    return GroupTable(f, n, X, encode(f, X))


@lru_cache(maxsize=8)
def sln_table(n: int, q: int) -> GroupTable:
    return enumerate_sln(n, q)


# ---------------------------------------------------------------------------
# linear algebra for AB = zBA


def _nullspace(f: FqField, M: list[list[int]]) -> list[list[int]]:
    """Basis of ``{x : M x = 0}`` over F_q by Gauss-Jordan elimination."""
    add, mul, neg, inv = f.add_list, f.mul_list, f.neg.tolist(), f.inv.tolist()
    rows = [list(r) for r in M]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv[rows[r][c]]
        rows[r] = [mul[s][x] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = neg[rows[i][c]]
                ri, rr = rows[i], rows[r]
                rows[i] = [add[a][mul[fac][b]] for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = neg[rows[i][fc]]
        basis.append(v)
    return basis


def twisted_commutation_system(f: FqField, A: np.ndarray, W: np.ndarray) -> list[list[int]]:
    """Matrix of ``B -> A B - W B A`` acting on ``vec(B)`` (row-major)."""
    n = A.shape[0]
    a, w = A.tolist(), W.tolist()
    add, mul, neg = f.add_list, f.mul_list, f.neg.tolist()
    M = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            row = M[i * n + j]
            # (AB)_ij = sum_k a_ik b_kj
            for k in range(n):
                row[k * n + j] = add[row[k * n + j]][a[i][k]]
            # (WBA)_ij = sum_{k,l} w_ik b_kl a_lj
            for k in range(n):
                for l in range(n):
                    c = mul[w[i][k]][a[l][j]]
                    if c:
                        row[k * n + l] = add[row[k * n + l]][neg[c]]
    return M


def kernel_det_one_count(f: FqField, A: np.ndarray, W: np.ndarray, budget: int = KERNEL_BUDGET) -> int:
    """``#{B : AB = WBA, det B = 1}``: solve the linear system, enumerate its kernel."""
    n = A.shape[0]
    basis = _nullspace(f, twisted_commutation_system(f, A, W))
    k = len(basis)
    if k == 0:
        return 0
    if f.q**k > budget:
        raise BudgetExceeded(f"kernel of dimension {k} has {f.q**k} vectors")
    coeffs = _all_vectors(f.q, k, np.int32)
    Bv = np.zeros((len(coeffs), n * n), dtype=f.add.dtype)
    for i, b in enumerate(basis):
        bb = np.array(b, dtype=np.int32)
        Bv = f.vadd(Bv, f.vmul(coeffs[:, i : i + 1], bb[None, :]))
    return int((batch_det(f, Bv.reshape(-1, n, n)) == 1).sum())


def _scalar_value(gt: GroupTable, z: np.ndarray | int) -> tuple[np.ndarray, int]:
    if isinstance(z, (int, np.integer)):
        zm = gt.scalar(int(z))
    else:
        zm = np.asarray(z, dtype=gt.elements.dtype)
    zval = int(zm[0, 0])
    if not (zm == gt.scalar(zval)).all() or not gt.is_central(zm):
        raise ValueError("z must be a central (scalar) element of the group")
    return zm, zval


def commutator_fiber_count(gt: GroupTable, z, per_element: bool = False, budget: int = KERNEL_BUDGET) -> int:
    """``#{(A, B) in Sl_n^2 : A B A^-1 B^-1 = z}`` for central ``z``.

    ``per_element`` solves the linear system for every ``A`` instead of one
    representative per conjugacy class.
    """
    zm, _ = _scalar_value(gt, z)
    f = gt.field
    if per_element:
        return sum(kernel_det_one_count(f, A, zm, budget) for A in gt.elements)
    total = 0
    for rep, size in zip(gt.class_reps, gt.class_sizes):
        total += int(size) * kernel_det_one_count(f, gt.elements[rep], zm, budget)
    return total


def commutator_distribution(gt: GroupTable, budget: int = KERNEL_BUDGET) -> np.ndarray:
    """``f(w) = #{(A, B) : [A, B] = w}`` for each class representative ``w``
    (indexed like ``gt.class_reps``).  Python ints in an object array."""
    f = gt.field
    out = np.zeros(gt.num_classes, dtype=object)
    for c, rep in enumerate(gt.class_reps):
        W = gt.elements[rep]
        out[c] = sum(kernel_det_one_count(f, A, W, budget) for A in gt.elements)
    return out


@lru_cache(maxsize=16)
def _structure_counts(gt: GroupTable) -> np.ndarray:
    """``T[z, a, b] = #{w in class a : w^-1 z_rep in class b}``."""
    C = gt.num_classes
    T = np.zeros((C, C, C), dtype=np.int64)
    inv = gt.elements[gt.inverse_index]
    for zc, zrep in enumerate(gt.class_reps):
        prod = batch_matmul(gt.field, inv, gt.elements[zrep][None, :, :])
        b = gt.class_of[gt.index_of(prod)]
        np.add.at(T[zc], (gt.class_of, b), 1)
    return T


def genus_count(gt: GroupTable, g: int, z, dist: np.ndarray | None = None) -> int:
    """Number of ``2g``-tuples with ``prod [A_i, B_i] = z``.

    ``g = 1`` is the fiber count; larger ``g`` convolves the commutator
    distribution, ``(f * h)(z) = sum_w f(w) h(w^-1 z)``.
    """
    zm, zval = _scalar_value(gt, z)
    if g < 1:
        raise ValueError("g must be at least 1")
    if g == 1:
        return commutator_fiber_count(gt, zval)
    fdist = commutator_distribution(gt) if dist is None else dist
    T = _structure_counts(gt)
    C = gt.num_classes
    cur = list(fdist)
    for _ in range(g - 1):
        nxt = []
        for zc in range(C):
            acc = 0
            Tz = T[zc]
            for a in range(C):
                row = Tz[a]
                s = sum(int(row[b]) * cur[b] for b in range(C) if row[b])
                acc += fdist[a] * s
            nxt.append(acc)
        cur = nxt
    return int(cur[gt.class_index(zm)])


# ---------------------------------------------------------------------------
# character-sum side


@dataclass(frozen=True)
class CentralEntry:
    degree: int
    value: int | Fraction | CycloInt


def sl2_central_table(q: int) -> list[CentralEntry]:
    """Values ``(chi(1), chi(-I))`` of the irreducible characters of ``Sl_2(F_q)``, q odd."""
    if q % 2 == 0 or q < 3:
        raise ValueError("q must be odd")
    out = []
    for i in range(1, (q - 3) // 2 + 1):
        out.append(CentralEntry(q + 1, (q + 1) * (-1) ** i))
    for _ in range(2):
        out.append(CentralEntry((q + 1) // 2, (q + 1) // 2 * (-1) ** ((q - 1) // 2)))
    for i in range(1, (q - 1) // 2 + 1):
        out.append(CentralEntry(q - 1, (q - 1) * (-1) ** i))
    for _ in range(2):
        out.append(CentralEntry((q - 1) // 2, (q - 1) // 2 * (-1) ** ((q + 1) // 2)))
    out.append(CentralEntry(1, 1))
    out.append(CentralEntry(q, q))
    return out


def frobenius_from_table(entries, group_order: int, g: int, at_identity: bool = False) -> int:
    """``sum_chi chi(z) (|G| / chi(1))^(2g-1)``; ``at_identity`` uses ``chi(1)`` for ``chi(z)``."""
    total = Fraction(0)
    for e in entries:
        val = e.degree if at_identity else as_fraction(e.value)
        total += Fraction(val) * Fraction(group_order, e.degree) ** (2 * g - 1)
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"character sum is not a non-negative integer: {total}")
    return int(total)


# ---------------------------------------------------------------------------
# PGl action on genus-one solutions


def genus_one_solutions(gt: GroupTable, z) -> np.ndarray:
    """All pairs ``(A, B)`` with ``AB = zBA`` as an array of shape (N, 2, n, n)."""
    _, zval = _scalar_value(gt, z)
    sols = []
    X = gt.elements
    f = gt.field
    for A in X:
        AB = batch_matmul(f, A[None], X)
        zBA = f.vmul(np.full(AB.shape, zval, dtype=AB.dtype), batch_matmul(f, X, A[None]))
        hit = (AB == zBA).all(axis=(1, 2))
        for B in X[hit]:
            sols.append((A, B))
    return np.array(sols, dtype=X.dtype).reshape(-1, 2, gt.n, gt.n)


def pgl_representatives(f: FqField, n: int) -> np.ndarray:
    """One matrix per class of ``Gl_n(F_q)`` modulo scalars: first nonzero entry is 1."""
    allm = _all_vectors(f.q, n * n, f.add.dtype).reshape(-1, n, n)
    det = batch_det(f, allm)
    allm = allm[det != 0]
    flat = allm.reshape(len(allm), -1)
    first = flat[np.arange(len(flat)), (flat != 0).argmax(axis=1)]
    return allm[first == 1]


def stabilizer_sizes(gt: GroupTable, sols: np.ndarray) -> np.ndarray:
    """For each solution, the number of PGl elements fixing both matrices."""
    f = gt.field
    P = pgl_representatives(f, gt.n)
    Pinv = batch_inverse(f, P)
    out = np.zeros(len(sols), dtype=np.int64)
    for s, (A, B) in enumerate(sols):
        cA = batch_matmul(f, batch_matmul(f, P, A[None]), Pinv)
        cB = batch_matmul(f, batch_matmul(f, P, B[None]), Pinv)
        out[s] = int(((cA == A).all(axis=(1, 2)) & (cB == B).all(axis=(1, 2))).sum())
    return out


@dataclass(frozen=True)
class BruteResult:
    n: int
    q: int
    g: int
    count: int
    pgl_order: int

    @property
    def quotient(self) -> Fraction:
        return Fraction(self.count, self.pgl_order)


def brute_point_count(n: int, q: int, g: int, z_power: int = 1) -> BruteResult:
    """Count ``2g``-tuples over ``Sl_n(F_q)`` with product of commutators ``zeta_n^j I``."""
    gt = sln_table(n, q)
    z = gt.field.root_of_unity(n, z_power)
    count = genus_count(gt, g, z)
    return BruteResult(n, q, g, count, pgl_order(n, q))


def twist_is_primitive(n: int, j: int) -> bool:
    return gcd(j, n) == 1
