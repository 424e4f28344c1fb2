"""Brute-force character sums over the dual groups Gamma_D.

``Gamma_D`` is the character group of ``F_{q^D}^*``, cyclic of order
``M = q^D - 1``.  A character is stored as its label ``e`` in ``Z/M``:
with a fixed generator ``x`` of ``F_{q^D}^*`` it sends ``x`` to
``exp(2 pi i e / M)``.  Frobenius acts by ``e -> q e``.  ``delta`` generates
the characters pulled back from ``F_q^*`` through the norm, which is the
label ``M / (q - 1)``; ``delta^s`` with ``s = (q-1)/t`` is the label
``M / t``, so classes modulo ``<delta^s>`` are residues mod ``M / t``.

``zeta_n`` is realised as ``x^(M/n)``, an element of ``F_q``.  A label
evaluates there to ``zeta^(e)`` with ``zeta = exp(2 pi i / n)``; values are
exact :class:`CycloInt` elements of ``Z[zeta_n]``.  Changing
``zeta_power`` picks a different primitive root and must not change any
rational answer.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd

import numpy as np

from .chartypes import CharType, PureType, as_char_type
from .exactmath import CycloInt, divisors, lcm, mobius

ENUM_BUDGET = 5 * 10**6


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GammaContext:
    q: int
    D: int
    t: int
    n: int
    zeta_power: int = 1

    def __post_init__(self):
        if (self.q - 1) % self.n:
            raise ValueError(f"n={self.n} must divide q-1={self.q - 1}")
        if self.n % self.t:
            raise ValueError(f"t={self.t} must divide n={self.n}")
        if self.D < 1:
            raise ValueError("D must be positive")
        if gcd(self.zeta_power, self.n) != 1:
            raise ValueError("zeta_power must be prime to n")

    @property
    def M(self) -> int:
        return self.q**self.D - 1

    @property
    def s(self) -> int:
        return (self.q - 1) // self.t

    @property
    def delta_label(self) -> int:
        return self.M // (self.q - 1)

    @property
    def delta_s_label(self) -> int:
        return self.s * self.delta_label % self.M

    @property
    def sub_modulus(self) -> int:
        """Order of ``Gamma_D / <delta^s>``; the class of ``e`` is ``e mod M/t``."""
        return self.M // self.t

    @property
    def oddity(self) -> bool:
        m = self.n if self.n % 2 else 2 * self.n
        return (self.q - 1) % m == 0

    def with_(self, **kw) -> "GammaContext":
        args = dict(q=self.q, D=self.D, t=self.t, n=self.n, zeta_power=self.zeta_power)
        args.update(kw)
        return GammaContext(**args)

    @cached_property
    def label_degrees(self) -> np.ndarray:
        """Degree of every label ``0..M-1``."""
        e = np.arange(self.M, dtype=np.int64)
        return _least_period(e, self.q, self.M, self.D)

    @cached_property
    def class_newdegrees(self) -> np.ndarray:
        """Newdegree of every class ``0..M/t - 1``."""
        e = np.arange(self.sub_modulus, dtype=np.int64)
        return _least_period(e, self.q, self.sub_modulus, self.D)


def _least_period(e: np.ndarray, q: int, mod: int, D: int) -> np.ndarray:
    out = np.zeros(len(e), dtype=np.int64)
    for r in divisors(D):
        hit = (out == 0) & ((e * ((q**r - 1) % mod)) % mod == 0)
        out[hit] = r
    return out


def char_degree(ctx: GammaContext, e: int) -> int:
    """Least ``r`` with ``e q^r = e`` in ``Z/M``."""
    e %= ctx.M
    for r in range(1, ctx.D + 1):
        if e * (ctx.q**r - 1) % ctx.M == 0:
            return r
    raise AssertionError("unreachable: every label has degree dividing D")


def char_newdegree(ctx: GammaContext, e: int) -> int:
    """Least ``r`` with ``e (q^r - 1) = 0`` modulo ``M / t``."""
    mod = ctx.sub_modulus
    for r in range(1, ctx.D + 1):
        if e * (ctx.q**r - 1) % mod == 0:
            return r
    raise AssertionError("unreachable")


def eval_at_zeta(ctx: GammaContext, e: int, power: int = 1) -> CycloInt:
    """Label ``e`` of ``Gamma_D`` evaluated at ``zeta_n^power``."""
    return CycloInt.root(ctx.n, e * power * ctx.zeta_power)


def _exp_sum(ctx: GammaContext, counts) -> CycloInt:
    return CycloInt.from_exponent_counts(ctx.n, counts)


# ---------------------------------------------------------------------------
# Z sums over tuples of classes


def _frob_orbit_ids(x: np.ndarray, q: int, mod: int, length: int) -> np.ndarray:
    """Minimum over ``x q^r mod mod`` for ``r < length``: a canonical orbit id."""
    best = x % mod
    cur = best.copy()
    for _ in range(1, length):
        cur = cur * q % mod
        best = np.minimum(best, cur)
    return best


def _tuple_sum(ctx: GammaContext, classes: list[np.ndarray], orbit_ids: list[np.ndarray], lam, power: int, budget: int) -> CycloInt:
    """Sum over tuples ``(c_1..c_m)``, ``c_i`` drawn from ``classes[i]``, with
    pairwise distinct orbit ids, of ``zeta^(power * sum lam_i c_i)``."""
    m = len(lam)
    n = ctx.n
    sizes = [len(c) for c in classes]
    total_tuples = 1
    for s in sizes:
        total_tuples *= s
    if total_tuples > budget:
        raise BudgetExceeded(f"{total_tuples} tuples exceed budget {budget}")
    counts = np.zeros(n, dtype=np.int64)
    if m == 0:
        counts[0] = 1
        return _exp_sum(ctx, counts.tolist())
    last_exp = (classes[-1] * (lam[-1] * power * ctx.zeta_power)) % n
    last_ids = orbit_ids[-1]
    for prefix in itertools.product(*[range(s) for s in sizes[:-1]]):
        ids = [int(orbit_ids[i][j]) for i, j in enumerate(prefix)]
        if len(set(ids)) != len(ids):
            continue
        base = sum(int(classes[i][j]) * lam[i] for i, j in enumerate(prefix)) * power * ctx.zeta_power
        mask = ~np.isin(last_ids, ids)
        counts += np.bincount((last_exp[mask] + base) % n, minlength=n)
    return _exp_sum(ctx, counts.tolist())


def _check_z_hypotheses(ctx: GammaContext, dhat: int, lam) -> int:
    if ctx.D % dhat or (ctx.t * dhat) % ctx.D:
        raise ValueError(f"need dhat | D | t*dhat, got D={ctx.D}, t={ctx.t}, dhat={dhat}")
    if ctx.n != dhat * ctx.t * sum(lam):
        raise ValueError(f"need n = dhat * t * sum(lam), got n={ctx.n}")
    return ctx.t * dhat // ctx.D


def _classes_of_newdegree(ctx: GammaContext, dhat: int) -> np.ndarray:
    return np.flatnonzero(ctx.class_newdegrees == dhat).astype(np.int64)


def zhat_brute(ctx: GammaContext, dhat: int, lam, budget: int = ENUM_BUDGET) -> CycloInt:
    """Sum over m-tuples of classes of newdegree ``dhat`` in ``Gamma_D / <delta^s>``,
    in pairwise distinct Frobenius orbits, of ``prod alpha_i^lam_i(zeta_n^that)``
    with ``that = t dhat / D``."""
    lam = tuple(int(x) for x in lam)
    that = _check_z_hypotheses(ctx, dhat, lam)
    cls = _classes_of_newdegree(ctx, dhat)
    ids = _frob_orbit_ids(cls, ctx.q, ctx.sub_modulus, dhat)
    return _tuple_sum(ctx, [cls] * len(lam), [ids] * len(lam), lam, that, budget)


def zhat_closed_form(ctx: GammaContext, dhat: int, lam) -> CycloInt:
    """Closed form: ``mu(dhat) (-dhat)^(m-1) (m-1)! (q-1)/t`` if ``gcd(D, t) = 1``, else 0."""
    lam = tuple(lam)
    _check_z_hypotheses(ctx, dhat, lam)
    if gcd(ctx.D, ctx.t) != 1:
        return CycloInt.integer(ctx.n, 0)
    m = len(lam)
    val = mobius(dhat) * (-dhat) ** (m - 1) * factorial(m - 1) * (ctx.q - 1) // ctx.t
    return CycloInt.integer(ctx.n, val)


def z_brute_mixed_degrees(ctx: GammaContext, degrees, dhat: int, lam, budget: int = ENUM_BUDGET) -> CycloInt:
    """As :func:`zhat_brute`, but entry ``i`` is restricted to classes whose
    characters have degree ``degrees[i]``."""
    lam = tuple(int(x) for x in lam)
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) != len(lam):
        raise ValueError("one degree per entry")
    if ctx.D % dhat or (dhat * ctx.t) % ctx.D:
        raise ValueError("need dhat | D | dhat*t")
    if any(d % dhat or ctx.D % d for d in degrees):
        raise ValueError("each degree must be a multiple of dhat dividing D")
    that = ctx.t * dhat // ctx.D
    cls = _classes_of_newdegree(ctx, dhat)
    # degree is constant on a class, read it off the smallest label
    deg = ctx.label_degrees[cls]
    ids = _frob_orbit_ids(cls, ctx.q, ctx.sub_modulus, dhat)
    pools = [cls[deg == d] for d in degrees]
    pids = [ids[deg == d] for d in degrees]
    return _tuple_sum(ctx, pools, pids, lam, that, budget)


# ---------------------------------------------------------------------------
# S sums over delta^s-fixed characters of a given type


@dataclass(frozen=True)
class _BigOrbit:
    degree: int
    newdegree: int
    weight: int  # number of Frobenius orbits inside
    label_sum: int  # sum over its Frobenius orbits of the degree-d label


def _big_orbits(ctx: GammaContext, d: int) -> list[_BigOrbit]:
    """Orbits of ``<Frob, delta^s>`` on labels of exact degree ``d``."""
    if ctx.D % d:
        raise ValueError(f"degree {d} does not divide D={ctx.D}")
    M = ctx.M
    E = np.flatnonzero(ctx.label_degrees == d).astype(np.int64)
    if len(E) == 0:
        return []
    frob_id = _frob_orbit_ids(E, ctx.q, M, d)
    step = ctx.delta_s_label
    big_id = frob_id.copy()
    for j in range(1, ctx.t):
        big_id = np.minimum(big_id, _frob_orbit_ids(E + j * step, ctx.q, M, d))
    # one label per Frobenius orbit, tagged with its big orbit
    reps = np.unique(frob_id)
    rep_big = big_id[np.searchsorted(E, reps)]
    scale = M // (ctx.q**d - 1)
    out = []
    for b in np.unique(rep_big):
        members = reps[rep_big == b]
        w = len(members)
        out.append(_BigOrbit(d, w * d // ctx.t, w, int((members // scale).sum())))
    return out


def _choose(pool: list[_BigOrbit], taken: set[int], start: int, need: int, picked: list[int]):
    """Subsets of untaken big orbits whose weights add up to ``need``."""
    if need == 0:
        yield list(picked)
        return
    for i in range(start, len(pool)):
        if i in taken or pool[i].weight > need:
            continue
        picked.append(i)
        yield from _choose(pool, taken, i + 1, need - pool[i].weight, picked)
        picked.pop()


def _enumerate_fixed(ctx: GammaContext, tau: CharType, budget: int):
    """Yield every ``delta^s``-fixed character of type ``tau`` as a list of
    ``(big orbit, partition)`` pairs."""
    slots = list(tau.terms())
    orbits = {d: _big_orbits(ctx, d) for d in {d for d, _, _ in slots}}
    taken: dict[int, set[int]] = {d: set() for d in orbits}
    count = 0

    def rec(k: int, acc: list):
        nonlocal count
        if k == len(slots):
            count += 1
            if count > budget:
                raise BudgetExceeded(f"more than {budget} characters")
            yield acc
            return
        d, lam, m = slots[k]
        pool = orbits[d]
        for pick in list(_choose(pool, taken[d], 0, m, [])):
            taken[d].update(pick)
            yield from rec(k + 1, acc + [(pool[i], lam) for i in pick])
            taken[d].difference_update(pick)

    yield from rec(0, [])


def delta_exponent(assignment) -> int:
    """Exponent of ``zeta`` in ``Delta_Lambda(zeta_n)`` before the zeta_power twist."""
    return sum(o.label_sum * lam.size for o, lam in assignment)


def _new_type(assignment) -> tuple[int, ...]:
    return tuple(sorted({o.newdegree for o, _ in assignment}))


def shat_terms(ctx: GammaContext, tau: PureType | CharType, budget: int = ENUM_BUDGET):
    """Yield ``(newdegrees, exponent)`` per fixed character of type ``tau``."""
    ct = as_char_type(tau)
    for assignment in _enumerate_fixed(ctx, ct, budget):
        yield _new_type(assignment), delta_exponent(assignment) * ctx.zeta_power


def shat_brute(ctx: GammaContext, tau: PureType | CharType, budget: int = ENUM_BUDGET) -> CycloInt:
    """``sum Delta_Lambda(zeta_n)`` over ``delta^s``-fixed characters of type ``tau``."""
    counts = Counter()
    for _, ex in shat_terms(ctx, tau, budget):
        counts[ex % ctx.n] += 1
    return _exp_sum(ctx, counts)


def shat_by_newdegree(ctx: GammaContext, tau, budget: int = ENUM_BUDGET) -> dict[tuple, CycloInt]:
    """Split :func:`shat_brute` by the set of newdegrees in the support."""
    groups: dict[tuple, Counter] = {}
    for nd, ex in shat_terms(ctx, tau, budget):
        groups.setdefault(nd, Counter())[ex % ctx.n] += 1
    return {k: _exp_sum(ctx, v) for k, v in sorted(groups.items())}


def sign_factor(ctx: GammaContext, d: int, that: int, sum_lam: int) -> int:
    """``delta(zeta_n)^(d s C(that, 2) sum_lam)``, which is +1 or -1."""
    e = ctx.zeta_power * d * ctx.s * (that * (that - 1) // 2) * sum_lam % ctx.n
    if e == 0:
        return 1
    if 2 * e == ctx.n:
        return -1
    raise ValueError(f"sign factor zeta^{e} is not +-1")


def s_brute(ctx: GammaContext, tau: PureType, dhat: int, budget: int = ENUM_BUDGET) -> CycloInt:
    """Part of :func:`shat_brute` from characters whose support has the single newdegree ``dhat``."""
    return shat_by_newdegree(ctx, tau, budget).get((dhat,), CycloInt.integer(ctx.n, 0))


def s_from_z(ctx: GammaContext, tau: PureType, dhat: int) -> tuple[CycloInt, int] | None:
    """Rebuild the newdegree-``dhat`` S-sum from a Z-sum over ``Gamma_d``.

    Returns ``(numerator, denominator)`` with ``S = numerator / denominator``,
    or ``None`` when no character of that new type can exist.  ``ctx.D``
    must equal the degree ``d`` of ``tau``.
    """
    d = tau.d
    if ctx.D != d:
        raise ValueError("context degree must equal the type degree")
    if d % dhat or (ctx.t * dhat) % d:
        return None
    that = ctx.t * dhat // d
    lam_vec, mhat_fact = [], 1
    for lam, m in tau.mults:
        if m % that:
            return None
        mh = m // that
        lam_vec += [lam.size] * mh
        mhat_fact *= factorial(mh)
    z = z_brute_mixed_degrees(ctx, [d] * len(lam_vec), dhat, lam_vec)
    sgn = sign_factor(ctx, d, that, sum(lam_vec))
    return z * sgn, dhat ** len(lam_vec) * mhat_fact


# ---------------------------------------------------------------------------
# twisted coefficient from character sums


def context_for(q: int, n: int, t: int, tau: PureType | CharType, zeta_power: int = 1) -> GammaContext:
    ct = as_char_type(tau)
    D = lcm(*[c.d for c in ct.components])
    return GammaContext(q, D, t, n, zeta_power)


def ctaut_from_gamma(q: int, tau: PureType, t: int, zeta_power: int = 1, budget: int = ENUM_BUDGET) -> Fraction:
    """``C_tau^t = (t/(q-1)) sum_{k | n/t} mu(k) Shat(kt, tau)`` from brute sums."""
    n = tau.n
    total = CycloInt.integer(n, 0)
    for k in divisors(n // t):
        mu = mobius(k)
        if mu:
            total = total + shat_brute(context_for(q, n, k * t, tau, zeta_power), tau, budget) * mu
    if not total.is_rational():
        raise ArithmeticError(f"S-sum combination is irrational: {total}")
    return Fraction(t * total.to_int(), q - 1)


# ---------------------------------------------------------------------------
# plain character sums on a cyclic group


def character_sum(M: int, labels, x: int) -> CycloInt:
    """``sum_{e in labels} exp(2 pi i e x / M)``."""
    counts = Counter((int(e) * x) % M for e in labels)
    return CycloInt.from_exponent_counts(M, counts)


def stable_closure(M: int, step: int, seeds) -> list[int]:
    """Smallest superset of ``seeds`` closed under ``e -> e + step`` in ``Z/M``."""
    out = set()
    for e in seeds:
        cur = e % M
        while cur not in out:
            out.add(cur)
            cur = (cur + step) % M
    return sorted(out)


def fixed_subgroup_order(ctx: GammaContext, d1: int) -> int:
    """Brute count of classes ``e`` mod ``M/t`` with ``e (q^d1 - 1) = 0``."""
    mod = ctx.sub_modulus
    e = np.arange(mod, dtype=np.int64)
    return int(((e * ((ctx.q**d1 - 1) % mod)) % mod == 0).sum())


def fixed_subgroup_order_formula(ctx: GammaContext, d1: int) -> int:
    return (ctx.q**d1 - 1) // ctx.t * gcd(ctx.D // d1, ctx.t)


# ---------------------------------------------------------------------------
# lemma suite


def _compositions(total: int, m: int):
    if m == 1:
        yield (total,)
        return
    for a in range(1, total - m + 2):
        for rest in _compositions(total - a, m - 1):
            yield (a,) + rest


def _show(x) -> int | str:
    if isinstance(x, CycloInt):
        return x.to_int() if x.is_rational() else repr(x)
    if isinstance(x, Fraction):
        return str(x)
    return x


def _check(lemma: str, params: dict, expected, got) -> dict:
    return {"lemma": lemma, "params": params, "expected": _show(expected), "got": _show(got), "pass": expected == got}


def z_contexts(q: int, n: int, max_m: int = 3):
    """Admissible ``(ctx, dhat, lam)`` for the Z-sum statements: ``dhat | D | t dhat``
    and ``n = dhat t sum(lam)`` with at most ``max_m`` entries."""
    for t in divisors(n):
        for dhat in divisors(n):
            if n % (dhat * t):
                continue
            total = n // (dhat * t)
            for D in divisors(t * dhat):
                if D % dhat:
                    continue
                ctx = GammaContext(q, D, t, n)
                for m in range(1, min(max_m, total) + 1):
                    for lam in _compositions(total, m):
                        yield ctx, dhat, lam


def lemma_checks(q: int, n: int, max_m: int = 3, types=None):
    """Yield one result dict per checked statement for the field size ``q``.

    Statements: the closed form of the Z-sum, vanishing of mixed-degree
    tuples, the split of the Z-sum by degree, agreement of evaluations in
    ``Gamma_d`` and ``Gamma_D``, the rebuild of S-sums from Z-sums, vanishing
    of mixed-newdegree and non-pure S-sums, and the order of the fixed
    subgroups of ``Gamma_D / <delta^s>``.
    """
    from .chartypes import enumerate_pure_types, enumerate_types

    if (q - 1) % n:
        raise ValueError(f"n={n} must divide q-1")
    for ctx, dhat, lam in z_contexts(q, n, max_m):
        p = {"q": q, "n": n, "D": ctx.D, "t": ctx.t, "dhat": dhat, "lam": list(lam)}
        if ctx.oddity:
            yield _check("zhat_closed_form", p, zhat_closed_form(ctx, dhat, lam), zhat_brute(ctx, dhat, lam))
        degs = [d for d in divisors(ctx.D) if d % dhat == 0]
        split = CycloInt.integer(n, 0)
        for dvec in itertools.product(degs, repeat=len(lam)):
            z = z_brute_mixed_degrees(ctx, dvec, dhat, lam)
            if len(set(dvec)) > 1:
                yield _check("mixed_degree_vanishes", dict(p, degrees=list(dvec)), CycloInt.integer(n, 0), z)
            else:
                split = split + z
                d = dvec[0]
                if d != ctx.D:
                    zd = z_brute_mixed_degrees(ctx.with_(D=d), dvec, dhat, lam)
                    yield _check("evaluation_consistency", dict(p, d=d), z, zd)
        yield _check("zhat_degree_split", p, zhat_brute(ctx, dhat, lam), split)
    for t in divisors(n):
        for D in divisors(n):
            ctx = GammaContext(q, D, t, n)
            for d1 in divisors(D):
                yield _check(
                    "fixed_subgroup_order",
                    {"q": q, "n": n, "D": D, "t": t, "d1": d1},
                    fixed_subgroup_order_formula(ctx, d1),
                    fixed_subgroup_order(ctx, d1),
                )
    pure = enumerate_pure_types(n) if types is None else types
    for tau in pure:
        for t in divisors(n):
            ctx = context_for(q, n, t, tau)
            parts = shat_by_newdegree(ctx, tau)
            p = {"q": q, "n": n, "t": t, "type": tau.to_json()}
            for nd, val in parts.items():
                if len(nd) > 1:
                    yield _check("mixed_newdegree_vanishes", dict(p, newdegrees=list(nd)), CycloInt.integer(n, 0), val)
            for dhat in divisors(tau.d):
                rebuilt = s_from_z(ctx, tau, dhat)
                direct = parts.get((dhat,), CycloInt.integer(n, 0))
                if rebuilt is None:
                    yield _check("s_from_z", dict(p, dhat=dhat), CycloInt.integer(n, 0), direct)
                else:
                    num, den = rebuilt
                    yield _check("s_from_z", dict(p, dhat=dhat), num, direct * den)
    if types is None:
        for ct in enumerate_types(n):
            if ct.is_pure:
                continue
            for t in divisors(n):
                ctx = context_for(q, n, t, ct)
                yield _check(
                    "non_pure_vanishes",
                    {"q": q, "n": n, "t": t, "type": str(ct)},
                    CycloInt.integer(n, 0),
                    shat_brute(ctx, ct),
                )
