import itertools
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slnepoly.exactmath import mobius
from slnepoly.posets import (
    FinitePoset,
    SetPartition,
    cycle_permutation,
    divisor_poset,
    fixed_lattice_mu,
    fixed_subposet,
    hanlon_mu,
    mobius_matrix,
    mobius_partition_lattice,
    mobius_value,
    partition_lattice,
    permutation_from_cycles,
    refinement_leq,
    set_partitions,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def sp(text: str) -> SetPartition:
    """``"1|2|34"`` to a partition of {0, 1, 2, 3}."""
    return SetPartition.from_blocks([[int(c) - 1 for c in blk] for blk in text.split("|")])


def test_chain():
    p = FinitePoset.from_relation(["a", "b"], lambda x, y: x == y or (x, y) == ("a", "b"))
    assert mobius_value(p, "a", "b") == -1
    assert mobius_value(p, "a", "a") == 1


def test_axioms_enforced():
    with pytest.raises(ValueError):
        FinitePoset((0, 1), np.array([[True, True], [True, True]]))
    with pytest.raises(ValueError):
        FinitePoset((0, 1), np.array([[False, True], [False, True]]))


@pytest.mark.parametrize("N", [1, 12, 30, 36, 60])
def test_divisor_poset_matches_arithmetic_mobius(N):
    p = divisor_poset(N)
    mu = mobius_matrix(p)
    for i, a in enumerate(p.elements):
        for j, b in enumerate(p.elements):
            assert mu[i, j] == (mobius(b // a) if b % a == 0 else 0)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_inverse_of_zeta(N):
    p = partition_lattice(N)
    Z = p.zeta_matrix()
    assert (mobius_matrix(p) @ Z == np.eye(len(p), dtype=np.int64)).all()


@pytest.mark.parametrize("N", range(8))
def test_bell_numbers(N):
    parts = set_partitions(N)
    assert len(parts) == BELL[N]
    assert len(set(parts)) == BELL[N]


def test_refinement_examples():
    assert refinement_leq(sp("1|2|34"), sp("12|34"))
    assert refinement_leq(sp("12|34"), sp("1234"))
    assert not refinement_leq(sp("12|34"), sp("13|24"))
    assert str(sp("1|2|34")) == "1|2|34"


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_partition_lattice_closed_form_all_pairs(N):
    p = partition_lattice(N)
    mu = mobius_matrix(p)
    for i, a in enumerate(p.elements):
        for j, b in enumerate(p.elements):
            assert mu[i, j] == mobius_partition_lattice(a, b)


def test_partition_lattice_values():
    p = partition_lattice(3)
    assert mobius_value(p, p.elements[p.bottom()], p.elements[p.top()]) == 2
    assert mobius_partition_lattice(sp("1|2|3|4"), sp("1234")) == -6
    assert mobius_partition_lattice(sp("12|34"), sp("12|34")) == 1


def test_fixed_subposet_by_filter():
    assert len(fixed_subposet(4, range(4))) == BELL[4]
    rho = (1, 0, 3, 2)
    fixed = fixed_subposet(4, rho)

    def stable(p):
        return SetPartition.from_blocks([[rho[x] for x in b] for b in p.blocks]) == p

    assert set(fixed.elements) == {p for p in set_partitions(4) if stable(p)}
    assert len(fixed) == 7
    with pytest.raises(ValueError):
        fixed_subposet(3, (0, 0, 1))


def test_hanlon_examples():
    assert hanlon_mu(1, 1) == 1
    assert hanlon_mu(2, 1) == -1
    assert hanlon_mu(2, 3) == -8
    assert cycle_permutation(3, 2) == (1, 2, 0, 4, 5, 3)


def test_hanlon_formula_up_to_8():
    t0 = time.perf_counter()
    for d in range(1, 9):
        for m in range(1, 8 // d + 1):
            assert fixed_lattice_mu(cycle_permutation(d, m)) == hanlon_mu(d, m), (d, m)
    assert time.perf_counter() - t0 < 10


def _mixed_cycle_types(N):
    for k in range(2, N + 1):
        for parts in itertools.combinations_with_replacement(range(1, N + 1), k):
            if sum(parts) == N and len(set(parts)) > 1:
                yield parts


@pytest.mark.parametrize("cycles", list(_mixed_cycle_types(6)) + [(1, 2), (1, 3), (2, 1, 1)])
def test_mixed_cycle_types_give_zero(cycles):
    assert fixed_lattice_mu(permutation_from_cycles(cycles)) == 0


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(5)))
def test_fixed_lattice_is_a_sublattice_interval(perm):
    p = fixed_subposet(5, perm)
    # discrete and indiscrete partitions are always fixed
    assert p.elements[p.bottom()].block_type() == {1: 5}
    assert p.elements[p.top()].block_type() == {5: 1}
