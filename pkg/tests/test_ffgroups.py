import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slnepoly.epoly import n2_closed_form
from slnepoly.exactmath import pgl_order, sl_order
from slnepoly.ffgroups import (
    BudgetExceeded,
    batch_det,
    batch_inverse,
    batch_matmul,
    brute_point_count,
    commutator_distribution,
    commutator_fiber_count,
    decode,
    encode,
    enumerate_sln,
    frobenius_from_table,
    genus_count,
    genus_one_solutions,
    gf,
    kernel_det_one_count,
    sl2_central_table,
    sln_table,
    stabilizer_sizes,
    twist_is_primitive,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    f = gf(q)
    a = np.arange(q)
    A, B = np.meshgrid(a, a, indexing="ij")
    add, mul = f.add.astype(np.int64), f.mul.astype(np.int64)
    assert (add == add.T).all() and (mul == mul.T).all()
    assert (add[0] == a).all() and (mul[1] == a).all() and (mul[0] == 0).all()
    assert (add[a, f.neg] == 0).all()
    assert (mul[a[1:], f.inv[1:]] == 1).all()
    for c in range(q):
        # (a + b) c = a c + b c
        assert (mul[add[A, B], c] == add[mul[A, c], mul[B, c]]).all()
        # (a b) c = a (b c)
        assert (mul[mul[A, B], c] == mul[A, mul[B, c]]).all()
        assert (add[add[A, B], c] == add[A, add[B, c]]).all()
    powers = {f.power(f.generator, e) for e in range(q - 1)}
    assert powers == set(range(1, q))


def test_small_field_examples():
    f4 = gf(4)
    assert f4.modulus == (1, 1, 1)
    assert f4.power(2, 3) == 1 and f4.power(2, 1) != 1
    assert gf(5).k == 1
    assert gf(9).modulus == (1, 0, 1)
    assert f4.root_of_unity(3) != 1 and f4.power(f4.root_of_unity(3), 3) == 1
    with pytest.raises(ValueError):
        gf(6)
    with pytest.raises(ValueError):
        gf(5).root_of_unity(3)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_batch_ops(q):
    f = gf(q)
    rng = np.random.default_rng(q)
    X = rng.integers(0, q, size=(200, 3, 3)).astype(f.add.dtype)
    det = batch_det(f, X)
    inv = X[det != 0]
    prod = batch_matmul(f, inv, batch_inverse(f, inv))
    assert (prod == np.eye(3, dtype=prod.dtype)).all()
    # det is multiplicative
    Y = rng.integers(0, q, size=(200, 3, 3)).astype(f.add.dtype)
    lhs = batch_det(f, batch_matmul(f, X, Y))
    rhs = f.vmul(batch_det(f, X), batch_det(f, Y))
    assert (lhs == rhs).all()
    assert (decode(f, encode(f, X), 3) == X).all()


@pytest.mark.parametrize("n,q,classes", [(2, 2, 3), (2, 3, 7), (2, 4, 5), (2, 5, 9), (2, 7, 11), (2, 9, 13), (3, 2, 6)])
def test_group_orders_and_classes(n, q, classes):
    gt = sln_table(n, q)
    assert gt.order == sl_order(n, q)
    assert gt.num_classes == classes
    assert int(gt.class_sizes.sum()) == gt.order
    assert (batch_det(gt.field, gt.elements) == 1).all()


def test_classes_by_direct_conjugation():
    gt = sln_table(2, 3)
    f = gt.field
    X = gt.elements
    Xinv = batch_inverse(f, X)
    for i, A in enumerate(X):
        conj = batch_matmul(f, batch_matmul(f, X, A[None]), Xinv)
        orbit = set(gt.index_of(conj).tolist())
        assert orbit == set(np.flatnonzero(gt.class_of == gt.class_of[i]).tolist())


def test_inverse_index():
    gt = sln_table(2, 5)
    prod = batch_matmul(gt.field, gt.elements, gt.elements[gt.inverse_index])
    assert (prod == np.eye(2, dtype=prod.dtype)).all()


@pytest.mark.parametrize("q", [3, 5])
def test_fiber_count_per_class_equals_per_element(q):
    gt = sln_table(2, q)
    z = gt.field.root_of_unity(2)
    assert commutator_fiber_count(gt, z) == commutator_fiber_count(gt, z, per_element=True)
    assert commutator_fiber_count(gt, 1) == commutator_fiber_count(gt, 1, per_element=True)


def centralizer_oracle(gt):
    """f(w) = sum_A [A^-1 w conjugate to A^-1] |C(A)|, no linear algebra involved."""
    f = gt.field
    cent = gt.order // gt.class_sizes[gt.class_of]
    inv_class = gt.class_of[gt.inverse_index]
    out = []
    for rep in gt.class_reps:
        Y = batch_matmul(f, gt.elements[gt.inverse_index], gt.elements[rep][None])
        hit = gt.class_of[gt.index_of(Y)] == inv_class
        out.append(int(cent[hit].sum()))
    return out


@pytest.mark.parametrize("n,q", [(2, 3), (2, 4), (2, 5), (3, 2)])
def test_commutator_distribution(n, q):
    gt = sln_table(n, q)
    dist = commutator_distribution(gt)
    assert list(dist) == centralizer_oracle(gt)
    assert sum(int(s) * d for s, d in zip(gt.class_sizes, dist)) == gt.order**2
    assert dist[gt.class_index(np.eye(n, dtype=gt.elements.dtype))] == gt.order * gt.num_classes
    assert all(d >= 0 for d in dist)


def test_commuting_pairs_sl2_3():
    gt = sln_table(2, 3)
    assert commutator_fiber_count(gt, 1) == 168


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
def test_sl2_table(q):
    tab = sl2_central_table(q)
    assert len(tab) == q + 4
    assert sum(e.degree**2 for e in tab) == sl_order(2, q)
    if q == 5:
        assert sorted(e.degree for e in tab) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    gt = sln_table(2, q)
    assert frobenius_from_table(tab, gt.order, 1, at_identity=True) == gt.order * gt.num_classes


@pytest.mark.parametrize("q", [3, 5, 7])
@pytest.mark.parametrize("g", [1, 2])
def test_three_way_sl2(q, g):
    gt = sln_table(2, q)
    z = gt.field.root_of_unity(2)
    conv = genus_count(gt, g, z)
    assert conv == frobenius_from_table(sl2_central_table(q), gt.order, g)
    assert conv == n2_closed_form(q, g) * pgl_order(2, q)


def test_genus_two_values():
    assert brute_point_count(2, 5, 2).count == 1269120
    assert brute_point_count(2, 3, 2).count == 32640


@pytest.mark.parametrize("n,q", [(2, 3), (2, 5)])
def test_genus_one_orbit_free(n, q):
    gt = sln_table(n, q)
    z = gt.field.root_of_unity(n)
    sols = genus_one_solutions(gt, z)
    assert len(sols) == commutator_fiber_count(gt, z) == pgl_order(n, q)
    assert (stabilizer_sizes(gt, sols) == 1).all()


def test_genus_one_sl3_4():
    res = brute_point_count(3, 4, 1)
    assert res.count == 60480 == res.pgl_order


def test_non_central_rejected():
    gt = sln_table(2, 5)
    W = np.array([[1, 1], [0, 1]], dtype=gt.elements.dtype)
    with pytest.raises(ValueError):
        commutator_fiber_count(gt, W)
    with pytest.raises(ValueError):
        genus_count(gt, 0, 1)


def test_budgets():
    f = gf(5)
    eye = np.eye(2, dtype=f.add.dtype)
    with pytest.raises(BudgetExceeded):
        kernel_det_one_count(f, eye, eye, budget=100)
    with pytest.raises(BudgetExceeded):
        enumerate_sln(3, 5, budget=1000)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_kernel_count_matches_direct_search(q, data):
    gt = sln_table(2, q)
    f = gt.field
    A = gt.elements[data.draw(st.integers(0, gt.order - 1))]
    z = data.draw(st.sampled_from([1, q - 1]))
    W = gt.scalar(z)
    AB = batch_matmul(f, A[None], gt.elements)
    zBA = f.vmul(np.full(AB.shape, z, dtype=AB.dtype), batch_matmul(f, gt.elements, A[None]))
    assert kernel_det_one_count(f, A, W) == int((AB == zBA).all(axis=(1, 2)).sum())


def test_twist_primitive():
    assert twist_is_primitive(4, 3) and not twist_is_primitive(4, 2)
