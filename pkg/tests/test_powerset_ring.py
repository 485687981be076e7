import pytest
from hypothesis import given
from hypothesis import strategies as st

from roughring import PowersetRing, Subset, Universe, ps_as_finite_ring, ps_check_axioms
from roughring.errors import SizeCapExceeded, StructuralError
from roughring.powerset_ring import ps_add, ps_label, ps_mul


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_axioms_exhaustive(n):
    rep = ps_check_axioms(PowersetRing(Universe.range(n)))
    assert rep.ok and rep.failure is None
    m = 1 << n
    assert rep.checks["add-associativity"] == m ** 3
    assert rep.checks["add-self-inverse"] == m


def test_exhaustive_cap():
    with pytest.raises(SizeCapExceeded):
        ps_check_axioms(PowersetRing(Universe.range(5)))


def test_identities_and_labels():
    X = Universe("ab")
    P = PowersetRing(X)
    assert P.zero().format() == "{}" and P.one() == X.full()
    assert ps_label(X.subset("b")) == "{b}"
    R = ps_as_finite_ring(P)
    assert R.order == 4 and R.commutative
    assert R.label(R.zero) == "{}" and R.label(R.one) == "{a,b}"
    # Boolean ring: every element is idempotent and its own negative
    assert all(R.times(x, x) == x and R.neg(x) == x for x in range(R.order))


def test_operands_must_share_a_base():
    with pytest.raises(StructuralError):
        ps_add(Universe("ab").full(), Universe("xy").full())


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1),
                                                     st.integers(0, 2 ** n - 1), st.integers(0, 2 ** n - 1))))
def test_ring_laws_beyond_exhaustive_range(case):
    n, a, b, c = case
    X = Universe.range(n)
    A, B, C = Subset(X, a), Subset(X, b), Subset(X, c)
    assert ps_add(A, A) == X.empty()
    assert ps_mul(A, ps_add(B, C)) == ps_add(ps_mul(A, B), ps_mul(A, C))
    assert ps_add(ps_add(A, B), C) == ps_add(A, ps_add(B, C))
    assert ps_mul(A, X.full()) == A and ps_add(A, X.empty()) == A
