import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from roughring import (
    congruence_from_ideal,
    congruence_from_partition,
    enumerate_congruences,
    enumerate_homs,
    enumerate_ideals,
    enumerate_subrings,
    find_isomorphism,
    hom_from_table,
    is_ideal,
    is_subring,
    quotient_by_congruence,
    quotient_by_subgroup,
    ring_from_tables,
    ring_product,
    ring_zmod,
)
from roughring.errors import AxiomViolation, CompatibilityViolation, NotAHomomorphism, NotASubgroup, StructuralError
from roughring.finite_ring import additive_generators, identity_hom, ideal_generated, is_additive_subgroup, subring_generated

Z4, Z6 = ring_zmod(4), ring_zmod(6)


def test_zmod_tables():
    assert Z6.plus(4, 5) == 3 and Z6.times(4, 5) == 2 and Z6.neg(2) == 4 and Z6.minus(1, 3) == 4
    assert Z6.units() == [1, 5] and Z6.inverse(5) == 5 and Z6.inverse(2) is None
    assert Z6.additive_order(2) == 3
    with pytest.raises(StructuralError):
        ring_zmod(0)
    assert ring_zmod(1).order == 1


def test_table_ring_validation():
    add = [[0, 1], [1, 0]]
    R = ring_from_tables(["0", "1"], add, [[0, 0], [0, 1]], "0", "1", name="F2")
    assert find_isomorphism(R, ring_zmod(2)) is not None
    with pytest.raises(AxiomViolation) as exc:
        ring_from_tables(["0", "1"], add, [[0, 0], [0, 0]], "0", "1")
    assert exc.value.axiom == "mul-identity"
    with pytest.raises(AxiomViolation):
        ring_from_tables(["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], "0")
    # a rng with no unit is fine
    assert ring_from_tables(["0", "1"], add, [[0, 0], [0, 0]], "0").one is None


def test_product_ring():
    P = ring_product(ring_zmod(2), ring_zmod(3))
    assert P.name == "Z2xZ3" and P.order == 6
    assert find_isomorphism(P, Z6) is not None
    assert find_isomorphism(ring_product(ring_zmod(2), ring_zmod(2)), Z4) is None


@pytest.mark.parametrize("n", range(1, 13))
def test_ideals_and_subrings_match_oracle(n):
    R = ring_zmod(n)
    ideals = {frozenset(map(int, I.labels())) for I in enumerate_ideals(R)}
    assert ideals == {frozenset(I) for I in oracle.ideals_mod(n)}
    subrings = {frozenset(map(int, S.labels())) for S in enumerate_subrings(R)}
    brute = {frozenset(S) for S in oracle.subsets(range(n)) if oracle.is_subring_mod(n, S)}
    assert subrings == brute


def test_predicates_report_witnesses():
    assert is_subring(Z6, Z6.subset([0, 3]))
    v = is_subring(Z6, Z6.subset([0, 1]))
    assert not v and v.witness
    assert not is_ideal(Z4, Z4.subset([0, 1, 2]))
    assert not is_ideal(ring_product(Z4, Z4), ring_product(Z4, Z4).subset(["(0,0)", "(1,1)", "(2,2)", "(3,3)"]))
    assert is_additive_subgroup(Z6, Z6.subset([0, 2, 4]))
    assert subring_generated(Z6, Z6.subset([2])).labels() == ["0", "2", "4"]
    assert ideal_generated(Z6, Z6.subset([3])).labels() == ["0", "3"]


def test_congruences():
    C = congruence_from_partition(Z6, [["0", "2", "4"], ["1", "3", "5"]])
    assert C == congruence_from_ideal(Z6, Z6.subset([0, 2, 4]))
    assert C.num_blocks == 2 and C.zero_block().labels() == ["0", "2", "4"]
    with pytest.raises(CompatibilityViolation):
        congruence_from_partition(Z4, [["0", "1"], ["2", "3"]])
    # Z6 has exactly one congruence per ideal
    assert len(enumerate_congruences(Z6)) == len(enumerate_ideals(Z6)) == 4


def test_quotients():
    Q, proj = quotient_by_congruence(Z6, congruence_from_ideal(Z6, Z6.subset([0, 3])))
    assert Q.order == 3 and find_isomorphism(Q, ring_zmod(3)) is not None
    assert proj.surjective and proj.kernel().labels() == ["0", "3"]
    space = quotient_by_subgroup(Z6, Z6.subset([0, 2, 4]))
    assert space.mul_well_defined and len(space) == 2
    with pytest.raises(NotASubgroup):
        quotient_by_subgroup(Z6, Z6.subset([0, 1]))


def test_coset_space_of_a_non_ideal_subgroup():
    # {(0,0),(1,1)} in Z2xZ2 is a subgroup, and for the product ring it is not an ideal
    R = ring_product(ring_zmod(2), ring_zmod(2))
    K = R.subset(["(0,0)", "(1,1)"])
    assert not is_ideal(R, K)
    space = quotient_by_subgroup(R, K)
    assert not space.mul_well_defined and space.ring is None and len(space.mul_witness) == 4


def test_homs_match_oracle():
    for n in range(1, 9):
        for m in range(1, 9):
            ours = sorted(list(h.table) for h in enumerate_homs(ring_zmod(n), ring_zmod(m)))
            assert ours == sorted(oracle.homs_mod(n, m)), (n, m)


def test_hom_construction():
    rho = hom_from_table(Z6, ring_zmod(3), {str(x): str(x % 3) for x in range(6)})
    assert rho.surjective and not rho.injective
    assert rho.kernel().labels() == ["0", "3"]
    assert rho.compose(identity_hom(Z6)) == rho
    with pytest.raises(NotAHomomorphism):
        hom_from_table(Z4, ring_zmod(2), [0, 1, 1, 0])
    assert len(additive_generators(Z6)) == 1
    assert len(additive_generators(ring_product(ring_zmod(2), ring_zmod(2)))) == 2


@given(st.integers(1, 12), st.integers(1, 12))
def test_product_order_and_commutativity(a, b):
    if a * b > 24:
        return
    P = ring_product(ring_zmod(a), ring_zmod(b))
    assert P.order == a * b and P.commutative and P.unital
    for x in range(P.order):
        assert P.plus(x, P.neg(x)) == P.zero
