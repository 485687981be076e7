import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from roughring import (
    SetValuedMap,
    SetValuedRingHom,
    classes_svh,
    congruence_from_ideal,
    enumerate_ideals,
    enumerate_subrings,
    find_isomorphism,
    fundamental_theorem,
    induced_svh,
    is_powerful,
    kernel,
    ring_zmod,
    singleton_svh,
)
from roughring.errors import NotPowerful, NotSurjective, NotTotal
from roughring.finite_ring import RingHom
from roughring.rough_hom import (
    check_class_laws,
    check_kernel_subring,
    check_upper_pullback,
    check_powerful_pullback,
    image_ring,
    kernel_at_one,
    require_powerful,
    ring_set_label,
    rough_subring_check,
    setwise_add,
    setwise_mul,
    setwise_neg,
)

Z3, Z4, Z6 = ring_zmod(3), ring_zmod(4), ring_zmod(6)


def classes(R, members):
    return classes_svh(R, congruence_from_ideal(R, R.subset(members)))


def test_setwise_operations():
    A, B = Z6.subset([1, 2]), Z6.subset([3])
    assert setwise_add(A, B, Z6).labels() == ["4", "5"]
    assert setwise_mul(A, B, Z6).labels() == ["0", "3"]
    assert setwise_neg(A, Z6).labels() == ["4", "5"]
    assert ring_set_label(Z6, A) == "{1,2}"


def test_totality_is_enforced():
    with pytest.raises(NotTotal):
        SetValuedRingHom.from_images(Z3, Z3, {"0": ["0"], "1": ["1"]})


@pytest.mark.parametrize("members, expected", [([0, 2, 4], True), ([0, 3], True), ([0], True), ([0, 1, 2, 3, 4, 5], True)])
def test_z6_class_maps_are_powerful(members, expected):
    assert bool(is_powerful(classes(Z6, members))) is expected


def test_z4_mod_two_is_not_powerful():
    rep = is_powerful(classes(Z4, [0, 2]))
    assert not rep
    assert rep.multiplicative_law.witness == ("0", "0")
    assert rep.additive_law and rep.negation_law
    with pytest.raises(NotPowerful):
        require_powerful(classes(Z4, [0, 2]))


def test_elementwise_inverse_reading_is_informational():
    rep = is_powerful(classes(Z6, [0, 2, 4]))
    assert rep.is_powerful and not rep.elementwise_inverse


@pytest.mark.parametrize("n", range(1, 13))
def test_class_map_powerfulness_matches_oracle(n):
    R = ring_zmod(n)
    for I in enumerate_ideals(R):
        F = classes_svh(R, congruence_from_ideal(R, I))
        expected = oracle.is_powerful_mod(n, n, oracle.classes_mod(n, {int(v) for v in I.labels()}))
        assert bool(is_powerful(F)) == expected, (n, I.format())


def test_singleton_maps_are_powerful():
    for n in range(1, 9):
        for m in range(1, 9):
            for table in oracle.homs_mod(n, m):
                F = singleton_svh(RingHom(ring_zmod(n), ring_zmod(m), table))
                assert is_powerful(F)
                assert oracle.is_powerful_mod(n, m, {x: {y} for x, y in enumerate(table)})


def test_kernel_variants():
    F = classes(Z6, [0, 2, 4])
    assert kernel(F).labels() == ["0", "2", "4"]
    assert kernel_at_one(F).labels() == ["1", "3", "5"]
    assert check_kernel_subring(F)
    assert set(map(int, kernel(F).labels())) == oracle.kernel_at_zero(oracle.classes_mod(6, {0, 2, 4}))


def test_rough_subring_report():
    F = classes(Z6, [0, 3])
    for S in enumerate_subrings(Z6):
        rep = rough_subring_check(F, S)
        assert rep.hypothesis == F(0).issubset(S)
        assert not rep.falsified


def test_class_laws():
    rep = check_class_laws(Z4, congruence_from_ideal(Z4, Z4.subset([0, 2])))
    assert rep.additive.status == "equality"
    assert rep.multiplicative.status == "proper-inclusion" and rep.multiplicative.witness == ("0", "0")


def test_pullback_along_reduction():
    rho = RingHom(Z6, Z3, [x % 3 for x in range(6)])
    F2 = classes(Z3, [0])
    F1 = induced_svh(rho, F2)
    assert [ring_set_label(Z6, F1(x)) for x in range(6)] == ["{0,3}", "{1,4}", "{2,5}"] * 2
    assert all(check_upper_pullback(rho, F2, A) for A in Z6.elems.all_subsets())
    assert check_powerful_pullback(rho, F2).is_powerful
    with pytest.raises(NotSurjective):
        induced_svh(RingHom(Z3, Z6, [0, 0, 0]), classes(Z6, [0]))


def test_pullback_needs_injectivity():
    # identity classes on Z2 pulled back along Z4 -> Z2 give a non-powerful map
    Z2 = ring_zmod(2)
    res = check_powerful_pullback(RingHom(Z4, Z2, [0, 1, 0, 1]), classes(Z2, [0]))
    assert not res.rho_injective and not res.is_powerful


def test_fundamental_theorem_z6():
    rep = fundamental_theorem(classes(Z6, [0, 2, 4]))
    assert rep.is_isomorphism
    assert rep.kernel.labels() == ["0", "2", "4"] and len(rep.cosets) == 2
    assert rep.image_ring.order == 2 and find_isomorphism(rep.image_ring, ring_zmod(2)) is not None
    single = fundamental_theorem(singleton_svh(RingHom(Z6, Z3, [x % 3 for x in range(6)])))
    assert single.is_isomorphism and single.cosets.ring.order == 3
    assert find_isomorphism(single.cosets.ring, Z3) is not None


def test_image_ring_requires_powerful():
    with pytest.raises(NotPowerful):
        image_ring(classes(Z4, [0, 2]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.data())
def test_random_maps_oracle_agreement(n, data):
    table = data.draw(st.lists(st.integers(1, (1 << n) - 1), min_size=n, max_size=n))
    R = ring_zmod(n)
    F = SetValuedRingHom(R, R, SetValuedMap(R.elems, R.elems, table))
    D = {x: {y for y in range(n) if table[x] >> y & 1} for x in range(n)}
    assert bool(is_powerful(F)) == oracle.is_powerful_mod(n, n, D)
