import random
from itertools import permutations as iter_permutations

import pytest

from hadamard6.groups import (
    ActionConsistencyError,
    BlockSystemError,
    ClosureCapError,
    InconsistentImagesError,
    action_kernel_order,
    bsgs_build,
    center_of,
    check_relations,
    closure,
    commutator,
    conjugate,
    derived_subgroup,
    hom_closure,
    is_simple_small,
    orbit_stabilizer,
)
from hadamard6.perms import Permutation


def brute_force_order(gens):
    return len(closure(gens))


def test_bsgs_cyclic():
    b = bsgs_build([Permutation.parse("(1,2,3)", 3)])
    assert b.order() == 3


def test_bsgs_s6_from_standard_generators():
    gens = [Permutation.parse("(2,3,4,5,6)", 6), Permutation.parse("(1,2)", 6)]
    b = bsgs_build(gens)
    assert b.order() == 720
    assert b.order() == brute_force_order(gens)


def test_bsgs_matches_brute_force_on_random_small_groups():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(3, 7)
        gens = []
        for _ in range(rng.randrange(1, 4)):
            images = list(range(n))
            rng.shuffle(images)
            gens.append(Permutation(tuple(images)))
        if all(g.is_identity() for g in gens):
            continue
        assert bsgs_build(gens).order() == brute_force_order(gens)


def test_membership():
    b = bsgs_build([Permutation.parse("(1,2,3)", 3)])
    assert not b.contains(Permutation.parse("(1,2)", 3))
    assert b.contains(Permutation.parse("(1,3,2)", 3))
    two = bsgs_build([Permutation.parse("(1,2)", 2)])
    assert two.order() == 2

    gens = [Permutation.parse("(2,3,4,5,6)", 6), Permutation.parse("(1,2)", 6)]
    b6 = bsgs_build(gens)
    rng = random.Random(12)
    g = Permutation.identity(6)
    for _ in range(20):
        g = g * rng.choice(gens)
        assert b6.contains(g)


def test_bsgs_trivial_group():
    b = bsgs_build([], degree=5)
    assert b.order() == 1
    assert b.contains(Permutation.identity(5))
    assert not b.contains(Permutation.parse("(1,2)", 5))


def test_bsgs_base_prefix_gives_pointwise_stabilizer():
    # symmetric group on 4 points; prefix through point 0 exposes its stabilizer
    gens = [Permutation.parse("(1,2,3,4)", 4), Permutation.parse("(1,2)", 4)]
    b = bsgs_build(gens, base_prefix=(0,))
    assert b.order() == 24
    stab_gens = b.level_group_generators(1)
    stab = bsgs_build(stab_gens, degree=4)
    assert stab.order() == 6
    brute = [g for g in closure(gens) if g.apply(0) == 0]
    assert stab.order() == len(brute)
    assert all(stab.contains(g) for g in brute)


def test_orbit_stabilizer_on_natural_action():
    gens = [Permutation.parse("(1,2,3,4)", 4), Permutation.parse("(1,2)", 4)]
    result = orbit_stabilizer(gens, lambda p, g: g.apply(p), 0)
    assert result.orbit_size == 4
    stab_order = brute_force_order(result.stabilizer_generators)
    assert stab_order == 6
    assert result.orbit_size * stab_order == 24


def test_orbit_stabilizer_checks_action_consistency():
    gens = [Permutation.parse("(1,2,3)", 3)]

    def bogus(p, g):
        return (p + 2) % 3

    with pytest.raises(ActionConsistencyError):
        orbit_stabilizer(gens, bogus, 0)


def test_derived_subgroup_of_s3():
    gens = [Permutation.parse("(1,2,3)", 3), Permutation.parse("(1,2)", 3)]
    d = derived_subgroup(gens)
    db = bsgs_build(d)
    assert db.order() == 3
    # normality, sampled
    for g in closure(gens):
        for h in d:
            assert db.contains(conjugate(h, g))


def test_center_of_dihedral():
    gens = [Permutation.parse("(1,2,3,4)", 4), Permutation.parse("(1,3)", 4)]
    z = center_of(gens)
    assert len(z) == 2
    assert Permutation.parse("(1,3)(2,4)", 4) in z


def test_center_of_s3_is_trivial():
    gens = [Permutation.parse("(1,2,3)", 3), Permutation.parse("(1,2)", 3)]
    assert center_of(gens) == [Permutation.identity(3)]


def test_is_simple_small():
    a5 = [Permutation.parse("(1,2,3,4,5)", 5), Permutation.parse("(1,2,3)", 5)]
    assert len(closure(a5)) == 60
    assert is_simple_small(a5)
    s4 = [Permutation.parse("(1,2,3,4)", 4), Permutation.parse("(1,2)", 4)]
    assert not is_simple_small(s4)
    c3 = [Permutation.parse("(1,2,3)", 3)]
    assert is_simple_small(c3)


def test_check_relations():
    t = Permutation.parse("(1,2,3)", 3)
    e = Permutation.identity(3)
    assert check_relations([(("t", 2),)], {"t": e})
    assert not check_relations([(("t", 2),)], {"t": t})
    assert check_relations([(("t", 3),), (("t", -3),)], {"t": t})
    with pytest.raises(ValueError):
        check_relations([(("u", 1),)], {"t": t})


def test_commutator_convention():
    a = Permutation.parse("(1,2)", 3)
    b = Permutation.parse("(2,3)", 3)
    assert commutator(a, b) == a.inverse() * b.inverse() * a * b
    assert conjugate(a, b) == b.inverse() * a * b


def test_action_kernel_order():
    # C3 x C3 acting on 6 points, blocks {1,2,3} and {4,5,6}
    g1 = Permutation.parse("(1,2,3)", 6)
    g2 = Permutation.parse("(4,5,6)", 6)
    b = bsgs_build([g1, g2])
    assert b.order() == 9
    # both generators act trivially on the two blocks
    assert action_kernel_order(b, lambda p: 0 if p < 3 else 1) == 9
    # faithful action: singleton blocks
    assert action_kernel_order(b, lambda p: p) == 1


def test_action_kernel_rejects_broken_blocks():
    b = bsgs_build([Permutation.parse("(1,2,3)", 3)])
    with pytest.raises(BlockSystemError):
        action_kernel_order(b, lambda p: 0 if p < 2 else 1)


def test_hom_closure_identity_map():
    gens = [Permutation.parse("(1,2)", 6), Permutation.parse("(2,3,4,5,6)", 6)]
    hom = hom_closure([(g, g) for g in gens])
    assert len(hom) == 720
    for g in list(hom.table)[:50]:
        assert hom.apply(g) == g


def test_hom_closure_c2_example():
    src = Permutation.parse("(1,2)", 6)
    dst = Permutation.parse("(1,2)(3,6)(4,5)", 6)
    hom = hom_closure([(src, dst)])
    assert len(hom) == 2
    assert hom.apply(src) == dst


def test_hom_closure_rejects_non_homomorphism():
    src = Permutation.parse("(1,2)", 3)     # order 2
    dst = Permutation.parse("(1,2,3)", 3)   # order 3
    with pytest.raises(InconsistentImagesError):
        hom_closure([(src, dst)])


def test_closure_cap():
    gens = [Permutation.parse("(1,2)", 6), Permutation.parse("(2,3,4,5,6)", 6)]
    with pytest.raises(ClosureCapError):
        closure(gens, cap=100)


def test_bsgs_strong_generators_all_members():
    gens = [Permutation.parse("(2,3,4,5,6)", 6), Permutation.parse("(1,2)", 6)]
    b = bsgs_build(gens)
    full = set(closure(gens))
    for g in b.strong_generators():
        assert g in full


def test_bsgs_transversal_product_is_order():
    for images in [(1, 0, 2, 3), (1, 2, 3, 0)]:
        g = Permutation(images)
        b = bsgs_build([g])
        prod = 1
        for s in b.transversal_sizes():
            prod *= s
        assert prod == b.order()


def test_closure_deterministic_order():
    gens = [Permutation.parse("(1,2,3)", 3), Permutation.parse("(1,2)", 3)]
    assert closure(gens) == closure(gens)
    assert closure(gens)[0].is_identity()
    assert len(closure(gens)) == len(list(iter_permutations(range(3))))


def test_bsgs_is_deterministic():
    gens = [Permutation.parse("(2,3,4,5,6)", 6), Permutation.parse("(1,2)", 6)]
    a, b = bsgs_build(gens), bsgs_build(gens)
    assert a.base == b.base
    assert a.transversal_sizes() == b.transversal_sizes()
    assert a.strong_generators() == b.strong_generators()
