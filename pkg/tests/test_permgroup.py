from math import factorial, gcd

import pytest

from cgtkit.perms import Permutation, parse_perm
from cgtkit.permgroup import (GroupTooLargeError, build_chain,
                              conjugacy_classes, derived_subgroup,
                              is_primitive, is_transitive, orbits)


def A(n):
    gens = [parse_perm("(1,2,3)", n)]
    cyc = range(1, n + 1) if n % 2 else range(2, n + 1)
    gens.append(Permutation.from_cycles(n, [[i - 1 for i in cyc]]))
    return build_chain(gens)


def test_chain_orders():
    assert A(5).order() == 60
    assert build_chain([parse_perm("(1,2,3,4,5,6,7)", 7)]).order() == 7
    m11 = build_chain([parse_perm("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                       parse_perm("(3,7,11,8)(4,10,5,6)", 11)])
    assert m11.order() == 7920
    # 4-transitivity shows up as base orbits 11*10*9*8
    assert m11.order() == 11 * 10 * 9 * 8


def test_order_matches_exhaustive_count_small():
    for chain in (A(5), build_chain([parse_perm("(1,2)", 4), parse_perm("(1,2,3,4)", 4)])):
        assert sum(1 for _ in chain.elements()) == chain.order()


def test_membership():
    a5 = A(5)
    assert not a5.contains(parse_perm("(1,2)", 5))
    for g in a5.generators:
        assert a5.contains(g)
    c5 = build_chain([parse_perm("(1,2,3,4,5)", 5)])
    assert c5.contains(parse_perm("(1,3,5,2,4)", 5))


def test_transitivity_and_primitivity():
    assert is_transitive(A(6)) and is_primitive(A(6))
    c4 = build_chain([parse_perm("(1,2,3,4)", 4)])
    ok, witness = is_primitive(c4, with_witness=True)
    assert is_transitive(c4) and not ok
    assert witness == [[0, 2], [1, 3]]
    intrans = build_chain([parse_perm("(1,2,3)", 5)])
    assert not is_transitive(intrans)
    assert orbits(intrans) == [[0, 1, 2], [3], [4]]


def test_s3_classes():
    s3 = build_chain([parse_perm("(1,2)", 3), parse_perm("(1,2,3)", 3)])
    gc = conjugacy_classes(s3)
    assert [c.size for c in gc.classes] == [1, 3, 2]
    assert [c.name for c in gc.classes] == ["1a", "2a", "3a"]
    assert gc.classes[0].power_map[0] == 0


def test_a5_classes_with_cycle_census():
    gc = conjugacy_classes(A(5))
    sizes = {c.name: c.size for c in gc.classes}
    assert sizes == {"1a": 1, "2a": 15, "3a": 20, "5a": 12, "5b": 12}
    i5a = gc.class_named("5a")
    assert gc.power_class(i5a, 2) == gc.class_named("5b")
    assert gc.power_class(i5a, -1) == i5a  # 5-cycles are real in A5


def test_m11_classes():
    m11 = build_chain([parse_perm("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                       parse_perm("(3,7,11,8)(4,10,5,6)", 11)])
    gc = conjugacy_classes(m11)
    assert len(gc.classes) == 10
    sz = {c.name: c.size for c in gc.classes}
    assert sz["11a"] == 720 and sz["11b"] == 720
    assert gc.power_class(gc.class_named("11a"), 2) == gc.class_named("11b")
    assert sum(c.size for c in gc.classes) == 7920
    for c in gc.classes:
        assert 7920 % c.size == 0


def test_power_map_composition_property():
    gc = conjugacy_classes(A(6))
    for c in gc.classes:
        o = c.rep_order
        for a in range(1, o):
            if gcd(a, o) != 1:
                continue
            for b in range(1, o):
                if gcd(b, o) != 1:
                    continue
                k1 = c.power_map[a]
                step = gc.classes[k1].power_map[b % gc.classes[k1].rep_order]
                assert step == c.power_map[(a * b) % o]


def test_enumeration_bound():
    a13 = A(13)
    with pytest.raises(GroupTooLargeError) as err:
        conjugacy_classes(a13)
    assert str(1 << 21) in str(err.value)
    with pytest.raises(GroupTooLargeError):
        conjugacy_classes(A(9), bound=1000)


def test_derived_subgroup():
    s3 = build_chain([parse_perm("(1,2)", 3), parse_perm("(1,2,3)", 3)])
    assert derived_subgroup(s3).order() == 3


def test_random_element_uniform_support():
    import random
    rng = random.Random(0)
    a5 = A(5)
    seen = {a5.random_element(rng).images for _ in range(400)}
    assert len(seen) == 60  # all elements reachable
