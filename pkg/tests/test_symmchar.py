from math import factorial

import pytest

from cgtkit.chartab import dixon_table, tables_equivalent
from cgtkit.cyclotomic import sqrt_int
from cgtkit.perms import Permutation
from cgtkit.permgroup import conjugacy_classes
from cgtkit import catalog
from cgtkit.symmchar import (AnClassSystem, SnClassSystem, _type_elements,
                             an_pair_covers, an_table, class_size_sn,
                             hook_degree, mn_value, partitions, sn_table)


def test_mn_trivial_and_sign():
    assert mn_value((5,), (3, 1, 1)) == 1
    # sign character value is (-1)^(n - #parts)
    for mu in partitions(6):
        assert mn_value((1,) * 6, mu) == (-1) ** (6 - len(mu))


def test_mn_degree_is_hook_length_formula():
    assert mn_value((3, 2), (1,) * 5) == 5
    for n in range(1, 13):
        for lam in partitions(n):
            assert mn_value(lam, (1,) * n) == hook_degree(lam)


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_value((2, 1), (4,))


def test_s4_table():
    t = sn_table(4)
    assert sorted(t.degrees) == [1, 1, 2, 3, 3]
    assert sum(d * d for d in t.degrees) == 24


def test_sum_of_squares_identities():
    for n in (5, 6, 7):
        assert sum(hook_degree(l) ** 2 for l in partitions(n)) == factorial(n)
        t = an_table(n)
        assert sum(d * d for d in t.degrees) == factorial(n) // 2


def test_a5_split_classes_and_values():
    t = an_table(5)
    cs = AnClassSystem(5)
    split = [c for c in cs.classes if c.split_letter]
    assert len(split) == 2 and all(c.size == 12 for c in split)
    golden = (1 + sqrt_int(5)) / 2
    i5a = t.class_named("5a")
    vals = {t.values[i][i5a].sort_key() for i in range(5) if t.degrees[i] == 3}
    assert golden.sort_key() in vals


def test_a7_has_coprime_odd_orders():
    cs = AnClassSystem(7)
    orders = {c.rep_order for c in cs.classes}
    assert {5, 7} <= orders


def test_type_element_enumeration_counts():
    for n, mu in [(3, (2, 1)), (4, (2, 2)), (5, (3, 1, 1)), (5, (2, 2, 1)),
                  (6, (3, 3)), (6, (2, 2, 1, 1))]:
        cnt = sum(1 for _ in _type_elements(n, mu))
        assert cnt == class_size_sn(n, mu), (n, mu)


def test_an_class_membership_and_split_sign():
    cs = AnClassSystem(7)
    i7a = cs.class_named("7a")
    i7b = cs.class_named("7b")
    rep = cs.classes[i7a].representative
    # an odd conjugator must land in the partner class
    tau = Permutation.from_cycles(7, [[0, 1]])
    assert cs.class_of(rep.conj(tau)) == i7b
    # even conjugator stays
    sigma = Permutation.from_cycles(7, [[0, 1, 2]])
    assert cs.class_of(rep.conj(sigma)) == i7a
    # 7a^(-1) is 7b in A7 (Legendre(-1|7) = -1)
    assert cs.power_class(i7a, -1) == i7b


def test_an_table_equals_dixon_small():
    for n in (5, 6):
        ta = an_table(n)
        td = dixon_table(catalog.class_system(f"A{n}"), f"A{n}")
        assert tables_equivalent(ta, td)


def test_an_pair_covers_a5():
    ok, missed = an_pair_covers(5, "5a", "5b")
    assert ok and missed == []
    ok, missed = an_pair_covers(5, "5a", "5a")
    assert not ok and missed == ["2+2+1"]


def test_class_sizes_sum_to_group_order():
    for n in (5, 6, 7, 8):
        cs = AnClassSystem(n)
        assert sum(c.size for c in cs.classes) == factorial(n) // 2
        sn = SnClassSystem(n)
        assert sum(c.size for c in sn.classes) == factorial(n)


def test_budget_guard():
    with pytest.raises(ValueError):
        AnClassSystem(19)
    with pytest.raises(ValueError):
        sn_table(19)
