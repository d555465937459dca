import json
from fractions import Fraction

import pytest

from cgtkit import catalog
from cgtkit.chartab import (CharacterTable, TableInvariantError,
                            class_mult_coeff, dixon_table, indicator,
                            tables_equivalent)
from cgtkit.cyclotomic import Cyclotomic, sqrt_int
from cgtkit.perms import parse_perm
from cgtkit.permgroup import build_chain, conjugacy_classes


def _gc(name):
    return catalog.class_system(name)


def test_s3_dixon_degrees():
    s3 = build_chain([parse_perm("(1,2)", 3), parse_perm("(1,2,3)", 3)])
    t = dixon_table(conjugacy_classes(s3), "S3")
    assert sorted(t.degrees) == [1, 1, 2]


def test_a5_dixon_degrees_and_golden_values():
    t = dixon_table(_gc("A5"), "A5")
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]
    i5a = t.class_named("5a")
    golden = {((1 + sqrt_int(5)) / 2).sort_key(), ((1 - sqrt_int(5)) / 2).sort_key()}
    got = {t.values[i][i5a].sort_key() for i in range(5) if t.degrees[i] == 3}
    assert got == golden


def test_class_mult_coeff_patterns():
    gc = _gc("A5")
    # a_{i, i^-1, 1} = |C_i|
    for k, c in enumerate(gc.classes):
        kinv = c.inverse_class()
        assert class_mult_coeff(gc, k, kinv, 0) == c.size
        # a_{1jk} = delta_jk
        assert class_mult_coeff(gc, 0, k, k) == 1
        if k:
            assert class_mult_coeff(gc, 0, k, 0) == 0


def test_class_mult_coeff_s3_transpositions():
    s3 = build_chain([parse_perm("(1,2)", 3), parse_perm("(1,2,3)", 3)])
    gc = conjugacy_classes(s3)
    assert class_mult_coeff(gc, 1, 1, 2) == 3


def test_m11_table():
    t = catalog.character_table("M11")
    assert sorted(t.degrees) == [1, 10, 10, 10, 11, 16, 16, 44, 45, 55]
    assert sum(d * d for d in t.degrees) == 7920
    inds = [indicator(t, i) for i in range(10)]
    d16 = [ind for ind, d in zip(inds, t.degrees) if d == 16]
    assert d16 == [0, 0]
    assert indicator(t, 0) == 1  # trivial character


def test_indicator_a5_all_real():
    t = catalog.character_table("A5")
    assert [indicator(t, i) for i in range(5)] == [1] * 5


def test_inverse_formula_oracle_equivalence():
    # a_{ijk} reconstructed from the table equals the brute count (|G|<=1e4)
    for name in ("A5", "L2(7)"):
        gc = _gc(name)
        t = catalog.character_table(name)
        order = t.order
        import random
        rng = random.Random(2)
        k = len(gc.classes)
        for _ in range(12):
            i, j, kk = rng.randrange(k), rng.randrange(k), rng.randrange(k)
            total = Cyclotomic.zero()
            for row in t.values:
                vi, vj, vk = row[i], row[j], row[kk].conj()
                if vi.is_zero() or vj.is_zero() or vk.is_zero():
                    continue
                total = total + vi * vj * vk / row[t._identity_col()].integer()
            val = Fraction(gc.classes[i].size * gc.classes[j].size, order) \
                * total.rational()
            assert val == class_mult_coeff(gc, i, j, kk)


def test_roundtrip_and_corruption_detection():
    t = catalog.character_table("A5")
    blob = json.dumps(t.to_json())
    t2 = CharacterTable.from_json(json.loads(blob))
    assert tables_equivalent(t, t2)
    # perturb one character value: orthogonality must catch it
    obj = json.loads(blob)
    obj["characters"][2][1]["coeffs"] = [[0, 9, 1]]
    with pytest.raises(TableInvariantError):
        CharacterTable.from_json(obj)
    # truncation: schema error
    obj = json.loads(blob)
    del obj["classes"]
    with pytest.raises((KeyError, ValueError, TypeError)):
        CharacterTable.from_json(obj)


def test_structure_constant_integrality_small():
    from cgtkit.classalg import triple_count
    for name in ("A5", "A6", "L2(7)", "U3(3)"):
        t = catalog.character_table(name)
        k = t.n_classes
        for i in range(k):
            for j in range(k):
                for kk in range(k):
                    assert triple_count(t, i, j, kk) >= 0


def test_tables_equivalent_rejects_wrong_table():
    t5 = catalog.character_table("A5")
    t6 = catalog.character_table("A6")
    assert not tables_equivalent(t5, t6)
