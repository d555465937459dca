import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cgtkit.finitefield import FFElement, FiniteField, conway_polynomial


KNOWN_CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (5, 1): (3, 1),
    (7, 1): (4, 1),
}


def test_conway_against_published_values():
    for (p, k), want in KNOWN_CONWAY.items():
        assert conway_polynomial(p, k) == want, (p, k)


def test_conway_polynomials_are_primitive():
    for p, k in [(2, 4), (3, 3), (5, 2), (7, 2)]:
        F = FiniteField(p, k)
        assert F.element_order(F.gen_code) == F.q - 1


def test_subfield_embedding_is_canonical_and_homomorphic():
    F4 = FiniteField(2, 2)
    F4096 = FiniteField(2, 12)
    img = F4.embed(F4.gen_code, F4096)
    assert F4096.element_order(img) == 3
    for a in range(4):
        for b in range(4):
            assert F4.embed(F4.mul(a, b), F4096) == \
                F4096.mul(F4.embed(a, F4096), F4.embed(b, F4096))
            assert F4.embed(F4.add(a, b), F4096) == \
                F4096.add(F4.embed(a, F4096), F4.embed(b, F4096))


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (7, 2), (5, 1)])
def test_field_axioms_exhaustive_small(p, k):
    F = FiniteField(p, k)
    elems = list(F.elements())
    for a in elems:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a in elems[: min(len(elems), 9)]:
        for b in elems[: min(len(elems), 9)]:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems[: min(len(elems), 9)]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@given(st.integers(0, 48), st.integers(0, 48), st.integers(0, 48))
@settings(max_examples=100)
def test_distributivity_gf49(a, b, c):
    F = FiniteField(7, 2)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_frobenius_is_additive_and_multiplicative():
    F = FiniteField(3, 3)
    for a in range(27):
        for b in range(0, 27, 5):
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_trace_lands_in_prime_field():
    F = FiniteField(3, 2)
    for a in range(9):
        assert F.trace(a) in (0, 1, 2)


def test_ffelement_wrapper_ops():
    F = FiniteField(2, 3)
    a, b = F(3), F(5)
    assert (a + b).code == F.add(3, 5)
    assert (a * b).code == F.mul(3, 5)
    assert (a / a).code == 1
    assert (-a + a).is_zero()
    with pytest.raises(ZeroDivisionError):
        F(0).inv()


def test_mixed_field_arithmetic_rejected():
    F8, F9 = FiniteField(2, 3), FiniteField(3, 2)
    with pytest.raises(ValueError):
        FFElement(F8, 1) + FFElement(F9, 1)
