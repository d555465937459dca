import pytest
import sympy

from cgtkit.zsigmondy import (classify_small_zsigmondy, is_prime_power,
                              phi_star, prime_divisors, scan_reports)


def test_phi_star_reference_values():
    assert phi_star(2, 6) == 1
    assert phi_star(2, 4) == 5
    assert phi_star(2, 20) == 41
    assert phi_star(3, 1) == 2
    assert phi_star(2, 10) == 11


def test_phi_star_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        phi_star(6, 3)
    with pytest.raises(ValueError):
        phi_star(12, 2)


def test_prime_power_recognition():
    assert is_prime_power(8) == (2, 3)
    assert is_prime_power(27) == (3, 3)
    assert is_prime_power(7) == (7, 1)
    assert is_prime_power(1) is None
    assert is_prime_power(36) is None


def test_prime_divisors():
    assert prime_divisors(1) == []
    assert prime_divisors(1023) == [3, 11, 31]
    with pytest.raises(ValueError):
        prime_divisors((1 << 129))


def test_scan_exception_lists_small_grid():
    got = classify_small_zsigmondy(5, 6)
    ones = [(r.q, r.e) for r in got if r.category == "one"]
    assert ones == [(2, 6)]
    got = classify_small_zsigmondy(5, 20)
    eplus = sorted((r.q, r.e) for r in got if r.category == "e_plus_1")
    assert eplus == [(2, 4), (2, 10), (2, 12), (2, 18), (3, 4), (3, 6), (5, 6)]
    got = classify_small_zsigmondy(4, 20)
    twoe = sorted((r.q, r.e) for r in got if r.category == "two_e_plus_1")
    assert twoe == [(2, 3), (2, 8), (2, 20), (4, 3), (4, 6)]


def test_primitive_prime_congruence_property():
    for r in scan_reports(9, 12):
        for p in prime_divisors(r.phi_star):
            assert p % r.e == 1, (r.q, r.e, p)


def test_zsigmondy_existence_on_grid():
    for r in scan_reports(16, 14):
        if (r.q, r.e) != (2, 6):
            assert r.phi_star > 1


def test_phi_star_divides_cyclotomic_value():
    # phi_star(q,e) divides Phi_e(q) and the quotient is a power of the
    # largest prime divisor of e
    for q in (2, 3, 4, 5, 7, 9):
        for e in range(3, 31):
            if q ** e - 1 > (1 << 128):
                break
            val = int(sympy.cyclotomic_poly(e, q))
            ps = phi_star(q, e)
            assert val % ps == 0
            quotient = val // ps
            if quotient > 1:
                biggest = max(sympy.primefactors(e))
                while quotient % biggest == 0:
                    quotient //= biggest
                assert quotient == 1, (q, e)
