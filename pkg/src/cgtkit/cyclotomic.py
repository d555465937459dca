"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are stored as rational coefficient vectors over a fixed integral
basis of Q(zeta_e), so equality is decidable structurally and there are no
tolerances anywhere.  The basis at conductor e = prod p^a is the tensor
product of the power bases of the Q(zeta_{p^a}): an exponent j in [0, e)
is a basis exponent iff (j mod p^a) < phi(p^a) for every prime power
p^a || e.  Out-of-basis exponents are rewritten with the relation
zeta^{(p-1)p^{a-1}} = -(1 + zeta^{p^{a-1}} + ... + zeta^{(p-2)p^{a-1}})
applied to the p-component only.

After every operation the conductor is reduced to the minimal one: the
value lies in Q(zeta_{e/p}) iff every basis exponent in its support is
divisible by p, in which case exponents divide through by p.  Rationals
therefore always end up at conductor 1, and conductors 2 mod 4 never
survive reduction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

BigRational = Fraction

__all__ = ["BigRational", "Cyclotomic", "zeta", "sqrt_int"]


@lru_cache(maxsize=None)
def _conductor_data(e: int):
    """Per-conductor structure: [(p, p^a, phi(p^a), crt_unit), ...].

    crt_unit c_p satisfies c_p = 1 mod p^a and c_p = 0 mod e/p^a, so adding
    delta*c_p to an exponent shifts its p-component by delta and fixes the
    rest.
    """
    data = []
    m = e
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            pa = 1
            while m % p == 0:
                m //= p
                a += 1
                pa *= p
            rest = e // pa
            c = (rest * pow(rest, -1, pa)) % e if pa < e else 1 % e
            data.append((p, pa, pa - pa // p, c))
        p += 1 if p == 2 else 2
    if m > 1:
        pa = m
        rest = e // pa
        c = (rest * pow(rest, -1, pa)) % e if pa < e else 1 % e
        data.append((m, pa, pa - pa // m, c))
    return tuple(data)


def _canonicalize(e: int, coeffs: dict) -> tuple[int, dict]:
    """Rewrite onto the basis at conductor e, then minimize the conductor."""
    if e < 1:
        raise ValueError("conductor must be positive")
    cur = {}
    for j, c in coeffs.items():
        if c:
            j %= e
            cur[j] = cur.get(j, 0) + c
    # basis rewriting, one prime at a time
    for p, pa, phi_pa, cp in _conductor_data(e):
        step = pa // p
        nxt: dict = {}
        for j, c in cur.items():
            if not c:
                continue
            s = j % pa
            if s < phi_pa:
                nxt[j] = nxt.get(j, 0) + c
                continue
            u = s - phi_pa
            for i in range(p - 1):
                jj = (j + cp * (u + i * step - s)) % e
                nxt[jj] = nxt.get(jj, 0) - c
        cur = nxt
    cur = {j: c for j, c in cur.items() if c}
    # minimal conductor descent
    changed = True
    while changed and e > 1:
        changed = False
        for p, _, _, _ in _conductor_data(e):
            if all(j % p == 0 for j in cur):
                e //= p
                cur = {j // p: c for j, c in cur.items()}
                # re-express on the basis of the smaller conductor
                if e > 1:
                    e, cur = _canonicalize(e, cur)
                changed = True
                break
    if not cur:
        return 1, {}
    return e, cur


class Cyclotomic:
    """An element of Q(zeta_e), exact and in canonical form."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: dict | None = None, _canonical: bool = False):
        if coeffs is None:
            coeffs = {}
        coeffs = {j: Fraction(c) for j, c in coeffs.items() if c}
        if _canonical:
            self.e = e
            self.coeffs = coeffs
        else:
            self.e, self.coeffs = _canonicalize(e, coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, x) -> "Cyclotomic":
        x = Fraction(x)
        return cls(1, {0: x} if x else {}, _canonical=True)

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, {}, _canonical=True)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls.from_rational(1)

    # -- predicates / extractors ------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.e == 1

    def rational(self) -> Fraction:
        if self.e != 1:
            raise ValueError(f"not a rational value: {self}")
        return self.coeffs.get(0, Fraction(0))

    def is_integer(self) -> bool:
        return self.e == 1 and self.coeffs.get(0, Fraction(0)).denominator == 1

    def integer(self) -> int:
        r = self.rational()
        if r.denominator != 1:
            raise ValueError(f"not an integer: {self}")
        return r.numerator

    def is_real(self) -> bool:
        return self.conj() == self

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        e = _lcm(self.e, o.e)
        m1, m2 = e // self.e, e // o.e
        out: dict = {}
        for j, c in self.coeffs.items():
            out[j * m1 % e] = out.get(j * m1 % e, 0) + c
        for j, c in o.coeffs.items():
            out[j * m2 % e] = out.get(j * m2 % e, 0) + c
        return Cyclotomic(e, out)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, {j: -c for j, c in self.coeffs.items()}, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return Cyclotomic.zero()
            return Cyclotomic(self.e, {j: c * f for j, c in self.coeffs.items()}, _canonical=True)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero()
        if other.e == 1:
            return self * other.rational()
        if self.e == 1:
            return other * self.rational()
        e = _lcm(self.e, other.e)
        m1, m2 = e // self.e, e // other.e
        out: dict = {}
        for j1, c1 in self.coeffs.items():
            b1 = j1 * m1
            for j2, c2 in other.coeffs.items():
                j = (b1 + j2 * m2) % e
                out[j] = out.get(j, 0) + c1 * c2
        return Cyclotomic(e, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r = Cyclotomic.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism zeta_e -> zeta_e^a (a coprime to e)."""
        if self.e == 1:
            return self
        a %= self.e
        if _gcd(a, self.e) != 1:
            raise ValueError(f"galois exponent {a} not coprime to conductor {self.e}")
        return Cyclotomic(self.e, {j * a % self.e: c for j, c in self.coeffs.items()})

    def conj(self) -> "Cyclotomic":
        """Complex conjugation: zeta_e -> zeta_e^{-1}."""
        if self.e <= 2:
            return self
        return self.galois(self.e - 1)

    def inv(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic")
        if self.e == 1:
            return Cyclotomic.from_rational(1 / self.rational())
        prod = Cyclotomic.one()
        for a in range(2, self.e):
            if _gcd(a, self.e) == 1:
                prod = prod * self.galois(a)
        norm = self * prod
        if not norm.is_rational():
            raise AssertionError("norm failed to land in Q")
        return prod * (1 / norm.rational())

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Cyclotomic):
            return self * other.inv()
        return NotImplemented

    # -- container protocol -------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.e == o.e and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.e, frozenset(self.coeffs.items())))

    def sort_key(self):
        return (self.e, tuple(sorted((j, c.numerator, c.denominator) for j, c in self.coeffs.items())))

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j in sorted(self.coeffs):
            c = self.coeffs[j]
            if j == 0:
                parts.append(str(c))
            else:
                z = f"z{self.e}" if j == 1 else f"z{self.e}^{j}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        s = "+".join(parts).replace("+-", "-")
        return s

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        """Spec wire format: {"e": int, "coeffs": [[j, num, den], ...]}, j ascending."""
        return {
            "e": self.e,
            "coeffs": [[j, self.coeffs[j].numerator, self.coeffs[j].denominator]
                       for j in sorted(self.coeffs)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Cyclotomic":
        e = obj["e"]
        coeffs = {}
        for j, num, den in obj["coeffs"]:
            coeffs[int(j)] = Fraction(int(num), int(den))
        return cls(int(e), coeffs)


def zeta(e: int, j: int = 1) -> Cyclotomic:
    """The root of unity zeta_e^j."""
    return Cyclotomic(e, {j % e: Fraction(1)})


def cyclo_arith(a: Cyclotomic, b: Cyclotomic | None, op: str) -> Cyclotomic:
    """Dispatch form of the basic field operations (CLI surface)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "conj":
        return a.conj()
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")


def sqrt_int(n: int) -> Cyclotomic:
    """Exact square root of an integer as a cyclotomic number.

    Uses quadratic Gauss sums: sum_a legendre(a,p) zeta_p^a equals sqrt(p)
    for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4; sqrt(2) = zeta_8 + zeta_8^-1
    and sqrt(-1) = zeta_4.
    """
    if n == 0:
        return Cyclotomic.zero()
    neg = n < 0
    n = abs(n)
    square = 1
    odd_primes = []
    two = False
    m = n
    while m % 2 == 0:
        m //= 2
        two = not two
        if not two:
            square *= 2
    d = 3
    while d * d <= m:
        while m % d == 0:
            m //= d
            if d in odd_primes:
                odd_primes.remove(d)
                square *= d
            else:
                odd_primes.append(d)
        d += 2
    if m > 1:
        if m in odd_primes:
            odd_primes.remove(m)
            square *= m
        else:
            odd_primes.append(m)
    out = Cyclotomic.from_rational(square)
    i_factors = 0
    if two:
        out = out * (zeta(8) + zeta(8, 7))
    for p in odd_primes:
        gauss = Cyclotomic.zero()
        for a in range(1, p):
            gauss = gauss + (zeta(p, a) if pow(a, (p - 1) // 2, p) == 1 else -zeta(p, a))
        if p % 4 == 3:
            i_factors += 1  # gauss = i*sqrt(p)
        out = out * gauss
    if neg:
        i_factors -= 1  # multiply by i overall
    i_factors %= 4
    if i_factors == 1:
        out = out * zeta(4, 3)  # divide by i once: * (-i)
    elif i_factors == 2:
        out = -out
    elif i_factors == 3:
        out = out * zeta(4)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return a // _gcd(a, b) * b


def cyclo_sum(values: Iterable[Cyclotomic]) -> Cyclotomic:
    total = Cyclotomic.zero()
    for v in values:
        total = total + v
    return total
