"""Finite fields GF(p^k) with deterministic defining polynomials.

Defining polynomials follow the Conway-polynomial convention, computed on
demand (lexicographically least primitive polynomial, in the Conway word
order, compatible with the Conway polynomials of all proper subfields).
That makes serialized field elements and subfield embeddings reproducible:
GF(p^k) embeds in GF(p^K) by sending the canonical generator to
g^((p^K-1)/(p^k-1)).

Elements are integer codes in [0, p^k): the base-p digits are the
coefficients of the polynomial residue, little-endian.  Small fields get
log/exp tables so multiplication is two lookups.
"""

from __future__ import annotations

from functools import lru_cache

import sympy

__all__ = ["FiniteField", "FFElement", "conway_polynomial"]

_LOG_TABLE_LIMIT = 1 << 16


# -- polynomial helpers over GF(p), dense little-endian int lists ----------

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f

def _pmulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return _pdivmod(out, mod, p)[1]

def _pdivmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    q = [0] * max(0, len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] % p
        if c:
            c = c * inv_lead % p
            q[i - dg] = c
            for j, b in enumerate(g):
                f[i - dg + j] = (f[i - dg + j] - c * b) % p
    return q, _ptrim(f)

def _ppowmod(f, n, mod, p):
    r = [1]
    b = _pdivmod(f, mod, p)[1]
    while n:
        if n & 1:
            r = _pmulmod(r, b, mod, p)
        b = _pmulmod(b, b, mod, p)
        n >>= 1
    return r

def _pgcd(f, g, p):
    f, g = _ptrim(list(f)), _ptrim(list(g))
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f

def _psub(f, g, p):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return _ptrim([(a - b) % p for a, b in zip(f, g)])

def _is_irreducible(f, p):
    k = len(f) - 1
    if k <= 0:
        return False
    x = _pdivmod([0, 1], f, p)[1]
    xq = _ppowmod([0, 1], p ** k, f, p)
    if _psub(xq, x, p):
        return False
    for r in sympy.primefactors(k):
        xqd = _ppowmod([0, 1], p ** (k // r), f, p)
        diff = _psub(xqd, x, p)
        if len(_pgcd(diff, f, p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def conway_polynomial(p: int, k: int) -> tuple:
    """Conway polynomial C_{p,k}, little-endian monic coefficient tuple."""
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    q = p ** k
    qfactors = sympy.primefactors(q - 1)
    subs = [(d, conway_polynomial(p, d)) for d in range(1, k) if k % d == 0]

    def is_primitive(f):
        if not _is_irreducible(f, p):
            return False
        x = [0, 1]
        for r in qfactors:
            if _ppowmod(x, (q - 1) // r, f, p) == [1]:
                return False
        return True

    def compatible(f):
        for d, cd in subs:
            y = _ppowmod([0, 1], (q - 1) // (p ** d - 1), f, p)
            # evaluate C_{p,d} at y mod f
            acc = [0]
            ypow = [1]
            for c in cd:
                if c:
                    term = [a * c % p for a in ypow]
                    acc = _ptrim([(a + b) % p for a, b in
                                  zip(acc + [0] * len(term), term + [0] * len(acc))])
                y_next = _pmulmod(ypow, y, f, p)
                ypow = y_next
            if acc:
                return False
        return True

    # enumerate candidates in the Conway word order:
    # minimize ((-1)^(k-i) a_i mod p) for i = k-1, ..., 0 lexicographically
    def word_to_poly(word):
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        for idx, w in enumerate(word):
            i = k - 1 - idx
            sign = -1 if (k - i) % 2 else 1
            coeffs[i] = (sign * w) % p
        return coeffs

    word = [0] * k
    while True:
        f = word_to_poly(word)
        if f[0] != 0 and is_primitive(f) and compatible(f):
            return tuple(f)
        i = k - 1
        while i >= 0 and word[i] == p - 1:
            word[i] = 0
            i -= 1
        if i < 0:
            raise AssertionError(f"no Conway polynomial found for ({p},{k})")
        word[i] += 1


class FiniteField:
    """GF(p^k) with integer-coded elements and cached arithmetic tables."""

    _cache: dict = {}

    def __new__(cls, p: int, k: int = 1):
        key = (p, k)
        if key in cls._cache:
            return cls._cache[key]
        self = super().__new__(cls)
        cls._cache[key] = self
        self._init(p, k)
        return self

    def _init(self, p: int, k: int):
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        self.poly = conway_polynomial(p, k)
        self._pows = [p ** i for i in range(k + 1)]
        self._log = None
        self._exp = None
        if k > 1 and self.q <= _LOG_TABLE_LIMIT:
            self._build_tables()

    # generator: the residue class of x for k > 1, else the smallest
    # primitive root (the root of the Conway polynomial x - r)
    @property
    def gen_code(self) -> int:
        if self.k == 1:
            return (-self.poly[0]) % self.p
        return self.p  # digits (0, 1, 0, ...) = x

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        exp = [0] * (q - 1)
        vec = [1] + [0] * (k - 1)
        mod = list(self.poly)
        for i in range(q - 1):
            exp[i] = sum(c * self._pows[j] for j, c in enumerate(vec))
            # multiply by x
            vec = [0] + vec[:-1] if vec[-1] == 0 else self._mulx_reduce(vec, mod)
        log = [0] * q
        for i, code in enumerate(exp):
            log[code] = i
        self._exp = exp
        self._log = log

    def _mulx_reduce(self, vec, mod):
        lead = vec[-1]
        out = [0] + vec[:-1]
        if lead:
            for j in range(self.k):
                out[j] = (out[j] - lead * mod[j]) % self.p
        return out

    # -- code-level arithmetic --------------------------------------------

    def digits(self, a: int):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def from_digits(self, digs) -> int:
        return sum(int(d) % self.p * self._pows[i] for i, d in enumerate(digs))

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, out, mul = self.p, 0, 1
        for _ in range(self.k):
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p, out, mul = self.p, 0, 1
        for _ in range(self.k):
            out += (-a % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        f = _pmulmod(self.digits(a), self.digits(b), list(self.poly), self.p)
        return self.from_digits(f + [0] * self.k)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        n = int(n)
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self._log is not None and a != 0 and self.k > 1:
            return self._exp[(self._log[a] * n) % (self.q - 1)]
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for r in sympy.primefactors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def trace(self, a: int) -> int:
        """Absolute trace to GF(p), returned as an int mod p."""
        t, b = 0, a
        for _ in range(self.k):
            t = self.add(t, b)
            b = self.frobenius(b)
        return t

    def embed(self, a: int, big: "FiniteField") -> int:
        """Canonical (Conway-compatible) embedding into GF(p^K), k | K."""
        if big.p != self.p or big.k % self.k:
            raise ValueError("no embedding")
        if big is self:
            return a
        img_gen = big.pow(big.gen_code, (big.q - 1) // (self.q - 1))
        # write a in powers of the small generator? cheaper: digits are in
        # the x-basis, and x itself is the generator for k > 1
        if self.k == 1:
            return a % self.p
        out, xpow = 0, 1
        for d in self.digits(a):
            if d:
                out = big.add(out, big.mul(d % self.p, xpow))
            xpow = big.mul(xpow, img_gen)
        return out

    def elements(self):
        return range(self.q)

    def __call__(self, code: int) -> "FFElement":
        return FFElement(self, code % self.q if code >= 0 else code % self.q)

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class FFElement:
    """A field element: thin immutable wrapper over (field, code)."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _check(self, other):
        if isinstance(other, int):
            return FFElement(self.field, other % self.field.p)
        if not isinstance(other, FFElement) or other.field is not self.field:
            raise ValueError("field mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        return FFElement(self.field, self.field.add(self.code, o.code))

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        o = self._check(other)
        return FFElement(self.field, self.field.sub(self.code, o.code))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        return FFElement(self.field, self.field.mul(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        return FFElement(self.field, self.field.mul(self.code, self.field.inv(o.code)))

    def __pow__(self, n):
        return FFElement(self.field, self.field.pow(self.code, n))

    def inv(self):
        return FFElement(self.field, self.field.inv(self.code))

    def frobenius(self):
        return FFElement(self.field, self.field.frobenius(self.code))

    def is_zero(self):
        return self.code == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == other % self.field.p and self.field.k >= 1 and (other % self.field.p) == self.code
        return isinstance(other, FFElement) and other.field is self.field and other.code == self.code

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __repr__(self):
        return f"{self.field}({self.code})"
