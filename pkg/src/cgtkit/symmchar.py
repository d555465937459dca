"""Symmetric and alternating group characters via Murnaghan-Nakayama.

Everything here is combinatorial in the cycle types, so it scales past
element enumeration (n <= 18).  The alternating-group table is obtained by
restriction: conjugate partition pairs give one character, self-conjugate
partitions split into two characters whose values differ only on the split
classes (cycle type = the diagonal hooks), where they are
(eps +- sqrt(eps * prod hooks)) / 2 with eps = (-1)^((n-r)/2).

Split conjugacy classes (all parts odd and distinct) are named 'a'/'b';
the 'a' class contains the representative whose cycles list points in
increasing order.  Membership of the two is decided by the sign of any
aligning conjugator, which is well defined because the centralizer of such
an element is even-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
import itertools

from .chartab import CharacterTable, ClassInfo
from .cyclotomic import Cyclotomic, sqrt_int
from .perms import Permutation

__all__ = [
    "partitions", "hook_degree", "mn_value", "sn_table", "an_table",
    "AnClassSystem", "SnClassSystem", "an_pair_covers", "conjugate_partition",
]

SN_BUDGET = 18


def partitions(n: int):
    """All partitions of n as weakly decreasing tuples, lex-descending."""
    def rec(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest
    return rec(n, n)


def conjugate_partition(lam: tuple) -> tuple:
    if not lam:
        return ()
    out = []
    for i in range(lam[0]):
        out.append(sum(1 for part in lam if part > i))
    return tuple(out)


def hook_degree(lam: tuple) -> int:
    """Dimension of the irreducible indexed by lam (hook length formula)."""
    n = sum(lam)
    conj = conjugate_partition(lam)
    deg = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            deg //= row - j + conj[j] - i - 1
    return deg


@lru_cache(maxsize=None)
def _beta_set(lam: tuple) -> tuple:
    r = len(lam)
    return tuple(lam[i] + (r - 1 - i) for i in range(r))


def _strips(lam: tuple, k: int):
    """Removable border strips of size k: yields (smaller_partition, sign)."""
    beta = list(_beta_set(lam))
    bset = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        r = len(newbeta)
        newlam = tuple(newbeta[i] - (r - 1 - i) for i in range(r))
        newlam = tuple(x for x in newlam if x > 0)
        yield newlam, -1 if height % 2 else 1


@lru_cache(maxsize=None)
def mn_value(lam: tuple, mu: tuple) -> int:
    """Character value chi^lam on the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for newlam, sign in _strips(lam, k):
        total += sign * mn_value(newlam, rest)
    return total


def cycle_type_order(mu: tuple) -> int:
    o = 1
    for part in mu:
        o = o * part // gcd(o, part)
    return o


def class_size_sn(n: int, mu: tuple) -> int:
    z = 1
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for k, m in mult.items():
        z *= k ** m * factorial(m)
    return factorial(n) // z


def is_even_type(mu: tuple) -> bool:
    return sum(part - 1 for part in mu) % 2 == 0


def splits_in_an(mu: tuple) -> bool:
    return all(p % 2 == 1 for p in mu) and len(set(mu)) == len(mu)


def canonical_rep(mu: tuple, n: int) -> Permutation:
    cycles = []
    pt = 0
    for part in mu:
        cycles.append(list(range(pt, pt + part)))
        pt += part
    return Permutation.from_cycles(n, cycles)


def type_name(mu: tuple) -> str:
    return "+".join(str(p) for p in mu)


def align_sign(perm: Permutation, mu: tuple) -> int:
    """Sign of a conjugator carrying canonical_rep(mu) to perm.

    Only valid when mu has pairwise distinct parts (the split situation),
    where the conjugator's sign is independent of the choices made.
    """
    n = perm.degree
    rep = canonical_rep(mu, n)
    by_len_perm = {}
    for c in perm.cycles(include_fixed=True):
        mn = min(c)
        i = c.index(mn)
        by_len_perm[len(c)] = c[i:] + c[:i]
    images = [0] * n
    for c in rep.cycles(include_fixed=True):
        target = by_len_perm[len(c)]
        for a, b in zip(c, target):
            images[a] = b
    sigma = Permutation(images)
    return sigma.sign()


# -- class systems -------------------------------------------------------------

@dataclass
class CombClass:
    """A combinatorially described conjugacy class of S_n or A_n."""
    name: str
    cycle_type: tuple
    representative: Permutation
    size: int
    rep_order: int
    power_map: dict
    split_letter: str = ""  # "", "a" or "b"


class SnClassSystem:
    def __init__(self, n: int):
        if n > SN_BUDGET:
            raise ValueError(f"n = {n} beyond the n <= {SN_BUDGET} budget")
        self.n = n
        self.group_order = factorial(n)
        self.degree = n
        types = sorted(partitions(n),
                       key=lambda mu: (cycle_type_order(mu), class_size_sn(n, mu), mu))
        self.classes = []
        self._type_index = {}
        for mu in types:
            self._type_index[mu] = len(self.classes)
            self.classes.append(CombClass(
                name=type_name(mu), cycle_type=mu,
                representative=canonical_rep(mu, n),
                size=class_size_sn(n, mu),
                rep_order=cycle_type_order(mu), power_map={}))
        for c in self.classes:
            c.power_map = {t: self._type_index[_power_type(c.cycle_type, t)]
                           for t in range(max(c.rep_order, 1))}

    def class_of(self, p: Permutation) -> int:
        return self._type_index[p.cycle_type()]


def _power_type(mu: tuple, t: int) -> tuple:
    out = []
    for part in mu:
        g = gcd(part, t) if t else part
        if t == 0:
            out.extend([1] * part)
            continue
        out.extend([part // g] * g)
    return tuple(sorted(out, reverse=True))


class AnClassSystem:
    """Conjugacy classes of A_n described by cycle types with splitting."""

    def __init__(self, n: int):
        if n > SN_BUDGET:
            raise ValueError(f"n = {n} beyond the n <= {SN_BUDGET} budget")
        if n < 3:
            raise ValueError("A_n class system needs n >= 3")
        self.n = n
        self.degree = n
        self.group_order = factorial(n) // 2
        entries = []
        for mu in partitions(n):
            if not is_even_type(mu):
                continue
            rep = canonical_rep(mu, n)
            size = class_size_sn(n, mu)
            if splits_in_an(mu):
                tau = _swap_for(mu, n)
                entries.append(CombClass(type_name(mu) + "a", mu, rep,
                                         size // 2, cycle_type_order(mu), {}, "a"))
                entries.append(CombClass(type_name(mu) + "b", mu, rep.conj(tau),
                                         size // 2, cycle_type_order(mu), {}, "b"))
            else:
                entries.append(CombClass(type_name(mu), mu, rep, size,
                                         cycle_type_order(mu), {}, ""))
        entries.sort(key=lambda c: (c.rep_order, c.size, c.representative.images))
        self.classes = entries
        self._index = {}
        for i, c in enumerate(entries):
            self._index[(c.cycle_type, c.split_letter)] = i
        for c in self.classes:
            o = max(c.rep_order, 1)
            c.power_map = {t: self.class_of(c.representative ** t) for t in range(o)}

    def class_of(self, p: Permutation) -> int:
        mu = p.cycle_type()
        if (mu, "") in self._index:
            return self._index[(mu, "")]
        letter = "a" if align_sign(p, mu) == 1 else "b"
        return self._index[(mu, letter)]

    def class_named(self, name: str) -> int:
        for i, c in enumerate(self.classes):
            if c.name == name:
                return i
        # order-letter fallback ("7a" = first class of rep order 7)
        import re
        m = re.fullmatch(r"(\d+)([a-z]+)", name)
        if m:
            order, letter = int(m.group(1)), m.group(2)
            idx = [i for i, c in enumerate(self.classes) if c.rep_order == order]
            pos = ord(letter) - ord("a") if len(letter) == 1 else None
            if pos is not None and pos < len(idx):
                return idx[pos]
        raise KeyError(f"no class named {name!r} in A{self.n}")

    def power_class(self, k: int, a: int) -> int:
        c = self.classes[k]
        return c.power_map[a % c.rep_order if c.rep_order > 1 else 0]

    def exponent(self) -> int:
        e = 1
        for c in self.classes:
            e = e * c.rep_order // gcd(e, c.rep_order)
        return e

    def iter_class_images(self, k: int):
        """All elements of class k as image tuples (combinatorial)."""
        c = self.classes[k]
        mu = c.cycle_type
        for images in _type_elements(self.n, mu):
            if c.split_letter:
                p = Permutation(images)
                letter = "a" if align_sign(p, mu) == 1 else "b"
                if letter != c.split_letter:
                    continue
            yield images

    def class_of_images(self, images) -> int:
        return self.class_of(Permutation(images))


def _swap_for(mu: tuple, n: int) -> Permutation:
    return Permutation.from_cycles(n, [[0, 1]])


def _type_elements(n: int, mu: tuple):
    """All image tuples with cycle type mu (fixed points implied by mu).

    Each cycle is written starting from its minimal point (so the other
    entries are drawn from larger points only), and cycles of equal length
    carry increasing starts; both rules kill duplicates.
    """
    parts = [p for p in mu if p > 1]

    def rec(images, remaining, parts_left, prev_len, prev_start):
        if not parts_left:
            yield tuple(images)
            return
        length = parts_left[0]
        for start in sorted(remaining):
            if length == prev_len and start <= prev_start:
                continue
            larger = sorted(p for p in remaining if p > start)
            if len(larger) < length - 1:
                continue
            for others in itertools.permutations(larger, length - 1):
                cyc = (start,) + others
                for a, b in zip(cyc, cyc[1:]):
                    images[a] = b
                images[cyc[-1]] = start
                yield from rec(images, remaining - set(cyc), parts_left[1:],
                               length, start)
                for a in cyc:
                    images[a] = a

    images = list(range(n))
    yield from rec(images, set(range(n)), parts, -1, -1)


# -- tables ---------------------------------------------------------------------

def sn_table(n: int) -> CharacterTable:
    """Full integral character table of S_n."""
    cs = SnClassSystem(n)
    lams = sorted(partitions(n), key=lambda l: (hook_degree(l), l))
    rows = []
    for lam in lams:
        rows.append([Cyclotomic.from_rational(mn_value(lam, c.cycle_type))
                     for c in cs.classes])
    classes = [ClassInfo(c.name, c.size, c.rep_order, dict(c.power_map))
               for c in cs.classes]
    rows.sort(key=lambda row: (row[0].integer(), tuple(v.sort_key() for v in row)))
    # identity column: the all-ones type is first iff sorted that way; locate it
    ident = next(i for i, c in enumerate(cs.classes) if c.rep_order == 1)
    rows.sort(key=lambda row: (row[ident].integer(), tuple(v.sort_key() for v in row)))
    return CharacterTable(f"S{n}", cs.group_order, classes, rows, verify=True)


def _diagonal_hooks(lam: tuple) -> tuple:
    conj = conjugate_partition(lam)
    out = []
    i = 0
    while i < len(lam) and lam[i] > i:
        out.append(lam[i] + conj[i] - 2 * i - 1)
        i += 1
    return tuple(out)


def an_character_data(n: int):
    """Descriptors of Irr(A_n): list of (kind, lam, extras).

    kind 'whole': restriction of chi^lam (lam < conj(lam) lexicographically).
    kind 'half+/-': the two constituents for self-conjugate lam.
    """
    out = []
    for lam in partitions(n):
        conj = conjugate_partition(lam)
        if lam < conj:
            out.append(("whole", lam))
        elif lam == conj:
            out.append(("half+", lam))
            out.append(("half-", lam))
        # lam > conj: already covered by the conjugate partition
    return out


def an_character_value(kind: str, lam: tuple, cls: CombClass) -> Cyclotomic:
    """Value of the A_n irreducible described by (kind, lam) on cls."""
    base = mn_value(lam, cls.cycle_type)
    if kind == "whole":
        return Cyclotomic.from_rational(base)
    hooks = _diagonal_hooks(lam)
    n = sum(lam)
    if cls.split_letter and cls.cycle_type == hooks:
        r = len(hooks)
        eps = -1 if ((n - r) // 2) % 2 else 1
        disc = eps
        for h in hooks:
            disc *= h
        root = sqrt_int(disc)
        plus = (Cyclotomic.from_rational(eps) + root) / 2
        minus = (Cyclotomic.from_rational(eps) - root) / 2
        on_a = plus if kind == "half+" else minus
        on_b = minus if kind == "half+" else plus
        return on_a if cls.split_letter == "a" else on_b
    if base % 2:
        raise AssertionError(
            f"odd value {base} for split character at {lam} on {cls.cycle_type}")
    return Cyclotomic.from_rational(base // 2)


def an_table(n: int) -> CharacterTable:
    """Character table of A_n by restriction from S_n, with class splitting."""
    cs = AnClassSystem(n)
    rows = []
    for desc in an_character_data(n):
        kind, lam = desc
        rows.append([an_character_value(kind, lam, c) for c in cs.classes])
    classes = [ClassInfo(c.name, c.size, c.rep_order, dict(c.power_map))
               for c in cs.classes]
    ident = next(i for i, c in enumerate(cs.classes) if c.rep_order == 1)
    rows.sort(key=lambda row: (row[ident].integer(), tuple(v.sort_key() for v in row)))
    return CharacterTable(f"A{n}", cs.group_order, classes, rows, verify=True)


def an_pair_covers(n: int, name1: str, name2: str):
    """Does C1 * C2 cover all of A_n except possibly 1?  (sparse check)

    Uses the character formula without building the full table: rows whose
    value vanishes on C1 or C2 contribute nothing and are skipped before
    their k-columns are ever evaluated.
    """
    cs = AnClassSystem(n)
    i = cs.class_named(name1)
    j = cs.class_named(name2)
    ci, cj = cs.classes[i], cs.classes[j]
    order = cs.group_order
    rows = []
    for desc in an_character_data(n):
        kind, lam = desc
        vi = an_character_value(kind, lam, ci)
        if vi.is_zero():
            continue
        vj = an_character_value(kind, lam, cj)
        if vj.is_zero():
            continue
        deg = hook_degree(lam)
        if kind != "whole":
            deg //= 2
        rows.append((kind, lam, vi, vj, deg))
    missed = []
    for k, ck in enumerate(cs.classes):
        if ck.rep_order == 1:
            continue
        kinv = cs.power_class(k, ck.rep_order - 1)
        ckinv = cs.classes[kinv]
        total = Cyclotomic.zero()
        for kind, lam, vi, vj, deg in rows:
            vk = an_character_value(kind, lam, ckinv)
            if vk.is_zero():
                continue
            total = total + vi * vj * vk / deg
        count = Fraction(cj.size * ckinv.size, order) * _as_fraction(total)
        if count.denominator != 1 or count < 0:
            raise AssertionError(f"non-integral structure constant for {ck.name}")
        if count == 0:
            missed.append(ck.name)
    return (not missed), missed


def _as_fraction(v: Cyclotomic) -> Fraction:
    if not v.is_rational():
        raise AssertionError(f"expected rational structure-constant sum, got {v}")
    return v.rational()
