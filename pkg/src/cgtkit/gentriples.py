"""Generating triples, spread checks, subgroup covers, Beauville search.

enumerate_triples fixes the canonical x in C and accepts the y in C whose
product x*y is conjugate to x^a (the "xy in C^a" convention of the
reference computations: a = 1 asks for x*y in C itself, a = -2 for x*y
conjugate to x^-2).  Totals are cross-asserted against the
character-formula triple_count with the matching z-slot whenever a table
is supplied, which is the central cross-oracle of the whole artifact.

Class systems are duck-typed: both permgroup.GroupClasses (element-indexed
small groups) and symmchar.AnClassSystem (combinatorial A_n classes) work.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from .perms import Permutation
from .permgroup import StabilizerChain, build_chain, orbits

__all__ = ["TripleReport", "enumerate_triples", "search_triple",
           "build_lemma42", "build_lemma43", "translation_search",
           "spread_class_check", "two_subgroup_cover", "union_cover_check",
           "beauville_search"]

ENUMERATION_BOUND = 10 ** 7
SPREAD_BOUND = 10 ** 6
BEAUVILLE_BOUND = 10 ** 5
DEFAULT_BUDGET = 10 ** 4


def _subgroup_key(chain: StabilizerChain):
    sizes = tuple(sorted((len(o) for o in orbits(chain)), reverse=True))
    return (chain.order(), sizes)


@dataclass
class TripleReport:
    group: str
    class_name: str
    a: int
    total_pairs: int
    generating_pairs: int
    subgroup_histogram: dict = field(default_factory=dict)
    witness: tuple | None = None  # (x, y, z) Permutations

    def histogram_json(self):
        return {f"{order}:{'+'.join(str(s) for s in sizes)}": count
                for (order, sizes), count in sorted(self.subgroup_histogram.items())}

    def to_json(self):
        return {
            "group": self.group, "class": self.class_name, "a": self.a,
            "total_pairs": self.total_pairs,
            "generating_pairs": self.generating_pairs,
            "subgroup_histogram": self.histogram_json(),
            "witness": [str(p) for p in self.witness] if self.witness else None,
        }


def _resolve_class(cs, spec) -> int:
    if isinstance(spec, int):
        return spec
    return cs.class_named(spec)


def enumerate_triples(chain: StabilizerChain, cs, class_spec, a: int,
                      classify: bool = True, table=None,
                      group_name: str = "") -> TripleReport:
    """Exhaustive scan of {y in C : (xy)^-1 in C^a} for the canonical x.

    cs is a class system for the group of `chain`.  When `classify` is
    set, every accepted pair is sorted into the (order, orbit-structure)
    histogram of the subgroup it generates.
    """
    ci = _resolve_class(cs, class_spec)
    cls = cs.classes[ci]
    if cls.size > ENUMERATION_BOUND:
        raise ValueError(f"class size {cls.size} exceeds exhaustive bound "
                         f"{ENUMERATION_BOUND}; use search_triple")
    # accept y iff x*y lies in C^a ("xy conjugate to x^a"); equivalently
    # z := (xy)^-1 lies in (C^a)^-1
    target = cls.power_map[a % cls.rep_order if cls.rep_order > 1 else 0]
    order = cs.group_order
    x = cls.representative
    x_img = x.images
    n = len(x_img)
    total = 0
    generating = 0
    hist: dict = {}
    witness = None
    for y_img in cs.iter_class_images(ci):
        xy = tuple(y_img[v] for v in x_img)
        if cs.class_of_images(xy) != target:
            continue
        total += 1
        if not classify:
            continue
        sub = build_chain([x_img, y_img], n)
        key = _subgroup_key(sub)
        hist[key] = hist.get(key, 0) + 1
        if sub.order() == order:
            generating += 1
            if witness is None:
                z_img = [0] * n
                for idx, v in enumerate(xy):
                    z_img[v] = idx
                witness = (x, Permutation(y_img), Permutation(tuple(z_img)))
    if table is not None:
        from .classalg import triple_count
        i = _table_class(table, cls.name)
        k = table.inverse_class(_table_power(table, cls.name, a))
        want = triple_count(table, i, i, k)
        if want != total:
            raise AssertionError(
                f"enumerate_triples total {total} != character formula {want}")
    return TripleReport(group_name, cls.name, a, total, generating, hist, witness)


def _table_class(table, name):
    return table.class_named(name)


def _table_power(table, name, a):
    i = table.class_named(name)
    return table.power_class(i, a)


def search_triple(chain: StabilizerChain, cs, class_spec, a: int,
                  seed: int = 0, budget: int = DEFAULT_BUDGET):
    """Randomized witness search: y runs over random conjugates of x.

    Deterministic for a fixed seed.  Returns (x, y, z) or None; None is
    inconclusive, never a refutation.
    """
    rng = random.Random(seed)
    ci = _resolve_class(cs, class_spec)
    cls = cs.classes[ci]
    target = cls.power_map[a % cls.rep_order if cls.rep_order > 1 else 0]
    order = cs.group_order
    x = cls.representative
    for _ in range(budget):
        c = chain.random_element(rng)
        y = x.conj(c)
        xy = x * y
        if cs.class_of_images(xy.images) != target:
            continue
        sub = build_chain([x.images, y.images], chain.degree)
        if sub.order() == order:
            return (x, y, xy.inverse())
    return None


# -- the explicit A_n constructions ------------------------------------------

@dataclass
class LemmaConstruction:
    n: int
    x: Permutation
    y: Permutation
    involution: Permutation  # vu, moving 8 (odd case) or 12 (even case) points
    triple: tuple  # (t1, t2, t3) with t1*t2*t3 = identity
    chain: StabilizerChain


def _lemma_common(n, x, u, shift):
    # w = "apply x first, then u" = the standard n-cycle
    w = x * u
    expected = tuple((i + 1) % n for i in range(n))
    if w.images != expected:
        raise AssertionError("construction broke: w is not the n-cycle")
    s = w ** shift
    v = u.conj(s)
    y = x.conj(s)
    vu = u * v  # disjoint transposition products commute
    # y^-1 (vu) x = 1 in apply-order x, then vu, then y^-1
    t = x * vu * y.inverse()
    if not t.is_identity():
        raise AssertionError("construction broke: y^-1 (vu) x != 1")
    return w, s, v, y, vu


def build_lemma42(n: int) -> LemmaConstruction:
    """Two (n-2)-cycles generating A_n whose quotient is an involution
    moving 8 points (n odd, n >= 11)."""
    if n % 2 == 0 or n < 11:
        raise ValueError("build_lemma42 needs odd n >= 11")
    x = Permutation.from_cycles(n, [[1] + list(range(3, n))])   # (2 4 5 ... n)
    u = Permutation.from_cycles(n, [[0, 1], [2, 3]])            # (1 2)(3 4)
    w, s, v, y, vu = _lemma_common(n, x, u, 4)
    if v != Permutation.from_cycles(n, [[4, 5], [6, 7]]):
        raise AssertionError("v != (5 6)(7 8)")
    if x.cycle_type()[0] != n - 2 or y.cycle_type()[0] != n - 2:
        raise AssertionError("x or y is not an (n-2)-cycle")
    if vu.support_size() != 8 or (vu * vu) != Permutation.identity(n):
        raise AssertionError("vu is not an involution moving 8 points")
    chain = build_chain([x, y])
    from math import factorial
    if chain.order() != factorial(n) // 2:
        raise AssertionError("x, y do not generate the alternating group")
    triple = (x, vu, y.inverse())
    return LemmaConstruction(n, x, y, vu, triple, chain)


def build_lemma43(n: int) -> LemmaConstruction:
    """Two (n-3)-cycles generating A_n, involution moving 12 points
    (n even, n >= 12)."""
    if n % 2 or n < 12:
        raise ValueError("build_lemma43 needs even n >= 12")
    u = Permutation.from_cycles(n, [[0, 1], [2, 3], [4, 5]])
    x = Permutation.from_cycles(n, [[0, 2, 4] + list(range(6, n))])
    # in this variant the n-cycle is "apply u first, then x"
    w = u * x
    expected = tuple((i + 1) % n for i in range(n))
    if w.images != expected:
        raise AssertionError("construction broke: w is not the n-cycle")
    s = w ** 6
    v = u.conj(s)
    y = x.conj(s)
    vu = u * v
    # here w = u*x and w = v*y (apply-left-first), so y^-1 v u x = 1
    t = y.inverse() * vu * x
    if not t.is_identity():
        raise AssertionError("construction broke: y^-1 (vu) x != 1")
    if x.cycle_type()[0] != n - 3 or y.cycle_type()[0] != n - 3:
        raise AssertionError("x or y is not an (n-3)-cycle")
    if vu.support_size() != 12 or not (vu * vu).is_identity():
        raise AssertionError("vu is not an involution moving exactly 12 points")
    chain = build_chain([x, y])
    from math import factorial
    if chain.order() != factorial(n) // 2:
        raise AssertionError("x, y do not generate the alternating group")
    triple = (y.inverse(), vu, x)
    return LemmaConstruction(n, x, y, vu, triple, chain)


def block_counterexample_lemma43(n: int = 12):
    """The fixed points {2,4,6} of x are not a block: x(1)=3 and x(5)=7."""
    c = build_lemma43(n)
    f = [i for i in range(n) if c.x(i) == i]
    assert f == [1, 3, 5]
    return c.x(0) == 2 and c.x(4) == 6  # 1-based: x(1)=3, x(5)=7


# -- translation lemma search --------------------------------------------------

def translation_search(chain: StabilizerChain, x: Permutation, y: Permutation,
                       z: Permutation, d: int, seed: int = 0,
                       budget: int = DEFAULT_BUDGET):
    """Find conjugates z_1..z_d of z with x^d y^d z_1...z_d = 1 generating a
    subgroup of index dividing d.

    The deterministic choice z_i = z^(y^(d-i)) always satisfies the product
    identity; random conjugator tuples are tried afterwards if the index
    condition fails.  Returns {"conjugators": [...], "index": k} or None
    (inconclusive).
    """
    if not (x * y * z).is_identity():
        raise ValueError("xyz != 1")
    if d < 1:
        raise ValueError("d must be positive")
    full = build_chain([x, y, z]).order()
    if chain.order() != full:
        raise ValueError("x, y, z do not generate the group of the chain")
    if d == 1:
        return {"conjugators": [Permutation.identity(chain.degree)], "index": 1,
                "elements": [z]}
    if budget <= 0:
        return None

    def try_conjugators(cs):
        zs = [z.conj(c) for c in cs]
        prod = x ** d
        prod = prod * (y ** d)
        for zi in zs:
            prod = prod * zi
        if not prod.is_identity():
            return None
        gens = [x ** d, y ** d] + zs
        sub = build_chain(gens, chain.degree)
        index = chain.order() // sub.order()
        if chain.order() % sub.order() == 0 and index <= d and d % index == 0:
            return {"conjugators": cs, "index": index, "elements": zs}
        return None

    det = [y ** (d - i) for i in range(1, d + 1)]
    got = try_conjugators(det)
    if got:
        return got
    rng = random.Random(seed)
    for _ in range(budget):
        cs = [chain.random_element(rng) for _ in range(d - 1)]
        # solve the last conjugate for the product identity: need
        # zs product = (x^d y^d)^-1; choose c_d by brute scan over a few
        # random candidates and test directly
        cs.append(chain.random_element(rng))
        got = try_conjugators(cs)
        if got:
            return got
    return None


# -- spread and covers ---------------------------------------------------------

def spread_class_check(chain: StabilizerChain, cs, class_spec):
    """For each nontrivial class rep s, does some y in C give <s,y> = G?"""
    if chain.order() > SPREAD_BOUND:
        raise ValueError(f"group order exceeds spread bound {SPREAD_BOUND}")
    ci = _resolve_class(cs, class_spec)
    order = cs.group_order
    failing = []
    for k, cls in enumerate(cs.classes):
        if cls.rep_order == 1:
            continue
        s = cls.representative
        ok = False
        for y_img in cs.iter_class_images(ci):
            sub = build_chain([s.images, y_img], chain.degree)
            if sub.order() == order:
                ok = True
                break
        if not ok:
            failing.append(cls.name)
    return (not failing), failing


def _subgroup_elements(chain: StabilizerChain, gens):
    sub = build_chain([g.images for g in gens], chain.degree)
    if sub.order() >= chain.order():
        raise ValueError("listed 'maximal' subgroup is the whole group")
    return frozenset(p.images for p in sub.elements()), sub.order()


def _all_conjugate_sets(chain: StabilizerChain, elems: frozenset):
    """Element sets of all conjugates of a subgroup (tiny groups only)."""
    out = {elems}
    frontier = [elems]
    gens = chain.generators
    while frontier:
        new = []
        for es in frontier:
            for g in gens:
                conj = frozenset(Permutation(e).conj(g).images for e in es)
                if conj not in out:
                    out.add(conj)
                    new.append(conj)
        frontier = new
    return sorted(out, key=lambda s: sorted(s)[:2])


def union_cover_check(cs, class_spec, subgroup_sets):
    """Is the class contained in the union of the given element sets?"""
    ci = _resolve_class(cs, class_spec)
    for y in cs.iter_class_images(ci):
        if not any(y in s for s in subgroup_sets):
            return False
    return True


def two_subgroup_cover(chain: StabilizerChain, cs, class_spec,
                       maximal_gens: list) -> bool:
    """Lemma-style check: C is never inside M1 u M2 for conjugates of the
    listed maximal subgroups.  True means no pair covers C."""
    if not maximal_gens:
        raise ValueError("missing maximal subgroup generator data")
    conjugate_sets = []
    for gens in maximal_gens:
        base, _ = _subgroup_elements(chain, gens)
        conjugate_sets.extend(_all_conjugate_sets(chain, base))
    # deduplicate (different listed subgroups may share conjugates)
    uniq = []
    seen = set()
    for s in conjugate_sets:
        if s not in seen:
            seen.add(s)
            uniq.append(s)
    ci = _resolve_class(cs, class_spec)
    class_elems = list(cs.iter_class_images(ci))
    for i in range(len(uniq)):
        for j in range(i, len(uniq)):
            if all((y in uniq[i]) or (y in uniq[j]) for y in class_elems):
                return False
    return True


# -- Beauville structures --------------------------------------------------------

def beauville_search(chain: StabilizerChain, cs=None, seed: int = 0):
    """Unmixed Beauville structure by exhaustive order-triple scan.

    Scans generating pairs (x, y) with x a class representative (every
    generating pair is conjugate to one such), collecting the realized
    order triples {o(x), o(y), o(xy)}.  Returns a pair of generating
    systems with coprime order triples, or None after exhausting all
    combinations (a proof of non-existence at this group size).
    """
    order = chain.order()
    if order > BEAUVILLE_BOUND:
        raise ValueError(f"group order exceeds Beauville bound {BEAUVILLE_BOUND}")
    if cs is None:
        from .permgroup import conjugacy_classes
        cs = conjugacy_classes(chain)
    triples: dict = {}
    for cls in cs.classes:
        if cls.rep_order == 1:
            continue
        x = cls.representative
        for k2 in range(len(cs.classes)):
            if cs.classes[k2].rep_order == 1:
                continue
            for y_img in cs.iter_class_images(k2):
                sub = build_chain([x.images, y_img], chain.degree)
                if sub.order() != order:
                    continue
                y = Permutation(y_img)
                key = tuple(sorted((x.order(), y.order(), (x * y).order())))
                if key not in triples:
                    triples[key] = (x, y)
    keys = sorted(triples)
    for i, t1 in enumerate(keys):
        for t2 in keys[i:]:
            if all(gcd(a, b) == 1 for a in t1 for b in t2):
                return triples[t1], triples[t2]
    return None
