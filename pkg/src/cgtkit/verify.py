"""The desk-scale verification suite behind `verify-paper`.

Each check compares an exact computed value against the frozen reference
value and reports pass/fail; nothing is tolerance-based.  Suites can be
run independently; results are deterministic (fixed seeds, printed in the
report).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .classalg import covers, eps_a, n_a, two_mth_powers
from .cyclotomic import sqrt_int
from .fixspace import (catalog_module_rep, diagonal_tuple_fixed_dim,
                       neumann_scan, random_scott_tuples, scott_check,
                       tensor_power_min_ratio)
from .gentriples import (beauville_search, build_lemma42, build_lemma43,
                         enumerate_triples, search_triple, spread_class_check,
                         two_subgroup_cover, union_cover_check)
from .permgroup import conjugacy_classes
from .symmchar import an_pair_covers, an_table
from .chartab import dixon_table, tables_equivalent
from .sl2 import macbeath_cover
from .zsigmondy import classify_small_zsigmondy, prime_divisors, scan_reports

DEFAULT_SEED = 0


@dataclass
class CheckResult:
    check_id: str
    expected: str
    got: str
    status: str  # pass | fail | skipped-with-reason
    elapsed: float

    def to_json(self):
        return {"id": self.check_id, "expected": self.expected,
                "got": self.got, "status": self.status,
                "elapsed": round(self.elapsed, 3)}


@dataclass
class VerifyReport:
    suite: str
    seed: int = DEFAULT_SEED
    checks: list = field(default_factory=list)

    def add(self, check_id: str, expected, got, t0: float):
        expected_s, got_s = str(expected), str(got)
        status = "pass" if expected_s == got_s else "fail"
        self.checks.append(CheckResult(check_id, expected_s, got_s, status,
                                       time.time() - t0))

    def skip(self, check_id: str, reason: str):
        self.checks.append(CheckResult(check_id, "", reason,
                                       "skipped-with-reason", 0.0))

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self):
        return {"suite": self.suite, "seed": self.seed, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks]}


def _table(name):
    return catalog.character_table(name)


def _chain(name):
    return catalog.load_group(name)[1]


def _cs(name):
    return catalog.class_system(name)


# -- criterion 1 ---------------------------------------------------------------

def suite_zsigmondy() -> VerifyReport:
    rep = VerifyReport("zsigmondy")
    t0 = time.time()
    found = classify_small_zsigmondy(64, 30)
    ones = sorted((r.q, r.e) for r in found if r.category == "one")
    eplus = sorted((r.q, r.e) for r in found if r.category == "e_plus_1")
    twoe = sorted((r.q, r.e) for r in found if r.category == "two_e_plus_1")
    rep.add("zsig.one", [(2, 6)], ones, t0)
    t0 = time.time()
    rep.add("zsig.e_plus_1",
            [(2, 4), (2, 10), (2, 12), (2, 18), (3, 4), (3, 6), (5, 6)],
            eplus, t0)
    t0 = time.time()
    rep.add("zsig.two_e_plus_1",
            [(2, 3), (2, 8), (2, 20), (4, 3), (4, 6)], twoe, t0)
    t0 = time.time()
    bad = []
    for r in scan_reports(64, 30):
        for p in prime_divisors(r.phi_star):
            if p % r.e != 1:
                bad.append((r.q, r.e, p))
    rep.add("zsig.primes_1_mod_e", [], bad, t0)
    return rep


# -- criterion 2 ---------------------------------------------------------------

TABLE5 = [
    ("M11", "11a", 35, 80),
    ("M12", "11a", 640, 1180),
    ("J1", "19a", 496, 419),
    ("M22", "11a", 3632, 3776),
    ("J2", "7a", 12528, 12528),
]


def suite_table5() -> VerifyReport:
    rep = VerifyReport("table5")
    for name, cname, want1, want2 in TABLE5:
        t0 = time.time()
        chain = _chain(name)
        gc = _cs(name)
        table = dixon_table(gc, name)
        f = (n_a(table, cname, 1), n_a(table, cname, -2))
        rep.add(f"table5.{name}.formula", (want1, want2), f, t0)
        t0 = time.time()
        b1 = enumerate_triples(chain, gc, cname, 1, classify=False,
                               table=table, group_name=name).total_pairs
        b2 = enumerate_triples(chain, gc, cname, 2, classify=False,
                               table=table, group_name=name).total_pairs
        rep.add(f"table5.{name}.brute", (want1, want2), (b1, b2), t0)
    # overgroup columns reproducible from catalog tables: the L2(11)
    # contribution 2|14 (M11/M12/M22 rows) and the U3(3) contribution 397
    # (J2 row; total over the two fused 7-classes)
    t0 = time.time()
    t11 = _table("L2(11)")
    rep.add("table5.overgroup.L2(11)", (2, 14),
            (n_a(t11, "11a", 1), n_a(t11, "11a", -2)), t0)
    t0 = time.time()
    tu = _table("U3(3)")
    from .classalg import triple_count
    i7a, i7b = tu.class_named("7a"), tu.class_named("7b")
    total = sum(triple_count(tu, i7a, j, tu.inverse_class(k))
                for j in (i7a, i7b) for k in (i7a, i7b))
    rep.add("table5.overgroup.U3(3)", 397, total, t0)
    return rep


# -- criterion 3 ---------------------------------------------------------------

def suite_a10() -> VerifyReport:
    rep = VerifyReport("a10")
    t0 = time.time()
    chain = _chain("A10")
    cs = _cs("A10")
    table = _table("A10")
    r = enumerate_triples(chain, cs, "7a", 1, classify=True, table=table,
                          group_name="A10")
    rep.add("a10.total", 7446, r.total_pairs, t0)
    rep.add("a10.generating", 42, r.generating_pairs, t0)
    hist = r.subgroup_histogram
    rep.add("a10.A9_pairs", 2856, hist.get((181440, (9, 1)), 0), t0)
    rep.add("a10.A8_pairs", 3717, hist.get((20160, (8, 1, 1)), 0), t0)
    return rep


# -- criterion 4 ---------------------------------------------------------------

def suite_lemmas() -> VerifyReport:
    rep = VerifyReport("lemmas")
    from math import factorial
    for n in range(11, 30, 2):
        t0 = time.time()
        c = build_lemma42(n)
        rep.add(f"lemma42.n{n}",
                (factorial(n) // 2, 8),
                (c.chain.order(), c.involution.support_size()), t0)
    for n in range(12, 31, 2):
        t0 = time.time()
        c = build_lemma43(n)
        rep.add(f"lemma43.n{n}",
                (factorial(n) // 2, 12),
                (c.chain.order(), c.involution.support_size()), t0)
    return rep


# -- criterion 5 ---------------------------------------------------------------

def suite_smalln(seed: int = DEFAULT_SEED) -> VerifyReport:
    rep = VerifyReport("smalln", seed)
    targets = [("A5", "5a"), ("A6", "5a"), ("A7", "7a"), ("A8", "7a"),
               ("A9", "7a"), ("A10", "7a")]
    for name, cname in targets:
        t0 = time.time()
        chain = _chain(name)
        cs = _cs(name)
        # a = -1: the witness triple (x, y, (xy)^-1) lies entirely inside C
        w = search_triple(chain, cs, cname, -1, seed=seed)
        ok = w is not None
        if ok:
            x, y, z = w
            ok = (x * y * z).is_identity() and \
                cs.class_of_images(z.images) == cs.class_of_images(x.images)
        rep.add(f"smalln.{name}", True, ok, t0)
    t0 = time.time()
    chain = _chain("L2(7)")
    gc = _cs("L2(7)")
    table = _table("L2(7)")
    r1 = enumerate_triples(chain, gc, "7a", 1, table=table, group_name="L2(7)")
    r2 = enumerate_triples(chain, gc, "7a", -2, table=table, group_name="L2(7)")
    rep.add("smalln.L2(7).a1_fails", 0, r1.generating_pairs, t0)
    rep.add("smalln.L2(7).am2_succeeds", True, r2.generating_pairs > 0, t0)
    return rep


# -- criterion 6 ---------------------------------------------------------------

MACBEATH_ODD = [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31]
MACBEATH_EVEN = [8, 16, 32]


def suite_macbeath() -> VerifyReport:
    rep = VerifyReport("macbeath")
    for q in MACBEATH_ODD + MACBEATH_EVEN:
        t0 = time.time()
        table = _table(f"L2({q})")
        reports = macbeath_cover(table, q)
        bad = [r.class_name for r in reports if r.in_hypothesis and not r.covered]
        rep.add(f"macbeath.q{q}", [], bad, t0)
    t0 = time.time()
    table = _table("U3(3)")
    bad = []
    for cname in ("7a", "7b", "8a", "8b"):
        if not covers(table, cname, cname).covered:
            bad.append(cname)
    rep.add("macbeath.U3(3)", [], bad, t0)
    return rep


# -- criterion 7 ---------------------------------------------------------------

def suite_sz8() -> VerifyReport:
    rep = VerifyReport("sz8")
    t0 = time.time()
    table = _table("Sz(8)")
    got = n_a(table, "13a", 1)
    rep.add("sz8.n1_13a", 273, got, t0)
    t0 = time.time()
    # closed form at q = sqrt(8), exactly in Q(sqrt 2) inside Q(zeta_8)
    s2 = sqrt_int(2)
    q = 2 * s2
    num = 4 * q ** 5 + 11 * s2 * q ** 4 + 6 * q ** 3 - 2 * q + s2
    den = s2 * q ** 4 * (q * q - 1) * (q * q - s2 * q + 1)
    eps_formula = num / den
    eps_table = eps_a(table, "13a", 1)
    rep.add("sz8.eps_closed_form", str(eps_formula.rational()), str(eps_table), t0)
    t0 = time.time()
    bound = Fraction(29120, 13 * 13)
    rep.add("sz8.lower_bound", True, Fraction(got) >= bound, t0)
    return rep


# -- criterion 8 ---------------------------------------------------------------

NEUMANN_GROUPS = (
    [f"A{n}" for n in range(5, 11)]
    + [f"L2({q})" for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)]
    + ["M11", "M12", "M22", "J1", "J2", "U3(3)", "Sz(8)", "SL3(2)"]
)

SCOTT_REPS = ["A5:std4", "SL2(4):nat", "SL2(8):nat", "SL3(2):nat"]


def suite_neumann(seed: int = DEFAULT_SEED) -> VerifyReport:
    rep = VerifyReport("neumann", seed)
    for name in NEUMANN_GROUPS:
        t0 = time.time()
        table = _table(name)
        rep.add(f"neumann.{name}", True, neumann_scan(table)["ok"], t0)
    t0 = time.time()
    failures = 0
    per_rep = 25
    for spec in SCOTT_REPS:
        module = catalog_module_rep(spec)
        tuples = random_scott_tuples(module, per_rep, r=3, seed=seed)
        for tup in tuples:
            if not scott_check(module, tup)["ok"]:
                failures += 1
    rep.add("scott.random_tuples_100", 0, failures, t0)
    return rep


# -- criterion 9 ---------------------------------------------------------------

def suite_tensor() -> VerifyReport:
    rep = VerifyReport("tensor")
    t5 = _table("A5")
    deg5 = next(i for i, d in enumerate(t5.degrees) if d == 5)
    t0 = time.time()
    r1 = tensor_power_min_ratio(t5, deg5, 1)
    rep.add("tensor.A5.m1_min", Fraction(1, 5), r1["min_ratio"], t0)
    inv_name = next(c.name for c in t5.classes if c.rep_order == 2)
    for m in range(1, 6):
        t0 = time.time()
        got = diagonal_tuple_fixed_dim(t5, deg5, inv_name, m)
        rep.add(f"tensor.A5.diag_inv_m{m}", (5 ** m + 1) // 2, got, t0)
    for m in range(1, 6):
        t0 = time.time()
        r = tensor_power_min_ratio(t5, deg5, m)
        rep.add(f"tensor.A5.m{m}_ge_1_50", True, r["min_ratio"] >= Fraction(1, 50), t0)
    t4 = _table("A4")
    deg3 = next(i for i, d in enumerate(t4.degrees) if d == 3)
    for m in range(1, 5):
        t0 = time.time()
        r = tensor_power_min_ratio(t4, deg3, m)
        rep.add(f"tensor.A4.m{m}_ge_1_9", True, r["min_ratio"] >= Fraction(1, 9), t0)
    return rep


# -- criterion 10 --------------------------------------------------------------

PROP77_ORDERS = {7: (5, 7), 8: (3, 7), 9: (3, 7), 10: (5, 7), 11: (5, 11),
                 12: (5, 11), 13: (11, 13), 14: (11, 13), 15: (11, 13),
                 16: (7, 13)}


def suite_crosscheck() -> VerifyReport:
    rep = VerifyReport("crosscheck")
    for n in (5, 6, 7, 8):
        t0 = time.time()
        ta = an_table(n)
        td = dixon_table(conjugacy_classes(_chain(f"A{n}")), f"A{n}")
        rep.add(f"crosscheck.A{n}_tables", True, tables_equivalent(ta, td), t0)
    from .symmchar import AnClassSystem
    for n, (o1, o2) in PROP77_ORDERS.items():
        t0 = time.time()
        cs = AnClassSystem(n)
        c1s = [c.name for c in cs.classes if c.rep_order == o1]
        c2s = [c.name for c in cs.classes if c.rep_order == o2]
        found = None
        for name1 in c1s:
            for name2 in c2s:
                ok, missed = an_pair_covers(n, name1, name2)
                if ok:
                    found = (name1, name2)
                    break
            if found:
                break
        if n == 10:
            # the reference list's (5,7) entry is an erratum: exact
            # computation shows no order-5/order-7 class pair covers A10#
            # (e.g. 5+5 * 7+1+1+1 misses 2+2+1^6 and 3+1^7), while the
            # statement itself holds via other odd coprime orders
            rep.add("prop77.A10.orders5_7_erratum", None, found, t0)
            t0 = time.time()
            ok15, _ = an_pair_covers(10, "7+1+1+1", "5+3+1+1")
            ok9, _ = an_pair_covers(10, "5+5", "9+1a")
            rep.add("prop77.A10.odd_coprime_pair_exists", (True, True),
                    (ok15, ok9), t0)
            continue
        rep.add(f"prop77.A{n}.orders{o1}_{o2}", True, found is not None, t0)
    t0 = time.time()
    cs18 = AnClassSystem(18)
    seventeens = [c.name for c in cs18.classes if c.rep_order == 17]
    ok, missed = an_pair_covers(18, seventeens[0], seventeens[1])
    rep.add("prop77.A18.two_17_classes", True, ok, t0)
    return rep


# -- criterion 11 --------------------------------------------------------------

POWER_GROUPS = ["A5", "A6", "L2(7)", "L2(8)", "SL3(2)"]
POWER_EXPONENTS = [2, 3, 4, 5, 7, 8, 9, 6, 36]


def suite_powers() -> VerifyReport:
    rep = VerifyReport("powers")
    for name in POWER_GROUPS:
        gc = _cs(name)
        t0 = time.time()
        bad = [m for m in POWER_EXPONENTS if not two_mth_powers(gc, m).ok]
        rep.add(f"powers.{name}", [], bad, t0)
    return rep


# -- criterion 12 --------------------------------------------------------------

def suite_section8(seed: int = DEFAULT_SEED) -> VerifyReport:
    rep = VerifyReport("section8", seed)
    for name, cname in [("A5", "5a"), ("A7", "7a"), ("M11", "11a")]:
        t0 = time.time()
        chain = _chain(name)
        cs = _cs(name)
        ok, failing = spread_class_check(chain, cs, cname)
        rep.add(f"spread.{name}.{cname}", (True, []), (ok, failing), t0)
    for name in ("A5", "A6", "L2(7)"):
        t0 = time.time()
        chain = _chain(name)
        cs = _cs(name)
        maximals = catalog.maximal_subgroup_generators(name)
        bad = []
        for k, cls in enumerate(cs.classes):
            if cls.rep_order == 1:
                continue
            if not two_subgroup_cover(chain, cs, k, list(maximals.values())):
                bad.append(cls.name)
        rep.add(f"cover2.{name}", [], bad, t0)
    t0 = time.time()
    chain = _chain("SL3(2)")
    cs = _cs("SL3(2)")
    stabs = catalog.sl32_transvection_cover_subgroups()
    from .gentriples import _subgroup_elements
    sets = [_subgroup_elements(chain, gens)[0] for gens in stabs]
    transvections = cs.class_named("2a")
    covered3 = union_cover_check(cs, transvections, sets)
    pair_covered = any(
        union_cover_check(cs, transvections, [sets[i], sets[j]])
        for i in range(3) for j in range(i + 1, 3))
    rep.add("cover2.SL3(2).three_subgroups", (True, False),
            (covered3, pair_covered), t0)
    t0 = time.time()
    got = beauville_search(_chain("A5"), _cs("A5"), seed=seed)
    rep.add("beauville.A5_none", None, got, t0)
    for name in ("A6", "L2(7)"):
        t0 = time.time()
        got = beauville_search(_chain(name), _cs(name), seed=seed)
        ok = got is not None
        if ok:
            (x1, y1), (x2, y2) = got
            from math import gcd
            t1 = (x1.order(), y1.order(), (x1 * y1).order())
            t2 = (x2.order(), y2.order(), (x2 * y2).order())
            ok = all(gcd(a, b) == 1 for a in t1 for b in t2)
        rep.add(f"beauville.{name}_witness", True, ok, t0)
    return rep


SUITES = {
    "zsigmondy": suite_zsigmondy,
    "table5": suite_table5,
    "a10": suite_a10,
    "lemmas": suite_lemmas,
    "smalln": suite_smalln,
    "macbeath": suite_macbeath,
    "sz8": suite_sz8,
    "neumann": suite_neumann,
    "tensor": suite_tensor,
    "crosscheck": suite_crosscheck,
    "powers": suite_powers,
    "section8": suite_section8,
}


def run_suite(name: str) -> list:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from "
                       f"{', '.join(list(SUITES) + ['all'])}")
    return [SUITES[name]()]
