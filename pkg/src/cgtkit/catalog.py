"""Built-in group data: generators, orders, maximal subgroups, tables.

Groups are loaded by name: A5..A20 and S3..S18 (standard generators),
L2(q) and SL2(q) for prime powers q <= 32 (constructed from matrices),
and the stored sporadic/classical permutation groups M11, M12, M22, J1,
J2, U3(3), Sz(8), SL3(2) (read from data/groups/NAME.perm).  Every load
re-verifies the declared order; conjugacy-class counts of the stored
groups are integrity metadata checked by verify_integrity.

The data directory defaults to the packaged data/ tree and can be
overridden per call or with the CGT_DATA_DIR environment variable.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path

from .chartab import CharacterTable, dixon_table
from .perms import Permutation, parse_perm, parse_perm_file
from .permgroup import StabilizerChain, build_chain, conjugacy_classes
from .sl2 import l2_order, projective_line_rep, sl2_generators, sl2_order, gf

__all__ = ["GroupSpec", "load_group", "character_table", "class_system",
           "save_table", "load_table", "maximal_subgroup_generators",
           "sl32_transvection_cover_subgroups", "known_class_count",
           "catalog_names", "data_dir"]

_PACKAGE_DATA = Path(__file__).parent / "data"

STORED_GROUPS = {
    # name: (file, declared order, known class count)
    "M11": ("M11.perm", 7920, 10),
    "M12": ("M12.perm", 95040, 15),
    "M22": ("M22.perm", 443520, 12),
    "J1": ("J1.perm", 175560, 15),
    "J2": ("J2.perm", 604800, 21),
    "U3(3)": ("U3_3.perm", 6048, 14),
    "Sz(8)": ("Sz8.perm", 29120, 11),
    "SL3(2)": ("SL3_2.perm", 168, 6),
}

_ALIASES = {
    "SZ8": "Sz(8)", "SZ(8)": "Sz(8)",
    "U33": "U3(3)", "U3(3)": "U3(3)", "G2(2)'": "U3(3)",
    "SL3(2)": "SL3(2)", "SL32": "SL3(2)",
}

# maximal subgroup generator lists (1-based cycle strings), verified at load
MAXIMAL_SUBGROUPS = {
    "A5": {
        "A4": ["(1,2,3)", "(2,3,4)"],
        "D10": ["(1,2,3,4,5)", "(2,5)(3,4)"],
        "S3": ["(1,2,3)", "(1,2)(4,5)"],
    },
    "A6": {
        "A5": ["(1,2,3)", "(3,4,5)"],
        "A5'": ["(1,2,3,4,5)", "(1,6)(2,5)"],
        "S4": ["(1,2,3,4)(5,6)", "(1,2)(5,6)"],
        "S4'": ["(1,4,3)(2,5,6)", "(1,2)(4,6)"],
        "3^2:4": ["(1,2,3)", "(4,5,6)", "(1,4,2,5)(3,6)"],
    },
    "L2(7)": {
        "S4": ["(1,5)(2,8)(3,6)(4,7)", "(1,3,7,4)(2,5,6,8)"],
        "S4'": ["(1,7,2)(4,5,8)", "(1,6,2,5)(3,8,7,4)"],
        "7:3": ["(2,6,7)(3,8,4)", "(2,8,6)(4,5,7)"],
    },
}

# stabilizers of the three points of a 2-space in the natural SL3(2)
# action: the classical three-subgroup cover of the transvection class
SL32_POINT_STABILIZERS = [
    ["(4,5)(6,7)", "(2,7)(3,6)", "(2,4,3,5)(6,7)"],
    ["(1,3)(5,7)", "(1,6)(3,4)", "(1,7,4)(3,5,6)"],
    ["(1,4,5)(2,7,6)", "(1,2)(5,6)", "(1,7,2,4)(5,6)"],
]


@dataclass
class GroupSpec:
    name: str
    family: str  # alternating | symmetric | psl2 | sl2 | sporadic | classical-small
    degree: int
    generators: list
    declared_order: int
    maximal_subgroups: dict = field(default_factory=dict)
    known_class_count: int | None = None


def data_dir(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("CGT_DATA_DIR")
    if env:
        return Path(env)
    return _PACKAGE_DATA


def catalog_names():
    names = [f"A{n}" for n in range(5, 21)] + [f"S{n}" for n in range(3, 19)]
    names += [f"L2({q})" for q in _prime_powers(4, 32)]
    names += [f"SL2({q})" for q in _prime_powers(4, 32)]
    names += list(STORED_GROUPS)
    return names


def _prime_powers(lo, hi):
    out = []
    for q in range(lo, hi + 1):
        m = q
        p = 2
        while p * p <= m:
            if m % p == 0:
                while m % p == 0:
                    m //= p
                break
            p += 1
        if m > 1:
            p = m
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        if m == 1:
            out.append(q)
    return out


def _normalize(name: str) -> str:
    s = name.strip()
    key = s.upper().replace(" ", "")
    if key in _ALIASES:
        return _ALIASES[key]
    return s


def _vector_action_sl2(q: int):
    F = gf(q)
    vecs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}
    perms = []
    for m in sl2_generators(q):
        (a, b), (c, d) = m.data
        images = [idx[(F.add(F.mul(x, a), F.mul(y, c)),
                       F.add(F.mul(x, b), F.mul(y, d)))] for (x, y) in vecs]
        perms.append(Permutation(images))
    return perms


def load_group(name: str, data: str | os.PathLike | None = None):
    """Return (GroupSpec, StabilizerChain), with the order assertion enforced."""
    name = _normalize(name)
    m = re.fullmatch(r"A(\d+)", name)
    if m:
        n = int(m.group(1))
        if not 3 <= n <= 20:
            raise KeyError(f"A{n} outside the catalog range (n <= 20)")
        gens = [parse_perm("(1,2,3)", n)]
        if n > 3:
            cyc = "(" + ",".join(str(i) for i in range(1, n + 1)) + ")" if n % 2 \
                else "(" + ",".join(str(i) for i in range(2, n + 1)) + ")"
            gens.append(parse_perm(cyc, n))
        spec = GroupSpec(name, "alternating", n, gens, factorial(n) // 2,
                         MAXIMAL_SUBGROUPS.get(name, {}))
        return _verified(spec)
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        n = int(m.group(1))
        if not 2 <= n <= 18:
            raise KeyError(f"S{n} outside the catalog range (n <= 18)")
        gens = [parse_perm("(1,2)", n)]
        if n > 2:
            gens.append(parse_perm("(" + ",".join(str(i) for i in range(1, n + 1)) + ")", n))
        spec = GroupSpec(name, "symmetric", n, gens, factorial(n))
        return _verified(spec)
    m = re.fullmatch(r"L2\((\d+)\)", name)
    if m:
        q = int(m.group(1))
        if q > 32 or q < 4:
            raise KeyError(f"L2({q}) outside the catalog range (4 <= q <= 32)")
        gens = projective_line_rep(q)
        spec = GroupSpec(name, "psl2", q + 1, gens, l2_order(q),
                         MAXIMAL_SUBGROUPS.get(name, {}))
        return _verified(spec)
    m = re.fullmatch(r"SL2\((\d+)\)", name)
    if m:
        q = int(m.group(1))
        if q > 32 or q < 4:
            raise KeyError(f"SL2({q}) outside the catalog range (4 <= q <= 32)")
        gens = _vector_action_sl2(q)
        spec = GroupSpec(name, "sl2", q * q - 1, gens, sl2_order(q))
        return _verified(spec)
    if name in STORED_GROUPS:
        fname, order, nclasses = STORED_GROUPS[name]
        path = data_dir(data) / "groups" / fname
        degree, gens = parse_perm_file(path.read_text())
        family = "sporadic" if name in ("M11", "M12", "M22", "J1", "J2") \
            else "classical-small"
        spec = GroupSpec(name, family, degree, gens, order,
                         MAXIMAL_SUBGROUPS.get(name, {}), nclasses)
        return _verified(spec)
    raise KeyError(f"unknown group {name!r}; known: {', '.join(catalog_names())}")


def _verified(spec: GroupSpec):
    chain = build_chain(spec.generators)
    if chain.order() != spec.declared_order:
        raise AssertionError(
            f"{spec.name}: computed order {chain.order()} != declared "
            f"{spec.declared_order} (corrupt data)")
    for sub_name, strs in spec.maximal_subgroups.items():
        gens = [parse_perm(s, spec.degree) for s in strs]
        sub = build_chain(gens)
        if sub.order() >= chain.order() or chain.order() % sub.order():
            raise AssertionError(
                f"{spec.name}: listed maximal subgroup {sub_name} fails the "
                "proper-subgroup check")
        for g in gens:
            if not chain.contains(g):
                raise AssertionError(
                    f"{spec.name}: {sub_name} generator outside the group")
    return spec, chain


def known_class_count(name: str):
    name = _normalize(name)
    if name in STORED_GROUPS:
        return STORED_GROUPS[name][2]
    return None


def verify_integrity(name: str, data=None):
    """Order assertion plus (for stored groups) the class-count check."""
    spec, chain = load_group(name, data)
    want = known_class_count(name)
    if want is not None:
        gc = conjugacy_classes(chain)
        if len(gc.classes) != want:
            raise AssertionError(
                f"{name}: {len(gc.classes)} classes, expected {want}")
    return spec, chain


# -- class systems and tables (session caches) --------------------------------

_class_cache: dict = {}
_table_cache: dict = {}


def class_system(name: str, data=None):
    """GroupClasses (indexed) or AnClassSystem for large alternating groups."""
    name = _normalize(name)
    if name in _class_cache:
        return _class_cache[name]
    m = re.fullmatch(r"A(\d+)", name)
    if m and int(m.group(1)) >= 9:
        from .symmchar import AnClassSystem
        cs = AnClassSystem(int(m.group(1)))
    else:
        _, chain = load_group(name, data)
        cs = conjugacy_classes(chain)
    _class_cache[name] = cs
    return cs


def character_table(name: str, data=None, use_file_cache: bool = True) -> CharacterTable:
    """Character table by the appropriate engine (symmchar for A_n/S_n,
    Dixon otherwise), optionally loading a verified file from data/tables."""
    name = _normalize(name)
    if name in _table_cache:
        return _table_cache[name]
    path = data_dir(data) / "tables" / (_table_filename(name))
    if use_file_cache and path.exists():
        table = load_table(path)
        if table.group_name != name:
            raise AssertionError(f"table file {path} holds {table.group_name}")
        _table_cache[name] = table
        return table
    m = re.fullmatch(r"A(\d+)", name)
    if m:
        from .symmchar import an_table
        table = an_table(int(m.group(1)))
    else:
        m = re.fullmatch(r"S(\d+)", name)
        if m:
            from .symmchar import sn_table
            table = sn_table(int(m.group(1)))
        else:
            _, chain = load_group(name, data)
            table = dixon_table(conjugacy_classes(chain), name)
    _table_cache[name] = table
    return table


def _table_filename(name: str) -> str:
    return re.sub(r"[()']", lambda m: {"(": "_", ")": "", "'": ""}[m.group(0)], name) + ".json"


def save_table(table: CharacterTable, path) -> None:
    Path(path).write_text(json.dumps(table.to_json()))


def load_table(path) -> CharacterTable:
    """Load and fully re-verify a table file (orthogonality and all)."""
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as err:
        raise ValueError(f"malformed table file {path}: {err}") from err
    for key in ("group", "order", "classes", "characters"):
        if key not in obj:
            raise ValueError(f"table file {path} missing field {key!r}")
    return CharacterTable.from_json(obj)


def maximal_subgroup_generators(name: str):
    """Verified maximal-subgroup generators for the tiny catalog groups."""
    name = _normalize(name)
    spec, chain = load_group(name)
    if not spec.maximal_subgroups:
        raise KeyError(f"no maximal subgroup data stored for {name}")
    out = {}
    for sub_name, strs in spec.maximal_subgroups.items():
        out[sub_name] = [parse_perm(s, spec.degree) for s in strs]
    return out


def sl32_transvection_cover_subgroups():
    """The three point stabilizers of a 2-space in SL3(2) (order 24 each)."""
    spec, chain = load_group("SL3(2)")
    subs = []
    for strs in SL32_POINT_STABILIZERS:
        gens = [parse_perm(s, 7) for s in strs]
        sub = build_chain(gens)
        if sub.order() != 24:
            raise AssertionError("point stabilizer data corrupt")
        subs.append(gens)
    return subs
