"""Finite groups as Cayley tables and the structures they induce.

Abelian groups travel as invariant-factor chains d1 | d2 | ... | dk with
every factor at least 2 (the empty chain is the one-element group).
Arbitrary groups travel as explicit, validated Cayley tables; a small
built-in library covers the non-abelian groups of order at most 8.

A ``StructureSpec`` is a multiset of group blocks.  ``build_biproduct``
lays the blocks side by side on one carrier, multiplies within blocks,
leaves cross-block products undefined, and takes the block units as the
unit subset.  The result always satisfies every axiom except possibly
commutativity, which holds exactly when every block is abelian.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from math import prod

from .frobenius import FrobeniusCandidate
from .rel import Rel


@dataclass(frozen=True)
class AbelianGroupSpec:
    """A finite abelian group, by its invariant factors.

    >>> AbelianGroupSpec((2, 4)).order
    8
    >>> AbelianGroupSpec(()).label
    'Z1'
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for d in fs:
            if d < 2:
                raise ValueError(f"invariant factor {d} is below 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors must divide in turn: {a} | {b} fails")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def label(self) -> str:
        if not self.invariant_factors:
            return "Z1"
        return "x".join(f"Z{d}" for d in self.invariant_factors)

    def table(self) -> tuple[tuple[int, ...], ...]:
        return abelian_table(self.invariant_factors)


def abelian_table(factors: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Cayley table of a direct product of cyclic groups, unit at index 0."""
    elems = list(product(*(range(d) for d in factors)))
    index = {e: i for i, e in enumerate(elems)}
    return tuple(
        tuple(index[tuple((a + b) % d for a, b, d in zip(x, y, factors))] for y in elems)
        for x in elems)


def _find_unit(table) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise ValueError("table has no unit element")


@dataclass(frozen=True)
class GroupSpec:
    """A finite group given by an explicit Cayley table.

    Validation names the first violated group axiom.  ``name`` is cosmetic
    and only set for the built-in tables.
    """

    table: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        for x, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {x} has length {len(row)}, expected {n}")
            for y, z in enumerate(row):
                if not 0 <= z < n:
                    raise ValueError(f"entry ({x}, {y}) = {z} is not an element")
        unit = _find_unit(table)
        for x in range(n):
            if not any(table[x][y] == unit and table[y][x] == unit for y in range(n)):
                raise ValueError(f"element {x} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise ValueError(f"not associative at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def unit(self) -> int:
        return _find_unit(self.table)

    @property
    def is_abelian(self) -> bool:
        t = self.table
        n = len(t)
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return f"unidentified group of order {self.order}"


def _s3_table() -> tuple[tuple[int, ...], ...]:
    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return tuple(tuple(index[tuple(p[q[k]] for k in range(3))] for q in perms)
                 for p in perms)


def _d4_table() -> tuple[tuple[int, ...], ...]:
    # element f*4 + r is the rotation r followed by f reflections
    def mul(a, b):
        r1, f1 = a % 4, a // 4
        r2, f2 = b % 4, b // 4
        r = (r1 + (4 - r2 if f1 else r2)) % 4
        return (f1 ^ f2) * 4 + r
    return tuple(tuple(mul(a, b) for b in range(8)) for a in range(8))


def _q8_table() -> tuple[tuple[int, ...], ...]:
    # element b*2 + s is the unit quaternion [1, i, j, k][b] with sign (-1)^s
    base = {(0, x): (x, 0) for x in range(4)}
    base.update({(x, 0): (x, 0) for x in range(4)})
    base.update({(1, 1): (0, 1), (2, 2): (0, 1), (3, 3): (0, 1),
                 (1, 2): (3, 0), (2, 3): (1, 0), (3, 1): (2, 0),
                 (2, 1): (3, 1), (3, 2): (1, 1), (1, 3): (2, 1)})

    def mul(a, b):
        b1, s1 = a // 2, a % 2
        b2, s2 = b // 2, b % 2
        b3, s3 = base[(b1, b2)]
        return b3 * 2 + (s1 ^ s2 ^ s3)
    return tuple(tuple(mul(a, b) for b in range(8)) for a in range(8))


BUILTIN_NONABELIAN: dict[str, GroupSpec] = {
    "S3": GroupSpec(_s3_table(), "S3"),
    "D4": GroupSpec(_d4_table(), "D4"),
    "Q8": GroupSpec(_q8_table(), "Q8"),
}


def nonabelian_groups_of_order(m: int) -> list[GroupSpec]:
    return [g for g in BUILTIN_NONABELIAN.values() if g.order == m]


def element_orders(table) -> list[int]:
    """Order of each element, indexed by element."""
    n = len(table)
    unit = _find_unit(table)
    out = []
    for x in range(n):
        p, k = x, 1
        while p != unit:
            p = table[p][x]
            k += 1
        out.append(k)
    return out


def _factorize(m: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        fac[m] = fac.get(m, 0) + 1
    return fac


def normalize_invariant_factors(cyclic_orders) -> AbelianGroupSpec:
    """Invariant factors of a direct product of cyclic groups.

    >>> normalize_invariant_factors([4, 6]).invariant_factors
    (2, 12)
    >>> normalize_invariant_factors([2, 3]).invariant_factors
    (6,)
    """
    exponents: dict[int, list[int]] = {}
    for m in cyclic_orders:
        if m < 1:
            raise ValueError(f"cyclic order {m} is below 1")
        for p, e in _factorize(m).items():
            exponents.setdefault(p, []).append(e)
    depth = max((len(v) for v in exponents.values()), default=0)
    factors = []
    for k in range(depth):
        d = 1
        for p, es in exponents.items():
            es_sorted = sorted(es, reverse=True)
            if k < len(es_sorted):
                d *= p ** es_sorted[k]
        factors.append(d)
    return AbelianGroupSpec(tuple(sorted(factors)))


def _exponent_partitions(e: int, cap: int | None = None):
    if cap is None:
        cap = e
    if e == 0:
        yield ()
        return
    for k in range(min(e, cap), 0, -1):
        for rest in _exponent_partitions(e - k, k):
            yield (k,) + rest


def enumerate_abelian_groups(m: int) -> list[AbelianGroupSpec]:
    """All abelian groups of order m, one spec per isomorphism class.

    >>> [g.invariant_factors for g in enumerate_abelian_groups(8)]
    [(2, 2, 2), (2, 4), (8,)]
    """
    if m < 1:
        raise ValueError(f"group order {m} is below 1")
    per_prime = []
    for p, e in sorted(_factorize(m).items()):
        per_prime.append([(p, part) for part in _exponent_partitions(e)])
    specs = []
    for combo in product(*per_prime):
        prime_powers = [p ** k for p, part in combo for k in part]
        specs.append(normalize_invariant_factors(prime_powers))
    return sorted(set(specs), key=lambda s: s.invariant_factors)


def invariant_factors_of_table(table) -> tuple[int, ...]:
    """Invariant factors of an abelian Cayley table.

    Repeatedly splits off a cyclic subgroup of maximal order and recurses
    on the quotient.  Raises ValueError on a non-abelian table.
    """
    n = len(table)
    if any(table[a][b] != table[b][a] for a in range(n) for b in range(a + 1, n)):
        raise ValueError("table is not abelian")
    factors = []
    while len(table) > 1:
        n = len(table)
        unit = _find_unit(table)
        orders = element_orders(table)
        m = max(orders)
        g = orders.index(m)
        factors.append(m)
        sub = {unit}
        p = g
        while p != unit:
            sub.add(p)
            p = table[p][g]
        # quotient by the cyclic subgroup generated by g
        coset_of = {}
        reps = []
        for x in range(n):
            if x in coset_of:
                continue
            idx = len(reps)
            reps.append(x)
            for h in sub:
                coset_of[table[x][h]] = idx
        table = tuple(
            tuple(coset_of[table[a][b]] for b in reps) for a in reps)
    return tuple(reversed(factors))


def are_isomorphic(t1, t2) -> bool:
    """Isomorphism of two small Cayley tables by backtracking search."""
    n = len(t1)
    if len(t2) != n:
        return False
    o1, o2 = element_orders(t1), element_orders(t2)
    if sorted(o1) != sorted(o2):
        return False
    by_order: dict[int, list[int]] = {}
    for y, k in enumerate(o2):
        by_order.setdefault(k, []).append(y)
    mapping = [-1] * n
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return all(mapping[t1[a][b]] == t2[mapping[a]][mapping[b]]
                       for a in range(n) for b in range(n))
        for y in by_order.get(o1[x], ()):
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            ok = all(
                mapping[t1[a][x]] == -1 or mapping[t1[a][x]] == t2[mapping[a]][y]
                for a in range(x + 1)) and all(
                mapping[t1[x][a]] == -1 or mapping[t1[x][a]] == t2[y][mapping[a]]
                for a in range(x + 1))
            if ok and extend(x + 1):
                return True
            used[y] = False
            mapping[x] = -1
        return False

    return extend(0)


def identify_group(table) -> GroupSpec:
    """Name a Cayley table when it matches the built-in library."""
    spec = GroupSpec(tuple(tuple(row) for row in table))
    for g in BUILTIN_NONABELIAN.values():
        if g.order == spec.order and are_isomorphic(spec.table, g.table):
            return g
    return spec


def _block_key(b) -> tuple:
    if isinstance(b, AbelianGroupSpec):
        return (b.order, 0, b.invariant_factors)
    return (b.order, 1, b.name or "", b.table)


@dataclass(frozen=True)
class StructureSpec:
    """A multiset of group blocks, held in canonical order."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=_block_key)))

    @property
    def n(self) -> int:
        return sum(b.order for b in self.blocks)

    @property
    def label(self) -> str:
        if not self.blocks:
            return "(empty)"
        return " + ".join(b.label for b in self.blocks)

    @property
    def is_abelian(self) -> bool:
        return all(isinstance(b, AbelianGroupSpec) or b.is_abelian for b in self.blocks)

    def sort_key(self) -> tuple:
        return (self.n, len(self.blocks), tuple(_block_key(b) for b in self.blocks))


_NAME_TOKEN = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")


def parse_structure_spec(text: str) -> StructureSpec:
    """Parse the block grammar: ';' between blocks, ',' between cyclic orders.

    "4;2,2" is a Z4 block next to a Z2xZ2 block; a block may also name a
    built-in non-abelian table, as in "S3;2".
    """
    blocks = []
    for raw in text.split(";"):
        token = raw.strip()
        if not token:
            raise ValueError(f"empty block in group spec {text!r}")
        if _NAME_TOKEN.match(token):
            key = token.upper()
            if key not in BUILTIN_NONABELIAN:
                raise ValueError(
                    f"unknown group name {token!r}; known: {sorted(BUILTIN_NONABELIAN)}")
            blocks.append(BUILTIN_NONABELIAN[key])
            continue
        try:
            orders = [int(part.strip()) for part in token.split(",")]
        except ValueError:
            raise ValueError(f"bad block token {token!r} in group spec {text!r}") from None
        if any(m < 1 for m in orders):
            raise ValueError(f"cyclic orders must be at least 1 in block {token!r}")
        blocks.append(normalize_invariant_factors(orders))
    return StructureSpec(tuple(blocks))


def _block_table(b) -> tuple[tuple[int, ...], ...]:
    return b.table() if isinstance(b, AbelianGroupSpec) else b.table


def build_group_structure(g) -> FrobeniusCandidate:
    """The structure of a single group: its multiplication plus its unit."""
    table = _block_table(g)
    n = len(table)
    triples = ((x, y, table[x][y]) for x in range(n) for y in range(n))
    unit = _find_unit(table)
    return FrobeniusCandidate.from_triples(n, triples, {unit})


def build_biproduct(spec: StructureSpec) -> FrobeniusCandidate:
    """Disjoint union of the blocks on one carrier {0..n-1}.

    Blocks occupy consecutive index ranges in canonical order; products
    across blocks are undefined; the unit subset collects each block's unit.
    """
    n = spec.n
    triples = []
    bot = []
    offset = 0
    for b in spec.blocks:
        table = _block_table(b)
        m = len(table)
        for x in range(m):
            for y in range(m):
                triples.append((offset + x, offset + y, offset + table[x][y]))
        bot.append(offset + _find_unit(table))
        offset += m
    return FrobeniusCandidate.from_triples(n, triples, bot)
