"""Enumeration and exhaustive search for structures on small carriers.

Two independent routes to the same inventory: ``enumerate_classical_structures``
walks integer partitions and abelian-group choices per part, while
``brute_force_search`` fills in partial multiplication tables cell by cell
and keeps whatever passes the axiom checker.  ``cross_validate`` runs both
and insists they agree up to relabeling, which is the computational content
of the classification: every commutative structure is a disjoint union of
abelian groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product

from .frobenius import FrobeniusCandidate, verify_structure
from .groups import (AbelianGroupSpec, StructureSpec, enumerate_abelian_groups,
                     nonabelian_groups_of_order)

SEARCH_CARRIER_LIMIT = 4
QUOTIENT_CARRIER_LIMIT = 6
SPECIAL_ENUM_LIMIT = 8

_UNASSIGNED = -2
_UNDEF = -1


def partitions(n: int) -> list[tuple[int, ...]]:
    """Integer partitions of n, parts non-increasing, reverse-lexicographic.

    partitions(0) is [()]: the empty carrier has the empty partition.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    out: list[tuple[int, ...]] = []

    def rec(left: int, cap: int, prefix: tuple[int, ...]):
        if left == 0:
            out.append(prefix)
            return
        for k in range(min(left, cap), 0, -1):
            rec(left - k, k, prefix + (k,))

    rec(n, n, ())
    return out


def _structures_from_choices(n: int, choices_per_order) -> list[StructureSpec]:
    specs = set()
    for part in partitions(n):
        sizes: dict[int, int] = {}
        for m in part:
            sizes[m] = sizes.get(m, 0) + 1
        per_size = []
        for m, count in sorted(sizes.items()):
            per_size.append(list(combinations_with_replacement(choices_per_order(m), count)))
        for combo in product(*per_size):
            blocks = tuple(b for group in combo for b in group)
            specs.add(StructureSpec(blocks))
    return sorted(specs, key=StructureSpec.sort_key)


def enumerate_classical_structures(n: int) -> list[StructureSpec]:
    """All commutative structures on n points up to relabeling.

    One spec per multiset of abelian groups with total order n.
    """
    if n < 0:
        raise ValueError(f"carrier size {n} is negative")
    return _structures_from_choices(n, enumerate_abelian_groups)


def enumerate_special_frobenius(n: int) -> list[StructureSpec]:
    """Like the classical enumeration but non-abelian blocks are allowed.

    Bounded by the built-in table library, which covers orders up to 8.
    """
    if n < 0:
        raise ValueError(f"carrier size {n} is negative")
    if n > SPECIAL_ENUM_LIMIT:
        raise ValueError(
            f"carrier size {n} exceeds the built-in group table bound {SPECIAL_ENUM_LIMIT}")

    def choices(m: int):
        return list(enumerate_abelian_groups(m)) + nonabelian_groups_of_order(m)

    return _structures_from_choices(n, choices)


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exhaustive table search."""

    n: int
    require_commutative: bool = True
    budget: int | None = None


class BudgetExceededError(RuntimeError):
    """Search ran out of node budget; carries what was found so far."""

    def __init__(self, explored: int, found: list):
        super().__init__(f"search budget exhausted after {explored} nodes")
        self.explored = explored
        self.found = found


def brute_force_search(cfg: SearchConfig) -> list[FrobeniusCandidate]:
    """Every structure on the labeled carrier passing the axiom checker.

    Fills cells of a partial single-valued table depth first, pruning on
    associativity over the decided prefix, on surjectivity feasibility, and
    on unit coverage.  The unit subset is never guessed: for each complete
    table it is forced to be the set of all two-sided partial identities,
    which is the only subset that can satisfy the unit laws.
    """
    n = cfg.n
    if n < 0:
        raise ValueError(f"carrier size {n} is negative")
    if n > SEARCH_CARRIER_LIMIT:
        raise ValueError(
            f"carrier size {n} exceeds the exhaustive search bound {SEARCH_CARRIER_LIMIT}")

    if cfg.require_commutative:
        cells = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        cells = [(i, j) for i in range(n) for j in range(n)]

    table = [[_UNASSIGNED] * n for _ in range(n)]
    found: list[FrobeniusCandidate] = []
    explored = 0

    def triple_ok(a: int, b: int, c: int) -> bool:
        # compare (a*b)*c with a*(b*c) as far as the prefix decides them
        ab = table[a][b]
        bc = table[b][c]
        if ab == _UNDEF:
            left = _UNDEF
        elif ab == _UNASSIGNED:
            left = _UNASSIGNED
        else:
            left = table[ab][c]
        if bc == _UNDEF:
            right = _UNDEF
        elif bc == _UNASSIGNED:
            right = _UNASSIGNED
        else:
            right = table[a][bc]
        if left == _UNASSIGNED or right == _UNASSIGNED:
            return True
        return left == right

    def affected_ok(p: int, q: int) -> bool:
        for c in range(n):
            if not triple_ok(p, q, c):
                return False
        for a in range(n):
            if not triple_ok(a, p, q):
                return False
        for a in range(n):
            for b in range(n):
                if table[a][b] == p and not triple_ok(a, b, q):
                    return False
        for b in range(n):
            for c in range(n):
                if table[b][c] == q and not triple_ok(p, b, c):
                    return False
        return True

    def disqualified(e: int) -> bool:
        for y in range(n):
            if table[e][y] >= 0 and table[e][y] != y:
                return True
            if table[y][e] >= 0 and table[y][e] != y:
                return True
        return False

    def units_feasible() -> bool:
        live = [e for e in range(n) if not disqualified(e)]
        for x in range(n):
            if not any(table[e][x] == x or table[e][x] == _UNASSIGNED for e in live):
                return False
            if not any(table[x][e] == x or table[x][e] == _UNASSIGNED for e in live):
                return False
        return True

    def surjectivity_feasible(k: int) -> bool:
        values = {table[i][j] for i in range(n) for j in range(n) if table[i][j] >= 0}
        return n - len(values) <= len(cells) - k

    def finalize():
        bot = [e for e in range(n) if not disqualified(e)]
        for x in range(n):
            if not any(table[e][x] == x for e in bot):
                return
            if not any(table[x][e] == x for e in bot):
                return
        triples = [(i, j, table[i][j]) for i in range(n) for j in range(n)
                   if table[i][j] >= 0]
        cand = FrobeniusCandidate.from_triples(n, triples, bot)
        report = verify_structure(cand)
        keep = report.is_classical if cfg.require_commutative else report.is_special_frobenius
        if keep:
            found.append(cand)

    def descend(k: int):
        nonlocal explored
        if k == len(cells):
            finalize()
            return
        i, j = cells[k]
        for v in list(range(n)) + [_UNDEF]:
            explored += 1
            if cfg.budget is not None and explored > cfg.budget:
                raise BudgetExceededError(explored, found)
            table[i][j] = v
            if cfg.require_commutative:
                table[j][i] = v
            ok = (affected_ok(i, j)
                  and (i == j or not cfg.require_commutative or affected_ok(j, i))
                  and units_feasible()
                  and surjectivity_feasible(k + 1))
            if ok:
                descend(k + 1)
            table[i][j] = _UNASSIGNED
            if cfg.require_commutative:
                table[j][i] = _UNASSIGNED

    descend(0)
    found.sort(key=lambda c: (c.triples(), tuple(sorted(c.bot))))
    return found


def _canonical_key(cand: FrobeniusCandidate, sigma) -> tuple:
    triples = tuple(sorted((sigma[x], sigma[y], sigma[z]) for x, y, z in cand.triples()))
    bot = tuple(sorted(sigma[e] for e in cand.bot))
    return (triples, bot)


def quotient_by_iso(cands: list[FrobeniusCandidate]) -> list[tuple[FrobeniusCandidate, int]]:
    """Group candidates by carrier relabeling; return (representative, size).

    The representative is the relabeling with the least (triples, bot) key,
    so it is a fixed point of canonicalization.
    """
    if not cands:
        return []
    n = cands[0].n
    if any(c.n != n for c in cands):
        raise ValueError("candidates must share one carrier size")
    if n > QUOTIENT_CARRIER_LIMIT:
        raise ValueError(
            f"carrier size {n} exceeds the relabeling bound {QUOTIENT_CARRIER_LIMIT}")
    classes: dict[tuple, int] = {}
    for cand in cands:
        key = min(_canonical_key(cand, sigma) for sigma in permutations(range(n)))
        classes[key] = classes.get(key, 0) + 1
    out = []
    for (triples, bot), size in sorted(classes.items()):
        out.append((FrobeniusCandidate.from_triples(n, triples, bot), size))
    return out


@dataclass(frozen=True)
class CrossValidation:
    """Outcome of checking the search against the enumeration."""

    n: int
    ok: bool
    matches: tuple  # (StructureSpec, representative, class size) per class
    enumerated: tuple
    message: str

    @property
    def class_count(self) -> int:
        return len(self.matches)


def cross_validate(n: int, budget: int | None = None) -> CrossValidation:
    """Search, quotient, decompose, and compare against the enumeration.

    A mismatch means one of the two routes is buggy; the verdict carries
    both sides.  n = 4 is allowed only with an explicit node budget.
    """
    if n > SEARCH_CARRIER_LIMIT:
        raise ValueError(f"carrier size {n} exceeds the search bound {SEARCH_CARRIER_LIMIT}")
    if n == SEARCH_CARRIER_LIMIT and budget is None:
        raise ValueError("carrier size 4 needs an explicit node budget")
    from .analysis import decompose

    cands = brute_force_search(SearchConfig(n, require_commutative=True, budget=budget))
    classes = quotient_by_iso(cands)
    enumerated = enumerate_classical_structures(n)

    matches = []
    for rep, size in classes:
        matches.append((decompose(rep).spec, rep, size))
    matches.sort(key=lambda t: t[0].sort_key())

    found_specs = [spec for spec, _, _ in matches]
    ok = found_specs == list(enumerated)
    if ok:
        message = f"{len(classes)} classes match {len(enumerated)} enumerated structures"
    else:
        message = (f"mismatch: search found {[s.label for s in found_specs]}, "
                   f"enumeration lists {[s.label for s in enumerated]}")
    return CrossValidation(n=n, ok=ok, matches=tuple(matches),
                           enumerated=tuple(enumerated), message=message)
