"""Brute-force ground truth.

Deliberately shares no algorithm with the other modules: semigroups are
grown as plain gap sets, minimality is tested by scanning all splittings, and
invariants from generators come from a bare boolean table.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable

from .core import NumericalSemigroup
from .errors import BadArguments, BoundTooLarge, GcdNotOne

MAX_ORACLE_GENUS = 25


def _gap_children(gaps: frozenset[int]) -> list[frozenset[int]]:
    frob = max(gaps, default=-1)
    mult = next(n for n in range(1, frob + 3) if n not in gaps)
    children = []
    # minimal generators above F lie in (F, F + m]
    for x in range(max(frob + 1, 1), max(frob + mult, 1) + 1):
        splits = any(t not in gaps and x - t not in gaps for t in range(1, x // 2 + 1))
        if not splits:
            children.append(gaps | {x})
    return children


def all_gap_sets_up_to_genus(g: int) -> list[frozenset[int]]:
    if g < 0:
        raise BadArguments(f"genus bound must be non-negative, got {g}")
    if g > MAX_ORACLE_GENUS:
        raise BoundTooLarge(f"genus bound {g} exceeds {MAX_ORACLE_GENUS}")
    level = [frozenset()]
    out: list[frozenset[int]] = []
    for depth in range(g + 1):
        out.extend(level)
        if depth < g:
            level = [child for gaps in level for child in _gap_children(gaps)]
    return out


def all_semigroups_up_to_genus(g: int) -> list[NumericalSemigroup]:
    """Every numerical semigroup of genus <= g, each exactly once, ordered by genus."""
    return [NumericalSemigroup.from_gaps(gaps) for gaps in all_gap_sets_up_to_genus(g)]


def coe_definitional(S: NumericalSemigroup) -> bool:
    """Check x - 1, x + 1 in S for every odd x in S up to F(S) + 2."""
    for x in range(1, S.frobenius + 3, 2):
        if x in S and (x - 1 not in S or x + 1 not in S):
            return False
    return True


def dp_invariants(gens: Iterable[int]) -> tuple[int, int, int]:
    """(Frobenius number, genus, multiplicity) of <gens> from a boolean table over [0, min*max]."""
    gs = sorted(set(gens))
    if not gs or gs[0] <= 0:
        raise BadArguments(f"need positive generators, got {gs}")
    if reduce(math.gcd, gs) != 1:
        raise GcdNotOne(f"gcd{gs} != 1")
    size = gs[0] * gs[-1] + 1
    member = [False] * size
    member[0] = True
    for n in range(1, size):
        member[n] = any(member[n - a] for a in gs if a <= n)
    holes = [n for n in range(size) if not member[n]]
    frob = holes[-1] if holes else -1
    mult = next(n for n in range(1, size + 1) if n >= size or member[n])
    return frob, len(holes), mult


def census(max_genus: int) -> list[tuple[int, int, int]]:
    """Rows (genus, number of numerical semigroups, number of Coe-semigroups)."""
    rows = {g: [0, 0] for g in range(max_genus + 1)}
    for S in all_semigroups_up_to_genus(max_genus):
        rows[S.genus][0] += 1
        rows[S.genus][1] += coe_definitional(S)
    return [(g, a, c) for g, (a, c) in rows.items()]
