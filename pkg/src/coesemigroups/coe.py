"""Coe-semigroups: the predicate, chains up to N, and the Coe-closure.

A numerical semigroup is Coe when every odd member x has x - 1 and x + 1 in
the semigroup. It is enough to test the odd minimal generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .core import (
    GeneratorSet,
    NumericalSemigroup,
    fill_frobenius,
    from_generators,
)
from .errors import IsFullSemigroup, NotCoe


def is_coe(S: NumericalSemigroup) -> bool:
    return all(x - 1 in S and x + 1 in S for x in S.msg if x % 2)


def _require_coe(S: NumericalSemigroup) -> None:
    if not is_coe(S):
        raise NotCoe(f"{S} is not a Coe-semigroup")


def odd_gaps(S: NumericalSemigroup) -> tuple[int, ...]:
    return tuple(x for x in S.gaps if x % 2)


def coe_sanity(S: NumericalSemigroup) -> tuple[bool, bool]:
    """(multiplicity is even, Frobenius number is odd) for a Coe-semigroup other than N."""
    _require_coe(S)
    if S.is_full:
        raise IsFullSemigroup("N has no even multiplicity or odd Frobenius number")
    return S.multiplicity % 2 == 0, S.frobenius % 2 == 1


@dataclass(frozen=True)
class ChainRecord:
    """S = links[0] < links[1] < ... < links[-1] = N, each link filling the previous Frobenius pair."""

    links: tuple[NumericalSemigroup, ...]

    @property
    def length(self) -> int:
        return len(self.links) - 1


def chain_to_full(S: NumericalSemigroup) -> ChainRecord:
    _require_coe(S)
    links = [S]
    while not links[-1].is_full:
        links.append(fill_frobenius(links[-1]))
    return ChainRecord(tuple(links))


@dataclass(frozen=True)
class CoeMonoid:
    """A Coe-monoid M = scale * base.

    ``scale == 1`` means M is itself a Coe-semigroup. Otherwise M contains
    no odd element, ``scale`` is gcd(M) (always even), and ``base`` is the
    numerical semigroup M / scale.
    """

    scale: int
    base: NumericalSemigroup

    def __post_init__(self) -> None:
        if self.scale == 1:
            if not is_coe(self.base):
                raise NotCoe(f"{self.base} is not a Coe-semigroup")
        elif self.scale < 1 or self.scale % 2:
            raise ValueError(f"scale must be 1 or even, got {self.scale}")

    @property
    def is_semigroup(self) -> bool:
        return self.scale == 1

    @property
    def msg(self) -> tuple[int, ...]:
        return tuple(self.scale * g for g in self.base.msg)

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n % self.scale:
            return False
        return n // self.scale in self.base

    def issubset(self, other: CoeMonoid) -> bool:
        return all(g in other for g in self.msg)

    def to_json_dict(self) -> dict[str, object]:
        return {"scale": self.scale, "msg": list(self.msg)}


def classify_monoid(gens: Iterable[int] | GeneratorSet) -> CoeMonoid | None:
    """Decide whether <gens> is a Coe-monoid; ``None`` when it is not.

    A monoid with no odd element is always a Coe-monoid. A monoid with an odd
    element is one exactly when it is a Coe-semigroup, which forces gcd 1.
    """
    gs = GeneratorSet.of(gens)
    d = gs.gcd
    if d % 2 == 0:
        return CoeMonoid(d, from_generators(g // d for g in gs))
    if d != 1:
        # odd x with x +- 1 in the monoid would force d | 1
        return None
    S = from_generators(gs)
    return CoeMonoid(1, S) if is_coe(S) else None


def coe_closure(X: Iterable[int] | GeneratorSet) -> CoeMonoid:
    """Smallest Coe-monoid containing X: the monoid spanned by X and x +- 1 for odd x in X."""
    gs = GeneratorSet.of(X)
    span = set(gs)
    for x in gs:
        if x % 2:
            span.update((x - 1, x + 1))
    span.discard(0)
    d = reduce(math.gcd, span)
    base = from_generators(a // d for a in span)
    return CoeMonoid(d, base)
