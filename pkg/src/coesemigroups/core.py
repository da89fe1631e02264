"""Numerical semigroups: canonical encoding and classical invariants.

A numerical semigroup S is stored by its conductor c = F(S) + 1 together with
the sorted tuple of its elements below c. Everything at or above the conductor
is implicitly a member. Two semigroups are equal iff both fields agree, so the
dataclass equality and hash are structural.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator

from .errors import (
    AlreadyFull,
    BadArguments,
    EmptyGenerators,
    GcdNotOne,
    NotAnElement,
    NotMinimalGenerator,
    PairNotMinimal,
    SemigroupError,
)

_GENERATOR_LIST = re.compile(r"[0-9]+(,[0-9]+)*")


@dataclass(frozen=True)
class GeneratorSet:
    """Nonempty, duplicate-free, sorted set of positive integers."""

    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise EmptyGenerators("generator set is empty")
        if any(g <= 0 for g in self.generators):
            raise BadArguments(f"generators must be positive: {list(self.generators)}")
        if list(self.generators) != sorted(set(self.generators)):
            raise BadArguments("generators must be sorted and distinct; use GeneratorSet.of")

    @classmethod
    def of(cls, gens: Iterable[int] | GeneratorSet) -> GeneratorSet:
        if isinstance(gens, GeneratorSet):
            return gens
        return cls(tuple(sorted(set(int(g) for g in gens))))

    @classmethod
    def parse(cls, text: str) -> GeneratorSet:
        """Parse strict comma-separated decimal, e.g. ``"4,6,7"``. No whitespace."""
        if not _GENERATOR_LIST.fullmatch(text):
            raise BadArguments(f"not a comma-separated list of positive integers: {text!r}")
        return cls.of(int(tok) for tok in text.split(","))

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.generators)

    def __iter__(self) -> Iterator[int]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup in canonical form.

    ``conductor`` is the least c with {c, c+1, ...} contained in S, and
    ``elements_below_conductor`` lists the members smaller than c. For N the
    conductor is 0 and the tuple is empty.

    Construct through :func:`from_generators`, :meth:`from_gaps` or
    :meth:`from_elements`; the raw constructor only checks canonical shape,
    not additive closure.
    """

    conductor: int
    elements_below_conductor: tuple[int, ...]

    def __post_init__(self) -> None:
        c, elems = self.conductor, self.elements_below_conductor
        if c < 0:
            raise SemigroupError(f"negative conductor {c}")
        if c == 0:
            if elems:
                raise SemigroupError("N has no elements below its conductor")
        else:
            if not elems or elems[0] != 0:
                raise SemigroupError("0 must belong to the semigroup")
            if c == 1:
                raise SemigroupError("conductor 1 is impossible (1 would be a gap containing 0)")
            if elems[-1] >= c - 1:
                raise SemigroupError("conductor - 1 must be a gap")
            if any(a >= b for a, b in zip(elems, elems[1:])):
                raise SemigroupError("elements must be strictly increasing")
        mask = 0
        for s in elems:
            mask |= 1 << s
        object.__setattr__(self, "_mask", mask)

    # -- construction ---------------------------------------------------

    @classmethod
    def _from_table(cls, table: Iterable[bool]) -> NumericalSemigroup:
        """Canonicalize a membership table; positions past its end are members."""
        flags = list(table)
        last_gap = -1
        for i in range(len(flags) - 1, -1, -1):
            if not flags[i]:
                last_gap = i
                break
        conductor = last_gap + 1
        return cls(conductor, tuple(i for i in range(conductor) if flags[i]))

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        """Build the semigroup with the given finite gap set; rejects non-closed sets."""
        gapset = set(gaps)
        if any(x <= 0 for x in gapset):
            raise SemigroupError(f"gaps must be positive integers: {sorted(gapset)}")
        bound = max(gapset, default=-1) + 1
        S = cls._from_table(i not in gapset for i in range(bound))
        if not S.is_closed():
            raise SemigroupError(f"complement of {sorted(gapset)} is not additively closed")
        return S

    @classmethod
    def from_elements(cls, elements: Iterable[int], bound: int) -> NumericalSemigroup:
        """Semigroup whose members below ``bound`` are ``elements`` (all n >= bound are members)."""
        members = {e for e in elements if e < bound}
        S = cls._from_table(i in members for i in range(bound))
        if not S.is_closed():
            raise SemigroupError("element set is not additively closed")
        return S

    # -- membership -----------------------------------------------------

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self._mask >> n & 1)  # type: ignore[attr-defined]

    def elements_up_to(self, n: int) -> Iterator[int]:
        """Members of S in [0, n], ascending."""
        for s in self.elements_below_conductor:
            if s > n:
                return
            yield s
        yield from range(self.conductor, n + 1)

    def is_closed(self) -> bool:
        """Exhaustive closure check on [0, 2*conductor]."""
        elems = self.elements_below_conductor
        return all(a + b in self for i, a in enumerate(elems) for b in elems[i:])

    def issubset(self, other: NumericalSemigroup) -> bool:
        return other.conductor <= self.conductor and all(s in other for s in self.elements_below_conductor)

    # -- invariants -----------------------------------------------------

    @property
    def is_full(self) -> bool:
        return self.conductor == 0

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(1, self.conductor) if n not in self)

    @property
    def genus(self) -> int:
        return self.conductor - len(self.elements_below_conductor)

    @property
    def multiplicity(self) -> int:
        if len(self.elements_below_conductor) > 1:
            return self.elements_below_conductor[1]
        return max(self.conductor, 1)

    @cached_property
    def msg(self) -> tuple[int, ...]:
        """Minimal system of generators, ascending."""
        if self.is_full:
            return (1,)
        m = self.multiplicity
        nonzero = [s for s in self.elements_up_to(self.frobenius + m) if s > 0]
        out = []
        for s in nonzero:
            half = s // 2
            decomposable = False
            for t in nonzero:
                if t > half:
                    break
                if s - t in self:
                    decomposable = True
                    break
            if not decomposable:
                out.append(s)
        return tuple(out)

    @property
    def embedding_dimension(self) -> int:
        return len(self.msg)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.msg)) + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup(msg={self.msg})"


FULL = NumericalSemigroup(0, ())
"""The semigroup N."""


def from_generators(gens: Iterable[int] | GeneratorSet) -> NumericalSemigroup:
    """Numerical semigroup generated by ``gens``.

    The membership table is filled by dynamic programming. Since the
    Frobenius number of a gcd-1 set is below min(gens) * max(gens), the
    table never needs to extend past that product; in practice filling stops
    once min(gens) consecutive members have been seen.
    """
    gs = GeneratorSet.of(gens)
    if gs.gcd != 1:
        raise GcdNotOne(f"gcd{list(gs.generators)} = {gs.gcd}")
    m, top = gs.generators[0], gs.generators[-1]
    if m == 1:
        return FULL
    bound = m * top
    table = bytearray(bound + 1)
    table[0] = 1
    run = 0
    for n in range(1, bound + 1):
        if any(table[n - g] for g in gs.generators if g <= n):
            table[n] = 1
            run += 1
            if run == m:
                return NumericalSemigroup._from_table(table[: n - m + 1])
        else:
            run = 0
    return NumericalSemigroup._from_table(table)


def contains(S: NumericalSemigroup, n: int) -> bool:
    return n in S


def frobenius(S: NumericalSemigroup) -> int:
    return S.frobenius


def genus(S: NumericalSemigroup) -> int:
    return S.genus


def multiplicity(S: NumericalSemigroup) -> int:
    return S.multiplicity


def minimal_generators(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.msg


def embedding_dimension(S: NumericalSemigroup) -> int:
    return S.embedding_dimension


def apery_set(S: NumericalSemigroup, n: int) -> tuple[int, ...]:
    """Ap(S, n): for each residue i mod n, the least element of S congruent to i."""
    if n <= 0 or n not in S:
        raise NotAnElement(f"{n} is not a nonzero element of {S}")
    out = []
    for i in range(n):
        w = i
        while w not in S:
            w += n
        out.append(w)
    return tuple(sorted(out))


def remove_element(S: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """S minus {x}; only a semigroup when x is a minimal generator."""
    if x not in S.msg:
        raise NotMinimalGenerator(f"{x} is not a minimal generator of {S}")
    bound = max(S.conductor, x + 1)
    return NumericalSemigroup._from_table(i in S and i != x for i in range(bound))


def remove_pair(S: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """S minus {x, x+1}; requires both to be minimal generators."""
    msg = S.msg
    if x not in msg or x + 1 not in msg:
        raise PairNotMinimal(f"{{{x},{x + 1}}} is not contained in msg{S}")
    bound = max(S.conductor, x + 2)
    return NumericalSemigroup._from_table(i in S and i not in (x, x + 1) for i in range(bound))


def fill_frobenius(S: NumericalSemigroup) -> NumericalSemigroup:
    """S union {F(S)-1, F(S)}."""
    if S.is_full:
        raise AlreadyFull("N has no Frobenius number to fill")
    f = S.frobenius
    return NumericalSemigroup._from_table(i in S or i >= f - 1 for i in range(S.conductor))


def intersection(S: NumericalSemigroup, T: NumericalSemigroup) -> NumericalSemigroup:
    bound = max(S.conductor, T.conductor)
    return NumericalSemigroup._from_table(i in S and i in T for i in range(bound))


def sylvester(a: int, b: int) -> tuple[int, int]:
    """(Frobenius number, genus) of <a, b> in closed form."""
    if not (2 <= a < b) or math.gcd(a, b) != 1:
        raise BadArguments(f"need 2 <= a < b with gcd(a, b) = 1, got ({a}, {b})")
    return a * b - a - b, (a - 1) * (b - 1) // 2


def is_symmetric(S: NumericalSemigroup) -> bool:
    return 2 * S.genus == S.frobenius + 1


def small_count(S: NumericalSemigroup) -> int:
    """Number of elements of S below F(S) (0 included); equals F(S) + 1 - g(S)."""
    return S.frobenius + 1 - S.genus


def wilf_holds(S: NumericalSemigroup) -> bool:
    return S.genus <= (S.embedding_dimension - 1) * small_count(S)


def to_json_dict(S: NumericalSemigroup) -> dict[str, object]:
    return {
        "msg": list(S.msg),
        "frobenius": S.frobenius,
        "genus": S.genus,
        "multiplicity": S.multiplicity,
    }
