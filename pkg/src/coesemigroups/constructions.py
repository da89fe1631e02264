"""Shift (MED) and doubling constructions, closed forms, Wilf transfer.

Both constructions build their result directly as a set and then compare it
against the closed-form predictions; the predictions are never used to
produce the result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coe import is_coe
from .core import (
    NumericalSemigroup,
    apery_set,
    from_generators,
    small_count,
    to_json_dict,
    wilf_holds,
)
from .errors import (
    GcdNotOne,
    NotAnElement,
    NotCoe,
    NotEd3Coe,
    NotMed,
    NotUniqueOddGenerator,
    PairNotInS,
)


def is_med(S: NumericalSemigroup) -> bool:
    """Maximal embedding dimension: e(S) == m(S)."""
    return S.embedding_dimension == S.multiplicity


@dataclass(frozen=True)
class MedLift:
    """result = ({shift} + base) u {0}."""

    base: NumericalSemigroup
    shift: int
    result: NumericalSemigroup

    def predicted(self) -> dict[str, object]:
        S, x = self.base, self.shift
        return {
            "multiplicity": x,
            "frobenius": S.frobenius + x,
            "genus": S.genus + x - 1,
            "msg": sorted(w + x for w in apery_set(S, x)),
        }

    def computed(self) -> dict[str, object]:
        T = self.result
        return {
            "multiplicity": T.multiplicity,
            "frobenius": T.frobenius,
            "genus": T.genus,
            "msg": list(T.msg),
        }

    def clauses(self) -> dict[str, bool]:
        """Each closed-form claim about the shift, checked against the built result."""
        pred, comp = self.predicted(), self.computed()
        out = {"med": is_med(self.result)}
        out.update({k: pred[k] == comp[k] for k in pred})
        out["materialized"] = from_generators(pred["msg"]) == self.result
        if self.shift % 2 == 0 and is_coe(self.base):
            out["coe"] = is_coe(self.result)
        return out

    def report(self) -> dict[str, object]:
        return {
            "base": to_json_dict(self.base),
            "x": self.shift,
            "result": to_json_dict(self.result),
            "predicted": self.predicted(),
            "computed": self.computed(),
            "clauses": self.clauses(),
        }


def med_lift(S: NumericalSemigroup, x: int) -> MedLift:
    if x <= 0 or x not in S:
        raise NotAnElement(f"{x} is not a nonzero element of {S}")
    bound = S.conductor + x
    members = [n == 0 or (n >= x and n - x in S) for n in range(bound)]
    return MedLift(S, x, NumericalSemigroup._from_table(members))


def med_unlift(T: NumericalSemigroup) -> NumericalSemigroup:
    """{t - m(T) : t in T, t != 0} for a MED-semigroup T other than N."""
    if T.is_full or not is_med(T):
        raise NotMed(f"{T} is not a MED-semigroup other than N")
    m = T.multiplicity
    return NumericalSemigroup._from_table(n + m in T for n in range(T.conductor))


@dataclass(frozen=True)
class DoubleLift:
    """result = 2*base u ({2s+1} + 2*base)."""

    base: NumericalSemigroup
    s: int
    result: NumericalSemigroup

    @property
    def odd_generator(self) -> int:
        return 2 * self.s + 1

    def predicted(self) -> dict[str, object]:
        S, s = self.base, self.s
        return {
            "multiplicity": 2 * S.multiplicity,
            "frobenius": 2 * S.frobenius + 2 * s + 1,
            "genus": 2 * S.genus + s,
            "msg": sorted([2 * n for n in S.msg] + [2 * s + 1]),
            "embedding_dimension": S.embedding_dimension + 1,
        }

    def computed(self) -> dict[str, object]:
        T = self.result
        return {
            "multiplicity": T.multiplicity,
            "frobenius": T.frobenius,
            "genus": T.genus,
            "msg": list(T.msg),
            "embedding_dimension": T.embedding_dimension,
        }

    def clauses(self) -> dict[str, bool]:
        pred, comp = self.predicted(), self.computed()
        out = {k: pred[k] == comp[k] for k in pred}
        out["materialized"] = from_generators(pred["msg"]) == self.result
        out["coe"] = is_coe(self.result)
        out["unique_odd_generator"] = [x for x in self.result.msg if x % 2] == [self.odd_generator]
        return out

    def report(self) -> dict[str, object]:
        return {
            "base": to_json_dict(self.base),
            "s": self.s,
            "result": to_json_dict(self.result),
            "predicted": self.predicted(),
            "computed": self.computed(),
            "clauses": self.clauses(),
        }


def double_lift(S: NumericalSemigroup, s: int) -> DoubleLift:
    if s not in S or s + 1 not in S:
        raise PairNotInS(f"{{{s},{s + 1}}} is not contained in {S}")
    odd = 2 * s + 1
    bound = 2 * S.conductor + odd + 1
    members = [
        (n // 2 in S) if n % 2 == 0 else (n >= odd and (n - odd) // 2 in S)
        for n in range(bound)
    ]
    return DoubleLift(S, s, NumericalSemigroup._from_table(members))


def double_unlift(T: NumericalSemigroup) -> tuple[NumericalSemigroup, int]:
    """Recover (S, s) with T = 2S u ({2s+1} + 2S) from a Coe-semigroup with one odd generator.

    S is read off as the halves of the even elements of T, which also covers
    T = N (giving (N, 0)).
    """
    if not is_coe(T):
        raise NotCoe(f"{T} is not a Coe-semigroup")
    odd = [x for x in T.msg if x % 2]
    if len(odd) != 1:
        raise NotUniqueOddGenerator(f"{T} has odd minimal generators {odd}")
    S = NumericalSemigroup._from_table(2 * n in T for n in range((T.conductor + 1) // 2))
    return S, (odd[0] - 1) // 2


def ed3_formulas(n1: int, n2: int, n3: int) -> tuple[int, int]:
    """(Frobenius number, genus) of an embedding-dimension-3 Coe-semigroup from its generators.

    Argument order is free; the single odd generator is located by parity.
    """
    gens = sorted({n1, n2, n3})
    try:
        S = from_generators(gens)
    except GcdNotOne as exc:
        raise NotEd3Coe(str(exc)) from None
    if list(S.msg) != gens or len(gens) != 3 or not is_coe(S):
        raise NotEd3Coe(f"{gens} is not the msg of a Coe-semigroup of embedding dimension 3")
    odd = [n for n in gens if n % 2]
    if len(odd) != 1:
        raise NotEd3Coe(f"{gens} must contain exactly one odd generator")
    a, b = (n for n in gens if n % 2 == 0)
    o = odd[0]
    return o + a * b // 2 - a - b, (o - 1) // 2 + (a // 2 - 1) * (b // 2 - 1)


@dataclass(frozen=True)
class WilfReport:
    base_holds: bool
    lifted_holds: bool
    small_base: int
    small_lifted: int
    s: int

    @property
    def identity_holds(self) -> bool:
        """n(T) == 2 n(S) + s."""
        return self.small_lifted == 2 * self.small_base + self.s

    @property
    def implication_holds(self) -> bool:
        return self.lifted_holds or not self.base_holds

    def to_json_dict(self) -> dict[str, object]:
        return {
            "s": self.s,
            "wilf_base": self.base_holds,
            "wilf_lifted": self.lifted_holds,
            "small_base": self.small_base,
            "small_lifted": self.small_lifted,
            "identity_holds": self.identity_holds,
            "implication_holds": self.implication_holds,
        }


def wilf_transfer_check(S: NumericalSemigroup, s: int) -> WilfReport:
    T = double_lift(S, s).result
    return WilfReport(wilf_holds(S), wilf_holds(T), small_count(S), small_count(T), s)
