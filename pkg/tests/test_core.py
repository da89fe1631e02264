from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coesemigroups.core import (
    FULL,
    GeneratorSet,
    NumericalSemigroup,
    apery_set,
    contains,
    fill_frobenius,
    from_generators,
    intersection,
    is_symmetric,
    minimal_generators,
    remove_element,
    remove_pair,
    small_count,
    sylvester,
    to_json_dict,
    wilf_holds,
)
from coesemigroups.errors import (
    AlreadyFull,
    BadArguments,
    EmptyGenerators,
    GcdNotOne,
    NotAnElement,
    NotMinimalGenerator,
    PairNotMinimal,
    SemigroupError,
)
from coesemigroups.oracle import dp_invariants


def elems(gens):
    S = from_generators(gens)
    return S.elements_below_conductor, S.conductor


# -- construction ------------------------------------------------------


def test_from_generators_one_is_full():
    assert from_generators([1]) == FULL
    assert FULL.conductor == 0 and FULL.elements_below_conductor == ()


def test_from_generators_examples():
    # {0,4,6,7,8,10,->}
    assert elems([4, 6, 7]) == ((0, 4, 6, 7, 8), 10)
    # {0,6,8,12,->}
    assert elems([6, 8, 13, 14, 15, 17]) == ((0, 6, 8), 12)


def test_from_generators_gcd():
    with pytest.raises(GcdNotOne):
        from_generators([4, 6])


def test_generator_set_validation():
    with pytest.raises(EmptyGenerators):
        GeneratorSet.of([])
    with pytest.raises(BadArguments):
        GeneratorSet.of([0, 3])
    assert GeneratorSet.of([7, 4, 6, 4]).generators == (4, 6, 7)


@pytest.mark.parametrize("text", ["4, 6", " 4,6", "4,,6", "", "4;6", "-4,6", "4,6,"])
def test_generator_parse_is_strict(text):
    with pytest.raises(BadArguments):
        GeneratorSet.parse(text)


def test_generator_parse_ok():
    assert GeneratorSet.parse("7,4,6").generators == (4, 6, 7)


def test_raw_constructor_rejects_non_canonical():
    with pytest.raises(SemigroupError):
        NumericalSemigroup(5, (0, 4))  # 4 = conductor - 1 would be a member
    with pytest.raises(SemigroupError):
        NumericalSemigroup(3, (1,))
    with pytest.raises(SemigroupError):
        NumericalSemigroup.from_gaps([2])  # 1 + 1 = 2
    assert NumericalSemigroup.from_gaps([1, 2, 3, 5, 9]) == from_generators([4, 6, 7])


def test_from_elements():
    assert NumericalSemigroup.from_elements([0, 4, 6, 7, 8], 10) == from_generators([4, 6, 7])
    with pytest.raises(SemigroupError):
        NumericalSemigroup.from_elements([0, 2], 5)


# -- membership and invariants -----------------------------------------


def test_contains():
    S = from_generators([4, 6, 7])
    assert not contains(S, 5)
    assert contains(S, 0)
    assert not contains(S, -3)
    assert 10 in S and 1000 in S and 9 not in S
    assert 3 not in from_generators([2, 5])


@pytest.mark.parametrize(
    "gens, F, g, m",
    [([5, 7, 9], 13, 8, 5), ([1], -1, 0, 1), ([2, 5], 3, 2, 2), ([4, 6, 7], 9, 5, 4)],
)
def test_invariants(gens, F, g, m):
    S = from_generators(gens)
    assert (S.frobenius, S.genus, S.multiplicity) == (F, g, m)


def test_minimal_generators():
    # {6,8,13,14,15,17} generates but 14 = 6 + 8 is redundant
    assert minimal_generators(from_generators([6, 8, 13, 14, 15, 17])) == (6, 8, 13, 15, 17)
    assert minimal_generators(FULL) == (1,)
    assert from_generators([4, 6, 7, 8]).msg == (4, 6, 7)


def test_apery_set():
    assert apery_set(from_generators([4, 6, 7]), 6) == (0, 4, 7, 8, 11, 15)
    assert apery_set(FULL, 1) == (0,)
    assert apery_set(from_generators([2, 5]), 2) == (0, 5)
    with pytest.raises(NotAnElement):
        apery_set(from_generators([2, 5]), 3)
    with pytest.raises(NotAnElement):
        apery_set(FULL, 0)


def test_remove_element():
    assert remove_element(FULL, 1) == from_generators([2, 3])
    assert remove_element(from_generators([2, 3]), 3) == from_generators([2, 5])
    with pytest.raises(NotMinimalGenerator):
        remove_element(from_generators([2, 3]), 4)


def test_remove_element_below_frobenius():
    S = from_generators([4, 6, 7])
    T = remove_element(S, 4)
    assert 4 not in T and T.is_closed() and T == NumericalSemigroup.from_gaps([1, 2, 3, 4, 5, 9])


def test_remove_pair():
    assert remove_pair(from_generators([2, 3]), 2) == from_generators([4, 5, 6, 7])
    assert remove_pair(from_generators([4, 5, 6, 7]), 4) == from_generators(range(6, 12))
    with pytest.raises(PairNotMinimal):
        remove_pair(from_generators([2, 5]), 2)


def test_fill_frobenius():
    # {0,6,10,->}: F - 1 = 8 is a gap too, so two elements are added
    S = NumericalSemigroup.from_gaps([1, 2, 3, 4, 5, 7, 8, 9])
    assert fill_frobenius(S) == NumericalSemigroup.from_gaps([1, 2, 3, 4, 5, 7])
    # {0,6,8,10,->} -> {0,6,8,->}: only 9 is added
    T = NumericalSemigroup.from_gaps([1, 2, 3, 4, 5, 7, 9])
    assert fill_frobenius(T) == NumericalSemigroup.from_gaps([1, 2, 3, 4, 5, 7])
    assert fill_frobenius(from_generators([2, 3])) == FULL
    with pytest.raises(AlreadyFull):
        fill_frobenius(FULL)


def test_sylvester_examples():
    assert sylvester(2, 5) == (3, 2)
    assert sylvester(2, 3) == (1, 1)
    assert sylvester(4, 7) == (17, 9)
    for bad in [(4, 6), (1, 3), (5, 3), (3, 3)]:
        with pytest.raises(BadArguments):
            sylvester(*bad)


def test_sylvester_matches_tables():
    for a in range(2, 51):
        for b in range(a + 1, 51):
            if math.gcd(a, b) == 1:
                S = from_generators([a, b])
                assert sylvester(a, b) == (S.frobenius, S.genus)


def test_symmetric_small_wilf():
    assert is_symmetric(from_generators([2, 5]))
    assert small_count(from_generators([5, 7, 9])) == 6
    assert not is_symmetric(from_generators([5, 7, 9]))
    assert small_count(FULL) == 0 and wilf_holds(FULL)
    assert wilf_holds(from_generators([5, 7, 9]))


def test_json():
    assert to_json_dict(from_generators([4, 6, 7])) == {
        "msg": [4, 6, 7],
        "frobenius": 9,
        "genus": 5,
        "multiplicity": 4,
    }


def test_intersection():
    A, B = from_generators([2, 5]), from_generators([3, 4, 5])
    C = intersection(A, B)
    assert C.is_closed()
    assert all((n in C) == (n in A and n in B) for n in range(30))


# -- properties --------------------------------------------------------

generator_sets = st.lists(st.integers(1, 30), min_size=1, max_size=4).filter(
    lambda xs: math.gcd(*xs) == 1
)


@settings(max_examples=300, deadline=None)
@given(generator_sets)
def test_semigroup_properties(gens):
    S = from_generators(gens)
    assert S.is_closed()
    assert from_generators(S.msg) == S
    assert (S.frobenius, S.genus, S.multiplicity) == dp_invariants(gens)
    assert all(g in S for g in gens)
    if not S.is_full:
        assert S.embedding_dimension <= S.multiplicity
        assert S.frobenius <= 2 * S.genus - 1
        assert min(S.msg) == S.multiplicity
        assert max(S.msg) <= S.frobenius + S.multiplicity
        assert small_count(S) == sum(1 for s in S.elements_below_conductor if s < S.frobenius)
        filled = fill_frobenius(S)
        added = {n for n in range(S.conductor) if n in filled and n not in S}
        assert added in ({S.frobenius}, {S.frobenius - 1, S.frobenius})
        assert all((n in S) == (n in filled and n not in added) for n in range(S.conductor + 2))


@settings(max_examples=200, deadline=None)
@given(generator_sets, st.integers(0, 60))
def test_apery_properties(gens, k):
    S = from_generators(gens)
    n = next(s for s in S.elements_up_to(S.conductor + 60) if s >= max(k, 1))
    ap = apery_set(S, n)
    assert len(ap) == n
    assert sorted(w % n for w in ap) == list(range(n))
    assert all(w in S and w - n not in S for w in ap)
    m = S.multiplicity
    assert set(S.msg) <= {w for w in apery_set(S, m) if w} | {m}
