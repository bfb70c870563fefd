from collections import defaultdict

import pytest
from hypothesis import given, settings, strategies as st

from semigroup_census.arith import fib
from semigroup_census.construction import (
    build_f_lt_2m,
    build_typed,
    count_f_lt_2m,
    count_typed_g,
    count_typed_mg,
    free_positions,
    semigroups_of_type,
    total_f_lt_2m,
    type_of,
)
from semigroup_census.core import GapSemigroup, SemigroupClass, classify, is_closed
from semigroup_census.tree_oracle import semigroups_of_genus
from semigroup_census.type_space import TypeDescriptor, enumerate_Ak, restricted_sumset_size

T023 = TypeDescriptor.of({0, 2}, 3)
T01 = TypeDescriptor.of({0}, 1)


def semigroups_with(m, f):
    """All semigroups with multiplicity m and Frobenius f, by filtering subsets."""
    free = list(range(m + 1, f))
    out = []
    for sel in range(1 << len(free)):
        members = {0, m} | {x for j, x in enumerate(free) if (sel >> j) & 1}
        gaps = set(range(1, f + 1)) - members
        if is_closed(gaps):
            out.append(GapSemigroup.from_gaps(gaps))
    return out


def test_build_f_lt_2m_examples():
    assert build_f_lt_2m(1).genus == 0
    s = build_f_lt_2m(3, {4})
    assert s.gaps == {1, 2, 5} and s.genus == 3
    assert build_f_lt_2m(4).gaps == {1, 2, 3, 5, 6, 7}
    with pytest.raises(ValueError):
        build_f_lt_2m(4, {8})


@pytest.mark.parametrize("m,g,expected", [(3, 4, 1), (5, 5, 4), (2, 5, 0)])
def test_count_f_lt_2m_examples(m, g, expected):
    assert count_f_lt_2m(m, g) == expected


@pytest.mark.parametrize("g,expected", [(1, 1), (4, 5), (10, 89)])
def test_total_f_lt_2m_examples(g, expected):
    assert total_f_lt_2m(g) == expected


def test_total_f_lt_2m_against_tree():
    for g in range(1, 13):
        bucket = sum(classify(s) is SemigroupClass.F_LT_2M for s in semigroups_of_genus(g))
        assert bucket == total_f_lt_2m(g) == fib(g + 1)


def test_build_typed_examples():
    assert str(build_typed(5, T023)) == "0,5,7,10,12,14..."
    assert str(build_typed(5, T023, {9, 11})) == "0,5,7,9,10,11,12,14..."
    s = build_typed(2, T01)
    assert s.gaps == {1, 3, 5} and s.genus == 3 and s.frobenius == 5


def test_build_typed_errors():
    with pytest.raises(ValueError):
        build_typed(5, T023, {10})  # forced by 2m + A + A
    with pytest.raises(ValueError):
        build_typed(5, T023, {14})
    with pytest.raises(ValueError):
        build_typed(3, T023)
    with pytest.raises(ValueError):
        count_typed_mg(3, T023, 5)


def test_type_of_examples():
    assert type_of(GapSemigroup.from_members([0, 5, 7, 10, 12], 14)) == T023
    assert type_of(GapSemigroup.from_members([0, 2, 4], 6)) == T01
    s = build_typed(3, T01, [5])
    assert (s.multiplicity, s.frobenius) == (3, 7) and type_of(s) == T01
    with pytest.raises(ValueError):
        type_of(GapSemigroup.from_gaps({1}))


def test_example_family_of_four():
    got = {str(s) for s in semigroups_of_type(5, T023)}
    assert got == {
        "0,5,7,10,12,14...",
        "0,5,7,9,10,12,14...",
        "0,5,7,10,11,12,14...",
        "0,5,7,9,10,11,12,14...",
    }
    by_oracle = {str(s) for s in semigroups_with(5, 13) if type_of(s) == T023}
    assert by_oracle == got


@pytest.mark.parametrize("g,expected", [(8, 2), (9, 1), (6, 0), (7, 1)])
def test_count_typed_mg_examples(g, expected):
    assert count_typed_mg(5, T023, g) == expected


def test_count_typed_g_examples():
    r = count_typed_g(9, T023)
    assert r.value == r.fibonacci == fib(5) == 5 and r.exact_condition and r.agree
    r = count_typed_g(3, T01)
    assert r.value == r.fibonacci == 1
    r = count_typed_g(1, TypeDescriptor.of({0}, 5))
    assert r.value == 0 and r.fibonacci == 0


@pytest.mark.parametrize("m", range(2, 8))
def test_bijection_with_filtered_semigroups(m):
    for k in range(1, m):
        found = defaultdict(set)
        for s in semigroups_with(m, 2 * m + k):
            found[type_of(s)].add(s)
        for t in enumerate_Ak(k):
            built = list(semigroups_of_type(m, t))
            assert len(built) == len(set(built))
            assert set(built) == found.pop(t, set())
        assert not found  # no semigroup with an unlisted type


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 12), st.data())
def test_typed_construction_properties(m, data):
    k = data.draw(st.integers(1, min(6, m - 1)))
    t = data.draw(st.sampled_from(list(enumerate_Ak(k))))
    free = free_positions(m, t)
    B = data.draw(st.sets(st.sampled_from(free))) if free else set()
    s = build_typed(m, t, B)
    assert is_closed(s.gaps)
    assert s.multiplicity == m and s.frobenius == 2 * m + k
    assert type_of(s) == t
    assert s.genus == 2 * m + k - t.size - restricted_sumset_size(t) - len(B)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 14), st.data())
def test_f_lt_2m_construction_properties(m, data):
    S = data.draw(st.sets(st.integers(m + 1, 2 * m - 1))) if m > 1 else set()
    s = build_f_lt_2m(m, S)
    assert is_closed(s.gaps)
    assert s.genus == max(0, 2 * m - 2 - len(S))
    if m > 1:
        assert s.multiplicity == m and s.frobenius < 2 * m


def test_fibonacci_form_agreement_condition():
    for g in range(1, 22):
        for k in range(1, 8):
            for t in enumerate_Ak(k):
                r = count_typed_g(g, t)
                assert r.value <= r.fibonacci
                if r.exact_condition:
                    assert r.agree
                if 3 * k <= g:
                    assert r.exact_condition
