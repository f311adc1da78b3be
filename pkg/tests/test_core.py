import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import element
from semiconj.core import (
    Semigroup,
    close_generators,
    element_power,
    group_element_order,
    index_period,
    omega_plus,
    regular_modulus,
)
from semiconj.errors import DomainError, FormatError, SizeCapError
from semiconj.families import build_family


def naive_power(S, s, k):
    acc = s
    for _ in range(k - 1):
        acc = S.mul(acc, s)
    return acc


def naive_index_period(S, s):
    powers = [s]
    while True:
        nxt = S.mul(powers[-1], s)
        if nxt in powers:
            i = powers.index(nxt) + 1
            return i, len(powers) + 1 - i
        powers.append(nxt)


@st.composite
def transformation_closures(draw, max_degree=4, max_gens=3):
    n = draw(st.integers(1, max_degree))
    maps = st.tuples(*[st.integers(0, n - 1)] * n)
    gens = draw(st.lists(maps, min_size=1, max_size=max_gens))
    return close_generators(gens, "transformation", degree=n)


class TestClosure:
    def test_s3_from_two_permutations(self):
        S = close_generators([(1, 2, 0), (1, 0, 2)])
        assert S.size == 6

    def test_constant_map_is_trivial(self):
        assert close_generators([(0, 0)]).size == 1

    def test_t3_generators(self):
        S = close_generators([(1, 2, 0), (1, 0, 2), (0, 0, 2)])
        assert S.size == 27

    def test_generators_come_first_and_numbering_is_deterministic(self):
        gens = [(1, 2, 0), (1, 0, 2), (0, 0, 2)]
        a, b = close_generators(gens), close_generators(gens)
        assert a.provenance.elements[:3] == tuple(gens)
        assert np.array_equal(a.table, b.table)
        assert a.provenance.elements == b.provenance.elements

    def test_breadth_first_words(self, T3):
        lengths = [len(w) for w in T3.provenance.words]
        assert lengths == sorted(lengths)

    def test_table_matches_composition(self, T3):
        els = T3.provenance.elements
        for a in range(T3.size):
            for b in range(T3.size):
                composed = tuple(els[a][y] for y in els[b])
                assert els[T3.mul(a, b)] == composed

    def test_partial_injections(self):
        S = close_generators([(1, 0), (0, None)], "partial_injection")
        assert S.size == 7

    def test_matrices_over_f2(self):
        S = close_generators([[[1, 1], [0, 1]], [[0, 1], [1, 0]], [[1, 0], [0, 0]]], "matrix", q=2)
        assert S.size == 16

    def test_cap_is_an_error(self):
        with pytest.raises(SizeCapError):
            close_generators([(1, 2, 0), (1, 0, 2), (0, 0, 2)], cap=10)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("SG_CLOSURE_CAP", "5")
        with pytest.raises(SizeCapError):
            close_generators([(1, 2, 0), (1, 0, 2)])

    @pytest.mark.parametrize("gens,kind", [
        ([(1, 0), (0, 1, 2)], "transformation"),
        ([(0, None)], "transformation"),
        ([(0, 0)], "partial_injection"),
        ([(0, 3)], "transformation"),
        ([], "transformation"),
    ])
    def test_incompatible_generators(self, gens, kind):
        with pytest.raises(FormatError):
            close_generators(gens, kind)

    def test_matrix_entries_out_of_range(self):
        with pytest.raises(FormatError):
            close_generators([[[2, 0], [0, 1]]], "matrix", q=2)

    @settings(max_examples=40, deadline=None)
    @given(transformation_closures())
    def test_closure_is_associative(self, S):
        S.check_associativity()


class TestExplicitTables:
    def test_non_associative_table_rejected(self):
        with pytest.raises(FormatError, match="associative"):
            Semigroup([[1, 0], [0, 0]])

    def test_bad_entries(self):
        with pytest.raises(FormatError):
            Semigroup([[0, 2], [0, 0]])
        with pytest.raises(FormatError):
            Semigroup([[0, 1]])

    def test_table_is_read_only(self, Z5):
        with pytest.raises(ValueError):
            Z5.table[0, 0] = 1

    def test_spot_check_mode(self):
        S = Semigroup([[(a + b) % 600 for b in range(600)] for a in range(600)], check="spot")
        assert S.size == 600


class TestPowers:
    def test_swap_squared(self, T2):
        swap = element(T2, 2, 1)
        assert element_power(T2, swap, 2) == element(T2, 1, 2)

    def test_first_power(self, T3):
        assert all(element_power(T3, s, 1) == s for s in range(T3.size))

    def test_direct_composition(self, T3):
        assert element_power(T3, element(T3, 2, 3, 3), 2) == element(T3, 3, 3, 3)

    def test_huge_exponent(self, T4):
        g = element(T4, 2, 1, 4, 3)
        assert element_power(T4, g, 10**18) == element(T4, 1, 2, 3, 4)
        assert element_power(T4, g, 10**18 + 1) == g

    def test_nonpositive_exponent(self, T3):
        with pytest.raises(DomainError):
            element_power(T3, 0, 0)

    def test_index_period_examples(self, T2, T3, T4):
        assert index_period(T2, element(T2, 1, 1)) == (1, 1)
        assert index_period(T3, element(T3, 2, 3, 1)) == (1, 3)
        assert index_period(T4, element(T4, 2, 3, 3, 4)) == (2, 1)

    def test_omega_examples(self, T3, T4):
        assert omega_plus(T3, element(T3, 2, 3, 1), 0) == element(T3, 1, 2, 3)
        assert omega_plus(T4, element(T4, 2, 3, 3, 4), 0) == element(T4, 3, 3, 3, 4)
        e = element(T3, 1, 2, 2)
        assert omega_plus(T3, e, 5) == e

    def test_group_element_order(self, T3, Z5):
        assert group_element_order(T3, element(T3, 2, 3, 1)) == 3
        assert all(group_element_order(T3, e) == 1 for e in T3.idempotents)
        assert group_element_order(Z5, 1) == 5
        with pytest.raises(DomainError):
            group_element_order(T3, element(T3, 2, 3, 3))

    @settings(max_examples=40, deadline=None)
    @given(transformation_closures(), st.data())
    def test_power_structure_properties(self, S, data):
        s = data.draw(st.integers(0, S.size - 1))
        k = data.draw(st.integers(1, 3 * S.size))
        assert element_power(S, s, k) == naive_power(S, s, k)
        assert tuple(index_period(S, s)) == naive_index_period(S, s)
        i, p = index_period(S, s)
        assert i + p <= S.size + 1
        e = omega_plus(S, s, 0)
        assert S.is_idempotent(e)
        w1 = omega_plus(S, s, 1)
        assert S.mul(e, s) == S.mul(s, e) == w1
        for j in range(1, 6):
            assert element_power(S, w1, j) == omega_plus(S, s, j)

    def test_omega_is_factorial_power(self):
        # s^omega = s^(m!) for |S| = m
        for S in [build_family("tn", 2), build_family("in", 2), build_family("group", "s3"),
                  build_family("group", "z5"), close_generators([(1, 2, 3, 3), (0, 0, 1, 2)])]:
            if S.size > 7:
                continue
            m = math.factorial(S.size)
            for s in range(S.size):
                assert element_power(S, s, m) == omega_plus(S, s, 0)


class TestRegularModulus:
    def test_s3(self):
        S3 = build_family("group", "s3")
        assert regular_modulus(S3, 0)[0] == 6
        n, elems = regular_modulus(S3, 3)
        assert n == 2
        assert len(elems) == 4  # identity and three transpositions

    def test_z2_in_characteristic_2(self):
        n, elems = regular_modulus(build_family("group", "z2"), 2)
        assert n == 1 and elems == {0}

    def test_coprime_to_characteristic(self, T4):
        for p in (2, 3, 5):
            assert math.gcd(regular_modulus(T4, p)[0], p) == 1

    def test_only_idempotents(self):
        assert regular_modulus(close_generators([(0, 0), (1, 1)]), 0)[0] == 1

    @pytest.mark.parametrize("p", [1, 4, 6, -2])
    def test_bad_characteristic(self, T2, p):
        with pytest.raises(DomainError):
            regular_modulus(T2, p)
