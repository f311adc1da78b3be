import math

import pytest
from hypothesis import given, strategies as st

from semiconj.arith import (
    FieldSpec,
    crt_exponents,
    galois_subgroup,
    p_regular_parts,
    unit_group,
)
from semiconj.core import element_power, group_element_order, omega_plus
from semiconj.errors import DomainError, FormatError
from semiconj.families import build_family

PRIMES = [2, 3, 5, 7, 11]


def brute_crt(N, p):
    pk, r = 1, N
    while r % p == 0:
        r, pk = r // p, pk * p
    m = min(x for x in range(1, N + 1) if (x - 1) % pk == 0 and x % r == 0)
    n = min(x for x in range(1, N + 1) if x % pk == 0 and (x - 1) % r == 0)
    return m, n


@pytest.mark.parametrize("N,p,expected", [(12, 2, (9, 4)), (5, 2, (5, 1)), (8, 2, (1, 8))])
def test_crt_examples(N, p, expected):
    assert crt_exponents(N, p) == expected


@given(st.integers(1, 400), st.sampled_from(PRIMES))
def test_crt_congruences(N, p):
    m, n = crt_exponents(N, p)
    assert (m, n) == brute_crt(N, p)
    pk = p ** next(k for k in range(20) if (N // p ** k) % p)
    r = N // pk
    assert (m - 1) % pk == 0 and m % r == 0
    assert n % pk == 0 and (n - 1) % r == 0
    assert 1 <= m <= N and 1 <= n <= N


def test_crt_rejects_composite():
    with pytest.raises(DomainError):
        crt_exponents(12, 4)


def test_parts_p0(T3):
    for s in range(T3.size):
        parts = p_regular_parts(T3, s, 0)
        assert parts.p_part == omega_plus(T3, s, 0)
        assert parts.p_prime_part == omega_plus(T3, s, 1)


def test_parts_z12():
    Z12 = build_family("group", "z12")
    parts = p_regular_parts(Z12, 1, 2)
    assert (parts.p_part, parts.p_prime_part) == (9, 4)
    assert group_element_order(Z12, 9) == 4
    assert group_element_order(Z12, 4) == 3


def test_parts_z5(Z5):
    parts = p_regular_parts(Z5, 1, 2)
    assert (parts.p_part, parts.p_prime_part) == (0, 1)


@pytest.mark.parametrize("name", ["z12", "s3", "q8"])
@pytest.mark.parametrize("p", [0, 2, 3])
def test_parts_properties(name, p):
    G = build_family("group", name)
    for s in range(G.size):
        a, b = p_regular_parts(G, s, p).p_part, p_regular_parts(G, s, p).p_prime_part
        g = omega_plus(G, s, 1)
        assert G.mul(a, b) == G.mul(b, a) == g
        oa, ob = group_element_order(G, a), group_element_order(G, b)
        assert oa * ob == group_element_order(G, g)
        if p:
            assert math.gcd(ob, p) == 1
            assert oa == p ** round(math.log(oa, p))
        else:
            assert oa == 1


def test_parts_reject_composite(Z5):
    with pytest.raises(DomainError):
        p_regular_parts(Z5, 1, 9)


class TestGaloisSubgroup:
    def test_examples(self):
        assert galois_subgroup(FieldSpec.rationals(), 5).members == (1, 2, 3, 4)
        assert galois_subgroup(FieldSpec.complex(), 12).members == (1,)
        assert galois_subgroup(FieldSpec.finite(2), 7).members == (1, 2, 4)
        assert galois_subgroup(FieldSpec.reals(), 5).members == (1, 4)

    def test_small_moduli(self):
        for fld in (FieldSpec.reals(), FieldSpec.rationals(), FieldSpec.complex()):
            assert galois_subgroup(fld, 1).members == (1,)
            assert galois_subgroup(fld, 2).members == (1,)

    def test_prime_power_frobenius(self):
        assert galois_subgroup(FieldSpec.finite(4), 5).members == (1, 4)
        assert galois_subgroup(FieldSpec.finite(4), 3).members == (1,)

    def test_custom(self):
        H = galois_subgroup(FieldSpec.custom(0, [4]), 5)
        assert H.members == (1, 4)
        with pytest.raises(DomainError):
            galois_subgroup(FieldSpec.custom(0, [2]), 4)

    def test_characteristic_divides_modulus(self):
        with pytest.raises(DomainError):
            galois_subgroup(FieldSpec.finite(2), 6)

    def test_modulus_bound(self):
        with pytest.raises(DomainError):
            galois_subgroup(FieldSpec.rationals(), 10**7)

    @given(st.integers(1, 200), st.sampled_from(
        [FieldSpec.complex(), FieldSpec.reals(), FieldSpec.rationals(), FieldSpec.finite(3),
         FieldSpec.finite(5), FieldSpec.finite(4), FieldSpec.custom(0, [5, 7])]))
    def test_subgroup_laws(self, n, fld):
        p = fld.characteristic
        if p and n % p == 0:
            return
        if any(math.gcd(g, n) != 1 for g in fld.h_generators or ()):
            return
        H = galois_subgroup(fld, n)
        members = set(H.members)
        assert 1 in members
        assert members <= set(unit_group(n))
        for a in members:
            assert any(a * b % n == 1 % n for b in members)
            for b in members:
                assert a * b % n in members or n <= 2

    @given(st.integers(1, 300))
    def test_tower(self, n):
        c = set(galois_subgroup(FieldSpec.complex(), n).members)
        r = set(galois_subgroup(FieldSpec.reals(), n).members)
        q = set(galois_subgroup(FieldSpec.rationals(), n).members)
        assert c <= r <= q
        assert len(q) == sum(1 for a in range(1, max(n, 2)) if math.gcd(a, n) == 1) or n <= 2


class TestFieldParsing:
    @pytest.mark.parametrize("text,expected", [
        ("C", FieldSpec.complex()), ("R", FieldSpec.reals()), ("Q", FieldSpec.rationals()),
        ("F2", FieldSpec.finite(2)), ("F9", FieldSpec.finite(9)),
        ("custom:0:1,4", FieldSpec.custom(0, [1, 4])), ("custom:3:", FieldSpec.custom(3, [])),
    ])
    def test_parse(self, text, expected):
        fld = FieldSpec.parse(text)
        assert fld == expected
        assert FieldSpec.parse(str(fld)) == fld

    def test_characteristics(self):
        assert FieldSpec.parse("F9").characteristic == 3
        assert FieldSpec.parse("Q").characteristic == 0

    @pytest.mark.parametrize("text", ["F6", "F1", "X", "custom:4:1", "custom:0", "custom:a:1"])
    def test_bad(self, text):
        with pytest.raises((FormatError, DomainError)):
            FieldSpec.parse(text)

    def test_powers_from_frobenius(self):
        # H for F_q is exactly the powers of q mod n
        for q, n in [(2, 7), (3, 8), (5, 12), (2, 15)]:
            H = galois_subgroup(FieldSpec.finite(q), n)
            assert set(H.members) == {pow(q, k, n) for k in range(n)}


def test_element_power_of_parts_consistent(Z5):
    assert element_power(Z5, 2, 3) == 1
