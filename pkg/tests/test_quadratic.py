import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import legendre_squares, squares_mod
from powres.arith import euler_phi, factorize, primes_up_to
from powres.quadratic import (
    MAX_ENUM_ORDER,
    ResidueClassGroup,
    Subgroup,
    build_L4q,
    build_L4r_squarefree,
    build_Lstar,
    classify_prime,
    half_order_subgroups_containing_minus1,
    in_L4q,
    legendre,
    legendre_bruteforce,
    legendre_general,
    legendre_reciprocity,
)

ODD_PRIMES = primes_up_to(10**4)[1:]


def test_residue_class_group():
    g = ResidueClassGroup.of(12)
    assert g.elements == (1, 5, 7, 11)
    assert len(g) == euler_phi(12)
    assert 13 in g and 6 not in g
    assert g.mul(5, 7) == 11 and g.inv(5) == 5


@pytest.mark.parametrize("r, p", [(2, 7), (1, 13), (3, 11)])
def test_legendre_examples_positive(r, p):
    assert legendre(r, p) == 1


def test_legendre_rejects():
    with pytest.raises(ValueError):
        legendre(14, 7)
    with pytest.raises(ValueError):
        legendre(3, 9)
    with pytest.raises(ValueError):
        legendre(3, 2)


def test_legendre_three_routes_agree():
    for p in primes_up_to(500)[1:]:
        sq = squares_mod(p)
        for r in range(1, p):
            want = 1 if r in sq else -1
            assert legendre(r, p) == want
            assert legendre_bruteforce(r, p) == want
            assert legendre_reciprocity(r, p) == want


@pytest.mark.parametrize("p, expected", [(7, (1, 2, 4)), (3, (1,)), (5, (1, 4))])
def test_build_Lstar_examples(p, expected):
    sub = build_Lstar(p)
    assert sub.elements == expected
    assert len(sub) == (p - 1) // 2
    assert (p - 1 in sub) == (p % 4 == 1)


@pytest.mark.parametrize("q, expected", [(2, (1, 7)), (3, (1, 11)), (5, (1, 9, 11, 19))])
def test_build_L4q_examples(q, expected):
    assert build_L4q(q).elements == expected


@pytest.mark.parametrize("q, p, expected", [(2, 17, True), (3, 11, True), (5, 7, False)])
def test_classify_prime_examples(q, p, expected):
    assert classify_prime(q, p) is expected


def test_L4q_structure():
    for q in primes_up_to(50):
        sub = build_L4q(q)
        m = 4 * q
        assert sub.is_subgroup()
        assert len(sub) == euler_phi(m) // 2 == (q - 1 if q > 2 else 2)
        assert m - 1 in sub


def test_classify_prime_matches_squares():
    for q in primes_up_to(50):
        for p in ODD_PRIMES[:400]:
            if p != q:
                assert classify_prime(q, p) == (legendre_squares(q, p) == 1)


def _brute_half_subgroups(m):
    """Every subset of half size containing 1 and -1 that is closed; tiny m only."""
    us = ResidueClassGroup.of(m).elements
    half = len(us) // 2
    rest = [a for a in us if a not in (1, m - 1)]
    found = []
    for combo in itertools.combinations(rest, half - 2):
        s = set(combo) | {1, m - 1}
        if all(a * b % m in s for a in s for b in s):
            found.append(tuple(sorted(s)))
    return sorted(found)


@pytest.mark.parametrize("m", [8, 12, 15, 16, 20, 21, 24, 28, 40, 60])
def test_half_subgroups_match_subset_enumeration(m):
    got = [h.elements for h in half_order_subgroups_containing_minus1(m)]
    assert got == _brute_half_subgroups(m)


def test_half_subgroups_examples():
    assert [h.elements for h in half_order_subgroups_containing_minus1(12)] == [(1, 11)]
    assert [h.elements for h in half_order_subgroups_containing_minus1(8)] == [(1, 7)]
    sixty = [h.signed() for h in half_order_subgroups_containing_minus1(60)]
    assert [-17, -11, -7, -1, 1, 7, 11, 17] in sixty
    assert [-29, -19, -11, -1, 1, 11, 19, 29] in sixty


def test_half_subgroups_guard():
    with pytest.raises(ValueError):
        half_order_subgroups_containing_minus1(2)
    big = next(p for p in primes_up_to(200000) if p - 1 > MAX_ENUM_ORDER)
    with pytest.raises(ValueError):
        half_order_subgroups_containing_minus1(big)


def test_half_subgroups_are_subgroups():
    for m in range(3, 200):
        for h in half_order_subgroups_containing_minus1(m):
            assert h.is_subgroup() and len(h) * 2 == euler_phi(m) and m - 1 in h


def test_L4r_examples():
    assert build_L4r_squarefree(15).signed() == [-17, -11, -7, -1, 1, 7, 11, 17]
    assert build_L4r_squarefree(factorize(7)) == build_L4q(7)
    with pytest.raises(ValueError):
        build_L4r_squarefree(12)


def test_L4r_six_matches_legendre():
    l24 = build_L4r_squarefree(6)
    for p in ODD_PRIMES:
        if p != 3:
            assert (legendre(6, p) == 1) == (p % 24 in l24)


def test_L4r_classifies_every_squarefree_r():
    for r in range(2, 101):
        f = factorize(r)
        if not f.is_squarefree():
            continue
        sub = build_L4r_squarefree(f)
        assert sub.is_subgroup() and len(sub) * 2 == euler_phi(4 * r) and 4 * r - 1 in sub
        for p in ODD_PRIMES:
            if r % p:
                assert (legendre_general(r, p) == 1) == (p % (4 * r) in sub)


def test_legendre_general_examples():
    assert all(legendre_general(9, p) == 1 for p in ODD_PRIMES[2:60])
    assert legendre_general(-1, 13) == 1
    assert legendre_general(12, 7) == legendre(3, 7) == -1
    with pytest.raises(ValueError):
        legendre_general(0, 7)


def test_legendre_general_matches_euler():
    rng = random.Random(2)
    for _ in range(2000):
        p = rng.choice(ODD_PRIMES)
        r = rng.choice([-1, 1]) * rng.randint(1, 10**6)
        if r % p:
            assert legendre_general(r, p) == legendre(r, p)


@settings(max_examples=200, deadline=None)
@given(st.integers(-5000, 5000), st.integers(-5000, 5000), st.sampled_from(ODD_PRIMES[:300]))
def test_legendre_general_multiplicative(a, b, p):
    if a % p == 0 or b % p == 0:
        return
    assert legendre_general(a * b, p) == legendre_general(a, p) * legendre_general(b, p)


def test_subgroup_membership_normalizes():
    h = Subgroup(ResidueClassGroup.of(12), [1, -1])
    assert h.elements == (1, 11) and -1 in h and math.prod(h.elements) % 12 == 11


def test_in_L4q_agrees_with_built_set():
    for q in primes_up_to(60):
        sub = build_L4q(q)
        assert all(in_L4q(c, q) == (c in sub) for c in range(4 * q))
