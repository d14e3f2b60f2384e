"""Permutation algebra: composition, classes, centralizers, streaming."""

import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from hurwitznum import perm as P

perms = st.integers(2, 7).flatmap(
    lambda d: st.permutations(range(d)).map(tuple)
)


def same_degree_pairs():
    return st.integers(2, 7).flatmap(
        lambda d: st.tuples(
            st.permutations(range(d)).map(tuple),
            st.permutations(range(d)).map(tuple),
        )
    )


def same_degree_triples():
    return st.integers(2, 6).flatmap(
        lambda d: st.tuples(
            *(st.permutations(range(d)).map(tuple) for _ in range(3))
        )
    )


def test_identity_and_is_perm():
    assert P.identity(4) == (0, 1, 2, 3)
    assert P.is_perm((2, 0, 1))
    assert not P.is_perm((0, 0, 1))
    assert not P.is_perm((0, 2))


@given(perms)
def test_inverse_is_two_sided(p):
    d = len(p)
    assert P.compose(p, P.inverse(p)) == P.identity(d)
    assert P.compose(P.inverse(p), p) == P.identity(d)


@given(same_degree_triples())
def test_compose_associative(ts):
    p, q, r = ts
    assert P.compose(P.compose(p, q), r) == P.compose(p, P.compose(q, r))


@given(same_degree_pairs())
def test_inverse_antihomomorphism(pq):
    p, q = pq
    assert P.inverse(P.compose(p, q)) == P.compose(P.inverse(q), P.inverse(p))


@given(same_degree_pairs())
def test_conjugate_matches_definition(pq):
    p, t = pq
    assert P.conjugate(p, t) == P.compose(t, P.compose(p, P.inverse(t)))
    assert P.cycle_type(P.conjugate(p, t)) == P.cycle_type(p)


@given(perms)
def test_cycles_partition_the_points(p):
    cycs = P.cycles(p)
    seen = sorted(x for c in cycs for x in c)
    assert seen == list(range(len(p)))
    for c in cycs:
        for i, x in enumerate(c):
            assert p[x] == c[(i + 1) % len(c)]
    assert P.from_cycles(len(p), cycs) == p


def test_cycle_type_examples():
    assert P.cycle_type((1, 0, 2)) == (2, 1)
    assert P.cycle_type(P.identity(5)) == (1, 1, 1, 1, 1)
    assert P.cycle_type((1, 2, 3, 0)) == (4,)


def test_from_cycles_rejects_bad_input():
    with pytest.raises(ValueError):
        P.from_cycles(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        P.from_cycles(3, [(0, 5)])


def test_class_size_matches_stream():
    for parts in [(3,), (2, 1), (2, 2), (3, 1), (4,), (2, 2, 1), (3, 2)]:
        elems = list(P.class_stream(parts))
        assert len(elems) == P.class_size(parts)
        assert len(set(elems)) == len(elems)
        assert all(P.cycle_type(p) == tuple(sorted(parts, reverse=True)) for p in elems)


def test_class_size_formula():
    # n! / (prod parts * prod multiplicity!)
    assert P.class_size((5,)) == 24
    assert P.class_size((2, 2)) == 3
    assert P.class_size((2, 1, 1)) == 6
    assert P.class_size((2,) * 4) == math.factorial(8) // (2**4 * math.factorial(4))


def test_involution_stream_is_the_two_class():
    for d in (2, 4, 6):
        invs = sorted(P.involution_stream(d))
        assert invs == sorted(P.class_stream((2,) * (d // 2)))
        # (d-1)!! of them
        expected = 1
        for x in range(d - 1, 0, -2):
            expected *= x
        assert len(invs) == expected


def test_class_representative():
    for parts in [(4, 2, 1), (2, 2, 2), (7,)]:
        assert P.cycle_type(P.class_representative(parts)) == parts


def test_centralizer_generators_commute_and_generate():
    for parts in [(3, 1), (2, 2), (4, 2), (2, 2, 1)]:
        r = P.class_representative(parts)
        gens = P.centralizer_generators(r)
        d = sum(parts)
        for g in gens:
            assert P.compose(g, r) == P.compose(r, g)
        group = P.subgroup(gens, d)
        brute = {
            t for t in map(tuple, permutations(range(d)))
            if P.compose(t, r) == P.compose(r, t)
        }
        assert group == brute


def test_subgroup_order():
    d = 4
    gens = [P.from_cycles(d, [(0, 1)]), P.from_cycles(d, [(0, 1, 2, 3)])]
    assert len(P.subgroup(gens, d)) == 24


def test_is_transitive():
    assert P.is_transitive([(1, 2, 3, 0)], 4)
    assert not P.is_transitive([(1, 0, 2, 3)], 4)
    assert P.is_transitive([(1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1)], 4)


@given(perms)
def test_conjugator_to_works_within_a_class(p):
    r = P.class_representative(P.cycle_type(p))
    g = P.conjugator_to(p, r)
    assert P.conjugate(p, g) == r


def test_conjugator_to_rejects_distinct_classes():
    with pytest.raises(ValueError):
        P.conjugator_to((1, 0, 2), (1, 2, 0))


def test_format_perm():
    assert P.format_perm(P.identity(3)) == "()"
    assert P.format_perm((1, 0, 2)) == "(1,2)"
    assert P.format_perm((1, 2, 0, 4, 3)) == "(1,2,3)(4,5)"
