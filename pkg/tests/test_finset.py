from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from opcoalg.errors import StructuralError
from opcoalg.finset import (FinFn, FinSet, all_functions, compose, equalizer, inverse, is_bijective,
                            is_injective, is_surjective, lex_coords, lex_index, pairing, perm_compose,
                            perm_inverse, product, symmetric_group)


def fn(a, b, table):
    return FinFn(FinSet(a), FinSet(b), tuple(table))


def test_finset_labels_validated():
    assert FinSet(2, ("x", "y")).label(1) == "y"
    with pytest.raises(StructuralError):
        FinSet(2, ("x", "x"))
    with pytest.raises(StructuralError):
        FinSet(2, ("x",))
    assert FinSet(2, ("a", "b")) == FinSet(2)


def test_finfn_rejects_bad_tables():
    with pytest.raises(StructuralError):
        fn(2, 2, [0])
    with pytest.raises(StructuralError):
        fn(1, 2, [2])
    assert fn(0, 0, []).table == ()


def test_compose_identity_and_swap():
    f = fn(2, 3, [2, 0])
    assert compose(FinFn.identity(FinSet(3)), f) == f
    assert compose(f, FinFn.identity(FinSet(2))) == f
    swap = fn(2, 2, [1, 0])
    assert compose(swap, swap) == FinFn.identity(FinSet(2))


def test_compose_mismatch_names_both_sets():
    with pytest.raises(StructuralError, match="FinSet"):
        compose(fn(2, 2, [0, 1]), fn(1, 3, [0]))


def test_compose_associative_small():
    sets = [FinSet(k) for k in range(3)]
    for A, B, C, D in itertools.product(sets, repeat=4):
        for f in all_functions(A, B):
            for g in all_functions(B, C):
                for h in all_functions(C, D):
                    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_product_edge_cases():
    P, projs = product([])
    assert P.size == 1 and projs == []
    P, projs = product([FinSet(2), FinSet(3)])
    assert P.size == 6 and all(is_surjective(p) for p in projs)
    assert product([FinSet(0), FinSet(5)])[0].size == 0


def test_product_order_is_lexicographic():
    P, (p0, p1) = product([FinSet(2), FinSet(3)])
    assert [(p0(x), p1(x)) for x in P] == list(itertools.product(range(2), range(3)))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_pairing_of_projections_is_identity(sizes):
    P, projs = product([FinSet(s) for s in sizes])
    assert pairing(projs, P) == FinFn.identity(P)


def test_equalizer_examples():
    idf = fn(2, 2, [0, 1])
    assert equalizer(idf, idf)[1] == idf
    assert equalizer(idf, fn(2, 2, [1, 0]))[0].size == 0
    E, e = equalizer(fn(2, 2, [0, 0]), idf)
    assert e.table == (0,)


def test_equalizer_universal_property():
    sets = [FinSet(k) for k in range(4)]
    for A, B in itertools.product(sets, repeat=2):
        for f, g in itertools.product(all_functions(A, B), repeat=2):
            E, e = equalizer(f, g)
            assert compose(f, e) == compose(g, e) and is_injective(e)
            for T in sets[:3]:
                for h in all_functions(T, A):
                    if compose(f, h) == compose(g, h):
                        lifts = [k for k in all_functions(T, E) if compose(e, k) == h]
                        assert len(lifts) == 1


def test_equalizer_needs_parallel_maps():
    with pytest.raises(StructuralError):
        equalizer(fn(1, 1, [0]), fn(1, 2, [0]))


def test_all_functions_counts_and_order():
    assert len(all_functions(FinSet(0), FinSet(3))) == 1
    assert len(all_functions(FinSet(2), FinSet(3))) == 9
    assert all_functions(FinSet(1), FinSet(0)) == []
    tables = [f.table for f in all_functions(FinSet(2), FinSet(3))]
    assert tables == sorted(tables)
    assert tables == [f.table for f in all_functions(FinSet(2), FinSet(3))]


def test_injectivity_predicates():
    assert is_injective(FinFn.identity(FinSet(3)))
    assert not is_injective(FinFn.constant(FinSet(2), FinSet(1), 0))
    assert is_injective(fn(0, 2, []))
    assert is_bijective(fn(2, 2, [1, 0])) and not is_bijective(fn(1, 2, [1]))
    assert inverse(fn(3, 3, [2, 0, 1])) == fn(3, 3, [1, 2, 0])
    with pytest.raises(StructuralError):
        inverse(fn(2, 2, [0, 0]))


def test_symmetric_group():
    assert [p.table for p in symmetric_group(0)] == [()]
    assert [p.table for p in symmetric_group(1)] == [(0,)]
    S3 = symmetric_group(3)
    assert len(S3) == 6 and S3[0] == FinFn.identity(FinSet(3))


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_perm_helpers(s, t):
    s, t = tuple(s), tuple(t)
    st_ = perm_compose(s, t)
    assert perm_compose(st_, perm_inverse(st_)) == tuple(range(4))
    assert perm_inverse(st_) == perm_compose(perm_inverse(t), perm_inverse(s))


@given(st.lists(st.integers(1, 5), min_size=0, max_size=4), st.data())
def test_lex_roundtrip(sizes, data):
    total = 1
    for s in sizes:
        total *= s
    k = data.draw(st.integers(0, total - 1))
    assert lex_index(lex_coords(k, sizes), sizes) == k
