from __future__ import annotations

import itertools
import math

import pytest

from conftest import pointed_maps
from opcoalg.errors import BoundError, ValidationError
from opcoalg.fincat import Arrow
from opcoalg.instances import (PointedSets, boolean_lattice, build_finsets, build_lattice, build_pointed_sets,
                               chain, divisor_lattice)


def test_divisor_lattice_meets_are_gcd():
    L = divisor_lattice(12)
    assert L.objects == [1, 2, 3, 4, 6, 12]
    assert L.unit() == 12
    for a, b in itertools.product(L.objects, repeat=2):
        assert L.meet(a, b) == math.gcd(a, b)
    assert L.classification["isomorphic"]


def test_chain_and_boolean():
    assert chain(3).objects == [0, 1, 2]
    B = boolean_lattice(2)
    assert B.objects == ["{}", "{a}", "{b}", "{a,b}"]
    assert B.meet("{a}", "{b}") == "{}" and B.unit() == "{a,b}"


def test_lattice_missing_meet_rejected():
    # a, b below both c and d, nothing below a and b
    pairs = [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "t"), ("d", "t")]
    with pytest.raises(ValidationError) as err:
        build_lattice("abcdt", pairs)
    assert err.value.witness == ("a", "b")


def test_lattice_other_rejections():
    with pytest.raises(ValidationError):
        build_lattice("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(ValidationError):
        build_lattice("ab", [])
    with pytest.raises(ValidationError):
        build_lattice("ab", [("a", "z")])


def test_lattice_cotensor():
    L = divisor_lattice(12)
    assert L.cotensor(2, 4) == 4 and L.cotensor(0, 4) == 12


def test_pointed_hom_sizes(pointed3):
    assert len(pointed3.hom(2, 2)) == 2
    for a, b in itertools.product(range(1, 4), repeat=2):
        assert [f.data for f in pointed3.hom(a, b)] == pointed_maps(a, b)
        assert pointed3.hom_size(a, b) == len(pointed_maps(a, b))


def test_pointed_wedge_and_unit(pointed3):
    assert pointed3.tensor([2, 2]) == 3
    for X in range(1, 4):
        assert pointed3.tensor([X, 1]) == pointed3.tensor([1, X]) == X
        u = pointed3.identity(1)
        idX = pointed3.identity(X)
        assert pointed3.tensor_arrows([idX, u]) == idX


def test_pointed_wedge_of_arrows(pointed3):
    f = Arrow(2, 3, (0, 2))
    g = Arrow(3, 2, (0, 1, 0))
    assert pointed3.tensor_arrows([f, g]) == Arrow(4, 4, (0, 2, 3, 0))


def test_pointed_classification(pointed3):
    c = pointed3.classification
    assert c["semicartesian"] and c["monic"] and not c["isomorphic"] and c["two_strong"]
    assert c["verified_probe_bound"] == 3


def test_pointed_bound_validated():
    with pytest.raises(ValidationError):
        PointedSets(0)
    assert build_pointed_sets(1).classification["isomorphic"]


def test_finsets_examples():
    F = build_finsets(3)
    assert len(F.hom(2, 3)) == 9
    assert F.unit() == 1 and F.hom(3, 1) == (F.terminal(3),)
    with pytest.raises(BoundError):
        F.tensor([2, 2])
    assert build_finsets(2, max_size=4).tensor([2, 2]) == 4


def test_finsets_cotensor_roundtrip():
    F = build_finsets(2, max_size=4)
    fs = [Arrow(2, 2, (1, 0)), Arrow(2, 2, (1, 1))]
    p = F.pair(2, 2, 2, fs)
    assert [F.compose(F.evaluate(2, 2, k), p) for k in range(2)] == fs


def test_pointed_cotensor_basepoint(pointed3):
    # the constant-basepoint function is element 0 of V -| X
    assert pointed3.cotensor(2, 2) == 4
    assert pointed3.evaluate(2, 2, 0).data[0] == 0 and pointed3.evaluate(2, 2, 1).data[0] == 0


def test_factor_through_injection(pointed3):
    m = Arrow(2, 3, (0, 2))
    assert pointed3.factor(Arrow(2, 3, (0, 2)), m) == pointed3.identity(2)
    assert pointed3.factor(Arrow(2, 3, (0, 1)), m) is None
