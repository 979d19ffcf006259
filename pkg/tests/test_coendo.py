from __future__ import annotations

import pytest

from opcoalg.coendo import coend_operad, transport_iso
from opcoalg.errors import BoundError, StructuralError, ValidationError
from opcoalg.fincat import Arrow
from opcoalg.instances import build_finsets, chain, divisor_lattice
from opcoalg.operad import check_operad_axioms, check_operad_morphism, compose_morphisms


def test_pointed_size_two_components(pointed3):
    C = coend_operad(pointed3, 2, 2)
    assert C.sizes == [1, 2, 3]
    assert C.arrow(1, C.unit) == pointed3.identity(2)


@pytest.mark.parametrize("X", [1, 2, 3])
def test_pointed_component_sizes_closed_form(pointed3, X):
    C = coend_operad(pointed3, X, 3)
    assert C.sizes == [(1 + r * (X - 1)) ** (X - 1) for r in range(4)]


def test_finsets_component_sizes():
    F = build_finsets(2, max_size=4)
    C = coend_operad(F, 2, 2)
    assert C.sizes == [1, 4, 16] == [2 ** (r * 2) for r in range(3)]
    assert check_operad_axioms(C).ok


def test_finsets_bound_error():
    with pytest.raises(BoundError, match="4"):
        coend_operad(build_finsets(2), 2, 2)


def test_lattice_coend_is_trivial():
    L = divisor_lattice(12)
    for X in L.objects:
        C = coend_operad(L, X, 3)
        assert C.sizes == [1, 1, 1, 1] and check_operad_axioms(C).ok


@pytest.mark.parametrize("X", [1, 2, 3])
def test_pointed_coend_axioms(pointed3, X):
    assert check_operad_axioms(coend_operad(pointed3, X, 3)).ok


def test_partial_composition_grafts(pointed3):
    C = coend_operad(pointed3, 2, 2)
    diag_free = Arrow(2, 3, (0, 1))  # a -> a in the first copy
    k = C.index(2, diag_free)
    ident = C.unit
    # grafting the identity changes nothing; plugging the terminal map collapses a copy
    assert C.circ(2, 1, 1, k, ident) == k
    assert C.arrow(1, C.circ(2, 0, 2, k, 0)) == pointed3.identity(2)
    assert C.arrow(1, C.circ(2, 0, 1, k, 0)) == Arrow(2, 2, (0, 0))


def test_symmetric_action_swaps_copies(pointed3):
    C = coend_operad(pointed3, 2, 2)
    k = C.index(2, Arrow(2, 3, (0, 1)))
    assert C.arrow(2, C.act(2, k, (1, 0))) == Arrow(2, 3, (0, 2))


def test_coend_arguments_validated(pointed3):
    with pytest.raises(StructuralError):
        coend_operad(pointed3, 9, 2)
    with pytest.raises(StructuralError):
        coend_operad(pointed3, 2, 0)


def test_materialised_copy_matches(pointed3):
    C = coend_operad(pointed3, 2, 3)
    D = C.copy()
    assert D.sizes == C.sizes and check_operad_axioms(D).ok
    assert D.partial == C.partial


def test_transport_identity_is_identity(pointed3):
    C = coend_operad(pointed3, 3, 2)
    ident = pointed3.identity(3)
    D, psi = transport_iso(C, ident, ident)
    assert psi.maps == {r: tuple(range(s)) for r, s in enumerate(C.sizes)}


def test_transport_relabeling(pointed3):
    C = coend_operad(pointed3, 3, 3)
    swap = Arrow(3, 3, (0, 2, 1))
    D, psi = transport_iso(C, swap, swap)
    assert check_operad_axioms(D).ok
    assert check_operad_morphism(psi).ok
    assert all(sorted(t) == list(range(len(t))) for t in psi.maps.values())
    back, phi = transport_iso(D, swap, swap)
    roundtrip = compose_morphisms(phi, psi)
    assert roundtrip.maps == {r: tuple(range(s)) for r, s in enumerate(C.sizes)}


def test_transport_is_functorial(pointed3):
    C = coend_operad(pointed3, 3, 2)
    f = Arrow(3, 3, (0, 2, 1))
    ident = pointed3.identity(3)
    _, pf = transport_iso(C, f, f)
    D, _ = transport_iso(C, ident, ident)
    _, pg = transport_iso(D, f, f)
    _, pgf = transport_iso(C, pointed3.compose(f, f), pointed3.compose(f, f))
    assert compose_morphisms(pg, pf).maps == pgf.maps


def test_transport_rejects_non_iso(pointed3):
    C = coend_operad(pointed3, 3, 2)
    f = Arrow(3, 3, (0, 1, 1))
    with pytest.raises(ValidationError) as err:
        transport_iso(C, f, f)
    assert err.value.witness == Arrow(3, 3, (0, 1, 1))


def test_chain_coend_thin():
    assert coend_operad(chain(3), 1, 2).sizes == [1, 1, 1]
