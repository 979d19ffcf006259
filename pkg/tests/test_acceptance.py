"""The eleven acceptance criteria, each as one test.

A PASS/FAIL line per criterion is printed in the terminal summary (see conftest).
"""
from __future__ import annotations

import itertools
import random

from faults import apply_fault, fault_sites, is_monoid_table, single_entry_faults
from opcoalg.coalgebra import check_coalgebra_category, enumerate_coalgebras
from opcoalg.coendo import coend_operad
from opcoalg.comonad import (CoactionComonad, coaction_agreement, comonad_laws, compute_CP, end_agreement,
                             equivalence_report, fox_report, inclusion_report)
from opcoalg.instances import boolean_lattice, build_finsets, build_pointed_sets, divisor_lattice
from opcoalg.monoidal import pairwise_strength_check, projection_report
from opcoalg.operad import all_monoids, ass, check_operad_axioms, com, cyclic_group, from_monoid

MONOIDS = [M for order in (1, 2, 3) for M in all_monoids(order)]
Z2 = cyclic_group(2)


def suite_operads(N=3):
    return [com(N), ass(N)] + [from_monoid(M, N) for M in MONOIDS]


def test_ac01_operad_axiom_suite():
    for P in [com(4), ass(4)] + [from_monoid(M, 3) for M in MONOIDS]:
        assert check_operad_axioms(P).ok, P.name
    # every single-entry corruption of ass(3) is caught
    for where, Q in single_entry_faults(ass(3)):
        assert not check_operad_axioms(Q).ok, where
    # monoid operads: caught unless the corrupted product table is itself a monoid
    for M in MONOIDS:
        for where, Q in single_entry_faults(from_monoid(M, 3)):
            table = [[Q.circ(1, 1, 1, a, b) for b in range(M.order)] for a in range(M.order)]
            genuine = where[:2] == ("partial", (1, 1, 1)) and is_monoid_table(table, Q.unit)
            assert check_operad_axioms(Q).ok == genuine, where
    # a deterministic sample of the ass(4) corruptions
    P4 = ass(4)
    for where in random.Random(1).sample(fault_sites(P4), 60):
        assert not check_operad_axioms(apply_fault(P4, where)).ok, where


def test_ac02_coend_well_formed():
    L = divisor_lattice(12)
    for X in L.objects:
        assert check_operad_axioms(coend_operad(L, X, 3)).ok
    pointed = build_pointed_sets(3)
    for X in pointed.roster():
        assert check_operad_axioms(coend_operad(pointed, X, 3)).ok
    finsets = build_finsets(2, max_size=4)
    for X in finsets.roster():
        assert check_operad_axioms(coend_operad(finsets, X, 2)).ok


def test_ac03_coalgebra_category():
    pointed = build_pointed_sets(3)
    L = divisor_lattice(12)
    for P in (com(3), ass(3)):
        assert check_coalgebra_category(P, pointed, pointed.roster()).ok
        assert check_coalgebra_category(P, L, L.objects).ok


def test_ac04_projection_classification():
    for F in (build_finsets(2, max_size=4), build_finsets(3, max_size=9)):
        d = projection_report(F, 2).details
        assert d["monic"] and d["isomorphic"]
    pointed = build_pointed_sets(4)
    d = projection_report(pointed, 3).details
    assert d["monic"] and not d["isomorphic"]
    w = d["witnesses"]["isomorphic"]
    assert (w["X"], w["hom_tensor"], w["hom_product"]) == (2, 3, 4)
    for c, X, n in itertools.product(range(1, 5), range(1, 5), range(2, 5)):
        assert pairwise_strength_check(pointed, c, X, n), (c, X, n)


def test_ac05_comonad_computation():
    pointed = build_pointed_sets(3)
    W = compute_CP(pointed, com(3))
    assert W.carrier(2) == ((0,),)
    V = compute_CP(pointed, from_monoid(Z2, 3))
    assert V.obj(2) == 4
    A = CoactionComonad(pointed, Z2)
    assert coaction_agreement(V, [1, 2, 3]).ok
    for X in (1, 2, 3):
        assert V.inclusion(X) == A.inclusion(X)
        assert V.eps_arrow(X) == A.eps_arrow(X)
        assert V.delta_arrow(X) == A.delta_arrow(X)
    for P in suite_operads():
        C = compute_CP(pointed, P)
        for X in (1, 2, 3):
            assert end_agreement(C, X).ok, (P.name, X)


def test_ac06_comonad_laws():
    pointed = build_pointed_sets(3)
    for M in MONOIDS:
        assert comonad_laws(CoactionComonad(pointed, M), pointed.roster()).ok, M.name
    for P in suite_operads():
        assert comonad_laws(compute_CP(pointed, P), pointed.roster()).ok, P.name


def test_ac07_main_equivalence():
    pointed = build_pointed_sets(3)
    expected = {
        "com": {"1": (1, 1), "2": (0, 0), "3": (0, 0)},
        "ass": {"1": (1, 1), "2": (0, 0), "3": (0, 0)},
        "Z2": {"1": (1, 1), "2": (1, 1), "3": (2, 2)},
    }
    for key, P in (("com", com(3)), ("ass", ass(3)), ("Z2", from_monoid(Z2, 3))):
        rep = equivalence_report(pointed, P, pointed.roster())
        assert rep.ok, (key, rep.violations)
        got = {X: (d["operadic"], d["em"]) for X, d in rep.details["structures"].items()}
        assert got == expected[key]


def test_ac08_fox_direction():
    L = divisor_lattice(12)
    rep = fox_report(L, 3)
    assert rep.ok and rep.details["total_coalgebras"] == 6
    B = boolean_lattice(2)
    rep = fox_report(B, 3)
    assert rep.ok and rep.details["total_coalgebras"] == 4
    for inst in (L, B):
        W = compute_CP(inst, com(3))
        for X in inst.objects:
            # identity comonad: carrier is X itself, counit and comultiplication are identities
            assert W.obj(X) == X
            assert W.eps_arrow(X) == inst.identity(X) and W.delta_arrow(X) == inst.identity(X)


def test_ac09_only_the_point_is_cocommutative():
    pointed = build_pointed_sets(4)
    counts = [len(enumerate_coalgebras(com(3), pointed, X)) for X in pointed.roster()]
    assert counts == [1, 0, 0, 0]


def test_ac10_two_strong_shortcut():
    pointed = build_pointed_sets(4)
    for P in suite_operads():
        full, short = compute_CP(pointed, P, "all"), compute_CP(pointed, P, 2)
        for X in pointed.roster():
            assert full.carrier(X) == short.carrier(X), (P.name, X)


def test_ac11_inclusion_is_monic():
    pointed = build_pointed_sets(3)
    for P in suite_operads():
        rep = inclusion_report(compute_CP(pointed, P), pointed.roster(), 3)
        assert rep.ok, P.name
    finsets = build_finsets(2, max_size=4)
    for P in [com(2), ass(2)] + [from_monoid(M, 2) for M in MONOIDS if M.order <= 2]:
        rep = inclusion_report(compute_CP(finsets, P), finsets.roster(), 2)
        assert rep.ok and all(rep.details["bijective"].values()), P.name
    L = divisor_lattice(12)
    for P in (com(3), ass(3)):
        W = compute_CP(L, P)
        assert all(W.inclusion(X) == L.identity(W.obj(X)) for X in L.objects)
