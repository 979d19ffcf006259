#!/usr/bin/env python3
"""Coalgebras in pointed finite sets under wedge sum.

Wedge sum is semicartesian but only monically projecting, and that is
enough to kill every non-trivial cocommutative coalgebra. A monoid operad
on the other hand sees exactly the pointed monoid actions.
"""
from __future__ import annotations

import argparse

from opcoalg.coalgebra import enumerate_coalgebras
from opcoalg.instances import build_pointed_sets
from opcoalg.monoidal import kappa, projection_report
from opcoalg.operad import ass, com, cyclic_group, from_monoid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=4)
    args = ap.parse_args()

    inst = build_pointed_sets(args.bound)
    proj = projection_report(inst, 3).details
    print(f"pointed sets up to size {args.bound}: monic={proj['monic']} isomorphic={proj['isomorphic']}")
    k = kappa(inst, 2, 2, 2)
    print(f"  hom(X, X v X) has {k.dom.size} maps, hom(X, X)^2 has {k.cod.size}; kappa image {sorted(set(k.table))}")

    for P in (com(3), ass(3), from_monoid(cyclic_group(2), 3)):
        counts = {X: len(enumerate_coalgebras(P, inst, X)) for X in inst.roster()}
        print(f"{P.name:24s} structures per carrier size: {counts}")

    Z2 = from_monoid(cyclic_group(2), 3)
    for A in enumerate_coalgebras(Z2, inst, 3):
        print("  Z/2 acting on {*, 1, 2} through", A.arrow(1, 1).data)


if __name__ == "__main__":
    main()
