#!/usr/bin/env python3
"""Operadic coalgebras versus co-Eilenberg-Moore coalgebras of C_P.

For every monoid of order at most 3 (and for com and ass) build the
comonad C_P on pointed sets, enumerate both kinds of coalgebra on each
carrier, and confirm the transposition matches them up with equal hom-sets.
"""
from __future__ import annotations

import argparse

from opcoalg.comonad import compute_CP, equivalence_report
from opcoalg.instances import build_pointed_sets
from opcoalg.operad import all_monoids, ass, com, from_monoid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--max-order", type=int, default=3)
    args = ap.parse_args()

    inst = build_pointed_sets(args.bound)
    operads = [com(3), ass(3)]
    for order in range(1, args.max_order + 1):
        operads += [from_monoid(M, 3) for M in all_monoids(order)]

    for P in operads:
        W = compute_CP(inst, P)
        rep = equivalence_report(inst, P, inst.roster())
        pairs = " ".join(f"{X}:{d['operadic']}<->{d['em']}" for X, d in rep.details["structures"].items())
        sizes = [W.obj(X) for X in inst.roster()]
        status = "ok" if rep.ok else f"FAILED {rep.violations[:1]}"
        print(f"{P.name:26s} |C_P X| = {sizes}  structures {pairs}  hom pairs {rep.details['hom_pairs']}  {status}")


if __name__ == "__main__":
    main()
