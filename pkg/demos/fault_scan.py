#!/usr/bin/env python3
"""Corrupt one table entry at a time and see whether the operad axiom check notices.

A corruption that goes unnoticed must be a genuine operad in its own right;
for the monoid operads this happens when the new product table is again a
monoid. ``--full`` also scans all of ass(4), which takes several minutes.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from faults import apply_fault, fault_sites  # noqa: E402
from opcoalg.operad import all_monoids, ass, check_operad_axioms, from_monoid  # noqa: E402


def scan(P):
    t = time.perf_counter()
    sites = fault_sites(P)
    missed = [w for w in sites if check_operad_axioms(apply_fault(P, w)).ok]
    print(f"{P.name:24s} {len(sites):6d} corruptions, {len(missed)} unnoticed ({time.perf_counter() - t:.1f}s)")
    for w in missed:
        Q = apply_fault(P, w)
        print("    still an operad:", w, "P(1) table", Q.monoid().table)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--full", action="store_true", help="include ass(4)")
    args = ap.parse_args()
    operads = [ass(3)] + [from_monoid(M, 3) for order in (2, 3) for M in all_monoids(order)]
    if args.full:
        operads.append(ass(4))
    for P in operads:
        scan(P)


if __name__ == "__main__":
    main()
