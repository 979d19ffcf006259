#!/usr/bin/env python3
"""In a Cartesian setting C_com is the identity and each object has one coalgebra, the diagonal."""
from __future__ import annotations

from opcoalg.comonad import fox_report
from opcoalg.instances import boolean_lattice, build_finsets, divisor_lattice


def main():
    for inst, N in ((divisor_lattice(12), 3), (boolean_lattice(2), 3), (divisor_lattice(30), 3),
                    (build_finsets(3, max_size=9), 2)):
        rep = fox_report(inst, N)
        label = inst.describe().get("label", inst.describe()["kind"])
        print(f"{label:12s} N={N} coalgebras={rep.details['coalgebras']} {'ok' if rep.ok else rep.violations[:1]}")


if __name__ == "__main__":
    main()
