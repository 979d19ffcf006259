"""Exhaustive single-entry corruptions of operad tables."""
from __future__ import annotations


def fault_sites(P):
    """Descriptions of every single-entry change of ``P``'s tables to another legal value."""
    out = []
    for key, table in sorted(P.partial.items()):
        target = P.sizes[key[0] + key[1] - 1]
        for k, v in enumerate(table):
            a, b = divmod(k, P.sizes[key[1]])
            out.extend(("partial", key, a, b, w) for w in range(target) if w != v)
    for n, acts in sorted(P.action.items()):
        for s, table in sorted(acts.items()):
            for a, v in enumerate(table):
                out.extend(("action", n, s, a, w) for w in range(P.sizes[n]) if w != v)
    return out


def apply_fault(P, where):
    if where[0] == "partial":
        return P.with_partial_entry(*where[1:])
    return P.with_action_entry(*where[1:])


def single_entry_faults(P):
    return [(where, apply_fault(P, where)) for where in fault_sites(P)]


def is_monoid_table(table, unit):
    n = len(table)
    r = range(n)
    return (all(table[unit][a] == a == table[a][unit] for a in r)
            and all(table[table[a][b]][c] == table[a][table[b][c]] for a in r for b in r for c in r))
