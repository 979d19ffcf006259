"""Finite sets and tabulated functions: the enrichment base.

Elements of a :class:`FinSet` are the dense indices ``0..size-1``; labels are
display-only and do not take part in equality. A :class:`FinFn` is a lookup
table. Products, equalisers and hom-sets are built from these two types with
fixed lexicographic orders so that every enumeration is reproducible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .errors import StructuralError


@dataclass(frozen=True)
class FinSet:
    size: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise StructuralError(f"FinSet size must be a non-negative int, got {self.size!r}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.size:
                raise StructuralError(f"{len(labels)} labels for a set of size {self.size}")
            if len(set(labels)) != len(labels):
                raise StructuralError(f"labels are not distinct: {labels}")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def __repr__(self) -> str:
        return f"FinSet({self.size})"

    def to_json(self):
        return {"size": self.size, **({"labels": list(self.labels)} if self.labels else {})}


@dataclass(frozen=True)
class FinFn:
    dom: FinSet
    cod: FinSet
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.size:
            raise StructuralError(
                f"table has {len(table)} entries but the domain has {self.dom.size} elements")
        for x, y in enumerate(table):
            if not (isinstance(y, int) and 0 <= y < self.cod.size):
                raise StructuralError(f"entry {x} -> {y!r} outside codomain of size {self.cod.size}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    @classmethod
    def identity(cls, A: FinSet) -> "FinFn":
        return cls(A, A, tuple(range(A.size)))

    @classmethod
    def constant(cls, A: FinSet, B: FinSet, y: int) -> "FinFn":
        return cls(A, B, (y,) * A.size)

    def image(self) -> list[int]:
        return sorted(set(self.table))

    def __repr__(self) -> str:
        return f"FinFn({self.dom.size}->{self.cod.size}, {list(self.table)})"

    def to_json(self):
        return {"dom": self.dom.size, "cod": self.cod.size, "table": list(self.table)}


def compose(g: FinFn, f: FinFn) -> FinFn:
    """Return ``g . f``."""
    if f.cod != g.dom:
        raise StructuralError(f"cannot compose: codomain {f.cod!r} of f is not domain {g.dom!r} of g")
    gt = g.table
    return FinFn(f.dom, g.cod, tuple(gt[y] for y in f.table))


def lex_index(coords: Sequence[int], sizes: Sequence[int]) -> int:
    """Position of ``coords`` in the lexicographic order (leftmost most significant)."""
    idx = 0
    for c, s in zip(coords, sizes):
        idx = idx * s + c
    return idx


def lex_coords(index: int, sizes: Sequence[int]) -> tuple[int, ...]:
    out = []
    for s in reversed(sizes):
        index, r = divmod(index, s)
        out.append(r)
    return tuple(reversed(out))


def product(factors: Sequence[FinSet]) -> tuple[FinSet, list[FinFn]]:
    """Cartesian product in lexicographic order, with its projections."""
    sizes = [A.size for A in factors]
    P = FinSet(prod(sizes))
    projections = []
    for k, A in enumerate(factors):
        stride = prod(sizes[k + 1:])
        projections.append(FinFn(P, A, tuple((x // stride) % A.size for x in range(P.size))))
    return P, projections


def pairing(fs: Sequence[FinFn], target: FinSet | None = None) -> FinFn:
    """The map ``x -> (f_1(x), ..., f_n(x))`` into the product of the codomains."""
    if not fs:
        raise StructuralError("pairing needs at least one map (the domain is otherwise unknown)")
    dom = fs[0].dom
    if any(f.dom != dom for f in fs):
        raise StructuralError("pairing requires a common domain")
    sizes = [f.cod.size for f in fs]
    cod = target if target is not None else FinSet(prod(sizes))
    return FinFn(dom, cod, tuple(lex_index([f.table[x] for f in fs], sizes) for x in range(dom.size)))


def equalizer(f: FinFn, g: FinFn) -> tuple[FinSet, FinFn]:
    """The subset on which ``f`` and ``g`` agree, with its inclusion."""
    if f.dom != g.dom or f.cod != g.cod:
        raise StructuralError(
            f"equalizer needs parallel maps, got {f.dom!r}->{f.cod!r} and {g.dom!r}->{g.cod!r}")
    keep = tuple(x for x in range(f.dom.size) if f.table[x] == g.table[x])
    E = FinSet(len(keep))
    return E, FinFn(E, f.dom, keep)


def all_functions(A: FinSet, B: FinSet) -> list[FinFn]:
    """Every function ``A -> B``; the table read as a base-``|B|`` numeral increases."""
    return [FinFn(A, B, t) for t in itertools.product(range(B.size), repeat=A.size)]


def is_injective(f: FinFn) -> bool:
    return len(set(f.table)) == len(f.table)


def is_surjective(f: FinFn) -> bool:
    return len(set(f.table)) == f.cod.size


def is_bijective(f: FinFn) -> bool:
    return f.dom.size == f.cod.size and is_injective(f)


def inverse(f: FinFn) -> FinFn:
    if not is_bijective(f):
        raise StructuralError(f"{f!r} is not a bijection")
    inv = [0] * f.dom.size
    for x, y in enumerate(f.table):
        inv[y] = x
    return FinFn(f.cod, f.dom, tuple(inv))


def symmetric_group(n: int) -> list[FinFn]:
    """All permutations of ``n`` in lexicographic one-line order (identity first)."""
    if n < 0:
        raise StructuralError("arity must be non-negative")
    A = FinSet(n)
    return [FinFn(A, A, p) for p in itertools.permutations(range(n))]


def permutations(n: int) -> list[tuple[int, ...]]:
    """One-line tuples of :func:`symmetric_group`, same order."""
    return list(itertools.permutations(range(n)))


def perm_compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """``s . t`` for permutations in one-line notation."""
    return tuple(s[x] for x in t)


def perm_inverse(s: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(s)
    for x, y in enumerate(s):
        inv[y] = x
    return tuple(inv)
