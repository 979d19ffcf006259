"""Concrete semicartesian symmetric monoidal categories.

* :class:`PointedSets` -- finite pointed sets (basepoint ``0``) under wedge sum.
  Monically but not isomorphically projecting, and 2-strong.
* :class:`FinSetsCartesian` -- finite sets under Cartesian product.
* :class:`Lattice` -- a finite meet-semilattice with top, tensor = meet.

The first two are *concrete*: objects are sizes, morphisms are lookup tables,
subobjects are subsets, and cotensors ``V -| X`` are function sets encoded
lexicographically (leftmost coordinate most significant). Every builder runs
the category, monoidal and projection checks on a probe roster before handing
the instance out.
"""
from __future__ import annotations

import functools
import itertools
from math import prod
from typing import Callable, Hashable, Iterable, Sequence

from .errors import BoundError, ValidationError
from .fincat import Arrow, SetCategory, TableCategory, check_category_axioms
from .finset import lex_coords, lex_index
from .monoidal import MonoidalStructure, check_monoidal, pairwise_strength_check, projection_report


class ConcreteInstance(SetCategory, MonoidalStructure):
    """Shared machinery for instances whose objects are finite sets of a given size."""

    semicartesian = True
    kind = "concrete"
    representing = 1  # object whose hom-set into X is the underlying set of X
    classification: dict = {}

    def _check(self, obj):
        if not self.contains(obj):
            raise BoundError(f"object of size {obj} exceeds the hard bound {self.max_size}")
        return obj

    def unit(self):
        return 1

    def terminal(self, x):
        return Arrow(x, 1, (0,) * x)

    # -- cotensors ---------------------------------------------------------
    def cotensor(self, v: int, X: int) -> int:
        """``V -| X``: all functions ``V -> X`` (for pointed sets, based at the constant map)."""
        return self._check(X ** v)

    def evaluate(self, v: int, X: int, k: int) -> Arrow:
        """Evaluation at ``k``: ``V -| X -> X``."""
        size = self.cotensor(v, X)
        return Arrow(size, X, tuple(lex_coords(e, [X] * v)[k] for e in range(size)))

    def pair(self, v: int, c: int, X: int, fs: Sequence[Arrow]) -> Arrow:
        """Transpose a ``V``-indexed family of maps ``c -> X`` into ``c -> V -| X``."""
        size = self.cotensor(v, X)
        sizes = [X] * v
        return Arrow(c, size, tuple(lex_index([f.data[x] for f in fs], sizes) for x in range(c)))

    # -- elements and subobjects -------------------------------------------
    def element(self, X: int, e: int) -> Arrow:
        raise NotImplementedError

    def element_of(self, g: Arrow) -> int:
        raise NotImplementedError

    def elements(self, X: int) -> range:
        return range(X)

    def subobject(self, X: int, keep: Sequence[int]) -> tuple[int, Arrow]:
        keep = tuple(sorted(keep))
        return len(keep), Arrow(len(keep), X, keep)

    def factor(self, g: Arrow, m: Arrow) -> Arrow | None:
        """The unique ``h`` with ``m . h == g`` for injective ``m``, or ``None``."""
        pre = {y: x for x, y in enumerate(m.data)}
        try:
            table = tuple(pre[y] for y in g.data)
        except KeyError:
            return None
        h = Arrow(g.dom, m.dom, table)
        return h if self._is_arrow(h) else None

    def _is_arrow(self, f: Arrow) -> bool:
        return True

    def describe(self) -> dict:
        return {"kind": self.name, "bound": self.bound, "max_size": self.max_size}


class PointedSets(ConcreteInstance):
    """Pointed sets ``{0, 1, ..., n-1}`` (basepoint ``0``) with wedge sum.

    ``X v Y`` has the basepoint, then the non-base points of ``X``, then those
    of ``Y``.
    """

    name = "pointed"
    min_object = 1
    representing = 2

    def __init__(self, bound: int, max_size: int | None = None):
        if bound < 1:
            raise ValidationError("pointed sets need bound >= 1")
        super().__init__(bound, max_size)

    def _admissible_tables(self, a, b):
        return ((0,) + t for t in itertools.product(range(b), repeat=a - 1))

    def hom_size(self, a, b):
        return b ** (a - 1)

    def _is_arrow(self, f):
        return f.data[:1] == (0,)

    def tensor(self, objs):
        return self._check(1 + sum(o - 1 for o in objs))

    @staticmethod
    def _offsets(objs):
        offs, acc = [], 1
        for o in objs:
            offs.append(acc)
            acc += o - 1
        return offs

    def tensor_arrows(self, arrows):
        doms = [f.dom for f in arrows]
        cods = [f.cod for f in arrows]
        dom, cod = self.tensor(doms), self.tensor(cods)
        table = [0] * dom
        for f, do, co in zip(arrows, self._offsets(doms), self._offsets(cods)):
            for e in range(1, f.dom):
                y = f.data[e]
                table[do + e - 1] = 0 if y == 0 else co + y - 1
        return Arrow(dom, cod, tuple(table))

    def permutation(self, objs, sigma):
        objs = list(objs)
        out_objs = [objs[s] for s in sigma]
        size = self.tensor(objs)
        in_off, out_off = self._offsets(objs), self._offsets(out_objs)
        table = [0] * size
        for j, s in enumerate(sigma):
            for e in range(1, objs[s]):
                table[in_off[s] + e - 1] = out_off[j] + e - 1
        return Arrow(size, size, tuple(table))

    def element(self, X, e):
        return Arrow(2, X, (0, e))

    def element_of(self, g):
        return g.data[1]


class FinSetsCartesian(ConcreteInstance):
    """Finite sets with Cartesian product; products are lexicographically encoded.

    ``max_size`` caps every object (tensor powers and cotensors included) and
    defaults to the roster bound.
    """

    name = "finsets"
    min_object = 0

    def __init__(self, bound: int, max_size: int | None = None):
        if bound < 1:
            raise ValidationError("finite sets need bound >= 1")
        super().__init__(bound, bound if max_size is None else max_size)

    def tensor(self, objs):
        return self._check(prod(objs))

    def tensor_arrows(self, arrows):
        doms = [f.dom for f in arrows]
        cods = [f.cod for f in arrows]
        dom, cod = self.tensor(doms), self.tensor(cods)
        table = tuple(lex_index([f.data[x] for f, x in zip(arrows, lex_coords(e, doms))], cods)
                      for e in range(dom))
        return Arrow(dom, cod, table)

    def permutation(self, objs, sigma):
        objs = list(objs)
        out_objs = [objs[s] for s in sigma]
        size = self.tensor(objs)
        table = tuple(lex_index([lex_coords(e, objs)[s] for s in sigma], out_objs) for e in range(size))
        return Arrow(size, size, table)

    def element(self, X, e):
        return Arrow(1, X, (e,))

    def element_of(self, g):
        return g.data[0]


class Lattice(TableCategory, MonoidalStructure):
    """A finite meet-semilattice with top as a thin category; tensor = meet, unit = top."""

    semicartesian = True
    kind = "thin"
    name = "lattice"

    def __init__(self, elements: Sequence[Hashable], leq: set, meets: dict, top, label: str = "lattice"):
        self.elements = list(elements)
        self.leq_pairs = frozenset(leq)
        self.meets = dict(meets)
        self.top = top
        self.label = label
        arrows = [Arrow(a, b, "le") for a in self.elements for b in self.elements if (a, b) in self.leq_pairs]
        composition = {}
        for f in arrows:
            for g in arrows:
                if f.cod == g.dom:
                    composition[(g, f)] = Arrow(f.dom, g.cod, "le")
        identities = {a: Arrow(a, a, "le") for a in self.elements}
        super().__init__(self.elements, arrows, composition, identities)

    def leq(self, a, b) -> bool:
        return (a, b) in self.leq_pairs

    def meet(self, a, b):
        return self.meets[(a, b)]

    def unit(self):
        return self.top

    def tensor(self, objs):
        return functools.reduce(self.meet, objs, self.top)

    def tensor_arrows(self, arrows):
        return Arrow(self.tensor([f.dom for f in arrows]), self.tensor([f.cod for f in arrows]), "le")

    def permutation(self, objs, sigma):
        return self.identity(self.tensor(objs))

    def terminal(self, x):
        return Arrow(x, self.top, "le")

    def cotensor(self, v: int, X):
        return X if v > 0 else self.top

    def evaluate(self, v, X, k):
        return self.identity(X)

    def pair(self, v, c, X, fs):
        target = self.cotensor(v, X)
        if not self.leq(c, target):
            raise ValidationError(f"no map {c!r} -> {target!r} in the lattice")
        return Arrow(c, target, "le")

    def factor(self, g, m):
        return Arrow(g.dom, m.dom, "le") if self.leq(g.dom, m.dom) else None

    def describe(self) -> dict:
        return {"kind": "lattice", "label": self.label, "elements": self.elements}


# -- builders ---------------------------------------------------------------

def _verify(inst, probe_bound, expect_monic: bool, expect_iso: bool, strength_bound=None):
    for rep in (check_category_axioms(inst, probe_bound), check_monoidal(inst, probe_bound)):
        if not rep.ok:
            raise ValidationError(f"instance failed {rep.name} checks", witness=rep.violations[0])
    proj = projection_report(inst, probe_bound)
    got = (proj.details["monic"], proj.details["isomorphic"])
    if got != (expect_monic, expect_iso):
        raise ValidationError(f"projection classification {got} differs from {(expect_monic, expect_iso)}",
                              witness=proj.details["witnesses"])
    classification = {"semicartesian": proj.details["semicartesian"], "monic": got[0], "isomorphic": got[1],
                      "verified_probe_bound": probe_bound}
    if strength_bound is not None:
        objs = inst.roster(strength_bound)
        classification["two_strong"] = all(
            pairwise_strength_check(inst, c, X, n) for c in objs for X in objs for n in range(3, 4))
    inst.classification = classification
    return inst


@functools.lru_cache(maxsize=None)
def build_pointed_sets(B: int, verify_bound: int = 3) -> PointedSets:
    """Pointed sets of sizes ``1..B`` under wedge sum, verified on sizes ``<= verify_bound``."""
    inst = PointedSets(B)
    return _verify(inst, min(B, verify_bound), expect_monic=True, expect_iso=B < 2,
                   strength_bound=min(B, verify_bound))


@functools.lru_cache(maxsize=None)
def build_finsets(B: int, max_size: int | None = None, verify_bound: int = 2) -> FinSetsCartesian:
    """Finite sets of sizes ``0..B`` under Cartesian product, objects capped at ``max_size``."""
    inst = FinSetsCartesian(B, max_size)
    return _verify(inst, min(B, verify_bound), expect_monic=True, expect_iso=True)


def build_lattice(elements: Iterable[Hashable], leq: Iterable[tuple] | Callable, label: str = "lattice") -> Lattice:
    """Validate an order relation as a meet-semilattice with top and build the instance.

    ``leq`` is either a predicate or a collection of pairs ``(a, b)`` meaning
    ``a <= b``; the reflexive-transitive closure is taken.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise ValidationError("lattice elements are not distinct")
    if not elements:
        raise ValidationError("a lattice needs a top element")
    if callable(leq):
        rel = {(a, b) for a in elements for b in elements if leq(a, b)}
    else:
        rel = set(map(tuple, leq))
        stray = [p for p in rel if p[0] not in elements or p[1] not in elements]
        if stray:
            raise ValidationError("order relation mentions unknown elements", witness=stray[0])
    rel |= {(a, a) for a in elements}
    changed = True
    while changed:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        changed = bool(extra)
        rel |= extra
    for a, b in itertools.combinations(elements, 2):
        if (a, b) in rel and (b, a) in rel:
            raise ValidationError("relation is not antisymmetric", witness=(a, b))
    tops = [t for t in elements if all((a, t) in rel for a in elements)]
    if not tops:
        raise ValidationError("no top element", witness=None)
    meets = {}
    for a, b in itertools.product(elements, repeat=2):
        lower = [c for c in elements if (c, a) in rel and (c, b) in rel]
        greatest = [c for c in lower if all((d, c) in rel for d in lower)]
        if not greatest:
            raise ValidationError(f"no meet for {a!r} and {b!r}", witness=(a, b))
        meets[(a, b)] = greatest[0]
    inst = Lattice(elements, rel, meets, tops[0], label)
    return _verify(inst, None, expect_monic=True, expect_iso=True)


def divisor_lattice(n: int) -> Lattice:
    """Divisors of ``n`` under divisibility; meet is gcd and the top is ``n``."""
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    return build_lattice(divisors, lambda a, b: b % a == 0, label=f"divisors({n})")


def boolean_lattice(atoms: int) -> Lattice:
    """Subsets of ``atoms`` letters under inclusion."""
    letters = "abcdefghijklmnopqrstuvwxyz"[:atoms]
    subsets = []
    for r in range(atoms + 1):
        subsets += ["{" + ",".join(c) + "}" for c in itertools.combinations(letters, r)]
    members = {s: set(s.strip("{}").split(",")) - {""} for s in subsets}
    return build_lattice(subsets, lambda a, b: members[a] <= members[b], label=f"boolean({atoms})")


def chain(length: int) -> Lattice:
    """The total order ``0 < 1 < ... < length - 1``."""
    return build_lattice(list(range(length)), lambda a, b: a <= b, label=f"chain({length})")
