"""Set-enriched categories behind one interface.

Two backends:

* ``table``: finitely many objects with explicit hom lists and a composition
  table (:class:`TableCategory`).
* ``computable``: hom-sets are enumerated on demand from a rule
  (:class:`SetCategory` and its subclasses). The roster of objects handed to
  exhaustive checks is cut off at an explicit bound.

Morphisms are :class:`Arrow` values compared structurally, so hom-sets can be
cached and tested for membership.
"""
from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from .errors import StructuralError
from .report import Report


@dataclass(frozen=True)
class Arrow:
    dom: Hashable
    cod: Hashable
    data: Hashable

    def __repr__(self) -> str:
        return f"Arrow({self.dom!r}->{self.cod!r}, {self.data!r})"

    def to_json(self):
        data = list(self.data) if isinstance(self.data, tuple) else self.data
        return {"dom": self.dom, "cod": self.cod, "data": data}


class Category(ABC):
    backend = "computable"

    @abstractmethod
    def roster(self, bound: int | None = None) -> list:
        """Objects examined by exhaustive checks."""

    @abstractmethod
    def contains(self, obj) -> bool:
        ...

    @abstractmethod
    def hom(self, a, b) -> tuple[Arrow, ...]:
        ...

    @abstractmethod
    def _compose(self, g: Arrow, f: Arrow) -> Arrow:
        ...

    @abstractmethod
    def identity(self, a) -> Arrow:
        ...

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        """``g . f``; raises if ``f.cod`` is not ``g.dom``."""
        if f.cod != g.dom:
            raise StructuralError(f"cannot compose {g!r} after {f!r}: {f.cod!r} != {g.dom!r}")
        return self._compose(g, f)

    def compose_all(self, *arrows: Arrow) -> Arrow:
        """``arrows[0] . arrows[1] . ... . arrows[-1]``."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.compose(g, out)
        return out

    def hom_index(self, a, b) -> dict[Arrow, int]:
        cache = self.__dict__.setdefault("_hom_index_cache", {})
        key = (a, b)
        if key not in cache:
            cache[key] = {f: k for k, f in enumerate(self.hom(a, b))}
        return cache[key]

    def hom_size(self, a, b) -> int:
        return len(self.hom(a, b))

    def is_iso(self, f: Arrow) -> Arrow | None:
        """Return an inverse of ``f`` if one exists."""
        for g in self.hom(f.cod, f.dom):
            if self.compose(g, f) == self.identity(f.dom) and self.compose(f, g) == self.identity(f.cod):
                return g
        return None


class TableCategory(Category):
    """A finite category given by explicit tables.

    ``arrows`` lists every morphism; ``composition`` maps ``(g, f)`` to
    ``g . f`` for each composable pair; ``identities`` maps objects to arrows.
    """

    backend = "table"

    def __init__(self, objects: Iterable, arrows: Iterable[Arrow], composition: dict, identities: dict):
        self.objects = list(objects)
        self._objset = set(self.objects)
        self._homs: dict = {(a, b): [] for a in self.objects for b in self.objects}
        for f in arrows:
            if (f.dom, f.cod) not in self._homs:
                raise StructuralError(f"arrow {f!r} has an endpoint outside the object list")
            self._homs[(f.dom, f.cod)].append(f)
        self._homs = {k: tuple(v) for k, v in self._homs.items()}
        self.composition = dict(composition)
        self.identities = dict(identities)
        for a in self.objects:
            if a not in self.identities:
                raise StructuralError(f"object {a!r} has no identity")
        for f in self.identities.values():
            if f not in self._homs[(f.dom, f.cod)]:
                raise StructuralError(f"identity {f!r} is not a listed arrow")
        for a, b, c in itertools.product(self.objects, repeat=3):
            for f in self._homs[(a, b)]:
                for g in self._homs[(b, c)]:
                    if (g, f) not in self.composition:
                        raise StructuralError(f"composition table has no entry for {g!r} . {f!r}")

    def roster(self, bound=None):
        return list(self.objects if bound is None else self.objects[:bound])

    def contains(self, obj) -> bool:
        return obj in self._objset

    def hom(self, a, b):
        return self._homs[(a, b)]

    def _compose(self, g, f):
        return self.composition[(g, f)]

    def identity(self, a):
        return self.identities[a]

    def with_composition(self, g: Arrow, f: Arrow, result: Arrow) -> "TableCategory":
        """Copy with one composition entry overwritten (used for fault injection)."""
        table = dict(self.composition)
        table[(g, f)] = result
        arrows = [h for hs in self._homs.values() for h in hs]
        return TableCategory(self.objects, arrows, table, self.identities)


class SetCategory(Category):
    """Finite sets ``0..n-1`` (objects are sizes) and all functions.

    ``bound`` cuts off the roster; ``max_size`` is a hard cap on every object
    the category will admit (``None`` means uncapped).
    """

    min_object = 0

    def __init__(self, bound: int, max_size: int | None = None):
        self.bound = bound
        self.max_size = max_size
        self._hom_cache: dict = {}

    def roster(self, bound=None):
        top = self.bound if bound is None else min(bound, self.bound)
        return list(range(self.min_object, top + 1))

    def contains(self, obj) -> bool:
        return (isinstance(obj, int) and obj >= self.min_object
                and (self.max_size is None or obj <= self.max_size))

    def _admissible_tables(self, a: int, b: int):
        return itertools.product(range(b), repeat=a)

    def hom(self, a, b):
        key = (a, b)
        if key not in self._hom_cache:
            self._hom_cache[key] = tuple(Arrow(a, b, t) for t in self._admissible_tables(a, b))
        return self._hom_cache[key]

    def hom_size(self, a, b) -> int:
        return b ** a

    def _compose(self, g, f):
        gt = g.data
        return Arrow(f.dom, g.cod, tuple(gt[y] for y in f.data))

    def identity(self, a):
        return Arrow(a, a, tuple(range(a)))

    def arrow(self, a: int, b: int, table) -> Arrow:
        table = tuple(table)
        if len(table) != a or any(not 0 <= y < b for y in table):
            raise StructuralError(f"{table} is not a function {a} -> {b}")
        return Arrow(a, b, table)


@dataclass(frozen=True)
class FunctorData:
    """A functor given by an object map and an arrow map (both callables)."""

    ob: Callable
    ar: Callable

    @classmethod
    def from_tables(cls, obmap: dict, armap: dict) -> "FunctorData":
        return cls(obmap.__getitem__, armap.__getitem__)


def identity_functor() -> FunctorData:
    return FunctorData(lambda a: a, lambda f: f)


def check_category_axioms(cat: Category, probe_bound: int | None = None) -> Report:
    """Unit laws, closure and associativity over every arrow among roster objects."""
    objs = cat.roster(probe_bound)
    rep = Report("category-axioms", {"backend": cat.backend, "probe_bound": probe_bound,
                                     "objects": len(objs)})
    homs = {(a, b): cat.hom(a, b) for a in objs for b in objs}
    members = {k: set(v) for k, v in homs.items()}
    for a in objs:
        ida = cat.identity(a)
        rep.tick()
        if ida not in members[(a, a)]:
            rep.fail("identity-missing", object=a, identity=ida)
    for (a, b), fs in homs.items():
        ida, idb = cat.identity(a), cat.identity(b)
        for f in fs:
            rep.tick(2)
            if cat.compose(idb, f) != f:
                rep.fail("left-unit", arrow=f)
            if cat.compose(f, ida) != f:
                rep.fail("right-unit", arrow=f)
    composites = {}
    for a, b, c in itertools.product(objs, repeat=3):
        for f in homs[(a, b)]:
            for g in homs[(b, c)]:
                h = cat.compose(g, f)
                composites[(g, f)] = h
                rep.tick()
                if h not in members[(a, c)]:
                    rep.fail("closure", g=g, f=f, composite=h)
    for a, b, c, d in itertools.product(objs, repeat=4):
        for f in homs[(a, b)]:
            for g in homs[(b, c)]:
                gf = composites[(g, f)]
                if gf not in members[(a, c)]:
                    continue  # already reported as a closure failure
                for h in homs[(c, d)]:
                    hg = composites[(h, g)]
                    if hg not in members[(b, d)]:
                        continue
                    rep.tick()
                    if cat.compose(h, gf) != cat.compose(hg, f):
                        rep.fail("associativity", f=f, g=g, h=h)
    return rep


def check_functor(F: FunctorData, source: Category, target: Category,
                  probe_bound: int | None = None, arrows: Callable | None = None) -> Report:
    """Identity and composition preservation over the source roster.

    ``arrows(a, b)`` may restrict the source arrows examined (e.g. to
    generators); it defaults to the full hom-set.
    """
    objs = source.roster(probe_bound)
    arrows = arrows or source.hom
    rep = Report("functor-axioms", {"probe_bound": probe_bound, "objects": len(objs)})
    for a in objs:
        Fa = F.ob(a)
        if not target.contains(Fa):
            raise StructuralError(f"object map sends {a!r} to {Fa!r}, outside the target category")
        rep.tick()
        if F.ar(source.identity(a)) != target.identity(Fa):
            rep.fail("identity", object=a, image=F.ar(source.identity(a)))
    for a, b in itertools.product(objs, repeat=2):
        for f in arrows(a, b):
            Ff = F.ar(f)
            rep.tick()
            if Ff.dom != F.ob(a) or Ff.cod != F.ob(b):
                rep.fail("endpoints", arrow=f, image=Ff)
    for a, b, c in itertools.product(objs, repeat=3):
        for f in arrows(a, b):
            for g in arrows(b, c):
                rep.tick()
                lhs = F.ar(source.compose(g, f))
                try:
                    rhs = target.compose(F.ar(g), F.ar(f))
                except StructuralError:
                    continue  # already reported as an endpoint violation
                if lhs != rhs:
                    rep.fail("composition", f=f, g=g, image_of_composite=lhs, composite_of_images=rhs)
    return rep
