"""Strict symmetric monoidal structure on a category, and what semicartesian-ness buys.

Conventions
-----------
Tensor products are strict: ``tensor`` takes a list of objects and returns a
normal form, with ``tensor([]) == unit`` and unit factors disappearing.

A permutation ``sigma`` of ``n`` slots acts by ``permutation(objs, sigma)``,
the structural isomorphism whose output slot ``j`` reads input slot
``sigma[j]``. With this convention ``sigma -> permutation(sigma)`` is
contravariant, which is exactly what a *right* action by post-composition on
``hom(X, X^n)`` needs.

Slots passed to :func:`collapse`, :func:`projection` and friends are 1-based.
"""
from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from typing import Sequence

from .errors import BoundError, UnsupportedStructure
from .fincat import Arrow, Category
from .finset import FinFn, FinSet, lex_coords, lex_index, perm_compose
from .report import Report


class MonoidalStructure(ABC):
    """Mixin for a :class:`~opcoalg.fincat.Category` with strict tensor data."""

    semicartesian = False

    @abstractmethod
    def unit(self):
        ...

    @abstractmethod
    def tensor(self, objs: Sequence):
        ...

    @abstractmethod
    def tensor_arrows(self, arrows: Sequence[Arrow]) -> Arrow:
        """The map ``T``: tensor of morphisms, bifunctorial in every slot."""

    @abstractmethod
    def permutation(self, objs: Sequence, sigma: Sequence[int]) -> Arrow:
        ...

    def terminal(self, x) -> Arrow:
        if not self.semicartesian:
            raise UnsupportedStructure("terminal maps need a semicartesian structure")
        (t,) = self.hom(x, self.unit())
        return t


def _memo(inst, key, build):
    cache = inst.__dict__.setdefault("_monoidal_cache", {})
    if key not in cache:
        cache[key] = build()
    return cache[key]


def tensor_power(inst, X, n: int):
    return inst.tensor([X] * n)


def symmetry(inst, X, n: int, sigma: Sequence[int]) -> Arrow:
    """The structural isomorphism ``sigma^X`` on ``X^n``."""
    return inst.permutation([X] * n, tuple(sigma))


def collapse_factor(inst, objs: Sequence, i: int) -> Arrow:
    """Kill slot ``i`` of ``objs[0] (x) ... (x) objs[-1]`` via the terminal map."""
    if not inst.semicartesian:
        raise UnsupportedStructure("collapse maps exist only in semicartesian structures")
    if not 1 <= i <= len(objs):
        raise ValueError(f"slot {i} out of range 1..{len(objs)}")
    parts = [inst.identity(o) for o in objs]
    parts[i - 1] = inst.terminal(objs[i - 1])
    return inst.tensor_arrows(parts)


def collapse(inst, X, n: int, i: int) -> Arrow:
    """``pi_i : X^n -> X^(n-1)``."""
    return _memo(inst, ("collapse", X, n, i), lambda: collapse_factor(inst, [X] * n, i))


def structural_map(inst, X, m: int, phi: Sequence[int]) -> Arrow:
    """The map ``X^m -> X^n`` for an injection ``phi: n -> m``.

    Output slot ``j`` reads input slot ``phi[j]``; unused slots are collapsed.
    Factored as a permutation followed by order-preserving deletions of the
    trailing slots.
    """
    phi = tuple(phi)

    def build():
        n = len(phi)
        rest = [k for k in range(m) if k not in phi]
        sigma = phi + tuple(rest)
        out = symmetry(inst, X, m, sigma)
        for slot in range(m, n, -1):
            out = inst.compose(collapse(inst, X, slot, slot), out)
        return out

    return _memo(inst, ("structural", X, m, phi), build)


def projection(inst, X, n: int, i: int) -> Arrow:
    """``X^n -> X`` keeping slot ``i`` only."""
    return structural_map(inst, X, n, (i - 1,))


def kappa_objs(inst, c, objs: Sequence) -> FinFn:
    """``hom(c, (x)objs) -> prod_k hom(c, objs[k])``, ``g -> (pi_k . g)_k``."""
    objs = tuple(objs)

    def build():
        target = inst.tensor(objs)
        projs = []
        for k in range(len(objs)):
            out = inst.identity(target)
            current = list(objs)
            # collapse every slot but k, highest first so indices stay valid
            for slot in range(len(objs), 0, -1):
                if slot - 1 == k:
                    continue
                out = inst.compose(collapse_factor(inst, current, slot), out)
                del current[slot - 1]
            projs.append(out)
        dom = inst.hom(c, target)
        sizes = [inst.hom_size(c, o) for o in objs]
        indices = [inst.hom_index(c, o) for o in objs]
        table = tuple(
            lex_index([indices[k][inst.compose(p, g)] for k, p in enumerate(projs)], sizes)
            for g in dom)
        cod = FinSet(1)
        for s in sizes:
            cod = FinSet(cod.size * s)
        return FinFn(FinSet(len(dom)), cod, table)

    return _memo(inst, ("kappa", c, objs), build)


def kappa(inst, c, X, n: int) -> FinFn:
    """``kappa_n(c): hom(c, X^n) -> hom(c, X)^n``."""
    return kappa_objs(inst, c, [X] * n)


def kappa_image(inst, c, X, n: int) -> dict[tuple[int, ...], int]:
    """Image of ``kappa_n(c)`` as hom-index tuples, mapped back to the preimage index."""

    def build():
        size = inst.hom_size(c, X)
        out = {}
        for g, v in enumerate(kappa(inst, c, X, n).table):
            out.setdefault(lex_coords(v, [size] * n), g)
        return out

    return _memo(inst, ("kappa-image", c, X, n), build)


def _roster_triples(inst, probe_bound):
    objs = inst.roster(probe_bound)
    return itertools.product(objs, repeat=3)


def projection_report(inst, probe_bound: int | None = None) -> Report:
    """Classify the instance as monically / isomorphically projecting on probes."""
    rep = Report("projection", {"probe_bound": probe_bound})
    semi = is_semicartesian(inst, probe_bound)
    monic, iso = semi, semi
    witnesses = {}
    skipped = 0
    if semi:
        for c, X, Y in _roster_triples(inst, probe_bound):
            try:
                k = kappa_objs(inst, c, [X, Y])
            except BoundError:
                skipped += 1
                continue
            rep.tick()
            seen = {}
            for g, v in enumerate(k.table):
                if v in seen and monic:
                    monic = False
                    hom = inst.hom(c, inst.tensor([X, Y]))
                    witnesses["monic"] = {"c": c, "X": X, "Y": Y,
                                          "colliding": [hom[seen[v]], hom[g]]}
                seen.setdefault(v, g)
            if len(seen) != k.cod.size and iso:
                iso = False
                witnesses["isomorphic"] = {"c": c, "X": X, "Y": Y,
                                           "hom_tensor": k.dom.size, "hom_product": k.cod.size}
    else:
        witnesses["semicartesian"] = "unit object is not terminal"
    rep.details.update({"semicartesian": semi, "monic": monic, "isomorphic": monic and iso,
                        "witnesses": witnesses, "skipped_out_of_bound": skipped})
    return rep


def is_semicartesian(inst, probe_bound: int | None = None) -> bool:
    if not inst.semicartesian:
        return False
    u = inst.unit()
    return all(len(inst.hom(x, u)) == 1 for x in inst.roster(probe_bound))


def strength_witness(inst, c, X, n: int):
    """A tuple whose pair projections all lift through ``kappa_2`` but which does not lift through ``kappa_n``."""
    if n <= 2:
        return None
    im2 = kappa_image(inst, c, X, 2)
    imn = kappa_image(inst, c, X, n)
    size = inst.hom_size(c, X)

    # depth-first over tuples whose every pair already lifts
    def extend(prefix):
        if len(prefix) == n:
            return None if prefix in imn else prefix
        for a in range(size):
            if all((b, a) in im2 for b in prefix):
                hit = extend(prefix + (a,))
                if hit is not None:
                    return hit
        return None

    return extend(())


def pairwise_strength_check(inst, c, X, n: int) -> bool:
    """The k = 2 strength condition at ``(c, X, n)``, read as an image statement."""
    return strength_witness(inst, c, X, n) is None


def check_monoidal(inst, probe_bound: int | None = None) -> Report:
    """Strictness, bifunctoriality of ``T``, symmetry laws and collapse naturality on probes."""
    objs = inst.roster(probe_bound)
    rep = Report("monoidal", {"probe_bound": probe_bound, "objects": len(objs)})
    u = inst.unit()
    rep.tick()
    if inst.tensor([]) != u:
        rep.fail("nullary-tensor", got=inst.tensor([]))
    for X in objs:
        rep.tick()
        if inst.tensor([X, u]) != X or inst.tensor([u, X]) != X or inst.tensor([X]) != X:
            rep.fail("unit-strictness", object=X)
    homs = {(a, b): inst.hom(a, b) for a in objs for b in objs}
    arrows = [f for fs in homs.values() for f in fs]
    for a, b in itertools.product(objs, repeat=2):
        try:
            ab = inst.tensor([a, b])
        except BoundError:
            continue
        rep.tick()
        if inst.tensor_arrows([inst.identity(a), inst.identity(b)]) != inst.identity(ab):
            rep.fail("tensor-identity", objects=[a, b])
        for c in objs:
            try:
                if inst.tensor([ab, c]) != inst.tensor([a, b, c]) or inst.tensor([a, inst.tensor([b, c])]) != inst.tensor([a, b, c]):
                    rep.fail("associativity-strictness", objects=[a, b, c])
            except BoundError:
                pass
    # bifunctoriality on composable pairs in each slot
    for f in arrows:
        for g in arrows:
            try:
                Tfg = inst.tensor_arrows([f, g])
            except BoundError:
                continue
            for f2 in (h for h in arrows if h.dom == f.cod):
                for g2 in (h for h in arrows if h.dom == g.cod):
                    try:
                        lhs = inst.tensor_arrows([inst.compose(f2, f), inst.compose(g2, g)])
                        rhs = inst.compose(inst.tensor_arrows([f2, g2]), Tfg)
                    except BoundError:
                        continue
                    rep.tick()
                    if lhs != rhs:
                        rep.fail("bifunctoriality", f=f, g=g, f2=f2, g2=g2)
            # symmetry naturality: swap . (f (x) g) == (g (x) f) . swap
            try:
                lhs = inst.compose(inst.permutation([f.cod, g.cod], (1, 0)), Tfg)
                rhs = inst.compose(inst.tensor_arrows([g, f]), inst.permutation([f.dom, g.dom], (1, 0)))
            except BoundError:
                continue
            rep.tick()
            if lhs != rhs:
                rep.fail("symmetry-naturality", f=f, g=g)
            if inst.semicartesian:
                # collapse naturality in both slots
                for i in (1, 2):
                    rep.tick()
                    keep = g if i == 1 else f
                    lhs = inst.compose(collapse_factor(inst, [f.cod, g.cod], i), Tfg)
                    rhs = inst.compose(keep, collapse_factor(inst, [f.dom, g.dom], i))
                    if lhs != rhs:
                        rep.fail("collapse-naturality", f=f, g=g, slot=i)
    # symmetry: permutation composition and involutivity on triples
    for trip in itertools.product(objs, repeat=3):
        try:
            inst.tensor(list(trip))
        except BoundError:
            continue
        for s in itertools.permutations(range(3)):
            for t in itertools.permutations(range(3)):
                rep.tick()
                mid = [trip[k] for k in s]
                lhs = inst.compose(inst.permutation(mid, t), inst.permutation(list(trip), s))
                rhs = inst.permutation(list(trip), perm_compose(s, t))
                if lhs != rhs:
                    rep.fail("permutation-composition", objects=list(trip), first=s, second=t)
    if inst.semicartesian:
        for X in objs:
            rep.tick()
            if len(inst.hom(X, u)) != 1:
                rep.fail("unit-not-terminal", object=X, maps=len(inst.hom(X, u)))
    return rep


def check_kappa_consistency(inst, c, X, n: int) -> bool:
    """``kappa_n`` agrees with pairing the projections built from :func:`structural_map`."""
    k = kappa(inst, c, X, n)
    size = inst.hom_size(c, X)
    idx = inst.hom_index(c, X)
    projs = [projection(inst, X, n, i) for i in range(1, n + 1)]
    for g, v in zip(inst.hom(c, tensor_power(inst, X, n)), k.table):
        coords = [idx[inst.compose(p, g)] for p in projs]
        if lex_index(coords, [size] * n) != v:
            return False
    return True


__all__ = [
    "Category", "MonoidalStructure", "tensor_power", "symmetry", "collapse", "collapse_factor",
    "structural_map", "projection", "kappa", "kappa_objs", "kappa_image", "projection_report",
    "is_semicartesian", "pairwise_strength_check", "strength_witness", "check_monoidal",
    "check_kappa_consistency",
]
