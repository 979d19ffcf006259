"""Coendomorphism operads ``CoEnd(X)(r) = hom(X, X^r)``.

Partial composition grafts onto output slot ``i``:
``f o_i g = (id^(i-1) (x) g (x) id^(m-i)) . f``. Permutations act by
post-composing the structural symmetry, which is a right action with the
conventions of :mod:`opcoalg.monoidal`. Arity 0 is ``hom(X, unit)``.
"""
from __future__ import annotations

from .errors import StructuralError, ValidationError
from .fincat import Arrow
from .finset import permutations
from .monoidal import symmetry, tensor_power
from .operad import OperadMorphism, TruncatedOperad, partial_keys


class CoEndOperad(TruncatedOperad):
    """``CoEnd(X)`` as a :class:`TruncatedOperad` whose tables are filled on demand.

    ``circ`` and ``act`` compute and memoise single entries; the full
    ``partial`` and ``action`` tables are materialised only when asked for.
    """

    def __init__(self, inst, X, N: int, name: str | None = None):
        self.inst = inst
        self.X = X
        powers = [tensor_power(inst, X, r) for r in range(N + 1)]  # raises BoundError if too large
        self.homs = [inst.hom(X, Xr) for Xr in powers]
        self.indices = [inst.hom_index(X, Xr) for Xr in powers]
        self.sizes = [len(h) for h in self.homs]
        self.unit = self.indices[1][inst.identity(X)]
        self.name = name or f"CoEnd({X!r})"
        self._circ: dict = {}
        self._act: dict = {}
        self._grafts: dict = {}
        self._tables = None

    def arrow(self, r: int, k: int) -> Arrow:
        return self.homs[r][k]

    def index(self, r: int, h: Arrow) -> int:
        return self.indices[r][h]

    def circ(self, m, n, i, a, b):
        key = (m, n, i, a, b)
        v = self._circ.get(key)
        if v is None:
            gk = (m, i, n, b)
            gr = self._grafts.get(gk)
            if gr is None:
                gr = self._grafts[gk] = graft(self.inst, self.X, m, i, self.homs[n][b])
            v = self._circ[key] = self.indices[m + n - 1][self.inst.compose(gr, self.homs[m][a])]
        return v

    def act(self, n, a, sigma):
        key = (n, a, tuple(sigma))
        v = self._act.get(key)
        if v is None:
            v = self._act[key] = self.indices[n][coend_act(self.inst, self.X, n, self.homs[n][a], sigma)]
        return v

    def _materialise(self):
        if self._tables is None:
            partial = {(m, n, i): tuple(self.circ(m, n, i, a, b) for a in range(self.sizes[m])
                                        for b in range(self.sizes[n]))
                       for m, n, i in partial_keys(self.N)}
            action = {n: {s: tuple(self.act(n, a, s) for a in range(self.sizes[n])) for s in permutations(n)}
                      for n in range(self.N + 1)}
            self._tables = (partial, action)
        return self._tables

    @property
    def partial(self):
        return self._materialise()[0]

    @property
    def action(self):
        return self._materialise()[1]

    def copy(self, name=None):
        return TruncatedOperad(list(self.sizes), self.unit, dict(self.partial),
                               {n: dict(t) for n, t in self.action.items()}, name or self.name)


def graft(inst, X, m: int, i: int, g: Arrow) -> Arrow:
    """``id^(i-1) (x) g (x) id^(m-i)``."""
    idX = inst.identity(X)
    return inst.tensor_arrows([idX] * (i - 1) + [g] + [idX] * (m - i))


def coend_circ(inst, X, m: int, i: int, f: Arrow, g: Arrow) -> Arrow:
    return inst.compose(graft(inst, X, m, i, g), f)


def coend_act(inst, X, n: int, h: Arrow, sigma) -> Arrow:
    return inst.compose(symmetry(inst, X, n, sigma), h)


def coend_operad(inst, X, N: int) -> CoEndOperad:
    """``CoEnd(X)`` truncated at arity ``N``.

    ``X`` must be a roster object and ``X^N`` must exist within the hard bound.
    """
    if X not in inst.roster():
        raise StructuralError(f"{X!r} is not a roster object of the instance")
    if N < 1:
        raise StructuralError("truncation must be at least 1")
    return CoEndOperad(inst, X, N)


def transport_iso(C: CoEndOperad, f: Arrow, f_inv: Arrow) -> tuple[CoEndOperad, OperadMorphism]:
    """Move ``CoEnd(X)`` along an isomorphism ``f: X -> Y``; ``h -> f^r . h . f_inv``."""
    inst, X = C.inst, C.X
    if f.dom != X:
        raise StructuralError(f"{f!r} does not start at {X!r}")
    for a, b, obj in ((f_inv, f, f.dom), (f, f_inv, f.cod)):
        comp = inst.compose(a, b)
        if comp != inst.identity(obj):
            raise ValidationError("claimed inverse is not an inverse", witness=comp)
    D = coend_operad(inst, f.cod, C.N)
    maps = {}
    for r in range(C.N + 1):
        fr = inst.tensor_arrows([f] * r)
        maps[r] = tuple(D.index(r, inst.compose_all(fr, h, f_inv)) for h in C.homs[r])
    return D, OperadMorphism(C, D, maps)
