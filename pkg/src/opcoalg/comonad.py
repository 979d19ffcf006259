"""The coaction comonad of ``M = P(1)``, the subcomonad ``C_P``, and their coalgebras.

For the concrete instances an element of ``M -| X`` is a tuple ``f`` of
elements of ``X`` indexed by ``M``. Counit and comultiplication are

    eps(f) = f[unit]            delta(f)[p][q] = f[p * q]

with ``p * q`` the arity-(1, 1) composition of the operad. These formulas do
not care what the entries of ``f`` are, so iterated cotensors are handled as
nested tuples and the comonad laws are checked element by element.

``C_P(X)`` is the subset of ``M -| X`` of those ``f`` for which, for every
``p`` in ``P(n)`` with ``2 <= n <= N``, the tuple ``(f(delta_1 p), ...,
f(delta_n p))`` of elements lies in the image of ``kappa_n`` at the
representing object (only ``n = 2`` in strength-2 mode). For a thin instance
the cotensor is the only candidate subobject and the condition is checked at
every probe.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coalgebra import CoalgebraStructure, coalgebra_hom_set, enumerate_coalgebras, DEFAULT_BUDGET
from .coendo import coend_operad
from .errors import BudgetError, LiftFailure, UnsupportedStructure
from .fincat import Arrow
from .finset import FinFn, FinSet, is_bijective, is_injective, lex_index, permutations
from .monoidal import (collapse, kappa_image, kappa_objs, pairwise_strength_check, projection_report,
                       strength_witness, symmetry, tensor_power)
from .operad import TruncatedOperad, com
from .report import Report


# -- cotensors ---------------------------------------------------------------

@dataclass(frozen=True)
class CotensorObject:
    """``V -| X`` realised in an instance, with its evaluation maps."""

    inst: object
    V: int
    X: object

    @property
    def obj(self):
        return self.inst.cotensor(self.V, self.X)

    def ev(self, k: int) -> Arrow:
        return self.inst.evaluate(self.V, self.X, k)

    def pair(self, c, fs) -> Arrow:
        return self.inst.pair(self.V, c, self.X, fs)


def check_cotensor(inst, V: int, X, probe_bound: int | None = None) -> Report:
    """``hom(c, V -| X) -> hom(c, X)^V`` is a bijection and ``pair`` inverts it, on probes."""
    T = CotensorObject(inst, V, X)
    rep = Report("cotensor", {"V": V, "X": X, "probe_bound": probe_bound})
    evs = [T.ev(k) for k in range(V)]
    for c in inst.roster(probe_bound):
        hom = inst.hom(c, T.obj)
        images = set()
        for g in hom:
            rep.tick()
            parts = tuple(inst.compose(e, g) for e in evs)
            images.add(parts)
            if T.pair(c, parts) != g:
                rep.fail("pairing", probe=c, arrow=g)
        expected = inst.hom_size(c, X) ** V
        if len(images) != len(hom) or len(hom) != expected:
            rep.fail("not-bijective", probe=c, hom_cotensor=len(hom), functions=expected)
    return rep


# -- concrete comonads ---------------------------------------------------------

def _nested_delta(f, mult, order):
    return tuple(tuple(f[mult[p][q]] for q in range(order)) for p in range(order))


class ConcreteComonad:
    """Shared element-level machinery for ``M -| -`` and its subcomonads."""

    kind = "concrete"

    def __init__(self, inst, mult, unit: int, name: str):
        if getattr(inst, "kind", None) != "concrete":
            raise UnsupportedStructure("element-level comonads need a concrete instance")
        self.inst = inst
        self.mult = tuple(tuple(r) for r in mult)
        self.unit = unit
        self.order = len(self.mult)
        self.name = name
        self._carriers: dict = {}

    # structure on elements
    def member(self, X, f) -> bool:
        return True

    def carrier(self, X) -> tuple:
        """Carrier elements, each a tuple indexed by ``M``, in lexicographic order."""
        if X not in self._carriers:
            elems = tuple(f for f in itertools.product(range(X), repeat=self.order) if self.member(X, f))
            self._carriers[X] = (elems, {f: k for k, f in enumerate(elems)})
        return self._carriers[X][0]

    def index(self, X, f) -> int | None:
        self.carrier(X)
        return self._carriers[X][1].get(tuple(f))

    def eps(self, f):
        return f[self.unit]

    def delta(self, f):
        return _nested_delta(f, self.mult, self.order)

    @staticmethod
    def fmap_elem(h, f):
        """``(M -| h)(f)`` for a table or callable ``h``."""
        get = h.__getitem__ if isinstance(h, (tuple, list)) else h
        return tuple(get(x) for x in f)

    # structure as arrows of the instance
    def obj(self, X) -> int:
        return len(self.carrier(X))

    def inclusion(self, X) -> Arrow:
        """``Phi_X: C(X) -> M -| X``."""
        sizes = [X] * self.order
        return Arrow(self.obj(X), self.inst.cotensor(self.order, X),
                     tuple(lex_index(f, sizes) for f in self.carrier(X)))

    def eps_arrow(self, X) -> Arrow:
        return Arrow(self.obj(X), X, tuple(self.eps(f) for f in self.carrier(X)))

    def lift(self, X, f, what="delta"):
        k = self.index(X, f)
        if k is None:
            raise LiftFailure(f"{what} leaves the carrier over {X!r}", witness={"carrier": X, "element": f})
        return k

    def delta_arrow(self, X) -> Arrow:
        """``C(X) -> C(C(X))``, factored through both inclusions."""
        CX = self.obj(X)
        table = []
        for f in self.carrier(X):
            inner = tuple(self.lift(X, row) for row in self.delta(f))
            table.append(self.lift(CX, inner))
        return Arrow(CX, self.obj(CX), tuple(table))

    def fmap(self, h: Arrow) -> Arrow:
        """``C(h): C(X) -> C(Y)``."""
        X, Y = h.dom, h.cod
        return Arrow(self.obj(X), self.obj(Y),
                     tuple(self.lift(Y, self.fmap_elem(h.data, f), "C(h)") for f in self.carrier(X)))

    def describe(self) -> dict:
        return {"name": self.name, "monoid_order": self.order}


class CoactionComonad(ConcreteComonad):
    """``X -> M -| X`` for a finite monoid ``M``."""

    def __init__(self, inst, M, mult=None):
        table = M.table if mult is None else mult
        super().__init__(inst, table, M.unit, f"coaction({M.name})")
        self.M = M


class CPComonad(ConcreteComonad):
    """``C_P`` on a concrete instance, as a subcomonad of the coaction comonad of ``P(1)``."""

    def __init__(self, inst, P: TruncatedOperad, strength="all", probe_bound: int | None = 3):
        if not P.unital:
            raise UnsupportedStructure(f"{P.name} is not unital", witness={"sizes": P.sizes})
        _require_monic(inst, probe_bound)
        M = P.monoid()
        super().__init__(inst, M.table, M.unit, f"C_{P.name}")
        self.P = P
        self.strength = strength
        if strength == "all":
            self.arities = list(range(2, P.N + 1))
        elif strength in (2, "2"):
            self.strength = 2
            self.arities = [2] if P.N >= 2 else []
        else:
            raise ValueError(f"strength must be 2 or 'all', got {strength!r}")
        self.deltas = {n: [tuple(P.delta(n, i).table[p] for i in range(1, n + 1)) for p in range(P.sizes[n])]
                       for n in range(2, P.N + 1)}
        self.rep = inst.representing
        self._elem_index: dict = {}
        self._strength_checked: set = set()

    def _hidx(self, X):
        if X not in self._elem_index:
            idx = self.inst.hom_index(self.rep, X)
            self._elem_index[X] = [idx[self.inst.element(X, e)] for e in range(X)]
        return self._elem_index[X]

    def _check_strength(self, X):
        if self.strength != 2 or X in self._strength_checked:
            return
        for n in range(3, self.P.N + 1):
            w = strength_witness(self.inst, self.rep, X, n)
            if w is not None:
                raise UnsupportedStructure("instance is not 2-strong here; use strength 'all'",
                                           witness={"carrier": X, "arity": n, "tuple": w})
        self._strength_checked.add(X)

    def member(self, X, f) -> bool:
        self._check_strength(X)
        hidx = self._hidx(X)
        for n in self.arities:
            if not self.P.sizes[n]:
                continue
            image = kappa_image(self.inst, self.rep, X, n)
            for ds in self.deltas[n]:
                if tuple(hidx[f[d]] for d in ds) not in image:
                    return False
        return True

    def describe(self) -> dict:
        return {**super().describe(), "operad": self.P.name, "max_arity": self.P.N, "strength": self.strength}


def _require_monic(inst, probe_bound):
    cls = getattr(inst, "classification", None) or {}
    if "monic" in cls:
        if not cls["monic"]:
            raise UnsupportedStructure("instance is not monically projecting", witness=cls.get("witness"))
        return
    rep = projection_report(inst, probe_bound)
    if not rep.details["monic"]:
        raise UnsupportedStructure("instance is not monically projecting",
                                   witness=rep.details["witnesses"].get("monic"))


class ThinCPComonad:
    """``C_P`` on a thin instance: the cotensor itself, once every probe satisfies the lift condition."""

    kind = "thin"

    def __init__(self, inst, P: TruncatedOperad, strength="all", probe_bound=None):
        if not P.unital:
            raise UnsupportedStructure(f"{P.name} is not unital", witness={"sizes": P.sizes})
        self.inst, self.P = inst, P
        self.order = P.sizes[1]
        self.unit = P.unit
        self.strength = 2 if strength in (2, "2") else "all"
        self.arities = [2] if self.strength == 2 and P.N >= 2 else list(range(2, P.N + 1))
        self.name = f"C_{P.name}"
        self.probe_bound = probe_bound

    def obj(self, X):
        inst, M = self.inst, self.order
        MX = inst.cotensor(M, X)
        for c in inst.roster(self.probe_bound):
            for g in inst.hom(c, MX):
                for n in self.arities:
                    image = kappa_image(inst, c, X, n)
                    idx = inst.hom_index(c, X)
                    for p in range(self.P.sizes[n]):
                        parts = [inst.compose(inst.evaluate(M, X, self.P.delta(n, i).table[p]), g)
                                 for i in range(1, n + 1)]
                        if tuple(idx[h] for h in parts) not in image:
                            raise UnsupportedStructure("carrier is a proper subobject of the cotensor",
                                                       witness={"carrier": X, "probe": c, "arity": n})
        return MX

    def inclusion(self, X):
        return self.inst.identity(self.obj(X))

    def eps_arrow(self, X):
        CX = self.obj(X)
        return self.inst.compose(self.inst.evaluate(self.order, X, self.unit), self.inclusion(X))

    def delta_arrow(self, X):
        inst = self.inst
        CX = self.obj(X)
        out = inst.factor(inst.identity(CX), self.inclusion(CX))
        if out is None:
            raise LiftFailure("comultiplication does not factor", witness={"carrier": X})
        return Arrow(CX, self.obj(CX), out.data)

    def fmap(self, h):
        return Arrow(self.obj(h.dom), self.obj(h.cod), "le")

    def describe(self):
        return {"name": self.name, "operad": self.P.name, "strength": self.strength}


def compute_CP(inst, P: TruncatedOperad, strength="all", probe_bound: int | None = 3):
    """The comonad ``C_P`` on ``inst``; carriers are computed per object on demand."""
    if getattr(inst, "kind", None) == "thin":
        return ThinCPComonad(inst, P, strength)
    return CPComonad(inst, P, strength, probe_bound)


# -- laws ----------------------------------------------------------------------

def comonad_laws(W, roster, morphism_bound: int | None = None) -> Report:
    """Coassociativity, both counit laws, landing of ``delta``, naturality and functoriality."""
    roster = list(roster)
    rep = Report("comonad-laws", {"comonad": W.name, "roster": roster})
    inst = W.inst
    if W.kind == "thin":
        for X in roster:
            rep.tick(3)
            CX = W.obj(X)
            e, d = W.eps_arrow(X), W.delta_arrow(X)
            if inst.compose(W.eps_arrow(CX), d) != inst.identity(CX):
                rep.fail("counit-left", carrier=X)
            if inst.compose(W.fmap(e), d) != inst.identity(CX):
                rep.fail("counit-right", carrier=X)
            if inst.compose(W.fmap(d), d) != inst.compose(W.delta_arrow(CX), d):
                rep.fail("coassociativity", carrier=X)
        return rep
    for X in roster:
        C = W.carrier(X)
        rep.details.setdefault("carrier_sizes", {})[str(X)] = len(C)
        for f in C:
            rep.tick(4)
            d = W.delta(f)
            if W.eps(d) != f:
                rep.fail("counit-left", carrier=X, element=f)
            if tuple(W.eps(row) for row in d) != f:
                rep.fail("counit-right", carrier=X, element=f)
            if tuple(W.delta(row) for row in d) != W.delta(d):
                rep.fail("coassociativity", carrier=X, element=f)
            rows = [W.index(X, row) for row in d]
            if None in rows or W.index(len(C), rows) is None:
                rep.fail("delta-leaves-carrier", carrier=X, element=f)
    objs = roster if morphism_bound is None else [X for X in roster if X <= morphism_bound]
    for X, Y in itertools.product(objs, repeat=2):
        for h in inst.hom(X, Y):
            for f in W.carrier(X):
                rep.tick(3)
                g = W.fmap_elem(h.data, f)
                if W.index(Y, g) is None:
                    rep.fail("fmap-leaves-carrier", morphism=h, element=f)
                    continue
                if W.eps(g) != h.data[W.eps(f)]:
                    rep.fail("counit-naturality", morphism=h, element=f)
                if W.delta(g) != tuple(W.fmap_elem(h.data, row) for row in W.delta(f)):
                    rep.fail("delta-naturality", morphism=h, element=f)
        rep.tick()
        if W.fmap(inst.identity(X)) != inst.identity(W.obj(X)):
            rep.fail("fmap-identity", carrier=X)
    for X, Y, Z in itertools.product(objs, repeat=3):
        for h in inst.hom(X, Y):
            Ch = W.fmap(h)
            for g in inst.hom(Y, Z):
                rep.tick()
                if W.fmap(inst.compose(g, h)) != inst.compose(W.fmap(g), Ch):
                    rep.fail("fmap-composition", f=h, g=g)
    return rep


def coaction_agreement(W, roster) -> Report:
    """``C_P`` coincides with the coaction comonad of ``P(1)``: same carrier, same maps."""
    inst = W.inst
    M = W.P.monoid()
    A = CoactionComonad(inst, M)
    rep = Report("coaction-agreement", {"comonad": W.name, "roster": list(roster)})
    for X in roster:
        rep.tick()
        if W.carrier(X) != A.carrier(X):
            rep.fail("carrier", carrier=X, sub=len(W.carrier(X)), full=len(A.carrier(X)))
            continue
        for f in W.carrier(X):
            rep.tick(2)
            if W.eps(f) != A.eps(f) or W.delta(f) != A.delta(f):
                rep.fail("structure-map", carrier=X, element=f)
    return rep


def inclusion_report(W, roster, probe_bound=None) -> Report:
    """``Phi_X . -`` is injective on ``hom(c, C_P X)`` for every probe ``c``; bijective when iso-projecting."""
    inst = W.inst
    rep = Report("inclusion-mono", {"comonad": W.name, "roster": list(roster), "probe_bound": probe_bound})
    bijective = {}
    for X in roster:
        phi = W.inclusion(X)
        CX, MX = phi.dom, phi.cod
        bij = True
        for c in inst.roster(probe_bound):
            src = inst.hom(c, CX)
            idx = inst.hom_index(c, MX)
            post = FinFn(FinSet(len(src)), FinSet(len(idx)), tuple(idx[inst.compose(phi, g)] for g in src))
            rep.tick()
            if not is_injective(post):
                rep.fail("not-injective", carrier=X, probe=c)
            bij = bij and is_bijective(post)
        bijective[str(X)] = bij
    rep.details["bijective"] = bijective
    return rep


# -- the end, by brute force --------------------------------------------------------

def brute_force_end(inst, P: TruncatedOperad, c, X, budget: int = 1_000_000) -> list[dict]:
    """Families ``f_n: P(n) -> hom(c, X^n)`` natural for every permutation and every deletion.

    Each family is ``{n: tuple of indices into hom(c, X^n)}``. Arity by arity:
    deletions cut every element's candidates down, permutations are
    propagated across orbits.
    """
    homs = [inst.hom(c, tensor_power(inst, X, n)) for n in range(P.N + 1)]
    index = [inst.hom_index(c, tensor_power(inst, X, n)) for n in range(P.N + 1)]
    attempted = 0
    families = [{}]
    for n in range(P.N + 1):
        perms = permutations(n)
        sym = {s: symmetry(inst, X, n, s) for s in perms}
        cols = [collapse(inst, X, n, i) for i in range(1, n + 1)]
        dels = [P.restriction(n, i).table for i in range(1, n + 1)] if n else []
        grown = []
        for fam in families:
            cands = []
            for p in range(P.sizes[n]):
                ok = []
                for k, g in enumerate(homs[n]):
                    attempted += 1
                    if attempted > budget:
                        raise BudgetError(f"end computation exceeded its budget of {budget}", attempted=attempted)
                    if all(index[n - 1][inst.compose(cols[i], g)] == fam[n - 1][dels[i][p]] for i in range(n)):
                        ok.append(k)
                cands.append(ok)
            # orbit representatives and their consistent choices
            seen, orbits = set(), []
            for p in range(P.sizes[n]):
                if p in seen:
                    continue
                choices = []
                for k in cands[p]:
                    g = homs[n][k]
                    assign, good = {}, True
                    for s in perms:
                        q = P.act(n, p, s)
                        v = index[n][inst.compose(sym[s], g)]
                        if assign.get(q, v) != v or v not in cands[q]:
                            good = False
                            break
                        assign[q] = v
                    if good:
                        choices.append(assign)
                orbit = {P.act(n, p, s) for s in perms}
                seen |= orbit
                orbits.append(choices)
            for combo in itertools.product(*orbits):
                table = {}
                for part in combo:
                    table.update(part)
                grown.append({**fam, n: tuple(table[p] for p in range(P.sizes[n]))})
        families = grown
    return families


def end_agreement(W: CPComonad, X, budget: int = 1_000_000) -> Report:
    """``compute_CP`` against :func:`brute_force_end` at the representing probe."""
    inst, P = W.inst, W.P
    c = inst.representing
    rep = Report("end-agreement", {"comonad": W.name, "carrier": X, "probe": c, "budget": budget})
    fams = brute_force_end(inst, P, c, X, budget)
    hom1 = inst.hom(c, X)
    carrier = W.carrier(X)
    rep.details.update({"families": len(fams), "carrier_size": len(carrier)})
    rep.tick()
    if len(fams) != len(carrier):
        rep.fail("count", families=len(fams), carrier=len(carrier))
    images = set()
    for fam in fams:
        f = tuple(inst.element_of(hom1[fam[1][p]]) for p in range(P.sizes[1]))
        images.add(f)
        rep.tick(3)
        if W.index(X, f) is None:
            rep.fail("family-outside-carrier", element=f)
            continue
        if W.eps(f) != inst.element_of(hom1[fam[1][P.unit]]):
            rep.fail("counit", element=f)
        d = W.delta(f)
        if any(d[p][q] != inst.element_of(hom1[fam[1][P.circ(1, 1, 1, p, q)]])
               for p in range(W.order) for q in range(W.order)):
            rep.fail("comultiplication", element=f)
        # higher components are the kappa-lifts of the arity-1 data
        idx1 = inst.hom_index(c, X)
        for n in range(2, P.N + 1):
            image = kappa_image(inst, c, X, n)
            for p in range(P.sizes[n]):
                rep.tick()
                parts = tuple(idx1[inst.element(X, f[P.delta(n, i).table[p]])] for i in range(1, n + 1))
                if image.get(parts) != fam[n][p]:
                    rep.fail("not-a-lift", element=f, arity=n, operation=p)
    rep.tick()
    if len(images) != len(fams):
        rep.fail("not-injective", families=len(fams), distinct=len(images))
    return rep


# -- co-Eilenberg-Moore coalgebras ---------------------------------------------------

@dataclass(frozen=True)
class EMStructure:
    X: object
    gamma: Arrow

    def to_json(self):
        return {"carrier": self.X, "gamma": self.gamma}


def em_witness(W, gamma: Arrow):
    """First law a candidate structure map breaks, or ``None``."""
    X = gamma.dom
    C = W.carrier(X)
    for x in range(X):
        f = C[gamma.data[x]]
        if W.eps(f) != x:
            return {"law": "counit", "element": x}
        lhs = tuple(gamma.data[y] for y in f)
        rhs = tuple(W.index(X, row) for row in W.delta(f))
        if lhs != rhs:
            return {"law": "coassociativity", "element": x}
    return None


def em_structures(W, X) -> list[EMStructure]:
    """Every ``gamma: X -> C(X)`` satisfying the counit and coassociativity laws."""
    if W.kind == "thin":
        inst = W.inst
        CX = W.obj(X)
        return [EMStructure(X, g) for g in inst.hom(X, CX)]
    CX = W.obj(X)
    return [EMStructure(X, g) for g in W.inst.hom(X, CX) if em_witness(W, g) is None]


def em_hom_set(W, A: EMStructure, B: EMStructure) -> tuple:
    """Maps ``h: X -> Y`` with ``C(h) . gamma_A == gamma_B . h``."""
    inst = W.inst
    out = []
    for h in inst.hom(A.X, B.X):
        if inst.compose(W.fmap(h), A.gamma) == inst.compose(B.gamma, h):
            out.append(h)
    return tuple(out)


# -- the equivalence ---------------------------------------------------------------

def operadic_to_em(W: CPComonad, A: CoalgebraStructure) -> EMStructure:
    """``gamma(x)(p) = Phi_1(p)(x)``; a carrier miss is a counterexample."""
    X = A.X
    P = A.P
    rows = [A.arrow(1, p).data for p in range(P.sizes[1])]
    table = []
    for x in range(X):
        f = tuple(r[x] for r in rows)
        k = W.index(X, f)
        if k is None:
            raise LiftFailure("transpose of the arity-1 structure leaves C_P(X)",
                              witness={"carrier": X, "element": x, "function": f})
        table.append(k)
    return EMStructure(X, Arrow(X, W.obj(X), tuple(table)))


def em_to_operadic(W: CPComonad, E: EMStructure) -> CoalgebraStructure:
    """Transpose ``gamma`` to ``Phi_1``; higher ``Phi_n`` are the unique kappa-lifts."""
    inst, P, X = W.inst, W.P, E.X
    C = coend_operad(inst, X, P.N)
    c = inst.representing
    funcs = [W.carrier(X)[E.gamma.data[x]] for x in range(X)]
    maps = {0: tuple(C.index(0, inst.terminal(X)) for _ in range(P.sizes[0]))}
    maps[1] = tuple(C.index(1, Arrow(X, X, tuple(f[p] for f in funcs))) for p in range(P.sizes[1]))
    idx1 = inst.hom_index(c, X)
    for n in range(2, P.N + 1):
        Xn = tensor_power(inst, X, n)
        image = kappa_image(inst, c, X, n)
        homn = inst.hom(c, Xn)
        comp = []
        for p in range(P.sizes[n]):
            ds = [P.delta(n, i).table[p] for i in range(1, n + 1)]
            table = []
            for f in funcs:
                key = tuple(idx1[inst.element(X, f[d])] for d in ds)
                if key not in image:
                    raise LiftFailure("no kappa-lift for an EM structure",
                                      witness={"carrier": X, "arity": n, "operation": p, "tuple": key})
                table.append(inst.element_of(homn[image[key]]))
            comp.append(C.index(n, Arrow(X, Xn, tuple(table))))
        maps[n] = tuple(comp)
    return CoalgebraStructure(P, C, maps)


def equivalence_report(inst, P: TruncatedOperad, roster, strength="all", budget: int = DEFAULT_BUDGET) -> Report:
    """Operadic coalgebras and co-Eilenberg-Moore coalgebras of ``C_P``: same objects, same hom-sets."""
    roster = list(roster)
    rep = Report("equivalence", {"operad": P.name, "max_arity": P.N, "roster": roster,
                                 "strength": strength, "budget": budget,
                                 "instance": inst.describe()})
    W = compute_CP(inst, P, strength)
    if W.kind == "thin":
        raise UnsupportedStructure("the equivalence check runs on concrete instances")
    counts, ops, ems = {}, {}, {}
    for X in roster:
        ops[X] = enumerate_coalgebras(P, inst, X, budget)
        ems[X] = em_structures(W, X)
        counts[str(X)] = {"operadic": len(ops[X]), "em": len(ems[X]), "carrier": W.obj(X)}
        rep.tick()
        if len(ops[X]) != len(ems[X]):
            rep.fail("count", carrier=X, operadic=len(ops[X]), em=len(ems[X]))
        try:
            there = [operadic_to_em(W, A) for A in ops[X]]
            back = [em_to_operadic(W, E) for E in ems[X]]
        except LiftFailure as err:
            rep.fail("lift-failure", message=str(err), witness=err.witness)
            continue
        for A, E in zip(ops[X], there):
            rep.tick(2)
            if E not in ems[X]:
                rep.fail("not-em", carrier=X, structure=A.key())
            if em_to_operadic(W, E) != A:
                rep.fail("round-trip-operadic", carrier=X, structure=A.key())
        for E, A in zip(ems[X], back):
            rep.tick(2)
            if A not in ops[X]:
                rep.fail("not-operadic", carrier=X, gamma=E.gamma)
            if operadic_to_em(W, A) != E:
                rep.fail("round-trip-em", carrier=X, gamma=E.gamma)
    rep.details["structures"] = counts
    pairs = 0
    for X, Y in itertools.product(roster, repeat=2):
        for A in ops[X]:
            EA = operadic_to_em(W, A)
            for B in ops[Y]:
                EB = operadic_to_em(W, B)
                pairs += 1
                rep.tick()
                lhs = set(coalgebra_hom_set(A, B).arrows)
                rhs = set(em_hom_set(W, EA, EB))
                if lhs != rhs:
                    rep.fail("hom-set", source=X, target=Y, operadic=len(lhs), em=len(rhs))
    rep.details["hom_pairs"] = pairs
    return rep


# -- the Cartesian case -------------------------------------------------------------

def fox_report(inst, N: int = 2, roster=None) -> Report:
    """In a Cartesian instance ``C_com`` is the identity comonad and the diagonal is the only coalgebra."""
    cls = getattr(inst, "classification", {}) or {}
    if not cls.get("isomorphic"):
        raise UnsupportedStructure("fox_report needs an isomorphically projecting instance",
                                   witness=cls)
    P = com(N)
    roster = inst.roster() if roster is None else list(roster)
    rep = Report("fox", {"operad": P.name, "max_arity": N, "roster": roster, "instance": inst.describe()})
    W = compute_CP(inst, P)
    coalgebras = {}
    for X in roster:
        CX = W.obj(X)
        eps = W.eps_arrow(X)
        delta = W.delta_arrow(X)
        rep.tick(2)
        if inst.is_iso(eps) is None:
            rep.fail("counit-not-iso", carrier=X)
        if inst.is_iso(delta) is None:
            rep.fail("delta-not-iso", carrier=X)
        found = enumerate_coalgebras(P, inst, X)
        coalgebras[str(X)] = len(found)
        rep.tick()
        if len(found) != 1:
            rep.fail("coalgebra-count", carrier=X, found=len(found))
            continue
        (A,) = found
        diag = kappa_objs(inst, X, [X, X])
        idx = inst.hom_index(X, X)
        ident = idx[inst.identity(X)]
        size = inst.hom_size(X, X)
        mu = A.arrow(2, 0)
        rep.tick()
        if diag.table[inst.hom_index(X, tensor_power(inst, X, 2))[mu]] != ident * size + ident:
            rep.fail("not-diagonal", carrier=X, comultiplication=mu)
    for X, Y in itertools.product(roster, repeat=2):
        for h in inst.hom(X, Y):
            rep.tick()
            if inst.compose(W.eps_arrow(Y), W.fmap(h)) != inst.compose(h, W.eps_arrow(X)):
                rep.fail("counit-naturality", morphism=h)
    rep.details["coalgebras"] = coalgebras
    rep.details["total_coalgebras"] = sum(coalgebras.values())
    return rep
