"""Coalgebras over a truncated operad: operad morphisms ``P -> CoEnd(X)``.

The enumerator works arity by arity. Within an arity every element of ``P(n)``
gets a candidate list, pruned by the constraints whose other ingredients are
already fixed (restrictions to lower arity, the forced unit, composites of
lower-arity operations). A depth-first search then assigns the remaining
elements while propagating every composition and symmetric-group constraint
as soon as its inputs are known.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coendo import CoEndOperad, coend_operad
from .errors import BudgetError, StructuralError
from .fincat import Arrow
from .finset import FinFn, FinSet, equalizer, lex_index
from .operad import OperadMorphism, TruncatedOperad, check_operad_morphism, partial_keys
from .finset import permutations
from .report import Report

DEFAULT_BUDGET = 2_000_000


@dataclass
class CoalgebraStructure:
    """``Phi_n: P(n) -> hom(X, X^n)`` stored as indices into ``CoEnd(X)(n)``."""

    P: TruncatedOperad
    coend: CoEndOperad
    maps: dict = field(default_factory=dict)

    @property
    def X(self):
        return self.coend.X

    @property
    def inst(self):
        return self.coend.inst

    def arrow(self, n: int, p: int) -> Arrow:
        return self.coend.arrow(n, self.maps[n][p])

    def morphism(self) -> OperadMorphism:
        return OperadMorphism(self.P, self.coend, self.maps)

    def key(self):
        return tuple(self.maps[n] for n in sorted(self.maps))

    def __eq__(self, other):
        return (isinstance(other, CoalgebraStructure) and self.X == other.X and self.P is other.P
                and self.key() == other.key())

    def __hash__(self):
        return hash((self.X, self.key()))

    def to_json(self):
        return {"carrier": self.X, "maps": {str(n): [self.arrow(n, p) for p in range(len(t))]
                                            for n, t in sorted(self.maps.items())}}


def check_coalgebra(A: CoalgebraStructure) -> Report:
    rep = check_operad_morphism(A.morphism())
    rep.name = "coalgebra"
    rep.params["carrier"] = A.X
    return rep


class _Search:
    def __init__(self, P: TruncatedOperad, C: CoEndOperad, budget: int):
        self.P, self.C = P, C
        self.budget = budget
        self.attempted = 0

    def tick(self):
        self.attempted += 1
        if self.attempted > self.budget:
            raise BudgetError(f"coalgebra search exceeded its budget of {self.budget} candidate trials",
                              attempted=self.attempted)

    def constraints(self, n: int):
        """Every law whose largest arity is ``n``: ``(inputs, op, result)``."""
        P = self.P
        out = []
        for m, k, i in partial_keys(P.N):
            if max(m, k, m + k - 1) != n:
                continue
            for a, b in itertools.product(range(P.sizes[m]), range(P.sizes[k])):
                out.append((((m, a), (k, b)), ("circ", m, k, i), (m + k - 1, P.circ(m, k, i, a, b))))
        for s in permutations(n):
            for a in range(P.sizes[n]):
                out.append((((n, a),), ("act", n, s), (n, P.act(n, a, s))))
        return out

    def apply(self, op, values):
        C = self.C
        if op[0] == "circ":
            _, m, k, i = op
            return C.circ(m, k, i, values[0], values[1])
        return C.act(op[1], values[0], op[2])

    def arity(self, n: int, fixed: dict):
        """All extensions of ``fixed`` (arities below ``n``) to arity ``n``."""
        P, C = self.P, self.C
        cons = self.constraints(n)
        cands = {a: set(range(C.sizes[n])) for a in range(P.sizes[n])}
        if n == 1:
            cands[P.unit] = {C.unit}
        touching = {a: [] for a in range(P.sizes[n])}
        forced = []
        for c in cons:
            inputs, op, (rn, r) = c
            unknown = [x for x in inputs if x[0] == n]
            if rn == n and not unknown:
                forced.append(c)
                continue
            if rn < n:
                # only plugging a nullary operation lowers the arity: one unknown input
                (x0,) = unknown
                pos = inputs.index(x0)
                keep = set()
                for h in cands[x0[1]]:
                    vals = [h if j == pos else fixed[x[0]][x[1]] for j, x in enumerate(inputs)]
                    if self.apply(op, vals) == fixed[rn][r]:
                        keep.add(h)
                cands[x0[1]] = keep
                continue
            for x in set(unknown):
                touching[x[1]].append(c)
            if rn == n:
                touching[r].append(c)

        def value(assign, x):
            return assign[x[1]] if x[0] == n else fixed[x[0]][x[1]]

        def known(assign, x):
            return x[0] < n or x[1] in assign

        def settle(assign, queue):
            while queue:
                x = queue.pop()
                for inputs, op, res in touching[x]:
                    if not all(known(assign, y) for y in inputs):
                        continue
                    v = self.apply(op, [value(assign, y) for y in inputs])
                    if known(assign, res):
                        if value(assign, res) != v:
                            return False
                    else:
                        if v not in cands[res[1]]:
                            return False
                        assign[res[1]] = v
                        queue.append(res[1])
            return True

        assign: dict = {}
        queue = []
        for inputs, op, (rn, r) in forced:
            v = self.apply(op, [fixed[x[0]][x[1]] for x in inputs])
            if r in assign and assign[r] != v or v not in cands[r]:
                return []
            if r not in assign:
                assign[r] = v
                queue.append(r)
        if not settle(assign, queue):
            return []

        results = []

        def dfs(assign):
            free = next((a for a in range(P.sizes[n]) if a not in assign), None)
            if free is None:
                results.append(tuple(assign[a] for a in range(P.sizes[n])))
                return
            for h in sorted(cands[free]):
                self.tick()
                trial = dict(assign)
                trial[free] = h
                if settle(trial, [free]):
                    dfs(trial)

        dfs(assign)
        return results


def enumerate_coalgebras(P: TruncatedOperad, inst, X, budget: int = DEFAULT_BUDGET,
                         search_arity0: bool = False, coend: CoEndOperad | None = None) -> list[CoalgebraStructure]:
    """Every operad morphism ``P -> CoEnd(X)``, sorted by their tables.

    In a semicartesian instance the arity-0 component is the unique map to the
    unit; ``search_arity0=True`` searches it anyway (the result must not change).
    """
    C = coend if coend is not None else coend_operad(inst, X, P.N)
    if C.N != P.N:
        raise StructuralError(f"CoEnd truncated at {C.N}, operad at {P.N}")
    s = _Search(P, C, budget)
    partial = [{}]
    for n in range(P.N + 1):
        grown = []
        for fixed in partial:
            if n == 0 and inst.semicartesian and not search_arity0:
                if C.sizes[0] != 1:
                    raise StructuralError("semicartesian instance without a unique map to the unit")
                options = [(0,) * P.sizes[0]]
            else:
                options = s.arity(n, fixed)
            for t in options:
                grown.append({**fixed, n: t})
        partial = grown
        if not partial:
            break
    found = [CoalgebraStructure(P, C, m) for m in partial]
    found.sort(key=CoalgebraStructure.key)
    return found


def coalgebra_witness(f: Arrow, A: CoalgebraStructure, B: CoalgebraStructure):
    """First ``(arity, element)`` where ``f^n . Phi_A(p) != Phi_B(p) . f``, or ``None``."""
    inst = A.inst
    for n in range(A.P.N + 1):
        fn = inst.tensor_arrows([f] * n)
        for p in range(A.P.sizes[n]):
            if inst.compose(fn, A.arrow(n, p)) != inst.compose(B.arrow(n, p), f):
                return {"arity": n, "element": p}
    return None


def is_coalgebra_morphism(f: Arrow, A: CoalgebraStructure, B: CoalgebraStructure) -> bool:
    if f.dom != A.X or f.cod != B.X:
        raise StructuralError(f"{f!r} is not a map {A.X!r} -> {B.X!r}")
    return coalgebra_witness(f, A, B) is None


@dataclass
class HomSet:
    """A subset of ``hom(X, Y)`` with its inclusion into the full hom-set."""

    subset: FinSet
    inclusion: FinFn
    arrows: tuple

    def __contains__(self, f):
        return f in self.arrows

    def __len__(self):
        return len(self.arrows)


def coalgebra_hom_set(A: CoalgebraStructure, B: CoalgebraStructure) -> HomSet:
    """Equaliser of ``f -> (f^n . Phi_A(p))`` and ``f -> (Phi_B(p) . f)`` over all ``(n, p)``."""
    inst, P = A.inst, A.P
    X, Y = A.X, B.X
    hom = inst.hom(X, Y)
    slots = [(n, p) for n in range(P.N + 1) for p in range(P.sizes[n])]
    targets = [inst.tensor([Y] * n) for n, _ in slots]
    indices = [inst.hom_index(X, t) for t in targets]
    sizes = [len(ix) for ix in indices]
    cod = FinSet(_prod(sizes))

    def encode(arrows):
        return lex_index([ix[a] for ix, a in zip(indices, arrows)], sizes)

    left, right = [], []
    for f in hom:
        powers = {}
        for n, _ in slots:
            if n not in powers:
                powers[n] = inst.tensor_arrows([f] * n)
        left.append(encode([inst.compose(powers[n], A.arrow(n, p)) for n, p in slots]))
        right.append(encode([inst.compose(B.arrow(n, p), f) for n, p in slots]))
    dom = FinSet(len(hom))
    E, inc = equalizer(FinFn(dom, cod, tuple(left)), FinFn(dom, cod, tuple(right)))
    return HomSet(E, inc, tuple(hom[k] for k in inc.table))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def check_coalgebra_category(P: TruncatedOperad, inst, roster, budget: int = DEFAULT_BUDGET,
                             structures: dict | None = None) -> Report:
    """Identities lie in every endo-hom-set and hom-sets are closed under composition."""
    roster = list(roster)
    rep = Report("coalgebra-category", {"operad": P.name, "max_arity": P.N, "roster": roster,
                                        "budget": budget})
    if structures is None:
        structures = {X: enumerate_coalgebras(P, inst, X, budget) for X in roster}
    coalgs = [(X, k, A) for X in roster for k, A in enumerate(structures[X])]
    rep.details["structures"] = {str(X): len(structures[X]) for X in roster}
    homs = {}
    for (X, k, A), (Y, l, B) in itertools.product(coalgs, repeat=2):
        homs[(X, k), (Y, l)] = coalgebra_hom_set(A, B)
    for X, k, A in coalgs:
        rep.tick()
        if inst.identity(X) not in homs[(X, k), (X, k)]:
            rep.fail("identity", carrier=X, structure=k)
    for (X, k, _), (Y, l, _), (Z, m, _) in itertools.product(coalgs, repeat=3):
        hAC = homs[(X, k), (Z, m)]
        for f in homs[(X, k), (Y, l)].arrows:
            for g in homs[(Y, l), (Z, m)].arrows:
                rep.tick()
                gf = inst.compose(g, f)
                if gf not in hAC:
                    rep.fail("closure", path=[[X, k], [Y, l], [Z, m]], f=f, g=g, composite=gf)
    rep.details["morphisms"] = sum(len(h) for h in homs.values())
    return rep
