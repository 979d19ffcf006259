"""Symmetric operads in finite sets, truncated at a maximal arity ``N``.

An operad is stored as tables: ``P(n)`` is the set ``0..sizes[n]-1``,
``partial[(m, n, i)]`` is the partial composition ``P(m) x P(n) -> P(m+n-1)``
(``i`` is 1-based; the table is indexed by ``a * sizes[n] + b``), and
``action[n][sigma]`` is the table of ``a -> a . sigma``. Partial compositions
are present exactly when ``m >= 1``, ``1 <= i <= m`` and ``m + n - 1 <= N``.

The symmetric groups act on the right: ``a . (s t) == (a . s) . t`` where
``s t`` is composition of one-line permutations (:func:`perm_compose`).
Equivariance reads

    (f . s) o_i g      == (f o_{s(i)} g) . (s o_i 1_n)
    f o_i (g . t)      == (f o_i g) . (1_m o_i t)

with the block permutations of :func:`block_perm` and :func:`block_inner`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import StructuralError, UnsupportedStructure, ValidationError
from .fincat import Arrow, Category, FunctorData, SetCategory, check_functor
from .finset import FinFn, FinSet, perm_compose, perm_inverse, permutations
from .report import Report


def block_perm(sigma: Sequence[int], i: int, n: int) -> tuple[int, ...]:
    """``sigma o_i 1_n``: slot ``i`` of ``sigma`` blown up into ``n`` consecutive slots."""
    i0 = i - 1
    s = sigma[i0]

    def shift(src):
        return src if src < s else src + n - 1

    m = len(sigma)
    out = []
    for j in range(m + n - 1):
        if j < i0:
            out.append(shift(sigma[j]))
        elif j < i0 + n:
            out.append(s + j - i0)
        else:
            out.append(shift(sigma[j - n + 1]))
    return tuple(out)


def block_inner(m: int, i: int, tau: Sequence[int]) -> tuple[int, ...]:
    """``1_m o_i tau``: ``tau`` acting inside the block that replaced slot ``i``."""
    i0, n = i - 1, len(tau)
    return tuple(range(i0)) + tuple(i0 + t for t in tau) + tuple(range(i0 + n, m + n - 1))


def partial_keys(N: int):
    for m in range(1, N + 1):
        for n in range(0, N - m + 2):
            for i in range(1, m + 1):
                yield (m, n, i)


@dataclass(eq=False)
class TruncatedOperad:
    sizes: list[int]
    unit: int
    partial: dict
    action: dict
    name: str = "operad"

    def __post_init__(self):
        self.sizes = [int(s) for s in self.sizes]
        N = self.N
        if N < 1:
            raise StructuralError("an operad needs components up to at least arity 1")
        if any(s < 0 for s in self.sizes):
            raise StructuralError(f"negative component size in {self.sizes}")
        if not 0 <= self.unit < self.sizes[1]:
            raise StructuralError(f"unit {self.unit} is not an element of P(1) (size {self.sizes[1]})")
        expected = set(partial_keys(N))
        got = set(self.partial)
        if got != expected:
            extra = sorted(got - expected) or sorted(expected - got)
            raise StructuralError(f"partial compositions must be given exactly for m>=1, 1<=i<=m, "
                                  f"m+n-1<=N; offending key {extra[0]}")
        for (m, n, i), table in self.partial.items():
            table = tuple(table)
            self.partial[(m, n, i)] = table
            target = self.sizes[m + n - 1]
            if len(table) != self.sizes[m] * self.sizes[n]:
                raise StructuralError(f"partial[{m},{n},{i}] has {len(table)} entries, "
                                      f"expected {self.sizes[m] * self.sizes[n]}")
            for k, v in enumerate(table):
                if not (isinstance(v, int) and 0 <= v < target):
                    raise StructuralError(f"partial[{m},{n},{i}][{k}] = {v!r} outside P({m + n - 1})")
        for n in range(N + 1):
            perms = permutations(n)
            acts = self.action.get(n)
            if acts is None or set(acts) != set(perms):
                raise StructuralError(f"action[{n}] must have one table per permutation of {n}")
            for s in perms:
                table = tuple(acts[s])
                acts[s] = table
                if len(table) != self.sizes[n] or any(not (isinstance(v, int) and 0 <= v < self.sizes[n])
                                                      for v in table):
                    raise StructuralError(f"action[{n}][{list(s)}] is not a function on P({n})")

    @property
    def N(self) -> int:
        return len(self.sizes) - 1

    @property
    def unital(self) -> bool:
        return self.sizes[0] == 1 and self.sizes[1] > 0

    def component(self, n: int) -> FinSet:
        return FinSet(self.sizes[n])

    def circ(self, m: int, n: int, i: int, a: int, b: int) -> int:
        """``a o_i b`` for ``a in P(m)``, ``b in P(n)``."""
        return self.partial[(m, n, i)][a * self.sizes[n] + b]

    def act(self, n: int, a: int, sigma: Sequence[int]) -> int:
        return self.action[n][tuple(sigma)][a]

    def gamma(self, m: int, a: int, args: Sequence[tuple[int, int]]) -> int:
        """Full composition ``a(b_1, ..., b_m)`` for ``args = [(n_k, b_k)]``, derived from partials."""
        if len(args) != m:
            raise StructuralError(f"full composition in arity {m} needs {m} inputs")
        arity, out = m, a
        for k in range(m, 0, -1):
            n, b = args[k - 1]
            out = self.circ(arity, n, k, out, b)
            arity += n - 1
        return out

    def restriction(self, n: int, i: int) -> FinFn:
        """``d_i: P(n) -> P(n-1)``, plugging the nullary operation into slot ``i``."""
        if not self.unital:
            raise UnsupportedStructure(f"{self.name} is not unital (|P(0)| = {self.sizes[0]})")
        if not 1 <= i <= n <= self.N:
            raise StructuralError(f"restriction d_{i} on P({n}) is out of range")
        return FinFn(self.component(n), self.component(n - 1),
                     tuple(self.circ(n, 0, i, a, 0) for a in range(self.sizes[n])))

    def delta(self, n: int, i: int) -> FinFn:
        """``P(n) -> P(1)``: keep slot ``i``, delete the others."""
        return barP_action(self, (i - 1,), n)

    def monoid(self) -> "Monoid":
        """``P(1)`` with arity-(1,1) composition and the operadic unit."""
        size = self.sizes[1]
        table = [[self.circ(1, 1, 1, a, b) for b in range(size)] for a in range(size)]
        return Monoid(table, self.unit, name=f"{self.name}(1)")

    def __eq__(self, other):
        if not isinstance(other, TruncatedOperad):
            return NotImplemented
        return (self.sizes == other.sizes and self.unit == other.unit and self.partial == other.partial
                and self.action == other.action)

    def __hash__(self):
        return hash((tuple(self.sizes), self.unit))

    # fault injection --------------------------------------------------------
    def copy(self, name: str | None = None) -> "TruncatedOperad":
        return TruncatedOperad(list(self.sizes), self.unit, dict(self.partial),
                               {n: dict(t) for n, t in self.action.items()}, name or self.name)

    def with_partial_entry(self, key, a: int, b: int, value: int) -> "TruncatedOperad":
        Q = self.copy(self.name + "*")
        table = list(Q.partial[key])
        table[a * Q.sizes[key[1]] + b] = value
        Q.partial[key] = tuple(table)
        return Q

    def with_action_entry(self, n: int, sigma, a: int, value: int) -> "TruncatedOperad":
        Q = self.copy(self.name + "*")
        table = list(Q.action[n][tuple(sigma)])
        table[a] = value
        Q.action[n][tuple(sigma)] = tuple(table)
        return Q

    def describe(self) -> dict:
        return {"name": self.name, "max_arity": self.N, "sizes": self.sizes, "unital": self.unital}

    def to_json(self):
        return {
            "sizes": self.sizes,
            "unit": self.unit,
            "partial": {f"{m},{n},{i}": list(t) for (m, n, i), t in sorted(self.partial.items())},
            "action": {str(n): {",".join(map(str, s)): list(t) for s, t in sorted(acts.items())}
                       for n, acts in sorted(self.action.items())},
        }


def check_operad_axioms(P: TruncatedOperad) -> Report:
    """Action laws, unit laws, both associativity laws and both equivariance laws within truncation."""
    N, sz = P.N, P.sizes
    rep = Report("operad-axioms", {"operad": P.name, "max_arity": N, "sizes": sz})
    e = P.unit
    for n in range(N + 1):
        perms = permutations(n)
        ident = tuple(range(n))
        for a in range(sz[n]):
            rep.tick()
            if P.act(n, a, ident) != a:
                rep.fail("action-identity", arity=n, element=a)
        for s in perms:
            for t in perms:
                st = perm_compose(s, t)
                for a in range(sz[n]):
                    rep.tick()
                    if P.act(n, a, st) != P.act(n, P.act(n, a, s), t):
                        rep.fail("action-composition", arity=n, element=a, first=s, second=t)
    for n in range(N + 1):
        for b in range(sz[n]):
            rep.tick()
            if P.circ(1, n, 1, e, b) != b:
                rep.fail("left-unit", arity=n, element=b)
    for m in range(1, N + 1):
        for i in range(1, m + 1):
            for a in range(sz[m]):
                rep.tick()
                if P.circ(m, 1, i, a, e) != a:
                    rep.fail("right-unit", arity=m, slot=i, element=a)
    # sequential: (f o_i g) o_{i-1+j} h == f o_i (g o_j h)
    for m in range(1, N + 1):
        for n in range(1, N + 2 - m):
            for k in range(0, N + 3 - m - n):
                if max(m + n - 1, n + k - 1, m + n + k - 2) > N:
                    continue
                for i in range(1, m + 1):
                    for j in range(1, n + 1):
                        for f, g, h in itertools.product(range(sz[m]), range(sz[n]), range(sz[k])):
                            rep.tick()
                            lhs = P.circ(m + n - 1, k, i - 1 + j, P.circ(m, n, i, f, g), h)
                            rhs = P.circ(m, n + k - 1, i, f, P.circ(n, k, j, g, h))
                            if lhs != rhs:
                                rep.fail("sequential-associativity", arities=[m, n, k], slots=[i, j],
                                         elements=[f, g, h], lhs=lhs, rhs=rhs)
    # parallel: for i < k, (f o_i g) o_{k-1+n} h == (f o_k h) o_i g
    for m in range(2, N + 1):
        for n in range(0, N + 2 - m):
            for l in range(0, N + 3 - m - n):
                if max(m + n - 1, m + l - 1, m + n + l - 2) > N:
                    continue
                for i, k in itertools.combinations(range(1, m + 1), 2):
                    for f, g, h in itertools.product(range(sz[m]), range(sz[n]), range(sz[l])):
                        rep.tick()
                        lhs = P.circ(m + n - 1, l, k - 1 + n, P.circ(m, n, i, f, g), h)
                        rhs = P.circ(m + l - 1, n, i, P.circ(m, l, k, f, h), g)
                        if lhs != rhs:
                            rep.fail("parallel-associativity", arities=[m, n, l], slots=[i, k],
                                     elements=[f, g, h], lhs=lhs, rhs=rhs)
    # equivariance
    for m, n, i in partial_keys(N):
        for s in permutations(m):
            big = block_perm(s, i, n)
            for f, g in itertools.product(range(sz[m]), range(sz[n])):
                rep.tick()
                lhs = P.circ(m, n, i, P.act(m, f, s), g)
                rhs = P.act(m + n - 1, P.circ(m, n, s[i - 1] + 1, f, g), big)
                if lhs != rhs:
                    rep.fail("equivariance-outer", arities=[m, n], slot=i, permutation=s,
                             elements=[f, g], lhs=lhs, rhs=rhs)
        for t in permutations(n):
            inner = block_inner(m, i, t)
            for f, g in itertools.product(range(sz[m]), range(sz[n])):
                rep.tick()
                lhs = P.circ(m, n, i, f, P.act(n, g, t))
                rhs = P.act(m + n - 1, P.circ(m, n, i, f, g), inner)
                if lhs != rhs:
                    rep.fail("equivariance-inner", arities=[m, n], slot=i, permutation=t,
                             elements=[f, g], lhs=lhs, rhs=rhs)
    return rep


def require_operad(P: TruncatedOperad) -> TruncatedOperad:
    """Gate: raise :class:`ValidationError` unless ``P`` passes every axiom."""
    rep = check_operad_axioms(P)
    if not rep.ok:
        raise ValidationError(f"{P.name} fails the operad axioms", witness=rep.violations[0])
    return P


def truncate(P: TruncatedOperad, N: int) -> TruncatedOperad:
    """The same operad with arities above ``N`` dropped."""
    if not 1 <= N <= P.N:
        raise StructuralError(f"cannot truncate arity {P.N} operad to {N}")
    return TruncatedOperad(P.sizes[:N + 1], P.unit, {k: P.partial[k] for k in partial_keys(N)},
                           {n: dict(P.action[n]) for n in range(N + 1)}, name=P.name)


# -- morphisms ---------------------------------------------------------------

@dataclass
class OperadMorphism:
    """Component tables ``maps[n]: P(n) -> Q(n)``."""

    source: TruncatedOperad
    target: TruncatedOperad
    maps: dict

    def __call__(self, n: int, a: int) -> int:
        return self.maps[n][a]

    def to_json(self):
        return {str(n): list(t) for n, t in sorted(self.maps.items())}


def check_operad_morphism(psi: OperadMorphism) -> Report:
    P, Q = psi.source, psi.target
    N = min(P.N, Q.N)
    rep = Report("operad-morphism", {"source": P.name, "target": Q.name, "max_arity": N})
    for n in range(N + 1):
        table = psi.maps.get(n)
        if table is None or len(table) != P.sizes[n] or any(not 0 <= v < Q.sizes[n] for v in table):
            rep.fail("shape", arity=n)
            return rep
    rep.tick()
    if psi(1, P.unit) != Q.unit:
        rep.fail("unit", image=psi(1, P.unit), unit=Q.unit)
    for n in range(N + 1):
        for s in permutations(n):
            for a in range(P.sizes[n]):
                rep.tick()
                if psi(n, P.act(n, a, s)) != Q.act(n, psi(n, a), s):
                    rep.fail("equivariance", arity=n, permutation=s, element=a)
    for m, n, i in partial_keys(N):
        for a, b in itertools.product(range(P.sizes[m]), range(P.sizes[n])):
            rep.tick()
            if psi(m + n - 1, P.circ(m, n, i, a, b)) != Q.circ(m, n, i, psi(m, a), psi(n, b)):
                rep.fail("composition", arities=[m, n], slot=i, elements=[a, b])
    return rep


def compose_morphisms(psi2: OperadMorphism, psi1: OperadMorphism) -> OperadMorphism:
    maps = {n: tuple(psi2.maps[n][v] for v in t) for n, t in psi1.maps.items()}
    return OperadMorphism(psi1.source, psi2.target, maps)


def identity_morphism(P: TruncatedOperad) -> OperadMorphism:
    return OperadMorphism(P, P, {n: tuple(range(s)) for n, s in enumerate(P.sizes)})


# -- the index category and the functor it carries ------------------------------

def _check_injection(phi: Sequence[int], m: int):
    if len(set(phi)) != len(phi) or any(not 0 <= x < m for x in phi):
        raise StructuralError(f"{list(phi)} is not an injection into {m} slots")


def barP_action(P: TruncatedOperad, phi: Sequence[int], m: int) -> FinFn:
    """``P(m) -> P(n)`` for an injection ``phi: n -> m`` (0-based one-line form).

    Slot ``j`` of the result is slot ``phi[j]`` of the input. Computed twice,
    as permute-then-delete and as delete-then-permute, and the two tables
    must agree.
    """
    phi = tuple(phi)
    _check_injection(phi, m)
    n = len(phi)
    if not P.unital:
        raise UnsupportedStructure(f"{P.name} is not unital")
    if m > P.N:
        raise StructuralError(f"arity {m} is above the truncation {P.N}")
    rest = tuple(k for k in range(m) if k not in phi)
    sigma = phi + rest
    kept = sorted(phi)
    tau = tuple(kept.index(x) for x in phi)
    first, second = [], []
    for a in range(P.sizes[m]):
        x = P.act(m, a, sigma)
        for slot in range(m, n, -1):
            x = P.circ(slot, 0, slot, x, 0)
        first.append(x)
        y, arity = a, m
        for k in reversed(rest):
            y = P.circ(arity, 0, k + 1, y, 0)
            arity -= 1
        second.append(P.act(n, y, tau))
    if first != second:
        a = next(k for k in range(len(first)) if first[k] != second[k])
        raise ValidationError(f"the two factorizations of {list(phi)} disagree", witness={
            "element": a, "permute_then_delete": first[a], "delete_then_permute": second[a]})
    return FinFn(P.component(m), P.component(n), tuple(first))


class IndexK(Category):
    """Finite ordinals ``0..N``; a morphism ``m -> n`` is an injection ``n -> m``.

    Arrows carry the injection as a 0-based one-line tuple of length ``n``.
    """

    backend = "computable"

    def __init__(self, N: int):
        self.N = N

    def roster(self, bound=None):
        return list(range(0, (self.N if bound is None else min(bound, self.N)) + 1))

    def contains(self, obj):
        return isinstance(obj, int) and 0 <= obj <= self.N

    def hom(self, m, n):
        return tuple(Arrow(m, n, phi) for phi in itertools.permutations(range(m), n))

    def _compose(self, g, f):
        return Arrow(f.dom, g.cod, tuple(f.data[x] for x in g.data))

    def identity(self, m):
        return Arrow(m, m, tuple(range(m)))

    def generators(self, m, n):
        """Permutations (``m == n``) and the deletions ``d_i`` (``n == m - 1``)."""
        if m == n:
            return self.hom(m, n)
        if n == m - 1:
            return tuple(Arrow(m, n, tuple(k for k in range(m) if k != i)) for i in range(m))
        return ()


def barP_functor(P: TruncatedOperad) -> tuple[FunctorData, IndexK, SetCategory]:
    """``P-bar`` as a functor from the index category into finite sets."""
    cache: dict = {}

    def ar(f: Arrow) -> Arrow:
        if f not in cache:
            cache[f] = Arrow(P.sizes[f.dom], P.sizes[f.cod], barP_action(P, f.data, f.dom).table)
        return cache[f]

    return FunctorData(lambda n: P.sizes[n], ar), IndexK(P.N), SetCategory(max(P.sizes))


def check_barP_functor(P: TruncatedOperad) -> Report:
    F, K, target = barP_functor(P)
    rep = check_functor(F, K, target)
    rep.name = "barP-functor"
    rep.params["operad"] = P.name
    return rep


# -- monoids and builtins ---------------------------------------------------------

class Monoid:
    """A finite monoid by multiplication table; ``table[a][b] = a * b``."""

    def __init__(self, table: Sequence[Sequence[int]], unit: int = 0, name: str = "monoid"):
        self.table = tuple(tuple(r) for r in table)
        self.unit = unit
        self.name = name
        self.order = len(self.table)
        self.validate()

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def validate(self):
        n = self.order
        if any(len(r) != n or any(not 0 <= v < n for v in r) for r in self.table):
            raise ValidationError("multiplication table is not a square table on the elements")
        if not 0 <= self.unit < n:
            raise ValidationError(f"unit {self.unit} is not an element")
        for a in range(n):
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                raise ValidationError("unit law fails", witness=a)
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValidationError("multiplication is not associative", witness=(a, b, c))

    def __repr__(self):
        return f"Monoid({self.name}, order={self.order})"


def cyclic_group(n: int) -> Monoid:
    return Monoid([[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f"Z/{n}")


def all_monoids(order: int) -> list[Monoid]:
    """Every monoid of the given order up to isomorphism, unit normalised to ``0``."""
    others = range(1, order)
    found, seen = [], set()
    relabelings = [(0,) + p for p in itertools.permutations(others)]
    for free in itertools.product(range(order), repeat=(order - 1) ** 2):
        table = [[0] * order for _ in range(order)]
        for a in range(order):
            table[0][a] = table[a][0] = a
        for (a, b), v in zip(itertools.product(others, repeat=2), free):
            table[a][b] = v
        if any(table[table[a][b]][c] != table[a][table[b][c]]
               for a, b, c in itertools.product(others, repeat=3)):
            continue
        key = tuple(map(tuple, table))
        if key in seen:
            continue
        for r in relabelings:
            inv = perm_inverse(r)
            seen.add(tuple(tuple(r[table[inv[a]][inv[b]]] for b in range(order)) for a in range(order)))
        found.append(Monoid(table, 0, name=f"M{order}.{len(found)}"))
    return found


def _build(sizes, unit, circ, act, name) -> TruncatedOperad:
    N = len(sizes) - 1
    partial = {}
    for m, n, i in partial_keys(N):
        partial[(m, n, i)] = tuple(circ(m, n, i, a, b) for a in range(sizes[m]) for b in range(sizes[n]))
    action = {n: {s: tuple(act(n, a, s) for a in range(sizes[n])) for s in permutations(n)}
              for n in range(N + 1)}
    return TruncatedOperad(list(sizes), unit, partial, action, name)


def com(N: int) -> TruncatedOperad:
    """One operation in every arity."""
    return _build([1] * (N + 1), 0, lambda m, n, i, a, b: 0, lambda n, a, s: 0, f"com({N})")


def ass(N: int) -> TruncatedOperad:
    """``P(n) = S_n``: an operation is an ordering of its inputs.

    Element ``w`` of ``P(n)`` is the word ``w[0] w[1] ...`` listing the
    letters ``0..n-1``; words are indexed in lexicographic order.
    """
    words = [permutations(n) for n in range(N + 1)]
    index = [{w: k for k, w in enumerate(ws)} for ws in words]

    def circ(m, n, i, a, b):
        w, v = words[m][a], words[n][b]
        out = []
        for x in w:
            if x < i - 1:
                out.append(x)
            elif x == i - 1:
                out.extend(y + i - 1 for y in v)
            else:
                out.append(x + n - 1)
        return index[m + n - 1][tuple(out)]

    def act(n, a, s):
        inv = perm_inverse(s)
        return index[n][tuple(inv[x] for x in words[n][a])]

    return _build([len(ws) for ws in words], 0, circ, act, f"ass({N})")


def from_monoid(M: Monoid, N: int) -> TruncatedOperad:
    """``P(0)`` a point, ``P(1) = M`` under multiplication, nothing in higher arities."""
    M.validate()
    sizes = [1, M.order] + [0] * (N - 1)

    def circ(m, n, i, a, b):
        if (m, n) == (1, 1):
            return M.mul(a, b)
        return 0  # (1, 0): into the point

    return _build(sizes, M.unit, circ, lambda n, a, s: a, f"from_monoid({M.name},{N})")


BUILTINS = {"com": com, "ass": ass}
