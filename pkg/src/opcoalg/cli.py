"""Command-line front end.

    opcoalg <subcommand> <input.json> [--format text|structured] [--budget N]
            [--roster A,B,...] [--strength 2|all]

The input document has three blocks::

    {
      "instance": {"kind": "pointed", "bound": 3},
      "operad":   {"builtin": "com", "max_arity": 3},
      "run":      {"roster": [1, 2, 3], "budget": 100000, "strength": "all"}
    }

Instance kinds: ``pointed`` (``bound``), ``finsets`` (``bound``, optional
``max_size``), ``lattice`` (``preset`` one of ``divisors``/``boolean``/``chain``
with ``n``, or explicit ``elements`` and ``order`` pairs). Operads: a
``builtin`` (``com``, ``ass``, ``from_monoid`` with ``monoid`` given as
``{"cyclic": k}`` or ``{"table": [[...]], "unit": 0}``) or explicit
``tables`` (``sizes``, ``unit``, ``partial`` keyed ``"m,n,i"``, ``action``
keyed by arity and then by the comma-joined one-line permutation).

Exit status: 0 when every check passes, 1 when a violation or counterexample
was found, 2 when the input could not be processed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import comonad as cm
from .coalgebra import check_coalgebra, enumerate_coalgebras
from .errors import LiftFailure, OpcoalgError, StructuralError
from .fincat import check_category_axioms
from .instances import boolean_lattice, build_finsets, build_lattice, build_pointed_sets, chain, divisor_lattice
from .monoidal import check_monoidal, pairwise_strength_check, projection_report
from .operad import (Monoid, TruncatedOperad, ass, check_barP_functor, check_operad_axioms, com, cyclic_group,
                     from_monoid, partial_keys)
from .finset import permutations
from .report import Report

SUBCOMMANDS = ("check-operad", "check-instance", "enumerate-coalgebras", "compute-comonad",
               "verify-comonad-laws", "verify-equivalence", "fox")


class InputError(OpcoalgError):
    """An input document that does not parse; ``path`` locates the offending field."""

    def __init__(self, path: str, message: str, witness=None):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.witness = witness


@dataclass
class InputDocument:
    instance: object
    operad: TruncatedOperad | None
    run: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict)


def _get(block: dict, key: str, path: str, kind=None, default=...):
    if key not in block:
        if default is ...:
            raise InputError(f"{path}.{key}", "missing")
        return default
    value = block[key]
    if kind is not None and not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise InputError(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}, got {value!r}")
    return value


def _int_table(value, path: str, length: int | None = None, below: int | None = None) -> list[int]:
    if not isinstance(value, list):
        raise InputError(path, "expected a list of integers")
    if length is not None and len(value) != length:
        raise InputError(path, f"expected {length} entries, got {len(value)}")
    for k, v in enumerate(value):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"{path}[{k}]", f"expected an integer, got {v!r}")
        if v < 0 or below is not None and v >= below:
            raise InputError(f"{path}[{k}]", f"{v} out of range 0..{(below or 1) - 1}")
    return value


def parse_instance(block, path="instance"):
    if not isinstance(block, dict):
        raise InputError(path, "expected an object")
    kind = _get(block, "kind", path, str)
    if kind in ("pointed", "finsets"):
        bound = _get(block, "bound", path, int)
        if bound < 1:
            raise InputError(f"{path}.bound", "must be at least 1")
        max_size = _get(block, "max_size", path, int, default=None)
        if kind == "pointed":
            if max_size is not None:
                raise InputError(f"{path}.max_size", "pointed sets take only a roster bound")
            return build_pointed_sets(bound)
        return build_finsets(bound, max_size)
    if kind == "lattice":
        if "preset" in block:
            preset = _get(block, "preset", path, str)
            n = _get(block, "n", path, int)
            builders = {"divisors": divisor_lattice, "boolean": boolean_lattice, "chain": chain}
            if preset not in builders:
                raise InputError(f"{path}.preset", f"unknown preset {preset!r}; expected one of {sorted(builders)}")
            return builders[preset](n)
        elements = _get(block, "elements", path, list)
        order = _get(block, "order", path, list)
        for k, pair in enumerate(order):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InputError(f"{path}.order[{k}]", "expected a pair [smaller, larger]")
            for j, x in enumerate(pair):
                if x not in elements:
                    raise InputError(f"{path}.order[{k}][{j}]", f"{x!r} is not a listed element")
        return build_lattice(elements, [tuple(p) for p in order], label=block.get("label", "lattice"))
    raise InputError(f"{path}.kind", f"unknown instance kind {kind!r}; expected pointed, finsets or lattice")


def _parse_monoid(block, path):
    if not isinstance(block, dict):
        raise InputError(path, "expected an object")
    if "cyclic" in block:
        return cyclic_group(_get(block, "cyclic", path, int))
    table = _get(block, "table", path, list)
    n = len(table)
    for k, row in enumerate(table):
        _int_table(row, f"{path}.table[{k}]", n, n)
    unit = _get(block, "unit", path, int, default=0)
    return Monoid(table, unit, name=block.get("name", "M"))


def parse_operad(block, path="operad") -> TruncatedOperad:
    if not isinstance(block, dict):
        raise InputError(path, "expected an object")
    if "builtin" in block:
        name = _get(block, "builtin", path, str)
        N = _get(block, "max_arity", path, int)
        if N < 1:
            raise InputError(f"{path}.max_arity", "must be at least 1")
        if name == "com":
            return com(N)
        if name == "ass":
            return ass(N)
        if name == "from_monoid":
            return from_monoid(_parse_monoid(_get(block, "monoid", path, dict), f"{path}.monoid"), N)
        raise InputError(f"{path}.builtin", f"unknown builtin {name!r}; expected com, ass or from_monoid")
    tables = _get(block, "tables", path, dict)
    tpath = f"{path}.tables"
    sizes = _int_table(_get(tables, "sizes", tpath, list), f"{tpath}.sizes")
    N = len(sizes) - 1
    if N < 1:
        raise InputError(f"{tpath}.sizes", "need components up to at least arity 1")
    unit = _get(tables, "unit", tpath, int)
    if not 0 <= unit < sizes[1]:
        raise InputError(f"{tpath}.unit", f"{unit} is not an element of P(1)")
    raw_partial = _get(tables, "partial", tpath, dict)
    partial = {}
    for m, n, i in partial_keys(N):
        key = f"{m},{n},{i}"
        if key not in raw_partial:
            raise InputError(f"{tpath}.partial[{key!r}]", "missing")
        partial[(m, n, i)] = tuple(_int_table(raw_partial[key], f"{tpath}.partial[{key!r}]",
                                              sizes[m] * sizes[n], sizes[m + n - 1] or None))
    for key in raw_partial:
        try:
            m, n, i = (int(x) for x in key.split(","))
        except ValueError:
            raise InputError(f"{tpath}.partial[{key!r}]", "keys look like \"m,n,i\"") from None
        if (m, n, i) not in partial:
            raise InputError(f"{tpath}.partial[{key!r}]", "no such composition within the truncation")
    raw_action = _get(tables, "action", tpath, dict)
    action = {}
    for n in range(N + 1):
        apath = f"{tpath}.action[{str(n)!r}]"
        acts = raw_action.get(str(n))
        if n <= 1 and acts is None:
            acts = {",".join(map(str, s)): list(range(sizes[n])) for s in permutations(n)}
        if not isinstance(acts, dict):
            raise InputError(apath, "missing or not an object")
        action[n] = {}
        for s in permutations(n):
            key = ",".join(map(str, s))
            if key not in acts:
                raise InputError(f"{apath}[{key!r}]", "missing")
            action[n][s] = tuple(_int_table(acts[key], f"{apath}[{key!r}]", sizes[n], sizes[n] or None))
    try:
        return TruncatedOperad(sizes, unit, partial, action, name=block.get("name", "tables"))
    except StructuralError as err:
        raise InputError(tpath, str(err)) from None


def load_document(path, gate: bool = True) -> InputDocument:
    """Parse and validate an input file; with ``gate`` the operad must pass its axioms."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise InputError(str(path), f"cannot read: {err}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"line {err.lineno} column {err.colno}", err.msg) from None
    if not isinstance(raw, dict):
        raise InputError("$", "the document must be an object")
    for key in raw:
        if key not in ("instance", "operad", "run"):
            raise InputError(key, "unknown top-level block")
    instance = parse_instance(_get(raw, "instance", "$", dict), "instance")
    operad = parse_operad(raw["operad"]) if "operad" in raw else None
    run = _get(raw, "run", "$", dict, default={})
    if operad is not None and gate:
        rep = check_operad_axioms(operad)
        if not rep.ok:
            raise InputError("operad", "fails the operad axioms", witness=rep.violations[0])
    return InputDocument(instance, operad, dict(run), raw)


# -- subcommands ---------------------------------------------------------------

def _roster(doc: InputDocument):
    inst = doc.instance
    roster = doc.run.get("roster")
    if roster is None:
        return inst.roster()
    if not isinstance(roster, list):
        raise InputError("run.roster", "expected a list of objects")
    for k, X in enumerate(roster):
        if X not in inst.roster():
            raise InputError(f"run.roster[{k}]", f"{X!r} is not a roster object of the instance")
    return roster


def _need_operad(doc):
    if doc.operad is None:
        raise InputError("operad", "this subcommand needs an operad block")
    return doc.operad


def _params(doc: InputDocument) -> dict:
    out = {"instance": doc.instance.describe(), "run": doc.run}
    if doc.operad is not None:
        out["operad"] = doc.operad.describe()
    return out


def run_check_operad(doc):
    P = _need_operad(doc)
    rep = Report("check-operad", _params(doc))
    rep.merge(check_operad_axioms(P))
    if rep.ok and P.unital:
        rep.merge(check_barP_functor(P))
    return rep


def run_check_instance(doc):
    inst = doc.instance
    bound = doc.run.get("probe_bound")
    rep = Report("check-instance", _params(doc))
    rep.merge(check_category_axioms(inst, bound))
    rep.merge(check_monoidal(inst, bound))
    proj = projection_report(inst, bound)
    rep.merge(proj)
    objs = inst.roster(bound)
    strong = all(pairwise_strength_check(inst, c, X, n) for c in objs for X in objs
                 for n in range(3, doc.run.get("strength_arity", 3) + 1))
    rep.details["classification"] = {k: proj.details[k] for k in ("semicartesian", "monic", "isomorphic")}
    rep.details["classification"]["two_strong"] = strong
    if proj.details["monic"] and not strong:
        rep.details["flag"] = "monically but not 2-strongly projecting"
    return rep


def run_enumerate(doc):
    P = _need_operad(doc)
    inst = doc.instance
    budget = doc.run.get("budget", 2_000_000)
    rep = Report("enumerate-coalgebras", _params(doc))
    found = {}
    for X in _roster(doc):
        structs = enumerate_coalgebras(P, inst, X, budget)
        found[str(X)] = [A.to_json() for A in structs]
        for A in structs:
            rep.merge(check_coalgebra(A), prefix=f"carrier {X}")
    rep.details["counts"] = {k: len(v) for k, v in found.items()}
    rep.details["structures"] = found
    return rep


def run_compute_comonad(doc):
    P = _need_operad(doc)
    inst = doc.instance
    strength = doc.run.get("strength", "all")
    roster = _roster(doc)
    W = cm.compute_CP(inst, P, strength)
    rep = Report("compute-comonad", _params(doc))
    carriers = {}
    for X in roster:
        if W.kind == "thin":
            carriers[str(X)] = {"object": W.obj(X)}
            continue
        carriers[str(X)] = {"size": W.obj(X), "elements": [list(f) for f in W.carrier(X)]}
        rep.merge(cm.end_agreement(W, X, doc.run.get("budget", 1_000_000)), prefix=f"end at {X}")
    if W.kind != "thin":
        rep.merge(cm.inclusion_report(W, roster, doc.run.get("probe_bound")))
    rep.details["carriers"] = carriers
    return rep


def run_comonad_laws(doc):
    P = _need_operad(doc)
    inst = doc.instance
    roster = _roster(doc)
    W = cm.compute_CP(inst, P, doc.run.get("strength", "all"))
    rep = Report("verify-comonad-laws", _params(doc))
    rep.merge(cm.comonad_laws(W, roster), prefix=W.name)
    if W.kind != "thin":
        rep.merge(cm.comonad_laws(cm.CoactionComonad(inst, P.monoid()), roster), prefix="coaction")
    return rep


def run_equivalence(doc):
    P = _need_operad(doc)
    rep = Report("verify-equivalence", _params(doc))
    rep.merge(cm.equivalence_report(doc.instance, P, _roster(doc), doc.run.get("strength", "all"),
                                    doc.run.get("budget", 2_000_000)))
    return rep


def run_fox(doc):
    N = doc.operad.N if doc.operad is not None else 2
    rep = Report("fox", _params(doc))
    sub = cm.fox_report(doc.instance, N, _roster(doc))
    rep.merge(sub)
    rep.details.update({k: sub.details[k] for k in ("coalgebras", "total_coalgebras")})
    return rep


RUNNERS = {
    "check-operad": run_check_operad,
    "check-instance": run_check_instance,
    "enumerate-coalgebras": run_enumerate,
    "compute-comonad": run_compute_comonad,
    "verify-comonad-laws": run_comonad_laws,
    "verify-equivalence": run_equivalence,
    "fox": run_fox,
}


def run(subcommand: str, doc: InputDocument) -> tuple[Report, int]:
    try:
        rep = RUNNERS[subcommand](doc)
    except LiftFailure as err:
        rep = Report(subcommand, _params(doc))
        rep.fail("lift-failure", message=str(err), witness=err.witness)
    return rep, 0 if rep.ok else 1


def _parse_roster(text: str):
    out = []
    for item in text.replace(" ", ",").split(","):
        if item:
            try:
                out.append(int(item))
            except ValueError:
                out.append(item)
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="opcoalg", description="Bounded-exhaustive checks for operadic coalgebras.")
    ap.add_argument("subcommand", choices=SUBCOMMANDS)
    ap.add_argument("input", help="path to the JSON input document")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    ap.add_argument("--budget", type=int, help="combinatorial budget for searches")
    ap.add_argument("--roster", help="comma-separated carrier objects")
    ap.add_argument("--strength", choices=("2", "all"), help="arities checked when computing C_P")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = load_document(args.input, gate=args.subcommand != "check-operad")
        if args.budget is not None:
            doc.run["budget"] = args.budget
        if args.roster is not None:
            doc.run["roster"] = _parse_roster(args.roster)
        if args.strength is not None:
            doc.run["strength"] = 2 if args.strength == "2" else "all"
        rep, code = run(args.subcommand, doc)
    except OpcoalgError as err:
        payload = {"error": type(err).__name__, "message": str(err)}
        for attr in ("witness", "attempted", "path"):
            if getattr(err, attr, None) is not None:
                payload[attr] = getattr(err, attr)
        if args.format == "structured":
            print(json.dumps(Report("error").to_dict() | payload, sort_keys=True, indent=2, default=str))
        else:
            print(f"error: {err}", file=sys.stderr)
            if payload.get("witness") is not None:
                print(f"witness: {json.dumps(payload['witness'], default=str)}", file=sys.stderr)
        return 2
    print(rep.dumps() if args.format == "structured" else rep.to_text())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
