from __future__ import annotations

import json

import pytest

from opcoalg.cli import InputError, load_document, main, parse_operad, run
from opcoalg.operad import ass, com


def write(tmp_path, doc, name="input.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


POINTED_COM = {"instance": {"kind": "pointed", "bound": 3}, "operad": {"builtin": "com", "max_arity": 3}}


def tables_doc(P):
    d = P.to_json()
    return {"instance": {"kind": "pointed", "bound": 3}, "operad": {"tables": d}}


def test_load_builtin(tmp_path):
    doc = load_document(write(tmp_path, POINTED_COM))
    assert doc.operad == com(3) and doc.instance.bound == 3


def test_explicit_ass2_tables_match_builtin(tmp_path):
    doc = load_document(write(tmp_path, tables_doc(ass(2))))
    assert doc.operad == ass(2)


def test_low_arity_actions_optional():
    d = ass(2).to_json()
    del d["action"]["0"], d["action"]["1"]
    assert parse_operad({"tables": d}) == ass(2)


def test_out_of_range_partial_entry_located(tmp_path):
    doc = tables_doc(ass(2))
    doc["operad"]["tables"]["partial"]["2,1,1"][1] = 7
    with pytest.raises(InputError) as err:
        load_document(write(tmp_path, doc))
    assert err.value.path == "operad.tables.partial['2,1,1'][1]"


@pytest.mark.parametrize("mutate,path", [
    (lambda d: d["instance"].pop("bound"), "instance.bound"),
    (lambda d: d["instance"].update(kind="banana"), "instance.kind"),
    (lambda d: d["instance"].update(max_size=5), "instance.max_size"),
    (lambda d: d["operad"].update(builtin="lie"), "operad.builtin"),
    (lambda d: d["operad"].update(max_arity=0), "operad.max_arity"),
    (lambda d: d.update(extra=1), "extra"),
])
def test_located_diagnostics(tmp_path, mutate, path):
    doc = json.loads(json.dumps(POINTED_COM))
    mutate(doc)
    with pytest.raises(InputError) as err:
        load_document(write(tmp_path, doc))
    assert err.value.path == path


def test_bad_json_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "instance": \n}')
    with pytest.raises(InputError, match="line 3"):
        load_document(str(p))


def test_monoid_document(tmp_path):
    doc = {"instance": {"kind": "pointed", "bound": 2},
           "operad": {"builtin": "from_monoid", "max_arity": 2, "monoid": {"table": [[0, 1], [1, 1]], "unit": 0}}}
    assert load_document(write(tmp_path, doc)).operad.sizes == [1, 2, 0]
    doc["operad"]["monoid"]["table"] = [[0, 1], [0, 1]]
    with pytest.raises(Exception):
        load_document(write(tmp_path, doc))


def test_lattice_documents(tmp_path):
    doc = {"instance": {"kind": "lattice", "preset": "divisors", "n": 12}}
    assert load_document(write(tmp_path, doc)).instance.objects == [1, 2, 3, 4, 6, 12]
    doc = {"instance": {"kind": "lattice", "elements": ["x", "y", "t"], "order": [["x", "t"], ["y", "t"]]}}
    with pytest.raises(Exception) as err:
        load_document(write(tmp_path, doc))
    assert err.value.witness == ("x", "y")


def test_run_equivalence_com(tmp_path):
    doc = load_document(write(tmp_path, POINTED_COM))
    rep, code = run("verify-equivalence", doc)
    assert code == 0 and rep.ok


def test_main_exit_codes(tmp_path, capsys):
    path = write(tmp_path, POINTED_COM)
    for sub in ("check-operad", "check-instance", "enumerate-coalgebras", "compute-comonad",
                "verify-comonad-laws", "verify-equivalence"):
        assert main([sub, path]) == 0, sub
    with pytest.raises(SystemExit) as err:
        main(["frobnicate", path])
    assert err.value.code == 2


def test_fox_lists_six_coalgebras(tmp_path, capsys):
    path = write(tmp_path, {"instance": {"kind": "lattice", "preset": "divisors", "n": 12},
                            "operad": {"builtin": "com", "max_arity": 3}})
    assert main(["fox", path, "--format", "structured"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["details"]["total_coalgebras"] == 6 and len(out["details"]["coalgebras"]) == 6


def test_check_operad_on_corrupted_tables(tmp_path, capsys):
    bad = ass(3).with_action_entry(2, (1, 0), 0, 0)
    path = write(tmp_path, tables_doc(bad))
    assert main(["check-operad", path, "--format", "structured"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["violations"] and "kind" in out["violations"][0]
    # every other subcommand refuses the document at load time
    assert main(["enumerate-coalgebras", path]) == 2
    assert "witness" in capsys.readouterr().err


def test_budget_error_exit_two(tmp_path, capsys):
    doc = {"instance": {"kind": "pointed", "bound": 3},
           "operad": {"builtin": "from_monoid", "max_arity": 2, "monoid": {"cyclic": 3}}}
    path = write(tmp_path, doc)
    assert main(["enumerate-coalgebras", path, "--budget", "1", "--format", "structured"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["error"] == "BudgetError" and out["attempted"] == 2


def test_roster_and_strength_flags(tmp_path, capsys):
    path = write(tmp_path, POINTED_COM)
    assert main(["compute-comonad", path, "--roster", "1,2", "--strength", "2", "--format", "structured"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out["details"]["carriers"]) == {"1", "2"}
    assert out["params"]["run"]["strength"] == 2
    assert main(["compute-comonad", path, "--roster", "9"]) == 2


def test_structured_output_is_stable_and_complete(tmp_path, capsys):
    path = write(tmp_path, {**POINTED_COM, "run": {"budget": 5000}})
    main(["enumerate-coalgebras", path, "--format", "structured"])
    first = capsys.readouterr().out
    main(["enumerate-coalgebras", path, "--format", "structured"])
    assert capsys.readouterr().out == first
    out = json.loads(first)
    assert out["params"]["operad"]["max_arity"] == 3
    assert out["params"]["instance"]["bound"] == 3
    assert out["params"]["run"]["budget"] == 5000


def test_text_output(tmp_path, capsys):
    assert main(["check-operad", write(tmp_path, POINTED_COM)]) == 0
    assert "PASS" in capsys.readouterr().out.upper()
