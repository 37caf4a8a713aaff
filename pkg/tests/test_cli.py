"""End-to-end tests of the command-line surface and the JSON codecs.

Exit-code contract: 0 success, 1 failed comparison (including a
non-reduced inner sequence), 2 malformed input or arguments, 3 budget
exceeded.  Report files must be byte-identical across runs with the
same configuration.
"""

import json
import random
import subprocess
import sys

import pytest

from functorcalc.cli import main
from functorcalc.generate import random_cells, random_space
from functorcalc.holim import Cell, cells_from_json, cells_sequence, cells_to_json
from functorcalc.symseq import (
    SymSeq,
    compose,
    seq_from_json,
    seq_to_json,
    space_from_json,
    space_to_json,
)


def write_seq(path, cells, with_cells=False):
    seq = cells_sequence(cells)
    doc = seq_to_json(seq, cells=cells if with_cells else None)
    path.write_text(json.dumps(doc))
    return seq


@pytest.fixture()
def pair(tmp_path):
    rng = random.Random(4101)
    f_cells = random_cells(rng, max_degree=3)
    g_cells = random_cells(rng, max_degree=3)
    fp, gp = tmp_path / "F.json", tmp_path / "G.json"
    F = write_seq(fp, f_cells)
    G = write_seq(gp, g_cells)
    return fp, gp, F, G


# ---------------------------------------------------------------------------
# JSON codecs


def test_seq_json_roundtrip_entries_form():
    rng = random.Random(52)
    for _ in range(20):
        seq = cells_sequence(random_cells(rng, max_degree=4))
        doc = seq_to_json(seq)
        back = seq_from_json(json.loads(json.dumps(doc)))
        assert back == seq


def test_seq_json_roundtrip_cells_form():
    rng = random.Random(53)
    for _ in range(20):
        cells = random_cells(rng, max_degree=3)
        doc = {"bound": None, "entries": [], "cells": cells_to_json(cells)}
        doc.pop("entries")
        back = seq_from_json(doc)
        assert back == cells_sequence(cells)


def test_seq_json_cells_and_entries_must_agree():
    cells = [Cell((1,)), Cell((1, 1), sign=True)]
    doc = seq_to_json(cells_sequence(cells), cells=cells)
    assert seq_from_json(doc) == cells_sequence(cells)
    doc["cells"][0]["degree"] = 7
    with pytest.raises(ValueError):
        seq_from_json(doc)


def test_cells_json_multiplicity_roundtrip():
    cells = [Cell((2, 1), degree=1), Cell((2, 1), degree=1), Cell((3,), sign=True)]
    items = cells_to_json(cells)
    mults = {tuple(item["composition"]): item["multiplicity"] for item in items}
    assert mults == {(2, 1): 2, (3,): 1}
    assert cells_from_json(items) == cells


def test_space_json_roundtrip_with_fractions():
    rng = random.Random(54)
    for _ in range(10):
        X = random_space(rng)
        assert space_from_json(json.loads(json.dumps(space_to_json(X)))) == X
    doc = {"dims": {"0": 2, "3": 1}}
    X = space_from_json(doc)
    assert X.coeff(0) == 2 and X.coeff(3) == 1


def test_scalar_strings_survive_roundtrip():
    from fractions import Fraction

    from functorcalc.characters import GradedCharacter
    from functorcalc.exactpoly import TPoly

    chi = GradedCharacter.trivial(2).scale(TPoly.term(Fraction(1, 1), 0))
    seq = SymSeq({2: chi}, bound=2)
    text = json.dumps(seq_to_json(seq))
    assert seq_from_json(json.loads(text)) == seq


def test_seq_json_rejects_malformed():
    with pytest.raises(ValueError):
        seq_from_json([1, 2, 3])
    with pytest.raises(ValueError):
        seq_from_json({"bound": -1, "entries": []})
    with pytest.raises(ValueError):
        seq_from_json({"bound": None, "entries": [{"n": 1, "degrees": [
            {"d": 0, "character": [[[2], 1]]}]}]})  # partition of the wrong weight


# ---------------------------------------------------------------------------
# compose / chainrule / derivative / tower


def test_compose_command_agrees(pair, tmp_path, capsys):
    fp, gp, F, G = pair
    out = tmp_path / "report.json"
    assert main(["compose", str(fp), str(gp), "--json-out", str(out)]) == 0
    assert "routes agree" in capsys.readouterr().out
    doc = json.loads(out.read_text())
    assert doc["paths_agree"] is True
    assert seq_from_json(doc["result"]) == compose(F, G)


def test_compose_rejects_non_reduced_inner(pair, tmp_path, capsys):
    fp, gp, _, G = pair
    doc = seq_to_json(G)
    doc["entries"].insert(0, {"n": 0, "degrees": [{"d": 0, "character": [[[], 1]]}]})
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["compose", str(fp), str(bad)]) == 1
    assert "reduced" in capsys.readouterr().err


def test_malformed_input_exits_two(pair, tmp_path, capsys):
    fp, _, _, _ = pair
    junk = tmp_path / "junk.json"
    junk.write_text("{nope")
    assert main(["compose", str(fp), str(junk)]) == 2
    missing = tmp_path / "missing.json"
    assert main(["compose", str(fp), str(missing)]) == 2
    assert main(["compose", str(fp), "--no-such-flag"]) == 2
    capsys.readouterr()


def test_chainrule_command(pair, capsys):
    fp, gp, _, _ = pair
    assert main(["chainrule", str(fp), str(gp), "--bound", "3"]) == 0
    assert main(["chainrule", str(fp), str(gp), "--bound", "2",
                 "--base", "0,1", "--signed"]) == 0
    capsys.readouterr()


def test_chainrule_truncated_inputs(pair, tmp_path, capsys):
    fp, gp, F, _ = pair
    doc = seq_to_json(F)
    doc["bound"] = 2
    doc["entries"] = [e for e in doc["entries"] if e["n"] <= 2]
    fb = tmp_path / "Fb.json"
    fb.write_text(json.dumps(doc))
    # within the window the truncated sequence is exact
    assert main(["chainrule", str(fb), str(gp), "--bound", "2"]) == 0
    # beyond it the first unverifiable entry is named
    assert main(["chainrule", str(fb), str(gp), "--bound", "5"]) == 2
    err = capsys.readouterr().err
    assert "entry 3" in err
    # a base point needs complete inputs
    assert main(["chainrule", str(fb), str(gp), "--bound", "1", "--base", "0"]) == 2


def test_derivative_command(pair, tmp_path, capsys):
    fp, gp, _, _ = pair
    out = tmp_path / "d.json"
    assert main(["derivative", str(fp), str(gp), "--partition", "1,2",
                 "--json-out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["routes_agree"] is True and doc["partition"] == [1, 2]
    assert main(["derivative", str(fp), str(gp), "--partition", "0,2"]) == 2
    capsys.readouterr()


def test_tower_command(pair, tmp_path, capsys):
    fp, gp, _, _ = pair
    rng = random.Random(9)
    homog = tmp_path / "H.json"
    write_seq(homog, [Cell((2,)), Cell((1, 1), sign=True, degree=1)])
    assert main(["tower", str(homog), str(gp), "--stage", "3",
                 "--space", "0,1"]) == 0
    out = capsys.readouterr().out
    assert "split-limit: agrees" in out and "stage-diagram: agrees" in out
    assert main(["tower", str(fp), str(gp), "--stage", "2", "--signed"]) == 0
    capsys.readouterr()


# ---------------------------------------------------------------------------
# tn-oracle


def test_tn_oracle_command(tmp_path, capsys):
    cells = tmp_path / "sq.json"
    cells.write_text(json.dumps({"cells": cells_to_json([Cell((1, 1), sign=True)])}))
    out = tmp_path / "o.json"
    assert main(["tn-oracle", str(cells), "--excision-degree", "1",
                 "--space", "0", "--json-out", str(out)]) == 0
    doc = json.loads(out.read_text())
    # an exterior square is 1-reduced of degree 2, so its linearization vanishes
    assert doc["matches_truncation"] is True and doc["stable"] == {}
    capsys.readouterr()


def test_tn_oracle_accepts_bare_cell_list(tmp_path, capsys):
    cells = tmp_path / "line.json"
    cells.write_text(json.dumps(cells_to_json([Cell((1,))])))
    assert main(["tn-oracle", str(cells), "--excision-degree", "1",
                 "--space", "0,1"]) == 0
    capsys.readouterr()


def test_tn_oracle_budget_exit(tmp_path, capsys):
    cells = tmp_path / "big.json"
    cells.write_text(json.dumps({"cells": cells_to_json(
        [Cell((1, 1)), Cell((2, 1))])}))
    assert main(["tn-oracle", str(cells), "--excision-degree", "2",
                 "--space", "0,0", "--budget", "40"]) == 3
    assert "exceeds budget" in capsys.readouterr().err


def test_tn_oracle_rejects_entries_only_file(pair, capsys):
    fp, _, _, _ = pair
    assert main(["tn-oracle", str(fp), "--excision-degree", "1",
                 "--space", "0"]) == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# verify


def test_verify_reports_are_byte_identical(tmp_path, capsys):
    args = ["verify", "--check", "set-partition-counts",
            "--check", "composition-unit-laws", "--seed", "11"]
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--json-out", str(first)]) == 0
    assert main(args + ["--json-out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert "overall: pass" in capsys.readouterr().out


def test_verify_unknown_check_exits_two(capsys):
    assert main(["verify", "--check", "no-such-check"]) == 2
    capsys.readouterr()


def test_verify_mutation_flips_targeted_check(tmp_path, capsys):
    out = tmp_path / "m.json"
    assert main(["verify", "--check", "composition-unit-laws",
                 "--mutate", "--json-out", str(out)]) == 1
    doc = json.loads(out.read_text())
    assert doc["mutated"] is True
    assert doc["checks"][0]["status"] == "fail"
    # the same check passes without the mutation
    assert main(["verify", "--check", "composition-unit-laws"]) == 0
    # a check with no independent reference is immune to the mutation
    assert main(["verify", "--check", "composition-associativity",
                 "--mutate"]) == 0
    capsys.readouterr()


def test_mutation_flips_exactly_the_targeted_checks():
    from functorcalc.verify import MUTATION_TARGETED, RunConfig, run_battery

    report, _ = run_battery(RunConfig(pairs=5), mutate=True)
    failing = {r["check"] for r in report["checks"] if r["status"] == "fail"}
    assert failing == MUTATION_TARGETED
    assert report["status"] == "fail"


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "functorcalc", "verify",
         "--check", "set-partition-counts"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "overall: pass" in proc.stdout
