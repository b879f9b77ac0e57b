import json
import os
import subprocess

import _periplectiq as native
import periplectiq


def test_quantum_scalars():
    assert native.quantum_integer(2) == "q + q^-1"
    assert native.quantum_integer(3) == "q^2 + 1 + q^-2"
    assert native.quantum_factorial(0) == "1"
    assert native.eval_at_one("(q^2 - 1)/(q - 1)") == "2"
    assert native.rat_add("q", "q^-1") == "q + q^-1"
    assert native.rat_mul("q - q^-1", native.rat_inv("q - q^-1")) == "1"
    assert native.rat_subst_q_inverse("q^2 + 1 + q^-2") == "q^2 + 1 + q^-2"


def test_character_report():
    rep = periplectiq.character(2, 1)
    assert rep["dim"] == 4
    assert len(rep["entries"]) == 4
    assert all(e["multiplicity"] == 1 for e in rep["entries"])
    total = sum(e["multiplicity"] for e in periplectiq.character(2, 2)["entries"])
    assert total == 16


def test_relations_smoke():
    rep = periplectiq.relations(2, 1)
    assert rep["all_pass"] is True
    suites = {s["suite"] for s in rep["suites"]}
    assert {"exprel", "dj_relations", "lemma_alg", "divided_powers", "classical"} <= suites
    # the negative control mode must fail
    assert periplectiq.relations(2, 1, mutate=True)["all_pass"] is False


def test_maximal_smoke():
    rep = periplectiq.maximal(3, 2)
    assert rep["total"] == 3
    assert rep["candidates"]["all_maximal"] is True
    assert rep["candidates"]["independent"] is True
    assert rep["candidates"]["spans_kernel"] is True
    single = periplectiq.maximal(2, 2, tableau="[[1,2]]")
    assert single["candidate"]["maximal"] is True
    assert single["candidate"]["vector"] == [{"tuple": [1, 1], "coeff": "1"}]


def test_cli_roundtrip():
    cli = os.environ.get("PERIPLECTIQ_CLI")
    if not cli:
        return  # the binary location is wired in by ctest
    out = subprocess.run(
        [cli, "character", "--n", "2", "--k", "1", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    rep = json.loads(out.stdout)
    assert rep["command"] == "character"
    assert rep["dim"] == 4
    # usage errors exit with 2
    bad = subprocess.run([cli, "character", "--n", "9"], capture_output=True)
    assert bad.returncode == 2
