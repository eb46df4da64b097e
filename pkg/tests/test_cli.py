import json
from importlib import resources

import jsonschema
import pytest
from click.testing import CliRunner

from springer_kit.cli import main


@pytest.fixture(scope="module")
def schema():
    ref = resources.files("springer_kit") / "schema" / "output.schema.json"
    return json.loads(ref.read_text())


def run(*args):
    return CliRunner().invoke(main, list(args))


def check_json(res, schema):
    payload = json.loads(res.output)
    jsonschema.validate(payload, schema)
    return payload


def test_map_fixture(schema):
    res = run("map", "--N", "7", "--lambda", "3,3,1", "--eps", "+++")
    assert res.exit_code == 0
    assert "defect: 1" in res.output
    assert "alpha: 1" in res.output and "beta: 2" in res.output
    res = run("map", "--N", "7", "--lambda", "3,3,1", "--eps", "+++",
              "--json")
    payload = check_json(res, schema)
    assert payload["defect"] == 1 and payload["alpha"] == "1" \
        and payload["beta"] == "2"


def test_map_trivial():
    res = run("map", "--N", "1", "--lambda", "1", "--eps", "+")
    assert res.exit_code == 0
    assert "defect: 1" in res.output
    assert "alpha: -" in res.output and "beta: -" in res.output


def test_map_h_notice(schema):
    res = run("map", "--N", "9", "--lambda", "4,4,1", "--eps", "+")
    assert res.exit_code == 0
    assert "h_condition: false" in res.output
    payload = check_json(run("map", "--N", "9", "--lambda", "4,4,1",
                             "--eps", "+", "--json"), schema)
    assert payload["h_condition"] is False and payload["order"] is None


def test_map_input_errors():
    assert run("map", "--N", "5", "--lambda", "4,1", "--eps", "+").exit_code \
        == 2   # not orthogonal
    assert run("map", "--N", "6", "--lambda", "3,3,1",
               "--eps", "+++").exit_code == 2   # size mismatch
    assert run("map", "--N", "7", "--lambda", "3,3,1",
               "--eps", "+-+").exit_code == 2   # inconsistent signs


def test_unmap_roundtrip(schema):
    res = run("unmap", "--N", "7", "--k", "1", "--alpha", "1",
              "--beta", "2", "--json")
    payload = check_json(res, schema)
    assert payload["lambda"] == "3,3,1" and payload["eps"] == "+++"
    assert run("unmap", "--N", "7", "--k", "0", "--alpha", "1",
               "--beta", "2").exit_code == 2


def test_max_min(schema):
    res = run("max", "--lambda", "3,3,1", "--eps", "+++", "--method", "both")
    assert res.exit_code == 0 and "max: 7 / +" in res.output
    res = run("max", "--lambda", "1", "--eps", "+")
    assert res.exit_code == 0 and "max: 1 / +" in res.output
    res = run("min", "--lambda", "3,3,1", "--eps", "+++")
    assert res.exit_code == 0 and "1,1,1,1,1,1,1" in res.output
    payload = check_json(run("min", "--lambda", "3,3,1", "--eps", "+++",
                             "--method", "both", "--json"), schema)
    assert payload["result_lambda"] == "1,1,1,1,1,1,1"
    # even parts need the explicit flag
    assert run("max", "--lambda", "3,2,2", "--eps", "+").exit_code == 2
    res = run("max", "--lambda", "3,2,2", "--eps", "+", "--allow-even")
    assert res.exit_code == 0 and "max: 7 / +" in res.output


def test_mult(schema):
    res = run("mult", "--lambda", "3,3,1", "--eps", "+++",
              "--lambda2", "3,3,1", "--eps2", "+++")
    assert res.exit_code == 0 and res.output.strip() == "1"
    res = run("mult", "--lambda", "3,3,1", "--eps", "+++",
              "--lambda2", "7", "--eps2", "+")
    assert res.output.strip() == "1"
    # defect mismatch prints 0 rather than failing
    res = run("mult", "--lambda", "5,3,1", "--eps", "+-+",
              "--lambda2", "9", "--eps2", "+")
    assert res.exit_code == 0 and res.output.strip() == "0"
    payload = check_json(run("mult", "--lambda", "3,3,1", "--eps", "+++",
                             "--lambda2", "7", "--eps2", "+", "--json"),
                         schema)
    assert payload["mult"] == 1 and payload["tpoly"] == "t^2"
    # even-parts source is an input error
    assert run("mult", "--lambda", "3,2,2", "--eps", "+",
               "--lambda2", "7", "--eps2", "+").exit_code == 2
    # source failing the no-multiplicities condition is rejected
    assert run("mult", "--lambda", "4,4,1", "--eps", "+",
               "--lambda2", "9", "--eps2", "+").exit_code == 2


def test_mult_table():
    res = run("mult", "--lambda", "3,3,1", "--eps", "+++", "--table")
    lines = res.output.strip().splitlines()
    assert lines[0] == "N,lambda,eps,defect,lambda2,eps2,mult,tpoly"
    assert len(lines) == 4
    assert '7,"3,3,1",+++,1,7,+,1,t^2' in lines


def test_expand_and_enumerate():
    res = run("expand", "--alpha", "1", "--beta", "2", "--k", "1")
    assert res.exit_code == 0
    assert "order: aba" in res.output and "3 | - : t^2" in res.output
    res = run("enumerate", "--N", "3")
    assert res.output.splitlines() == ["3 / + / defect 1",
                                      "1,1,1 / +++ / defect 1"]
    res = run("enumerate", "--N", "5", "--table")
    assert res.output.splitlines()[0] \
        == "N,lambda,eps,defect,lambda2,eps2,mult,tpoly"


def test_verify(schema):
    res = run("verify", "--suite", "bijection", "--max-N", "8")
    assert res.exit_code == 0 and "failures 0" in res.output
    res = run("verify", "--suite", "max", "--max-N", "1")
    assert res.exit_code == 0 and "cases 1 " in res.output
    payload = check_json(run("verify", "--suite", "order", "--max-N", "6",
                             "--json"), schema)
    assert payload["ok"] is True
    assert run("verify", "--suite", "order", "--max-N", "0").exit_code == 2


def test_determinism_and_jobs():
    a = run("verify", "--suite", "algorithm", "--max-N", "9", "--json")
    b = run("verify", "--suite", "algorithm", "--max-N", "9", "--json")
    pa, pb = json.loads(a.output), json.loads(b.output)
    for p in (pa, pb):
        for r in p["reports"]:
            r.pop("elapsed_ms")
    assert pa == pb
    c = run("verify", "--suite", "algorithm", "--max-N", "9", "--jobs", "2",
            "--json")
    pc = json.loads(c.output)
    for r in pc["reports"]:
        r.pop("elapsed_ms")
    assert pc == pa
    # repeated table output is byte-identical
    t1 = run("mult", "--lambda", "3,3,1", "--eps", "+++", "--table").output
    t2 = run("mult", "--lambda", "3,3,1", "--eps", "+++", "--table").output
    assert t1 == t2
