import json

from fastapi.testclient import TestClient

from ellstab.cli import main as cli_main
from ellstab.schemas import RunReport
from ellstab.service import app


def test_health_and_listing():
    client = TestClient(app)
    assert client.get("/health").json() == {"status": "ok"}
    suites = client.get("/checks").json()
    names = {s["suite"] for s in suites}
    assert names == {"fgl", "stabilizer", "action", "cohomology", "bockstein", "adrss"}
    assert all(s["checks"] == sorted(s["checks"]) for s in suites)


def test_unknown_suite_is_422():
    client = TestClient(app)
    r = client.post("/run", json={"suites": ["nope"], "config": {}})
    assert r.status_code == 422


def test_run_fgl_suite():
    client = TestClient(app)
    r = client.post("/run", json={"suites": ["fgl"], "config": {}})
    assert r.status_code == 200
    rep = RunReport.model_validate(r.json())
    assert rep.summary.failed == 0
    assert rep.summary.total >= 10
    ids = [c.check_id for c in rep.checks]
    assert ids == sorted(ids)


def test_digit_endpoint():
    client = TestClient(app)
    r = client.post("/run", json={"suites": ["action"],
                                  "config": {"digits": "w,0,1"}})
    rep = RunReport.model_validate(r.json())
    assert rep.summary.failed == 0
    assert any(c.check_id.startswith("action.digits.") for c in rep.checks)


def test_cli_exit_codes_and_stable_json(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert cli_main(["fgl", "--json", str(out1)]) == 0
    assert cli_main(["fgl", "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    payload = json.loads(out1.read_text())
    assert "elapsed" not in payload["checks"][0]
    assert cli_main(["bogus"]) == 2


def test_cli_table(capsys):
    assert cli_main(["table", "--group", "c6", "--t-window", "6", "--s-max", "2"]) == 0
    out = capsys.readouterr().out
    assert "(t-s, s)" in out
