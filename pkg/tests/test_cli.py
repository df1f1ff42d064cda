from __future__ import annotations

import json

from quintic_theta.cli.commands import main, series_by_id
from quintic_theta.config import ORDER_ENV_VAR


def _read(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_list_json(tmp_path):
    out = tmp_path / "list.json"
    assert main(["list", "--json", "--out", str(out)]) == 0
    payload = _read(out)
    assert payload["schema"] == 1
    assert any(entry["name"] == "watson-modular-eq" for entry in payload["identities"])


def test_verify_unknown_identity():
    assert main(["verify", "no-such-id"]) == 2


def test_verify_json(tmp_path):
    out = tmp_path / "reports.json"
    assert main(["verify", "array-structure", "--json", "--out", str(out)]) == 0
    [report] = _read(out)["reports"]
    assert report["name"] == "array-structure"
    assert report["verdict"] == "PASS"


def test_verify_text_table(capsys):
    assert main(["verify", "five-cores", "--order", "20"]) == 0
    assert "1 passed, 0 failed, 0 errored" in capsys.readouterr().out


def test_pentarray_hecke_matrix(tmp_path):
    out = tmp_path / "a2.json"
    assert main(["pentarray", "2", "--which", "A", "--check-paper", "--json", "--out", str(out)]) == 0
    payload = _read(out)
    assert payload["rows"][1] == [22, 5, -22]
    assert payload["published"] == "MATCH"


def test_pentarray_text(capsys):
    assert main(["pentarray", "1", "--which", "B", "--check-paper"]) == 0
    assert "MATCH" in capsys.readouterr().out


def test_pentarray_out_of_range():
    assert main(["pentarray", "13"]) == 2


def test_scan_exit_codes():
    assert main(["scan", "-k", "1", "-M", "5", "-a", "5", "-b", "4", "--nmax", "100"]) == 0
    assert main(["scan", "-k", "1", "-M", "7", "-a", "5", "-b", "4", "--nmax", "50"]) == 1
    assert main(["scan", "-k", "1"]) == 2
    assert main(["scan", "--preset", "ramanujan-5", "--nmax", "50"]) == 0


def test_dump_e4(tmp_path):
    out = tmp_path / "e4.json"
    assert main(["dump", "E4", "--order", "5", "--json", "--out", str(out)]) == 0
    payload = _read(out)
    assert [t["coeff"] for t in payload["terms"]] == ["1", "240", "2160", "6720", "17520"]


def test_dump_ids():
    a = series_by_id("A", 3)
    assert a.grid_den == 5
    assert series_by_id("L_{2,chi3}", 4).integer_coeffs() == [0, 1, 1, 2]
    assert series_by_id("E2chi1", 3).coeff(0) == 1
    assert series_by_id("delta", 4).integer_coeffs() == [0, 1, -24, 252]


def test_dump_unknown_id():
    assert main(["dump", "Z"]) == 2


def test_bad_environment_order(monkeypatch):
    monkeypatch.setenv(ORDER_ENV_VAR, "abc")
    assert main(["dump", "E4"]) == 2


def test_browse_launches_dashboard_with_config(monkeypatch):
    from quintic_theta.ui import app as app_module

    launched = []
    monkeypatch.setattr(app_module.QuinticThetaApp, "run", lambda self: launched.append(self.config.run.order))
    assert main(["browse", "--order", "12"]) == 0
    assert launched == [12]
    assert not hasattr(app_module, "main")
