import json
import subprocess
import sys
from fractions import Fraction

import pytest

from genus_engine.cli import main, run
from genus_engine.config import EngineConfig
from genus_engine.hierarchy import engine


def _json(argv):
    res = run(argv)
    assert res.code == 0, res.error
    doc = json.loads(res.text)
    assert doc["schema"] == "1"
    return doc


def test_zg_json():
    doc = _json(["zg", "--nu", "2", "--g", "1"])
    assert doc["coeffs"] == ["2/3", "-4/3", "2/3"]


def test_zg_round_trip_is_exact():
    doc = _json(["zg", "--nu", "3", "--g", "3"])
    assert tuple(Fraction(c) for c in doc["coeffs"]) == engine(3).zg(3).coeffs


def test_zg_series_order():
    doc = _json(["zg", "--nu", "2", "--g", "1", "--order", "3"])
    assert doc["series"] == ["0", "0", "96", "10368"]


def test_tg():
    assert _json(["tg", "--G", "1"])["t"] == ["1/24"]


def test_eg_fields():
    doc = _json(["eg", "--nu", "2", "--g", "2"])
    assert {"nu", "g", "numerator", "u_pole", "d", "o"} <= set(doc)
    assert doc["o"] == 5


def test_counts_and_kappa_csv():
    res = run(["counts", "--nu", "2", "--g", "1", "--jmax", "3", "--format", "csv"])
    assert res.text.splitlines() == ["j,count", "0,0", "1,0", "2,192", "3,62208"]
    res = run(["kappa", "--nu", "2", "--g", "1", "--jmax", "2", "--format", "csv"])
    assert res.text.splitlines() == ["j,kappa", "1,1", "2,60"]


def test_dcoeff_table():
    doc = _json(["dcoeff", "--nu", "2", "--g", "1"])
    table = {row["lambda"]: row["d"] for row in doc["table"]}
    assert table == {"[1]": 12, "[3]": 24, "[2,1]": 16, "[1,1,1]": 0}


def test_painleve_and_ds():
    doc = _json(["painleve", "--G", "3"])
    assert doc["pi_bridge"]["ok"]
    doc = _json(["ds", "--nu", "3", "--G", "3"])
    assert doc["shock_time"] == "1/405"
    assert len(doc["divergence_ratios"]) == 2


def test_numcheck_t_and_s_agree():
    a = _json(["numcheck", "--nu", "2", "--t", "0.05", "--N", "8,12", "--G", "0"])
    b = _json(["numcheck", "--nu", "2", "--s=-1/20", "--N", "8,12", "--G", "0"])
    assert a["errors"] == b["errors"] and a["t"] == "1/20"


def test_eqmeasure_csv():
    res = run(["eqmeasure", "--nu", "3", "--z0", "0.5", "--grid", "20"])
    lines = res.text.splitlines()
    assert lines[0] == "eta,density" and len(lines) == 21


def test_plotdata():
    res = run(["plotdata", "--nu", "2", "--grid", "4"])
    assert res.code == 0 and res.text.splitlines()[-1].endswith(",2.0")
    res = run(["plotdata", "--kind", "caustic", "--format", "json"])
    assert json.loads(res.text)["constant"] == "192"


def test_validate_subset():
    res = run(["validate", "--nu", "2", "--gmax", "2", "--only", "painleve,combinatorics.walk"])
    assert res.code == 0
    assert "painleve.pi_bridge" in res.text and "PASS" in res.text and "FAIL" not in res.text


def test_usage_errors_exit_2():
    assert run(["zg", "--nu", "2"]).code == 2
    assert run(["nonsense"]).code == 2
    assert run(["zg", "--nu", "2", "--g", "1", "--bogus"]).code == 2
    assert run(["zg", "--nu", "1", "--g", "1"]).code == 2
    assert run(["numcheck", "--t", "0.1", "--s", "0.1"]).code == 2
    assert run(["dcoeff", "--format", "yaml"]).code == 2


def test_structural_error_exit_1(monkeypatch):
    from genus_engine import hierarchy
    from genus_engine.errors import StructuralError

    def boom(self, g):
        raise StructuralError("forced")

    monkeypatch.setattr(hierarchy.GenusEngine, "zg", boom)
    res = run(["zg", "--nu", "7", "--g", "1"])
    assert res.code == 1 and "forced" in res.error


def test_out_file_written_atomically(tmp_path):
    target = tmp_path / "z.json"
    res = run(["zg", "--nu", "2", "--g", "2", "--out", str(target)])
    assert res.code == 0 and res.text == ""
    assert json.loads(target.read_text())["pole_order"] == 9
    assert [p.name for p in tmp_path.iterdir()] == ["z.json"]


def test_main_prints(capsys):
    assert main(["tg", "--G", "2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "7/4320 * pi^(-1/2)" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "genus_engine", "tg", "--G", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["t"] == ["1/24"]


def test_config_validation():
    cfg = EngineConfig(nu=3, t=Fraction(1, 20))
    assert cfg.s == Fraction(-1, 20)
    with pytest.raises(ValueError):
        EngineConfig(nu=2, g_max=99)
    with pytest.raises(ValueError):
        EngineConfig(fmt="xml")


def test_validate_full_suite_passes():
    res = run(["validate", "--nu", "2", "--gmax", "3", "--format", "json"])
    doc = json.loads(res.text)
    assert res.code == 0 and doc["ok"]
    ids = [r["id"] for r in doc["results"]]
    assert len(ids) == len(set(ids))
    # every module contributes at least one addressable check
    for mod in ("exactnum", "symbolics", "combinatorics", "hierarchy", "energy", "painleve",
                "numerics", "cli"):
        assert any(i.startswith(mod + ".") for i in ids)
