import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from hsmult import cli
from hsmult.errors import InternalError
from hsmult.multiplicity import MultiplicityReport, replay

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], stdout=out, stderr=err)
    report = json.loads(out.getvalue()) if out.getvalue() else None
    return code, report, err.getvalue()


def ok(*argv):
    code, report, err = call(*argv)
    assert code == 0, err
    return report


def test_hs_cusp():
    rep = ok("hs", "--ideal", DATA / "cusp_m.json", "--quotient", DATA / "cusp_J.json")
    assert rep["result"] == {"value": 2, "dimension": 1}
    assert set(rep) == {"command", "result", "certificate", "wall_time_s"}


def test_hs_certificate_replays():
    rep = ok("hs", "--ideal", DATA / "xy_powers.json", "--backend", "general")
    cert = MultiplicityReport.from_json(rep["certificate"])
    assert replay(cert) == rep["result"]["value"] == 6


def test_mixed_and_polarization():
    ideals = [DATA / "cusp_m.json", DATA / "xy_powers.json"]
    assert ok("mixed", "--ideals", *ideals, "--degrees", "1,1")["result"]["value"] == 2
    rep = ok("polarization", "--ideals", *ideals, "--powers", "1,1")
    assert rep["result"] == {"lhs": 11, "rhs": 11, "equal": True}


def test_rees_sharp():
    rep = ok("rees-sharp", "--ideals", DATA / "cusp_m.json", DATA / "xy_powers.json")
    assert rep["result"] == {"chain": [6, 2, 1], "pass": True}


def test_newton_certificate_reproduces_value():
    rep = ok("newton2d", "--ideal", DATA / "staircase8.json")
    assert rep["result"]["value"] == 11
    hull = rep["certificate"]["hull_vertices"]
    # doubled area under the hull, with the origin closing the polygon
    poly = [(0, 0)] + [tuple(v) for v in hull]
    twice = abs(sum(x1 * y2 - x2 * y1 for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1])))
    assert twice == 11


def test_staircase():
    assert ok("staircase", "--ideal", DATA / "staircase8.json")["result"]["value"] == 8
    assert ok("staircase", "--ideal", DATA / "xy_powers.json")["result"]["value"] == 6


def test_curve_commands():
    rep = ok("curve-lelong", "--germ", DATA / "node_germ.json", "--weights", DATA / "cusp_m.json")
    assert rep["result"]["value"] == 2
    assert rep["certificate"]["branch_orders"] == [1, 1]
    rep = ok("verify-curve", "--germ", DATA / "cusp_germ.json", "--quotient", DATA / "cusp_J.json",
             "--ideal", DATA / "cusp_m.json")
    assert rep["result"] == {"lelong": 2, "hs": 2, "equal": True}


def test_blowdown_commands():
    assert ok("blowdown", "--datum", DATA / "canonical_g3.json")["result"]["value"] == 4
    assert ok("blowdown", "--datum", DATA / "sphere_tangent.json")["result"]["value"] == 2
    rep = ok("blowdown", "--datum", DATA / "nonweierstrass_g3.json")
    assert rep["result"]["value"] == 4
    assert rep["certificate"]["base_points"][0]["lambda"] == 3
    rep = ok("semigroup", "--gaps", "1,2,3")
    assert rep["result"]["first_nongap"] == 4
    assert rep["result"]["blowdown_multiplicity"] == 4


def test_bounds_and_vol_control():
    rep = ok("bounds", "--k0", 1, "--k1", 2, "--p", 1, "--n", 1, "--vol", 1, "--volB", 1)
    assert rep["result"] == {"lower": 2, "upper": 2}
    rep = ok("vol-control", "--k0", 2, "--k1", 3, "--p", 1, "--n", 2, "--vol", 1, "--volB", 5)
    assert rep["result"] == {"bound": 2, "slack": -3, "pass": False}
    rep = ok("bounds", "--k0", 1, "--k1", 3, "--p", 1, "--n", 2, "--vol", "1/3", "--volB", 0)
    assert rep["result"]["lower"] == "1/3"


def test_segre():
    rep = ok("segre", "--chern", DATA / "line_chern.json", "--table", DATA / "line_table_g3.json")
    assert rep["result"]["value"] == 4
    rep = ok("segre", "--chern", DATA / "rank2_chern.json", "--table", DATA / "rank2_table.json")
    assert rep["result"]["value"] == 1
    assert rep["certificate"]["segre_of_dual"] == ["1", "c1", "c1^2 - c2"]


def test_every_subcommand_is_exercised():
    tested = {"hs", "mixed", "polarization", "rees-sharp", "newton2d", "staircase", "curve-lelong",
              "verify-curve", "blowdown", "semigroup", "bounds", "vol-control", "segre"}
    assert set(cli.COMMANDS) == tested


def test_deterministic_output():
    argv = ["polarization", "--ideals", DATA / "cusp_m.json", DATA / "xy_powers.json",
            "--powers", "2,1"]
    first, second = ok(*argv), ok(*argv)
    first.pop("wall_time_s")
    second.pop("wall_time_s")
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_output_keys_are_sorted_and_compact():
    out = io.StringIO()
    cli.run(["semigroup", "--gaps", "1,3"], stdout=out, stderr=io.StringIO())
    text = out.getvalue().strip()
    assert text == cli.dumps(json.loads(text))
    pretty = io.StringIO()
    cli.run(["semigroup", "--gaps", "1,3", "--pretty"], stdout=pretty, stderr=io.StringIO())
    assert "\n  " in pretty.getvalue()


def test_bigint_marker():
    assert cli.to_plain(2 ** 53 - 1) == 2 ** 53 - 1
    assert cli.to_plain(2 ** 60) == {"bigint": str(2 ** 60)}
    assert cli.to_plain(-(2 ** 60)) == {"bigint": str(-(2 ** 60))}
    assert cli.to_plain(Fraction(2 ** 60, 1)) == {"bigint": str(2 ** 60)}
    rep = ok("bounds", "--k0", 1, "--k1", 1, "--p", 1, "--n", 1, "--vol", 10 ** 20, "--volB", 0)
    assert rep["result"]["lower"] == {"bigint": str(10 ** 20)}


@pytest.mark.parametrize("argv", [
    ["hs", "--ideal", "missing.json"],
    ["hs"],
    ["semigroup", "--gaps", "2"],
    ["semigroup", "--gaps", "a,b"],
    ["hs", "--ideal", str(DATA / "canonical_g3.json")],
    ["bounds", "--k0", "2", "--k1", "1", "--p", "1", "--n", "1", "--vol", "1", "--volB", "0"],
    ["bounds", "--k0", "1", "--k1", "1", "--p", "1", "--n", "1", "--vol", "x", "--volB", "0"],
    ["nonsense"],
])
def test_invalid_input_exit_code(argv):
    code, report, err = call(*argv)
    assert code == 2 and report is None and err


def test_parse_error_reports_offset(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"ambient": ["x", "y"], "generators": ["x + * y"]}))
    code, _, err = call("hs", "--ideal", bad)
    assert code == 2 and "byte 4" in err


def test_not_origin_supported_exit_code(tmp_path):
    f = tmp_path / "xy.json"
    f.write_text(json.dumps({"ambient": ["x", "y"], "generators": ["x*y"]}))
    assert call("hs", "--ideal", f)[0] == 2


def test_budget_exit_code():
    code, _, err = call("hs", "--ideal", DATA / "xy_powers.json", "--budget", 3)
    assert code == 3 and "budget" in err


def test_internal_error_exit_code(monkeypatch):
    def broken(args):
        raise InternalError("forced")
    monkeypatch.setitem(cli.COMMANDS, "staircase", broken)
    code, _, err = call("staircase", "--ideal", DATA / "staircase8.json")
    assert code == 1 and "forced" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hsmult", "semigroup", "--gaps", "1,2,3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["first_nongap"] == 4
