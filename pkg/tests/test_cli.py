import json
import math
import subprocess
import sys

import pytest

from pedal_kernel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "pedal_kernel", *argv], capture_output=True, env=env)


class TestPoints:
    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "points", "--sides", "4,6,5")
        assert code == 0
        d = json.loads(out)
        assert d["schema"] == "pedal-kernel/1"
        assert set(d["points"]) == {"O", "Omega1", "Omega2", "L1", "L2", "L3",
                                    "Omega1p", "Omega2p", "L1p", "L2p", "L3p"}
        for name, p in d["points"].items():
            assert p["label_residual"] <= 1e-8, name
        assert d["points"]["Omega1"]["similar_to"] == "BCA"
        assert d["points"]["L3p"]["orientation"] == "negative"

    def test_345_brocard_angle(self, capsys):
        _, out, _ = run(capsys, "points", "--sides", "3,4,5")
        d = json.loads(out)
        assert d["brocard_angle_rad"] == pytest.approx(math.atan(12 / 25), abs=1e-14)

    def test_equilateral_has_no_exterior(self, capsys):
        code, out, _ = run(capsys, "points", "--sides", "1,1,1")
        d = json.loads(out)
        assert code == 0 and d["equilateral"]
        assert d["axis_g"] is None
        assert all(d["points"][k] is None for k in ("Omega1p", "Omega2p", "L1p", "L2p", "L3p"))

    def test_isosceles_reports_point_at_infinity(self, capsys):
        _, out, _ = run(capsys, "points", "--sides", "5,5,3")
        d = json.loads(out)
        assert "at_infinity" in d["points"]["L3p"]

    def test_no_negative_zero(self, capsys):
        _, out, _ = run(capsys, "points", "--sides", "4,6,5")
        assert "-0.0," not in out and "-0.0\n" not in out

    @pytest.mark.parametrize("argv", [
        ("points",),
        ("points", "--sides", "1,2,3"),
        ("points", "--sides", "1,2"),
        ("points", "--sides", "a,b,c"),
        ("points", "--vertices", "0,0,1,1,2,2"),
        ("points", "--sides", "3,4,5", "--eps", "0"),
        ("solve", "--sides", "3,4,5", "--angles", "1,1,1"),
        ("solve", "--sides", "3,4,5"),
        ("pedal", "--sides", "3,4,5"),
        ("render", "--sides", "3,4,5", "--out", "x.svg", "--layers", "nope"),
    ])
    def test_bad_input_exit_2(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert err.startswith("error:")


class TestSolvePedal:
    def test_solve_round_trip(self, capsys):
        code, out, _ = run(capsys, "solve", "--sides", "4,6,5", "--angles", "50,60,70", "--degrees")
        d = json.loads(out)
        assert code == 0
        assert d["roundtrip"]["inside"]["orientation"] == "positive"
        assert d["roundtrip"]["outside"]["orientation"] == "negative"
        assert d["roundtrip"]["inside"]["max_angle_error"] <= 1e-7
        assert d["discriminant"] > 0

    def test_identity_target(self, capsys):
        _, out, _ = run(capsys, "points", "--sides", "4,6,5")
        angles = json.loads(out)["triangle"]["angles_rad"]
        code, out, _ = run(capsys, "solve", "--sides", "4,6,5", "--angles", ",".join(repr(a) for a in angles))
        d = json.loads(out)
        assert d["identity_target"] and d["outside"] is None

    def test_pedal_on_circle(self, capsys):
        # (0,0) is vertex B; use the point diametrically opposite B instead
        _, out, _ = run(capsys, "points", "--sides", "4,6,5")
        (ox, oy) = json.loads(out)["circumcircle"]["center"]
        code, out, _ = run(capsys, "pedal", "--sides", "4,6,5", "--at", f"{2 * ox!r},{2 * oy!r}")
        d = json.loads(out)
        assert code == 0
        assert d["classification"] == "degenerate"
        assert d["angles"] is None and d["simson_line"] is not None

    def test_pedal_inside(self, capsys):
        code, out, _ = run(capsys, "pedal", "--sides", "4,6,5", "--at", "1.5,1", "--degrees")
        d = json.loads(out)
        assert d["classification"] == "positive"
        assert sum(d["angles"]) == pytest.approx(180.0, abs=1e-12)
        assert d["side_ratio_residual"] <= 1e-9


class TestVerify:
    def test_passes(self, capsys):
        code, out, err = run(capsys, "verify", "--trials", "20", "--seed", "3")
        d = json.loads(out)
        assert code == 0 and d["pass"]
        assert d["seed"] == 3
        assert "pass" in err.lower()

    def test_impossible_eps_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--trials", "5", "--eps", "1e-15")
        assert code == 1 and not json.loads(out)["pass"]

    def test_env_eps_and_flag_precedence(self, monkeypatch, capsys):
        monkeypatch.setenv("PEDAL_EPS", "1e-15")
        code, out, _ = run(capsys, "verify", "--trials", "5")
        assert code == 1 and json.loads(out)["eps"] == 1e-15
        code, out, _ = run(capsys, "verify", "--trials", "5", "--eps", "1e-9")
        assert code == 0 and json.loads(out)["eps"] == 1e-9

    def test_bad_env(self, monkeypatch, capsys):
        monkeypatch.setenv("PEDAL_EPS", "tiny")
        code, _, err = run(capsys, "verify", "--trials", "1")
        assert code == 2 and "PEDAL_EPS" in err

    def test_single_triangle(self, capsys):
        code, out, _ = run(capsys, "verify", "--sides", "1,1,1", "--trials", "10")
        assert code == 0

    def test_points_to_verify_round_trip(self, capsys):
        _, out, _ = run(capsys, "points", "--sides", "4,6,5")
        v = json.loads(out)["triangle"]["vertices"]
        coords = ",".join(repr(c) for name in "ABC" for c in v[name])
        code, out, _ = run(capsys, "verify", "--vertices", coords, "--trials", "20")
        assert code == 0


class TestProcess:
    def test_module_entry_point_and_determinism(self, tmp_path):
        for argv in (("points", "--sides", "4,6,5"),
                     ("solve", "--sides", "4,6,5", "--angles", "50,60,70", "--degrees")):
            first, second = run_proc(*argv), run_proc(*argv)
            assert first.returncode == 0
            assert first.stdout == second.stdout
        p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run_proc("render", "--sides", "4,6,5", "--out", str(p1)).returncode == 0
        assert run_proc("render", "--sides", "4,6,5", "--out", str(p2)).returncode == 0
        assert p1.read_bytes() == p2.read_bytes()
