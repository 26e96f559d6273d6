import os
import textwrap

import pytest

from piezoscanner.cli import run
from piezoscanner.config import ConfigError, parse_config

SCANNER_A_CFG = textwrap.dedent(
    """\
    [material.substrate]
    name = silicon

    [material.piezo]
    name = pzt-5h

    [geometry]
    beam_length_um = 850
    beam_width_um = 30
    substrate_thickness_um = 5
    piezo_thickness_um = 1
    mirror_side_um = 300

    [drive]
    voltage_V = 50
    """
)


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "scannerA.cfg"
    path.write_text(SCANNER_A_CFG)
    return str(path)


class TestParseConfig:
    def test_reference_config(self):
        doc = parse_config(SCANNER_A_CFG)
        assert doc.substrate.young_modulus == 169e9
        assert doc.piezo.d31 == -274e-12
        assert doc.beam_length == pytest.approx(850e-6)
        assert doc.voltage == 50.0

    def test_explicit_constants(self):
        text = SCANNER_A_CFG.replace(
            "[material.piezo]\nname = pzt-5h",
            "[material.piezo]\nE_GPa = 60.6\nd31_pm_per_V = -274",
        )
        doc = parse_config(text)
        assert doc.piezo.young_modulus == pytest.approx(60.6e9)
        assert doc.piezo.d31 == pytest.approx(-274e-12)

    def test_name_and_constants_rejected(self):
        text = SCANNER_A_CFG.replace(
            "[material.piezo]\nname = pzt-5h",
            "[material.piezo]\nname = pzt-5h\nE_GPa = 60.6",
        )
        with pytest.raises(ConfigError, match="not both"):
            parse_config(text)

    def test_negative_geometry_rejected(self):
        with pytest.raises(ConfigError, match="beam_width_um"):
            parse_config(SCANNER_A_CFG.replace("beam_width_um = 30", "beam_width_um = -30"))

    def test_duplicate_section_rejected(self):
        with pytest.raises(ConfigError, match="duplicate section"):
            parse_config(SCANNER_A_CFG + "\n[drive]\nvoltage_V = 10\n")

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown key"):
            parse_config(SCANNER_A_CFG.replace("voltage_V = 50", "voltage_V = 50\ncurrent_A = 1"))

    def test_unknown_section_rejected(self):
        with pytest.raises(ConfigError, match="unknown section"):
            parse_config(SCANNER_A_CFG + "\n[thermal]\nT_K = 300\n")

    def test_missing_key_named(self):
        with pytest.raises(ConfigError, match="mirror_side_um"):
            parse_config(SCANNER_A_CFG.replace("mirror_side_um = 300\n", ""))

    def test_missing_section_named(self):
        with pytest.raises(ConfigError, match="drive"):
            parse_config(SCANNER_A_CFG.split("[drive]")[0])

    def test_unknown_material_rejected(self):
        with pytest.raises(Exception, match="unobtainium"):
            parse_config(SCANNER_A_CFG.replace("name = silicon", "name = unobtainium"))


class TestModelCommand:
    def test_summary_and_csv(self, config_path, tmp_path, capsys):
        out = str(tmp_path / "model.csv")
        assert run(["model", "--config", config_path, "--out", out]) == 0
        stdout = capsys.readouterr().out
        assert "phi_deg=0.531974242" in stdout
        assert "y_max_um=2.28513075" in stdout
        assert "F_uN=43.9528235" in stdout
        lines = open(out).read().splitlines()
        assert lines[0] == "phi_deg,y_max_um,x_at_ymax_um,F_uN,R_A_uN,rigidity_Nm2"
        fields = lines[1].split(",")
        assert float(fields[0]) == pytest.approx(0.5319742417, rel=1e-9)
        assert float(fields[5]) == pytest.approx(9.29782829e-11, rel=1e-8)

    def test_missing_config_file(self, tmp_path, capsys):
        assert run(["model", "--config", str(tmp_path / "nope.cfg")]) == 1
        assert capsys.readouterr().err.startswith("config:")

    def test_invalid_config_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text(SCANNER_A_CFG.replace("beam_width_um = 30", "beam_width_um = -30"))
        assert run(["model", "--config", str(bad), "--out", str(tmp_path / "m.csv")]) == 1
        assert capsys.readouterr().err.startswith("config:")


class TestProfileCommand:
    def test_five_sample_profile(self, config_path, tmp_path):
        out = str(tmp_path / "p.csv")
        assert run(["profile", "--config", config_path, "--samples", "5", "--out", out]) == 0
        lines = open(out).read().splitlines()
        assert lines[0] == "x_um,y_um"
        assert len(lines) == 6
        rows = [line.split(",") for line in lines[1:]]
        assert float(rows[0][1]) == 0.0  # left anchor
        assert float(rows[2][1]) == 0.0  # mirror center
        assert float(rows[-1][1]) == 0.0  # right anchor
        assert float(rows[2][0]) == pytest.approx(1000.0)

    def test_byte_stable(self, config_path, tmp_path):
        out1 = str(tmp_path / "p1.csv")
        out2 = str(tmp_path / "p2.csv")
        run(["profile", "--config", config_path, "--samples", "101", "--out", out1])
        run(["profile", "--config", config_path, "--samples", "101", "--out", out2])
        assert open(out1, "rb").read() == open(out2, "rb").read()


class TestSweepCommand:
    def test_sweep_csv(self, config_path, tmp_path):
        out = str(tmp_path / "s.csv")
        code = run(
            [
                "sweep", "--config", config_path, "--axis", "beam_length",
                "--from=500e-6", "--to=850e-6", "--steps", "3", "--out", out,
            ]
        )
        assert code == 0
        lines = open(out).read().splitlines()
        assert lines[0] == "param_name,param_value_si,phi_deg,y_max_um,F_uN,R_A_uN,status"
        assert len(lines) == 4
        assert all(line.endswith(",ok") for line in lines[1:])
        assert lines[1].startswith("beam_length,0.0005,")

    def test_bad_range_exit_code(self, config_path, tmp_path, capsys):
        code = run(
            [
                "sweep", "--config", config_path, "--axis", "voltage",
                "--from=50", "--to=50", "--steps", "3",
                "--out", str(tmp_path / "s.csv"),
            ]
        )
        assert code == 1
        assert capsys.readouterr().err.startswith("config:")

    def test_failed_points_flagged(self, config_path, tmp_path, capsys):
        out = str(tmp_path / "s.csv")
        code = run(
            [
                "sweep", "--config", config_path, "--axis", "substrate_thickness",
                "--from=-1e-6", "--to=1e-6", "--steps", "3", "--out", out,
            ]
        )
        assert code == 2
        lines = open(out).read().splitlines()
        assert any("error" in line for line in lines[1:])


class TestTable1Command:
    def test_rows(self, tmp_path, capsys):
        out = str(tmp_path / "t.csv")
        assert run(["table1", "--out", out]) == 0
        lines = open(out).read().splitlines()
        assert len(lines) == 4
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert values == [850e-6, 600e-6, 500e-6]
        tilts = [float(line.split(",")[2]) for line in lines[1:]]
        assert tilts[0] > tilts[1] > tilts[2]


class TestVerifyCommand:
    def test_verify_passes(self, capsys):
        assert run(["verify", "--nodes", "801"]) == 0
        stdout = capsys.readouterr().out
        assert "assumed constants" in stdout
        assert "closed_form_identity" in stdout
        assert "FAIL" not in stdout

    def test_bad_nodes(self, capsys):
        assert run(["verify", "--nodes", "10"]) == 1
        assert capsys.readouterr().err.startswith("config:")


class TestAtomicWrites:
    def test_no_partial_file_on_failure(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text(SCANNER_A_CFG.replace("beam_width_um = 30", "beam_width_um = -30"))
        out = tmp_path / "p.csv"
        code = run(["profile", "--config", str(bad), "--samples", "5", "--out", str(out)])
        assert code == 1
        assert not out.exists()
        assert not [f for f in os.listdir(tmp_path) if f.startswith(".tmp-")]
