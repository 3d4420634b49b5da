import re
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from atomcomplexity.cli import main
from atomcomplexity.rhf import bundled_basis_path

FLAGS = {
    "compute": {"--z", "--basis", "--hydrogenic", "--gamma", "--tol"},
    "scan": {"--z-min", "--z-max", "--basis", "--gamma", "--out", "--jobs", "--tol"},
    "fit": {"--in", "--column", "--z-min", "--z-max"},
    "compare": {"--in", "--a", "--b", "--z-min", "--z-max"},
    "plot": {"--in", "--series", "--out", "--width", "--height", "--gnuplot"},
    "validate": {"--basis"},
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def csv_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("scan") / "c.csv"
    assert main(["scan", "--z-min", "1", "--z-max", "54", "--out", str(path)]) == 0
    return path


@pytest.mark.parametrize("command", sorted(FLAGS))
def test_help_lists_exactly_the_flags(capsys, command):
    with pytest.raises(SystemExit) as info:
        main([command, "--help"])
    assert info.value.code == 0
    out = capsys.readouterr().out
    options = out.split("options:")[-1]
    found = set(re.findall(r"(?<![\w-])(--[a-z][a-z-]*)", options)) - {"--help"}
    assert found == FLAGS[command]


def test_entry_point_runs():
    res = subprocess.run([sys.executable, "-m", "atomcomplexity.cli", "--help"], capture_output=True, text=True)
    assert res.returncode == 0
    for command in FLAGS:
        assert command in res.stdout


class TestCompute:
    def test_hydrogenic(self, capsys):
        code, out, _ = run(capsys, "compute", "--hydrogenic", "--z", "1")
        assert code == 0
        values = dict(line.split(" = ") for line in out.splitlines())
        assert float(values["S"]) == pytest.approx(6.56659, abs=1e-5)
        assert values["S_r"] == "4.144729886"
        assert "Gamma_0_4" in values and "C" in values

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "compute", "--z", "55")
        assert code == 1
        assert "Z out of supported range [1,54]" in err

    def test_neon_with_gammas(self, capsys):
        code, out, _ = run(capsys, "compute", "--z", "10", "--basis", str(bundled_basis_path()),
                           "--gamma", "0,4", "--gamma", "1,1")
        assert code == 0
        keys = [line.split(" = ")[0] for line in out.splitlines()]
        assert keys[-3:] == ["Gamma_0_4", "Gamma_1_1", "C"]

    def test_missing_atom_names_range(self, capsys, tmp_path):
        basis = tmp_path / "h.sto"
        basis.write_text("atom Z=1 symbol=H\norbital label=1S l=0 occ=1\nterm c=1 n=1 zeta=1\nend\n")
        code, _, err = run(capsys, "compute", "--z", "4", "--basis", str(basis))
        assert code == 2
        assert "available Z: 1..1" in err

    def test_bad_gamma_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compute", "--z", "1", "--gamma", "1"])
        assert info.value.code == 1

    def test_tol_override(self, capsys):
        code, out, _ = run(capsys, "compute", "--hydrogenic", "--z", "2", "--tol", "1e-8")
        assert code == 0


class TestScan:
    def test_rows_and_determinism(self, csv_path, tmp_path):
        lines = csv_path.read_text().splitlines()
        assert len(lines) == 55
        again = tmp_path / "again.csv"
        assert main(["scan", "--z-min", "1", "--z-max", "54", "--out", str(again)]) == 0
        assert again.read_bytes() == csv_path.read_bytes()

    def test_default_range(self, capsys):
        code, out, _ = run(capsys, "scan", "--z-min", "2", "--z-max", "3")
        assert code == 0
        assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["2", "3"]

    def test_missing_atom(self, capsys, tmp_path):
        text = bundled_basis_path().read_text()
        blocks = text.split("atom Z=")
        kept = [b for b in blocks[1:] if not b.startswith("3 ")]
        basis = tmp_path / "gap.sto"
        basis.write_text("".join("atom Z=" + b for b in kept))
        code, _, err = run(capsys, "scan", "--z-min", "2", "--z-max", "5", "--basis", str(basis))
        assert code == 2
        assert "Z = 3" in err

    def test_bad_range(self, capsys):
        assert run(capsys, "scan", "--z-min", "5", "--z-max", "2")[0] == 1
        assert run(capsys, "scan", "--z-min", "2", "--z-max", "60")[0] == 1


class TestAnalysis:
    def test_fit(self, capsys, csv_path):
        code, out, _ = run(capsys, "fit", "--in", str(csv_path), "--column", "S")
        assert code == 0
        m = re.search(r"a=(\S+) b=(\S+) rms=(\S+)", out)
        assert float(m.group(1)) == pytest.approx(6.257, abs=0.05)
        assert float(m.group(2)) == pytest.approx(1.069, abs=0.02)
        assert "[2,54]" in out

    def test_fit_range_override(self, capsys, csv_path):
        code, out, _ = run(capsys, "fit", "--in", str(csv_path), "--column", "S", "--z-min", "1")
        assert code == 0 and "[1,54]" in out

    def test_unknown_column(self, capsys, csv_path):
        code, _, err = run(capsys, "fit", "--in", str(csv_path), "--column", "entropy")
        assert code == 1
        assert "valid columns" in err and "Gamma_0_4" in err

    def test_compare(self, capsys, csv_path):
        code, out, _ = run(capsys, "compare", "--in", str(csv_path), "--a", "C", "--b", "Gamma_0_4")
        assert code == 0
        scale = float(re.search(r"scale=(\S+)", out).group(1))
        assert 150 <= scale <= 260
        minima = {int(z) for z in re.search(r"shared_minima=(\S+)", out).group(1).split(",")}
        assert {10, 18, 24, 29, 36, 42, 46} <= minima

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "fit", "--in", str(tmp_path / "none.csv"), "--column", "S")[0] == 2


class TestPlot:
    def test_svg(self, capsys, csv_path, tmp_path):
        svg = tmp_path / "fig2.svg"
        gp = tmp_path / "fig2.gp"
        code, _, _ = run(capsys, "plot", "--in", str(csv_path), "--series", "C", "--series", "Gamma_0_4:200",
                         "--out", str(svg), "--gnuplot", str(gp))
        assert code == 0
        root = ET.parse(svg).getroot()
        ns = "{http://www.w3.org/2000/svg}"
        assert root.tag == ns + "svg"
        lines = root.findall(f"{ns}polyline")
        assert len(lines) == 2
        assert all(len(pl.get("points").split()) == 54 for pl in lines)
        assert root.findall(f"{ns}circle")
        texts = [t.text for t in root.iter(f"{ns}text")]
        assert "Z" in texts and "C" in texts and "200*Gamma_0_4" in texts
        assert "plot $data" in gp.read_text()

    def test_deterministic(self, capsys, csv_path, tmp_path):
        outs = []
        for name in ("a.svg", "b.svg"):
            assert main(["plot", "--in", str(csv_path), "--series", "C", "--out", str(tmp_path / name)]) == 0
            outs.append((tmp_path / name).read_bytes())
        assert outs[0] == outs[1]

    def test_bad_scale(self, capsys, csv_path, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(["plot", "--in", str(csv_path), "--series", "C:-1", "--out", str(tmp_path / "x.svg")])
        assert info.value.code == 1


class TestValidate:
    def test_bundled(self, capsys):
        code, out, _ = run(capsys, "validate")
        assert code == 0
        assert "atoms=54" in out
        worst = float(re.search(r"atoms=54 max_residual=(\S+)", out).group(1))
        assert worst <= 1e-6

    def test_broken_file(self, capsys, tmp_path):
        basis = tmp_path / "bad.sto"
        basis.write_text("atom Z=1 symbol=H\norbital label=1S l=0 occ=1\nterm c=1.5 n=1 zeta=1\nend\n")
        code, _, err = run(capsys, "validate", "--basis", str(basis))
        assert code == 2
        assert "bad.sto:2:" in err
