import json
import subprocess
import sys

from rankshift.cli import main

SMALL_SWEEP = """
base_seed: 11
trials_per_point: 2
grid: {start: 0.1, stop: 0.2, step: 0.1}
centralities: [degree]
models:
  - {family: scale_free, n: 20}
  - {family: small_world, n: 20, k: 4, p: 0.2}
"""


def write_config(tmp_path, text=SMALL_SWEEP):
    path = tmp_path / "sweep.yaml"
    path.write_text(text)
    return path


class TestRun:
    def test_produces_all_artifacts(self, tmp_path, capsys):
        config = write_config(tmp_path)
        out_dir = tmp_path / "out"
        code = main(["run", str(config), "--out-dir", str(out_dir), "--workers", "1"])
        assert code == 0
        assert (out_dir / "trials.csv").exists()
        assert (out_dir / "scatter_degree.svg").exists()
        manifest = json.loads((out_dir / "manifest.json").read_text())
        assert manifest["base_seed"] == 11
        assert manifest["en_rule"] == "example"
        assert len(manifest["cells"]) == 2
        captured = capsys.readouterr()
        assert "mean eps/n" in captured.out

    def test_seed_override_lands_in_manifest(self, tmp_path):
        config = write_config(tmp_path)
        out_dir = tmp_path / "out"
        code = main(["run", str(config), "--out-dir", str(out_dir),
                     "--workers", "1", "--seed", "99"])
        assert code == 0
        manifest = json.loads((out_dir / "manifest.json").read_text())
        assert manifest["base_seed"] == 99
        assert manifest["config"]["base_seed"] == 99

    def test_worker_count_keeps_csv_bytes_identical(self, tmp_path):
        config = write_config(tmp_path)
        out1 = tmp_path / "w1"
        out2 = tmp_path / "w2"
        assert main(["run", str(config), "--out-dir", str(out1), "--workers", "1"]) == 0
        assert main(["run", str(config), "--out-dir", str(out2), "--workers", "2"]) == 0
        assert (out1 / "trials.csv").read_bytes() == (out2 / "trials.csv").read_bytes()

    def test_config_error_exit_code(self, tmp_path, capsys):
        config = write_config(tmp_path, """
models:
  - {family: scale_free, n: 20, alpha: 0.5, beta: 0.35, gamma: 0.05}
""")
        code = main(["run", str(config)])
        assert code == 1
        captured = capsys.readouterr()
        assert captured.err.startswith("error: config:")
        assert "alpha + beta + gamma" in captured.err

    def test_missing_config_file(self, tmp_path, capsys):
        code = main(["run", str(tmp_path / "nope.yaml")])
        assert code == 1
        assert "error: config:" in capsys.readouterr().err


class TestGen:
    def test_writes_edge_list(self, tmp_path):
        out = tmp_path / "g.edges"
        code = main(["gen", "--seed", "4", "--out", str(out),
                     "scale-free", "--n", "30"])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "# nodes: 30"
        assert all(len(line.split()) == 2 for line in lines[1:])

    def test_deterministic_stdout(self, tmp_path, capsys):
        argv = ["gen", "--seed", "4", "small-world", "--n", "12", "--k", "4"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    def test_invalid_params_exit_one(self, capsys):
        code = main(["gen", "small-world", "--n", "10", "--k", "11"])
        assert code == 1
        assert "error: config:" in capsys.readouterr().err


class TestHist:
    def test_writes_svg(self, tmp_path):
        out = tmp_path / "h.svg"
        code = main(["hist", "--graphs", "2", "--out", str(out),
                     "scale-free", "--n", "40"])
        assert code == 0
        assert out.read_text().startswith("<svg")


class TestMetrics:
    def test_compare_files(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("1 2 3 4 5\n")
        b.write_text("1 5 2 3 4\n")
        assert main(["metrics", str(a), str(b)]) == 0
        out = capsys.readouterr().out
        assert "eps_raw=4" in out
        assert "epsN_raw=2.5" in out

    def test_mismatched_files_exit_one(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("1 2 3\n")
        b.write_text("1 2 4\n")
        assert main(["metrics", str(a), str(b)]) == 1
        assert "error: config:" in capsys.readouterr().err


class TestEntryPoint:
    def test_installed_script(self, tmp_path):
        result = subprocess.run(
            [sys.executable, "-m", "rankshift.cli", "metrics", "--help"],
            capture_output=True, text=True)
        assert result.returncode == 0
        assert "usage: rankshift metrics" in result.stdout
