import os
import subprocess

import pytest

BIN = os.environ.get("KSPACE_SAMPLER_BIN")

pytestmark = pytest.mark.skipif(BIN is None, reason="KSPACE_SAMPLER_BIN not set")


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def test_default_run_emits_all_files(tmp_path):
    out = tmp_path / "gro"
    r = run("gro", "--out", str(out))
    assert r.returncode == 0
    for name in ["samples.csv", "mask.pbm", "render.pgm", "trace.pgm", "stats.txt"]:
        assert (out / name).is_file(), name
    first = (out / "samples.csv").read_text().splitlines()[0]
    assert first == "# kspace-sampler v1"


def test_3d_method_has_no_trace(tmp_path):
    out = tmp_path / "opra"
    r = run("opra", "--out", str(out))
    assert r.returncode == 0
    assert (out / "mask.pbm").is_file()
    assert not (out / "trace.pgm").exists()


def test_format_selection(tmp_path):
    out = tmp_path / "sel"
    r = run("gro", "--format", "csv,stats", "--out", str(out))
    assert r.returncode == 0
    assert (out / "samples.csv").is_file()
    assert (out / "stats.txt").is_file()
    assert not (out / "mask.pbm").exists()
    assert not (out / "render.pgm").exists()


def test_rebin_flag(tmp_path):
    out = tmp_path / "cava"
    r = run("cava", "--rebin-n", "12", "--out", str(out))
    assert r.returncode == 0
    assert "grid.frames=24" in (out / "stats.txt").read_text()


def test_bad_parameter_value_exits_2(tmp_path):
    r = run("gro", "--s", "0.5", "--out", str(tmp_path / "x"))
    assert r.returncode == 2
    assert r.stderr != ""


def test_bad_rebin_value_exits_2(tmp_path):
    r = run("cava", "--rebin-n", "0", "--out", str(tmp_path / "x"))
    assert r.returncode == 2


def test_unknown_method_exits_2():
    r = run("nope", "--out", "/tmp/never-created")
    assert r.returncode == 2


def test_inapplicable_flag_exits_2(tmp_path):
    r = run("gro", "--seed", "5", "--out", str(tmp_path / "x"))
    assert r.returncode == 2


def test_unknown_format_exits_2(tmp_path):
    r = run("gro", "--format", "bogus", "--out", str(tmp_path / "x"))
    assert r.returncode == 2


def test_missing_out_exits_2():
    r = run("gro")
    assert r.returncode == 2


def test_unwritable_out_exits_3():
    r = run("gro", "--out", "/proc/kspace-cannot-write-here")
    assert r.returncode == 3
