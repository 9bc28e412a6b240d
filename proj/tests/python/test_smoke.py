import math
from collections import Counter

import pytest

import kspacesampler as ks


def test_golden_constants():
    assert abs(ks.golden_ratio() - (1 + math.sqrt(5)) / 2) < 1e-15
    assert abs(ks.golden_fraction(1) - (math.sqrt(5) - 1) / 2) < 1e-12
    with pytest.raises(ValueError):
        ks.golden_fraction(0)


def test_stretch_map():
    sm = ks.make_stretch_map(160, 2.2, 3.0)
    assert sm.small_n == 73
    assert sm.apply(1.0) == 1
    assert sm.apply(37.0) == 81
    assert abs(sm.apply_real(37.0) - 80.5) < 1e-12
    with pytest.raises(ValueError):
        ks.make_stretch_map(160, 0.5, 3.0)


def test_gro_defaults():
    pat = ks.generate_gro(ks.GroParams())
    assert pat.method == "gro"
    assert len(pat) == 768
    samples = pat.samples()
    frames = Counter(s[2] for s in samples)
    assert len(frames) == 64
    assert set(frames.values()) == {12}
    assert all(1 <= s[3] <= 160 and s[4] == 1 for s in samples)


def test_gro_validation():
    p = ks.GroParams()
    p.s = 0.5
    with pytest.raises(ValueError):
        ks.generate_gro(p)


def test_vista_quick():
    p = ks.VistaParams()
    p.max_iters = 3
    pat = ks.generate_vista(p)
    assert len(pat) == 768
    cells = {(s[3], s[2]) for s in pat.samples()}
    assert len(cells) == 768  # no duplicate (ky, frame)


def test_cava_rebin_and_stats():
    pat = ks.generate_cava(ks.CavaParams())
    assert len(pat) == 576
    rb = ks.rebin_2d(pat, 12)
    assert rb.grid.frames == 24
    stats = ks.pattern_stats(rb)
    assert sum(stats["per_frame_counts"]) == 576
    assert set(stats["per_frame_counts"]) == {12}
    assert 0 < stats["coverage_fraction"] <= 1
    with pytest.raises(ValueError):
        ks.rebin_2d(pat, 0)


def test_determinism():
    a = ks.generate_cava(ks.CavaParams()).samples()
    b = ks.generate_cava(ks.CavaParams()).samples()
    assert a == b


def test_opra_and_pr4d():
    opra = ks.generate_opra(ks.OpraParams())
    assert len(opra) == 2400
    assert opra.grid.ny == 96 and opra.grid.nz == 60
    rb = ks.rebin_3d(opra, 10)
    assert rb.grid.frames == 240

    pr4d = ks.generate_pr4d(ks.Pr4dParams())
    assert len(pr4d) == 9600
    assert pr4d.samples_per_encoding() == 2400
    stats = ks.pattern_stats(pr4d)
    assert len(stats["jump_stats"]) == 4
    assert sum(stats["ring_cells"]) == 96 * 60


def test_masks():
    m = ks.mask_kyt(ks.generate_gro(ks.GroParams()))
    assert m["rows"] == 160 and m["cols"] == 64
    assert sum(m["counts"]) == 768

    m3 = ks.mask_kykz(ks.generate_opra(ks.OpraParams()))
    assert m3["rows"] == 96 and m3["cols"] == 60
    assert sum(m3["counts"]) == 2400

    with pytest.raises(ValueError):
        ks.mask_kykz(ks.generate_gro(ks.GroParams()))


def test_csv_round_trip(tmp_path):
    pat = ks.generate_gro(ks.GroParams())
    path = str(tmp_path / "samples.csv")
    ks.write_samples_csv(pat, path)
    method, rows = ks.read_samples_csv(path)
    assert method == "gro"
    assert rows == pat.samples()

    ks.write_mask_pbm(pat, str(tmp_path / "mask.pbm"))
    header = (tmp_path / "mask.pbm").read_text().splitlines()[:2]
    assert header == ["P1", "64 160"]
