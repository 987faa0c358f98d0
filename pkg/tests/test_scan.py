import csv
import io
import json
import os

import pytest

from carpet_ext.cli import main
from carpet_ext.scan import ManifestError, ScanManifest, default_workers, render, run_scan


def test_beta_scan_example():
    text = render(ScanManifest(a=(3, 3), b=(4, 8), e=(0, 1), computations=("beta",)), workers=1)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 10
    row = next(r for r in rows if (r["e"], r["a"], r["b"]) == ("0", "3", "5"))
    assert row["beta"] == "0"


def test_row_order_is_lexicographic():
    m = ScanManifest(a=(1, 3), b=(0, 9), e=(0, 2))
    pts = list(m.points())
    assert pts == sorted(pts)
    assert all(b >= a * e + 1 for e, a, b in pts)


def test_empty_effective_range_gives_header(tmp_path, capsys):
    out = tmp_path / "empty.csv"
    code = main(["scan", "--e", "3", "--a", "3", "--b", "1..5", "--compute", "beta", "--out", str(out)])
    assert code == 0
    assert out.read_text() == "e,a,b,beta\n"


def test_manifest_validation():
    with pytest.raises(ManifestError):
        ScanManifest(a=(3, 2), b=(1, 2), e=(0, 0))
    with pytest.raises(ManifestError):
        ScanManifest(a=(1, 2), b=(1, 2), e=(0, 0), computations=("bogus",))
    with pytest.raises(ManifestError):
        ScanManifest(a=(1, 2), b=(1, 2), e=(0, 0), fmt="xml")


def test_bad_manifest_exit_code(tmp_path, capsys):
    bad = tmp_path / "m.json"
    bad.write_text("{not json")
    out = tmp_path / "never.csv"
    assert main(["scan", "--manifest", str(bad), "--out", str(out)]) == 2
    assert not out.exists()
    assert main(["scan", "--e", "0", "--a", "2..1", "--b", "3", "--out", str(out)]) == 2
    assert not out.exists()


def test_manifest_file(tmp_path, capsys):
    m = tmp_path / "m.json"
    out = tmp_path / "o.json"
    m.write_text(json.dumps({"a": [2, 3], "b": [2, 6], "e": [0, 0],
                             "computations": ["cohomology", "alpha"], "format": "json",
                             "out": str(out)}))
    assert main(["scan", "--manifest", str(m)]) == 0
    doc = json.loads(out.read_text())
    assert doc["manifest"]["computations"] == ["cohomology", "alpha"]
    assert len(doc["rows"]) == 10


def test_json_round_trip():
    m = ScanManifest(a=(1, 4), b=(1, 10), e=(0, 1), computations=("cohomology", "beta", "alpha",
                                                                    "normal-k", "classify"), fmt="json")
    doc = json.loads(render(m, workers=1))
    assert doc["manifest"]["a"] == [1, 4]
    for row in doc["rows"]:
        assert set(row["surface"]) == {"e"} and set(row["divisor"]) == {"a", "b"}
        assert len(row["h"]) == 3 and isinstance(row["exact"], bool) and row["anchors"]
        for key in ("beta", "alpha", "normal_k", "classify"):
            assert "error" in row[key] or row[key]["anchors"]
    again = json.loads(json.dumps(doc))
    assert again == doc


def test_intervals_render_as_ranges():
    m = ScanManifest(a=(3, 3), b=(1, 1), e=(0, 0), computations=("normal-k",))
    text = render(m, workers=1)
    assert text.splitlines()[1].endswith("5..8")
    doc = json.loads(render(ScanManifest(a=(3, 3), b=(1, 1), e=(0, 0), computations=("normal-k",),
                                         fmt="json"), workers=1))
    assert doc["rows"][0]["normal_k"]["upper"] == {"min": 5, "max": 8}


def test_errors_become_na_cells():
    text = render(ScanManifest(a=(1, 1), b=(1, 1), e=(0, 0), computations=("alpha",)), workers=1)
    assert "NA:UnsupportedA" in text


def test_parallel_output_identical():
    m = ScanManifest(a=(1, 6), b=(1, 25), e=(0, 2), computations=("cohomology", "beta", "alpha"))
    assert render(m, workers=1) == render(m, workers=8)


def test_text_table():
    text = render(ScanManifest(a=(2, 2), b=(2, 3), e=(0, 0), fmt="text"), workers=1)
    lines = text.splitlines()
    assert lines[0].split() == ["e", "a", "b", "h0", "h1", "h2"]
    assert lines[1].split() == ["0", "2", "2", "9", "0", "0"]


def test_workers_env(monkeypatch):
    monkeypatch.setenv("CARPET_EXT_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("CARPET_EXT_THREADS", "zero")
    with pytest.raises(ManifestError):
        default_workers()


def test_atomic_write_leaves_no_temp(tmp_path):
    out = tmp_path / "scan.csv"
    run_scan(ScanManifest(a=(2, 2), b=(2, 4), e=(0, 0), out=str(out)), workers=1)
    assert os.listdir(tmp_path) == ["scan.csv"]
