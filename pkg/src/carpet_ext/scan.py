"""Parameter-grid scans over (e, a, b) with deterministic output.

Points are evaluated in a process pool and collected with an ordered map, so
the emitted bytes depend only on the manifest. Files are written to a
temporary sibling and renamed into place; a failed scan leaves nothing behind.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Iterator

from .classification import FanoQuery, classify_fano
from .cohomology import cohomology
from .divisors import DivisorClass, HirzebruchSurface
from .extendability import beta, carpet_params, carpet_verdict, h0_N_minus_k_bound
from .les import Interval

COMPUTATIONS = ("cohomology", "beta", "alpha", "normal-k", "classify")
FORMATS = ("text", "json", "csv")
THREADS_ENV = "CARPET_EXT_THREADS"


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class ScanManifest:
    a: tuple[int, int]
    b: tuple[int, int]
    e: tuple[int, int]
    computations: tuple[str, ...] = ("cohomology",)
    fmt: str = "csv"
    out: str | None = None
    k: int = 2

    def __post_init__(self) -> None:
        for name in ("a", "b", "e"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ManifestError(f"range for {name} is empty: {lo}..{hi}")
        if self.e[0] < 0:
            raise ManifestError("e must be nonnegative")
        if not self.computations:
            raise ManifestError("no computations requested")
        unknown = [c for c in self.computations if c not in COMPUTATIONS]
        if unknown:
            raise ManifestError(f"unknown computations: {', '.join(unknown)}")
        if self.fmt not in FORMATS:
            raise ManifestError(f"unknown format {self.fmt!r}")
        if self.k < 2:
            raise ManifestError("normal-k needs k >= 2")

    @classmethod
    def from_file(cls, path: str | Path) -> ScanManifest:
        try:
            doc = json.loads(Path(path).read_text())
            return cls(
                a=tuple(doc["a"]),
                b=tuple(doc["b"]),
                e=tuple(doc["e"]),
                computations=tuple(doc.get("computations", ("cohomology",))),
                fmt=doc.get("format", "csv"),
                out=doc.get("out"),
                k=int(doc.get("k", 2)),
            )
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ManifestError(f"cannot read manifest {path}: {exc}") from exc

    def points(self) -> Iterator[tuple[int, int, int]]:
        for e in range(self.e[0], self.e[1] + 1):
            for a in range(self.a[0], self.a[1] + 1):
                for b in range(max(self.b[0], a * e + 1), self.b[1] + 1):
                    yield e, a, b


def _interval_json(v: Interval) -> int | dict[str, int]:
    return v.lo if v.is_point else {"min": v.lo, "max": v.hi}


def _na(exc: Exception) -> dict[str, str]:
    return {"error": type(exc).__name__}


def evaluate_point(point: tuple[int, int, int], computations: tuple[str, ...], k: int) -> dict[str, Any]:
    e, a, b = point
    row: dict[str, Any] = {"surface": {"e": e}, "divisor": {"a": a, "b": b}}
    if "cohomology" in computations:
        dims = cohomology(DivisorClass(a, b), HirzebruchSurface(e))
        row["h"] = list(dims)
        row["exact"] = True
        row["anchors"] = ["leray", "relative-duality"]
    if "beta" in computations:
        try:
            bound = beta(a, b, e)
            row["beta"] = {"value": _interval_json(bound.estimate), "anchors": list(bound.anchors)}
        except Exception as exc:  # noqa: BLE001 - reported per point
            row["beta"] = _na(exc)
    if "alpha" in computations:
        try:
            bound, verdict = carpet_verdict(a, b, e)
            p = bound.params
            row["alpha"] = {
                "upper": bound.value,
                "estimator": bound.estimator,
                "r": p.r,
                "g": p.g,
                "verdict": verdict.headline(),
                "anchors": list(bound.anchors),
            }
        except Exception as exc:  # noqa: BLE001
            row["alpha"] = _na(exc)
    if "normal-k" in computations:
        try:
            v = h0_N_minus_k_bound(a, b, e, k)
            row["normal_k"] = {"k": k, "upper": _interval_json(v), "anchors": ["normal-minus-k-bound"]}
        except Exception as exc:  # noqa: BLE001
            row["normal_k"] = _na(exc)
    if "classify" in computations:
        row["classify"] = _classify_point(a, b, e)
    return row


def _classify_point(a: int, b: int, e: int) -> dict[str, Any]:
    try:
        p = carpet_params(a, b, e)
        rec = classify_fano(FanoQuery(p.r, p.g))
    except Exception as exc:  # noqa: BLE001
        return _na(exc)
    return {"r": p.r, "g": p.g, "status": rec.status, "anchors": list(rec.anchors)}


# ---------------------------------------------------------------------------
# flat rendering for CSV and text

def _cell(v: Any) -> str:
    if isinstance(v, dict) and "min" in v:
        return f"{v['min']}..{v['max']}"
    return str(v)


def _columns(computations: tuple[str, ...], k: int) -> list[str]:
    cols = ["e", "a", "b"]
    if "cohomology" in computations:
        cols += ["h0", "h1", "h2"]
    if "beta" in computations:
        cols += ["beta"]
    if "alpha" in computations:
        cols += ["alpha", "estimator", "r", "g", "verdict"]
    if "normal-k" in computations:
        cols += [f"h0_N_minus_{k}"]
    if "classify" in computations:
        cols += ["fano_r", "fano_g", "fano_status"]
    return cols


def _flatten(row: dict[str, Any], k: int) -> dict[str, str]:
    flat = {"e": str(row["surface"]["e"]), "a": str(row["divisor"]["a"]), "b": str(row["divisor"]["b"])}
    if "h" in row:
        flat.update(zip(("h0", "h1", "h2"), map(_cell, row["h"])))
    if "beta" in row:
        v = row["beta"]
        flat["beta"] = f"NA:{v['error']}" if "error" in v else _cell(v["value"])
    if "alpha" in row:
        v = row["alpha"]
        keys = ("alpha", "estimator", "r", "g", "verdict")
        if "error" in v:
            flat.update({c: f"NA:{v['error']}" for c in keys})
        else:
            flat.update(zip(keys, map(str, (v["upper"], v["estimator"], v["r"], v["g"], v["verdict"]))))
    if "normal_k" in row:
        v = row["normal_k"]
        flat[f"h0_N_minus_{k}"] = f"NA:{v['error']}" if "error" in v else _cell(v["upper"])
    if "classify" in row:
        v = row["classify"]
        keys = ("fano_r", "fano_g", "fano_status")
        if "error" in v:
            flat.update({c: f"NA:{v['error']}" for c in keys})
        else:
            flat.update(zip(keys, map(str, (v["r"], v["g"], v["status"]))))
    return flat


def _evaluate_all(manifest: ScanManifest, workers: int) -> list[dict[str, Any]]:
    pts = list(manifest.points())
    args = (manifest.computations, manifest.k)
    if workers <= 1 or len(pts) < 2:
        return [evaluate_point(p, *args) for p in pts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(pts) // (4 * workers))
        return list(pool.map(evaluate_point, pts, [args[0]] * len(pts), [args[1]] * len(pts),
                             chunksize=chunk))


def default_workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            n = int(env)
        except ValueError as exc:
            raise ManifestError(f"{THREADS_ENV} must be an integer, got {env!r}") from exc
        if n < 1:
            raise ManifestError(f"{THREADS_ENV} must be positive")
        return n
    return min(8, os.cpu_count() or 1)


def render(manifest: ScanManifest, workers: int | None = None) -> str:
    rows = _evaluate_all(manifest, default_workers() if workers is None else workers)
    cols = _columns(manifest.computations, manifest.k)
    if manifest.fmt == "json":
        meta = asdict(manifest)
        meta.pop("out")
        return json.dumps({"manifest": meta, "rows": rows}, indent=2, sort_keys=False) + "\n"
    flat = [_flatten(r, manifest.k) for r in rows]
    if manifest.fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    widths = [max([len(c)] + [len(r[c]) for r in flat]) for c in cols]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(cols, widths)).rstrip()]
    lines += ["  ".join(r[c].ljust(wd) for c, wd in zip(cols, widths)).rstrip() for r in flat]
    return "\n".join(lines) + "\n"


def write_atomic(path: str | Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_scan(manifest: ScanManifest, workers: int | None = None) -> str:
    """Render the scan and write it to ``manifest.out`` when set; return the text."""
    text = render(manifest, workers)
    if manifest.out:
        write_atomic(manifest.out, text)
    return text
