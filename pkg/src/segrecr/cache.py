"""Disk cache for finite-field singular-locus scans.

One file per (form hash, p): a header line ``# form=<hash> p=<p> count=<n>``
followed by one point per line as comma-separated canonical residues, in
sorted order. The directory defaults to ``~/.cache/segrecr`` and can be
overridden by the ``SEGRE_CACHE_DIR`` environment variable or an explicit
argument.
"""

from __future__ import annotations

import hashlib
import os
from pathlib import Path

from .projective import Hypersurface, singular_locus_scan


def cache_directory(explicit: str | None = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get("SEGRE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "segrecr"


def form_hash(hs: Hypersurface, p: int) -> str:
    poly = hs.poly.reduce_mod(p) if not _already_mod(hs) else hs.poly
    parts = [f"n={poly.nvars}", f"p={p}"]
    for e, c in poly.sorted_terms():
        parts.append(",".join(map(str, e)) + ":" + str(c))
    return hashlib.sha256(";".join(parts).encode()).hexdigest()[:16]


def _already_mod(hs: Hypersurface) -> bool:
    from .scalars import Fp

    return any(isinstance(c, Fp) for c in hs.poly.terms.values())


def cached_singular_scan(
    hs: Hypersurface, p: int, cache_dir: str | None = None, progress=None
) -> list[tuple[int, ...]]:
    """Sorted integer point tuples of the singular locus, cached to disk."""
    digest = form_hash(hs, p)
    directory = cache_directory(cache_dir)
    path = directory / f"scan_{digest}_p{p}.txt"
    if path.exists():
        return _read_cache(path, digest, p)
    points = sorted(
        tuple(int(c.value) for c in pt.coords) for pt in singular_locus_scan(hs, p, progress=progress)
    )
    directory.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(f"# form={digest} p={p} count={len(points)}\n")
        for pt in points:
            fh.write(",".join(map(str, pt)) + "\n")
    os.replace(tmp, path)
    return points


def _read_cache(path: Path, digest: str, p: int) -> list[tuple[int, ...]]:
    with open(path, encoding="ascii") as fh:
        header = fh.readline().strip()
        expected = f"# form={digest} p={p} count="
        if not header.startswith(expected):
            raise IOError(f"cache header mismatch in {path}: {header!r}")
        count = int(header[len(expected):])
        points = [tuple(int(v) for v in line.strip().split(",")) for line in fh if line.strip()]
    if len(points) != count:
        raise IOError(f"cache count mismatch in {path}: header {count}, found {len(points)}")
    return points
