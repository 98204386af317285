"""Pure-numpy stratum kernels, bit-identical to the numba versions.

Prefixes are processed in chunks; within a chunk the first polynomial's
univariate coefficients along the last variable are assembled term by term
and swept with a vectorized Horner step. Candidate zeros are then checked
against the remaining polynomials.
"""

import numpy as np

_CHUNK = 1 << 14


def _pow_table(exps, p):
    maxe = max(1, int(exps.max()) if exps.size else 1)
    powt = np.ones((p, maxe + 1), dtype=np.int64)
    v = np.arange(p, dtype=np.int64)
    for e in range(1, maxe + 1):
        powt[:, e] = powt[:, e - 1] * v % p
    return powt


def _prefix_digits(start, stop, m, p):
    """Rows of the mixed-radix odometer for indices [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(idx), m - 1), dtype=np.int64)
    for j in range(m - 2, -1, -1):
        digits[:, j] = idx % p
        idx = idx // p
    return digits


def _eval_terms(exps, coeffs, points, powt, p):
    """Evaluate one packed polynomial at an (N, m) point matrix."""
    vals = np.zeros(len(points), dtype=np.int64)
    for t in range(len(coeffs)):
        v = np.full(len(points), coeffs[t], dtype=np.int64)
        for j in range(points.shape[1]):
            ej = exps[t, j]
            if ej:
                v = v * powt[points[:, j], ej] % p
        vals = (vals + v) % p
    return vals


def scan_filtered(packed, m, p):
    exps, coeffs, offsets = packed
    powt = _pow_table(exps, p)
    t0, t1 = int(offsets[0]), int(offsets[1])
    deg = int(exps[t0:t1, m - 1].max()) if t1 > t0 else 0
    npolys = len(offsets) - 1
    total = p ** (m - 1)
    xs = np.arange(p, dtype=np.int64)
    hits = []
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        digits = _prefix_digits(start, stop, m, p)
        n = stop - start
        c = np.zeros((n, deg + 1), dtype=np.int64)
        for t in range(t0, t1):
            v = np.full(n, coeffs[t], dtype=np.int64)
            for j in range(m - 1):
                ej = exps[t, j]
                if ej:
                    v = v * powt[digits[:, j], ej] % p
            c[:, exps[t, m - 1]] = (c[:, exps[t, m - 1]] + v) % p
        val = np.repeat(c[:, deg : deg + 1], p, axis=1)
        for e in range(deg - 1, -1, -1):
            val = (val * xs[None, :] + c[:, e : e + 1]) % p
        rows, cols = np.nonzero(val == 0)
        if len(rows) == 0:
            continue
        cand = np.concatenate([digits[rows], cols[:, None]], axis=1)
        keep = np.ones(len(cand), dtype=bool)
        for qi in range(1, npolys):
            if not keep.any():
                break
            sub = cand[keep]
            vals = _eval_terms(
                exps[offsets[qi] : offsets[qi + 1]], coeffs[offsets[qi] : offsets[qi + 1]], sub, powt, p
            )
            keep[np.nonzero(keep)[0][vals != 0]] = False
        if keep.any():
            hits.append(cand[keep])
    if not hits:
        return np.zeros((0, m), dtype=np.int64)
    return np.concatenate(hits, axis=0)


def scan_no_filter(packed, m, p):
    exps, coeffs, offsets = packed
    powt = _pow_table(exps, p)
    npolys = len(offsets) - 1
    total = p ** (m - 1)
    xs = np.arange(p, dtype=np.int64)
    hits = []
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        digits = _prefix_digits(start, stop, m, p)
        n = stop - start
        pts = np.concatenate(
            [np.repeat(digits, p, axis=0), np.tile(xs, n)[:, None]], axis=1
        )
        keep = np.ones(len(pts), dtype=bool)
        for qi in range(npolys):
            if not keep.any():
                break
            sub = pts[keep]
            vals = _eval_terms(
                exps[offsets[qi] : offsets[qi + 1]], coeffs[offsets[qi] : offsets[qi + 1]], sub, powt, p
            )
            keep[np.nonzero(keep)[0][vals != 0]] = False
        if keep.any():
            hits.append(pts[keep])
    if not hits:
        return np.zeros((0, m), dtype=np.int64)
    return np.concatenate(hits, axis=0)


def warm_up():
    return None
