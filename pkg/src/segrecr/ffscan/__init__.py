"""High-throughput enumeration of projective space over a prime field.

The scan visits P^n(F_p) via the standard affine stratification (leading
coordinate 1, earlier coordinates 0), so each point appears exactly once
and in a deterministic order. On each stratum the first input polynomial
is evaluated with a Horner sweep along the last free coordinate; only its
zeros are tested against the remaining polynomials.

Two interchangeable backends implement the stratum kernel: a numba
``@njit`` version and a pure-numpy version. The environment variable
``SEGRECR_KERNELS`` selects one (``numba`` or ``numpy``); the default is
numba when importable. Both produce bit-identical point lists.
"""

from __future__ import annotations

import os

import numpy as np

from ..polynomials import Polynomial
from ..scalars import Fp

_BACKEND = None
_BACKEND_NAME = None


def backend_name() -> str:
    _load_backend()
    return _BACKEND_NAME


def _load_backend():
    global _BACKEND, _BACKEND_NAME
    if _BACKEND is not None:
        return _BACKEND
    choice = os.environ.get("SEGRECR_KERNELS", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"SEGRECR_KERNELS must be 'numba' or 'numpy', got {choice!r}")
    if choice in ("", "numba"):
        try:
            from . import kernels_numba as backend

            _BACKEND, _BACKEND_NAME = backend, "numba"
            return _BACKEND
        except ImportError:
            if choice == "numba":
                raise
    from . import kernels_numpy as backend

    _BACKEND, _BACKEND_NAME = backend, "numpy"
    return _BACKEND


def compile_terms(poly: Polynomial, p: int, nvars: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense term arrays (exponents, coefficients mod p) for kernel use."""
    exps = []
    coeffs = []
    for e, c in poly.sorted_terms():
        if isinstance(c, Fp):
            if c.p != p:
                raise ValueError("coefficient modulus mismatch")
            v = c.value
        else:
            v = _rat_mod(c, p)
        if v % p == 0:
            continue
        exps.append(list(e))
        coeffs.append(v % p)
    if not exps:
        return np.zeros((0, nvars), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.array(exps, dtype=np.int64), np.array(coeffs, dtype=np.int64)


def _rat_mod(c, p: int) -> int:
    from fractions import Fraction

    c = Fraction(c)
    if c.denominator % p == 0:
        raise ValueError(f"denominator of {c} not invertible mod {p}")
    return c.numerator * pow(c.denominator, p - 2, p) % p


def _restrict_to_stratum(exps: np.ndarray, coeffs: np.ndarray, k: int, p: int):
    """Set x_0..x_{k-1} = 0 and x_k = 1, keeping the trailing free variables."""
    m = exps.shape[1] - k - 1
    if exps.shape[0] == 0:
        return np.zeros((0, m), dtype=np.int64), np.zeros(0, dtype=np.int64)
    keep = ~np.any(exps[:, :k] > 0, axis=1) if k > 0 else np.ones(len(exps), dtype=bool)
    sub_exps = exps[keep][:, k + 1 :]
    sub_coeffs = coeffs[keep]
    # collapse terms that became equal after dropping the pinned variables
    collapsed: dict[tuple[int, ...], int] = {}
    for e, c in zip(sub_exps, sub_coeffs):
        key = tuple(int(v) for v in e)
        collapsed[key] = (collapsed.get(key, 0) + int(c)) % p
    items = sorted((e, c) for e, c in collapsed.items() if c != 0)
    out_e = np.zeros((len(items), m), dtype=np.int64)
    out_c = np.zeros(len(items), dtype=np.int64)
    for i, (e, c) in enumerate(items):
        if m:
            out_e[i] = e
        out_c[i] = c
    return out_e, out_c


def common_zeros_projective(polys: list[Polynomial], p: int, progress=None) -> list[tuple[int, ...]]:
    """All points of P^n(F_p) at which every polynomial vanishes.

    Points are returned as integer coordinate tuples in the canonical
    leading-1 form, ordered stratum by stratum.
    """
    if not polys:
        raise ValueError("at least one polynomial required")
    nvars = polys[0].nvars
    if any(q.nvars != nvars for q in polys):
        raise ValueError("polynomials must share one variable set")
    backend = _load_backend()
    compiled = [compile_terms(q, p, nvars) for q in polys]
    points: list[tuple[int, ...]] = []
    for k in range(nvars):
        strata_polys = [_restrict_to_stratum(e, c, k, p) for e, c in compiled]
        m = nvars - k - 1
        hits = _scan_stratum(backend, strata_polys, m, p)
        prefix = (0,) * k + (1,)
        for row in hits:
            points.append(prefix + tuple(int(v) for v in row))
        if progress is not None:
            progress(k, nvars, len(points))
    return points


def _scan_stratum(backend, strata_polys, m: int, p: int) -> np.ndarray:
    if m == 0:
        ok = True
        for _, c in strata_polys:
            val = 0
            for coeff in c:
                val = (val + int(coeff)) % p
            if val % p != 0:
                ok = False
                break
        return np.zeros((1, 0), dtype=np.int64) if ok else np.zeros((0, 0), dtype=np.int64)
    # order polynomials so the sweep filters on a nonzero one when possible
    order = sorted(range(len(strata_polys)), key=lambda i: len(strata_polys[i][1]) == 0)
    first = strata_polys[order[0]]
    rest = [strata_polys[i] for i in order[1:]]
    if len(first[1]) == 0:
        # first polynomial vanishes identically on the stratum: no filter
        return backend.scan_no_filter(_pack(strata_polys, m), m, p)
    return backend.scan_filtered(_pack([first] + rest, m), m, p)


def _pack(strata_polys, m: int):
    """Concatenate term arrays with offsets for kernel consumption."""
    exps, coeffs, offsets = [], [], [0]
    for e, c in strata_polys:
        exps.append(e.reshape(-1, m))
        coeffs.append(c)
        offsets.append(offsets[-1] + len(c))
    return (
        np.concatenate(exps, axis=0) if exps else np.zeros((0, m), dtype=np.int64),
        np.concatenate(coeffs) if coeffs else np.zeros(0, dtype=np.int64),
        np.array(offsets, dtype=np.int64),
    )
