"""Batch S/T factorisation of many small SL(2,Z) matrices.

Two interchangeable kernels run the same reduction as
:func:`fuchsdecomp.sl2z.st_decompose` on int64 rows ``[a, b, c, d]``:

* a numba ``@njit`` loop over rows, used when numba imports and
  ``FUCHSDECOMP_DISABLE_NUMBA`` is unset or ``0``;
* a pure-numpy kernel that advances every unfinished row per sweep.

Entries must stay below 2**31 in absolute value so that no product overflows.
Residual codes: 0 = Id, 1 = S, 2 = -Id, 3 = -S.
"""

from __future__ import annotations

import os

import numpy as np

RESIDUAL_NAMES = ("Id", "S", "-Id", "-S")
ENTRY_LIMIT = 2**31

_disabled = os.environ.get("FUCHSDECOMP_DISABLE_NUMBA", "0") not in ("", "0")

try:
    if _disabled:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _residual_code(sign, lead_s):
    return (1 if lead_s else 0) + (0 if sign > 0 else 2)


def _st_rows_py(mats, max_len):
    n = mats.shape[0]
    exps = np.zeros((n, max_len), dtype=np.int64)
    lens = np.zeros(n, dtype=np.int64)
    codes = np.zeros(n, dtype=np.int64)
    for r in range(n):
        a, b, c, d = mats[r, 0], mats[r, 1], mats[r, 2], mats[r, 3]
        k = 0
        s_steps = 0
        lead_s = False
        final_s = False
        final_sign = 1
        while True:
            if b == 0 and c == 0 and a == d and (a == 1 or a == -1):
                final_s = False
                final_sign = a
                break
            if a == 0 and d == 0 and b == -c and (c == 1 or c == -1):
                final_s = True
                final_sign = c
                break
            if k >= max_len:
                k = -1
                break
            if c == 0:
                q = b * d
                a, b = a - q * c, b - q * d
                exps[r, k] = q
                k += 1
            elif abs(a) < abs(c):
                a, b, c, d = -c, -d, a, b
                if k == 0:
                    lead_s = True
                s_steps += 1
            else:
                q = abs(a) // abs(c)
                if (a >= 0) != (c > 0):
                    q = -q
                a, b = a - q * c, b - q * d
                exps[r, k] = q
                k += 1
        if k < 0:
            lens[r] = -1
            continue
        sign = -1 if s_steps % 2 else 1
        if final_sign < 0:
            sign = -sign
        if final_s:
            if k > 0:
                if k >= max_len:
                    lens[r] = -1
                    continue
                exps[r, k] = 0
                k += 1
            else:
                lead_s = True
        lens[r] = k
        codes[r] = _residual_code(sign, lead_s)
    return exps, lens, codes


if HAVE_NUMBA:
    _residual_code = njit(cache=False)(_residual_code)
    _st_rows_numba = njit(cache=False)(_st_rows_py)
else:
    _st_rows_numba = None


def _st_rows_numpy(mats, max_len):
    """Vectorised sweep: each pass performs one reduction step on every live row."""
    a, b, c, d = (mats[:, j].copy() for j in range(4))
    n = mats.shape[0]
    exps = np.zeros((n, max_len), dtype=np.int64)
    k = np.zeros(n, dtype=np.int64)
    s_steps = np.zeros(n, dtype=np.int64)
    lead_s = np.zeros(n, dtype=bool)
    overflow = np.zeros(n, dtype=bool)
    rows = np.arange(n)
    while True:
        unit = (b == 0) & (c == 0) & (a == d) & (np.abs(a) == 1)
        quarter = (a == 0) & (d == 0) & (b == -c) & (np.abs(c) == 1)
        live = ~(unit | quarter | overflow)
        if not live.any():
            break
        full = live & (k >= max_len)
        overflow |= full
        live &= ~full
        flat = live & (c == 0)
        swap = live & ~flat & (np.abs(a) < np.abs(c))
        euclid = live & ~flat & ~swap
        q = np.zeros(n, dtype=np.int64)
        q[flat] = b[flat] * d[flat]
        nz = np.where(euclid, c, 1)
        qe = np.abs(a) // np.abs(nz)
        qe = np.where((a >= 0) != (nz > 0), -qe, qe)
        q[euclid] = qe[euclid]
        tstep = flat | euclid
        exps[rows[tstep], k[tstep]] = q[tstep]
        k[tstep] += 1
        a_new = np.where(tstep, a - q * c, np.where(swap, -c, a))
        b_new = np.where(tstep, b - q * d, np.where(swap, -d, b))
        c_new = np.where(swap, a, c)
        d_new = np.where(swap, b, d)
        lead_s |= swap & (k == 0)
        s_steps += swap
        a, b, c, d = a_new, b_new, c_new, d_new
    quarter = (a == 0) & (d == 0) & (np.abs(c) == 1)
    final_sign = np.where(quarter, c, a)
    sign = np.where(s_steps % 2 == 1, -1, 1) * final_sign
    room = k < max_len
    append_zero = quarter & (k > 0)
    overflow |= append_zero & ~room
    ok_append = append_zero & room
    exps[rows[ok_append], k[ok_append]] = 0
    k[ok_append] += 1
    lead_s |= quarter & (k == 0)
    codes = np.where(lead_s, 1, 0) + np.where(sign > 0, 0, 2)
    lens = np.where(overflow, -1, k)
    return exps, lens.astype(np.int64), codes.astype(np.int64)


def active_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def st_decompose_batch(mats, max_len: int = 64, backend: str | None = None):
    """Factor every row of an (n, 4) integer array.

    Returns ``(exps, lens, codes)``: ``exps[r, :lens[r]]`` is (n_k, ..., n_1)
    for row r, ``codes[r]`` its residual unit.  ``lens[r] == -1`` flags a row
    that needed more than ``max_len`` exponents.  Rows must have determinant 1.
    """
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if mats.ndim != 2 or mats.shape[1] != 4:
        raise ValueError("expected an (n, 4) array")
    if mats.size and np.abs(mats).max() >= ENTRY_LIMIT:
        raise ValueError("entries too large for the int64 kernels")
    det = mats[:, 0] * mats[:, 3] - mats[:, 1] * mats[:, 2]
    if mats.size and not (det == 1).all():
        from .errors import DeterminantNotOne
        raise DeterminantNotOne("every row must have determinant 1")
    backend = backend or active_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _st_rows_numba(mats, max_len)
    if backend == "numpy":
        return _st_rows_numpy(mats, max_len)
    if backend == "python":
        return _st_rows_py(mats, max_len)
    raise ValueError(f"unknown backend {backend!r}")


def det_one_matrices(bound: int) -> np.ndarray:
    """All integer matrices with entries in [-bound, bound] and determinant 1."""
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    a, b, c, d = np.meshgrid(r, r, r, r, indexing="ij")
    mask = a * d - b * c == 1
    return np.stack([a[mask], b[mask], c[mask], d[mask]], axis=1)
