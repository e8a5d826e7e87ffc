"""Row-reduction kernels on bit-packed uint64 matrices.

Rows are packed 64 coordinates per word, bit ``i`` of a row living in word
``i // 64`` at position ``i % 64``.  The reduced row echelon form computed
here is the workhorse behind every rank / kernel / solve operation in the
package, so it comes in two flavours:

* a numba ``@njit`` kernel (default), and
* a pure-numpy fallback, selected by setting the environment variable
  ``QCLEAN_NO_NUMBA`` to a non-empty value (or automatically if numba is
  not importable).

Both compute full RREF in place: pivot rows end up on top in pivot-column
order, remaining rows are zero.
"""

from __future__ import annotations

import os

import numpy as np

_ONE = np.uint64(1)


def _rref_numpy(w: np.ndarray, ncols: int) -> tuple[int, np.ndarray]:
    """Pure-numpy in-place RREF; returns (pivot count, pivot columns)."""
    nrows = w.shape[0]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        wi, b = divmod(col, 64)
        b = np.uint64(b)
        lower = (w[r:, wi] >> b) & _ONE
        nz = np.nonzero(lower)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            w[[r, piv]] = w[[piv, r]]
        hit = ((w[:, wi] >> b) & _ONE).astype(bool)
        hit[r] = False
        w[hit] ^= w[r]
        pivots.append(col)
        r += 1
    return r, np.asarray(pivots, dtype=np.int64)


def _rref_plain(w, ncols):  # pragma: no cover - compiled under numba
    nrows, nwords = w.shape
    pivots = np.empty(nrows, np.int64)
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        wi = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        piv = -1
        for i in range(r, nrows):
            if w[i, wi] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(nwords):
                tmp = w[piv, j]
                w[piv, j] = w[r, j]
                w[r, j] = tmp
        for i in range(nrows):
            if i != r and (w[i, wi] & bit):
                for j in range(nwords):
                    w[i, j] ^= w[r, j]
        pivots[r] = col
        r += 1
    return r, pivots[:r]


def _pick_backend():
    if os.environ.get("QCLEAN_NO_NUMBA"):
        return "numpy", _rref_numpy
    try:
        from numba import njit
    except ImportError:
        return "numpy", _rref_numpy
    kernel = njit("Tuple((int64, int64[:]))(uint64[:, ::1], int64)", cache=True)(
        _rref_plain
    )

    def _rref_numba(w: np.ndarray, ncols: int) -> tuple[int, np.ndarray]:
        if w.size == 0:
            # numba kernel requires C-contiguous non-trivial arrays; rref of
            # a 0-row or 0-column matrix is itself with no pivots.
            return 0, np.empty(0, np.int64)
        r, piv = kernel(w, ncols)
        return int(r), piv

    return "numba", _rref_numba


BACKEND, rref_words = _pick_backend()


def backend_name() -> str:
    """Name of the active row-reduction backend ('numba' or 'numpy')."""
    return BACKEND
