"""Deterministic example and random code constructors.

Randomness comes from numpy's counter-based Philox generator, so a given
(parameters, seed) pair always yields a bitwise-identical code, on any
platform.

Toric-code qubit indexing (L x L torus, n = 2 L^2 edges, 0-based here,
1-based in regions): horizontal edges first in row-major order, h(r, c) =
r*L + c, then vertical edges v(r, c) = L^2 + r*L + c.  The vertex at
(r, c) touches edges {h(r,c), h(r,c-1), v(r,c), v(r-1,c)} and the
plaquette at (r, c) touches {h(r,c), h(r+1,c), v(r,c), v(r,c+1)}, all
coordinates mod L.
"""

from __future__ import annotations

import numpy as np

from .codes import CssCode, StabilizerCode, SubsystemCode
from .errors import InfeasibleError
from .gf2 import BinaryMatrix, BinaryVector, kernel_basis
from .subspaces import BilinearForm, Subspace, span

__all__ = [
    "example_42",
    "toric",
    "random_css",
    "random_stabilizer",
    "random_subsystem",
    "rng_from_seed",
]

_RANDOM_CSS_RETRIES = 64


def rng_from_seed(seed: int) -> np.random.Generator:
    """The package-wide counter-based generator (Philox 4x64)."""
    return np.random.Generator(np.random.Philox(seed))


def example_42(k: int) -> CssCode:
    """The worked example: Hx = [I_k | I_k], Hz empty; n = 2k qubits."""
    if k < 1:
        raise ValueError("k must be >= 1")
    eye = np.eye(k, dtype=np.uint8)
    hx = BinaryMatrix.from_dense(np.concatenate([eye, eye], axis=1))
    return CssCode(hx, BinaryMatrix.zeros(0, 2 * k))


def toric(L: int) -> CssCode:
    """Toric code on an L x L torus: Hx = vertex stars, Hz = plaquettes."""
    if L < 2:
        raise ValueError("L must be >= 2")
    n = 2 * L * L

    def h(r: int, c: int) -> int:
        return (r % L) * L + (c % L)

    def v(r: int, c: int) -> int:
        return L * L + (r % L) * L + (c % L)

    hx = np.zeros((L * L, n), dtype=np.uint8)
    hz = np.zeros((L * L, n), dtype=np.uint8)
    for r in range(L):
        for c in range(L):
            i = r * L + c
            for e in (h(r, c), h(r, c - 1), v(r, c), v(r - 1, c)):
                hx[i, e] ^= 1
            for e in (h(r, c), h(r + 1, c), v(r, c), v(r, c + 1)):
                hz[i, e] ^= 1
    return CssCode(BinaryMatrix.from_dense(hx), BinaryMatrix.from_dense(hz))


def random_css(n: int, mx: int, mz: int, seed: int) -> CssCode:
    """Random CSS code: Hx rows uniform, Hz rows sampled from ker Hx.

    Hz rows are required to be linearly independent; if that fails after
    a bounded number of retries (ker Hx too small) an InfeasibleError is
    raised.
    """
    if mx + mz > n:
        raise ValueError("mx + mz must not exceed n")
    rng = rng_from_seed(seed)
    hx = BinaryMatrix.from_dense(rng.integers(0, 2, size=(mx, n), dtype=np.uint8))
    ker = kernel_basis(hx)
    if ker.rows < mz:
        raise InfeasibleError("ker Hx is too small to hold mz independent rows")
    kd = ker.to_dense().astype(np.int64)
    for _ in range(_RANDOM_CSS_RETRIES):
        coeffs = rng.integers(0, 2, size=(mz, ker.rows), dtype=np.uint8)
        rows = (coeffs.astype(np.int64) @ kd) & 1
        hz = BinaryMatrix.from_dense(rows)
        if Subspace(hz).dim == mz:
            return CssCode(hx, hz)
    raise InfeasibleError("could not sample mz independent rows of ker Hx")


def random_stabilizer(n: int, s_dim: int, seed: int) -> StabilizerCode:
    """Greedy isotropic construction: each generator is sampled uniformly
    from the symplectic annihilator of the ones chosen so far."""
    if not 0 <= s_dim <= n:
        raise ValueError("s_dim must lie in 0..n")
    rng = rng_from_seed(seed)
    form = BilinearForm.symplectic(2 * n)
    cur = Subspace.zero(2 * n)
    while cur.dim < s_dim:
        ann = cur.annihilator(form)
        coeffs = rng.integers(0, 2, size=ann.dim, dtype=np.uint8)
        vec = (
            coeffs.astype(np.int64) @ ann.basis.to_dense().astype(np.int64)
        ) & 1
        v = BinaryVector.from_bits(vec)
        if not cur.contains(v):
            cur = cur + span([v], 2 * n)
    return StabilizerCode(n, cur)


def random_subsystem(n: int, g_dim: int, seed: int) -> SubsystemCode:
    """Gauge subspace sampled unconstrained with the requested dimension."""
    if not 0 <= g_dim <= 2 * n:
        raise ValueError("g_dim must lie in 0..2n")
    rng = rng_from_seed(seed)
    cur = Subspace.zero(2 * n)
    while cur.dim < g_dim:
        v = BinaryVector.from_bits(rng.integers(0, 2, size=2 * n, dtype=np.uint8))
        if not cur.contains(v):
            cur = cur + span([v], 2 * n)
    return SubsystemCode(n, cur)
