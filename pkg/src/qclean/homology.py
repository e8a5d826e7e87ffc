"""Length-two chain complexes over F2 and their (co)homology.

A CSS code is a complex C2 -> C1 -> C0 with d1 = Hx and d2 = Hz^T; the
code dimension is the first mod-2 Betti number.  Coboundary maps are
never stored: delta^1 = d1^T and delta^2 = d2^T are formed on demand.
"""

from __future__ import annotations

import numpy as np

from .errors import InvariantViolationError
from .gf2 import BinaryMatrix, kernel_basis, rank
from .subspaces import BilinearForm, Subspace, span

__all__ = ["ChainComplex2", "from_css", "betti1", "restricted_class_dim", "duality_check"]


class ChainComplex2:
    """d2: C2 -> C1 (n1 x n2 matrix), d1: C1 -> C0 (n0 x n1 matrix)."""

    __slots__ = ("d1", "d2", "_cache")

    def __init__(self, d2: BinaryMatrix, d1: BinaryMatrix):
        if d1.cols != d2.rows:
            raise ValueError("d1 and d2 dimensions are inconsistent")
        if d1.mm(d2).words.any():
            raise InvariantViolationError("d1 . d2 != 0")
        self.d1 = d1
        self.d2 = d2
        self._cache = {}

    @property
    def n0(self) -> int:
        return self.d1.rows

    @property
    def n1(self) -> int:
        return self.d1.cols

    @property
    def n2(self) -> int:
        return self.d2.cols

    def _space(self, key: str) -> Subspace:
        if key not in self._cache:
            if key == "cycles":  # ker d1
                sub = Subspace(kernel_basis(self.d1), _canonical=True)
            elif key == "boundaries":  # im d2 = rowspace(d2^T)
                sub = Subspace(self.d2.transpose())
            elif key == "cocycles":  # ker delta^2 = ker d2^T
                sub = Subspace(kernel_basis(self.d2.transpose()), _canonical=True)
            else:  # "coboundaries": im delta^1 = rowspace(d1)
                sub = Subspace(self.d1)
            self._cache[key] = sub
        return self._cache[key]


def from_css(c) -> ChainComplex2:
    """The complex with d1 = Hx and d2 = Hz^T (so d1 d2 = (Hx Hz^T) = 0)."""
    return ChainComplex2(c.hz.transpose(), c.hx)


def betti1(cx: ChainComplex2) -> int:
    """dim H1 = dim ker d1 - rank d2; asserted equal to the cohomological
    dim ker delta^2 - rank delta^1."""
    homological = (cx.n1 - rank(cx.d1)) - rank(cx.d2)
    cohomological = (cx.n1 - rank(cx.d2)) - rank(cx.d1)
    assert homological == cohomological
    return homological


def restricted_class_dim(cx: ChainComplex2, alpha: Subspace, side: str) -> int:
    """Dimension of [alpha]: classes represented by (co)cycles inside alpha."""
    if alpha.ambient_dim != cx.n1:
        raise ValueError("alpha must live in the middle degree F2^{n1}")
    if side == "homology":
        cyc, bnd = cx._space("cycles"), cx._space("boundaries")
    elif side == "cohomology":
        cyc, bnd = cx._space("cocycles"), cx._space("coboundaries")
    else:
        raise ValueError(f"unknown side {side!r}")
    return (alpha & cyc).dim - (alpha & bnd).dim


def _class_reps(cx: ChainComplex2, alpha: Subspace, side: str) -> list:
    cyc = cx._space("cycles" if side == "homology" else "cocycles")
    bnd = cx._space("boundaries" if side == "homology" else "coboundaries")
    cur = bnd
    reps = []
    for v in (alpha & cyc).basis:
        if not cur.contains(v):
            reps.append(v)
            cur = cur + span([v], cx.n1)
    return reps


def duality_check(cx: ChainComplex2, alpha: Subspace) -> bool:
    """[alpha]-perp = [alpha-perp]: the restricted dimensions on the two
    sides sum to betti1 and representatives pair to zero."""
    if alpha.ambient_dim != cx.n1:
        raise ValueError("alpha must live in the middle degree F2^{n1}")
    form = BilinearForm.euclidean_dot(cx.n1)
    alpha_perp = alpha.annihilator(form)
    d_hom = restricted_class_dim(cx, alpha, "homology")
    d_coh = restricted_class_dim(cx, alpha_perp, "cohomology")
    if d_hom + d_coh != betti1(cx):
        return False
    hom_reps = _class_reps(cx, alpha, "homology")
    coh_reps = _class_reps(cx, alpha_perp, "cohomology")
    return all(u.dot(v) == 0 for u in hom_reps for v in coh_reps)
