"""Subspaces of F2^d as elements of the Grassmannian lattice.

Every ``Subspace`` stores its basis in reduced row echelon form, so
structural equality is semantic equality and all outputs are canonical.
Quotients are never materialized; every quotient statement is computed as
a dimension difference.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gf2 import BinaryMatrix, BinaryVector, kernel_basis, rref

__all__ = [
    "BilinearForm",
    "Subspace",
    "span",
    "quotient_dim",
    "rho",
    "h_sigma",
    "q_sigma_duality_check",
    "lagrangian_of",
    "verify_factor_annihilator",
    "verify_orthospace_identity",
]


class BilinearForm:
    """Nondegenerate bilinear form on F2^d: the standard dot product or
    the symplectic form on an (x | z) split of an even-dimensional space.

    The symplectic value is x . z' + z . x'; over F2 the textbook minus
    sign vanishes.
    """

    __slots__ = ("kind", "ambient_dim")

    def __init__(self, kind: str, ambient_dim: int):
        if kind not in ("euclidean", "symplectic"):
            raise ValueError(f"unknown form kind {kind!r}")
        if kind == "symplectic" and ambient_dim % 2:
            raise ValueError("symplectic form needs even ambient dimension")
        self.kind = kind
        self.ambient_dim = ambient_dim

    @classmethod
    def euclidean_dot(cls, ambient_dim: int) -> "BilinearForm":
        return cls("euclidean", ambient_dim)

    @classmethod
    def symplectic(cls, ambient_dim: int) -> "BilinearForm":
        return cls("symplectic", ambient_dim)

    def pair(self, u: BinaryVector, v: BinaryVector) -> int:
        if u.n != self.ambient_dim or v.n != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.kind == "euclidean":
            return u.dot(v)
        return u.dot(self._swap_halves(v))

    def _swap_halves(self, v: BinaryVector) -> BinaryVector:
        n = self.ambient_dim // 2
        bits = v.to_bits()
        return BinaryVector.from_bits(np.concatenate([bits[n:], bits[:n]]))

    def gram_partner(self, basis: BinaryMatrix) -> BinaryMatrix:
        """Matrix whose right kernel is the annihilator of the row span."""
        if self.kind == "euclidean":
            return basis
        n = self.ambient_dim // 2
        dense = basis.to_dense()
        return BinaryMatrix.from_dense(
            np.concatenate([dense[:, n:], dense[:, :n]], axis=1)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BilinearForm)
            and self.kind == other.kind
            and self.ambient_dim == other.ambient_dim
        )

    def __repr__(self) -> str:
        return f"BilinearForm({self.kind!r}, {self.ambient_dim})"


class Subspace:
    """A subspace of F2^d in canonical rref basis form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, basis: BinaryMatrix, *, _canonical: bool = False):
        if not _canonical:
            basis, _ = rref(basis)
        self.ambient_dim = basis.cols
        self.basis = basis

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(BinaryMatrix.zeros(0, ambient_dim), _canonical=True)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(BinaryMatrix.identity(ambient_dim), _canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, v: BinaryVector) -> bool:
        if v.n != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        w = np.array(v.words)
        for i in range(self.basis.rows):
            p = self._pivot(i)
            if (w[p >> 6] >> np.uint64(p & 63)) & np.uint64(1):
                w ^= self.basis.words[i]
        return not w.any()

    def _pivot(self, i: int) -> int:
        row = self.basis.words[i]
        for wi in range(row.size):
            v = int(row[wi])
            if v:
                return (wi << 6) + (v & -v).bit_length() - 1
        raise ValueError("zero basis row")  # unreachable on canonical bases

    def reduce(self, v: BinaryVector) -> BinaryVector:
        """Canonical coset representative of v modulo this subspace."""
        w = np.array(v.words)
        for i in range(self.basis.rows):
            p = self._pivot(i)
            if (w[p >> 6] >> np.uint64(p & 63)) & np.uint64(1):
                w ^= self.basis.words[i]
        return BinaryVector(w, v.n)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(BinaryMatrix.vstack(self.basis, other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Kernel-method intersection (Zassenhaus-equivalent): coefficient
        vectors of linear relations between the two stacked bases are mapped
        back through the first basis."""
        self._check(other)
        stacked = BinaryMatrix.vstack(self.basis, other.basis)
        rels = kernel_basis(stacked.transpose())
        a = self.basis.to_dense().astype(np.uint8)
        vecs = (rels.to_dense()[:, : self.dim].astype(np.int64) @ a.astype(np.int64)) & 1
        return Subspace(BinaryMatrix.from_dense(vecs))

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def annihilator(self, form: BilinearForm) -> "Subspace":
        if form.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace(kernel_basis(form.gram_partner(self.basis)), _canonical=True)

    def is_isotropic(self, form: BilinearForm) -> bool:
        return self <= self.annihilator(form)

    def vectors(self) -> Iterable[BinaryVector]:
        """All 2^dim elements (small subspaces only)."""
        base = BinaryVector.zeros(self.ambient_dim)
        out = [base]
        for v in self.basis:
            out += [u ^ v for u in out]
        return out

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def span(vectors: Sequence[BinaryVector | Iterable[int]], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    m = BinaryMatrix.from_rows(list(vectors), ambient_dim)
    return Subspace(m)


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """dim(big / small); requires small <= big."""
    if not small <= big:
        raise ValueError("quotient_dim requires small <= big")
    return big.dim - small.dim


def rho(a: Subspace, b: Subspace) -> int:
    """dim(a / (a n b)), equivalently dim((a + b) / b)."""
    return a.dim - (a & b).dim


def _require_isotropic(sigma: Subspace, form: BilinearForm) -> Subspace:
    ann = sigma.annihilator(form)
    if not sigma <= ann:
        raise ValueError("sigma is not isotropic under the given form")
    return ann


def h_sigma(sigma: Subspace, beta: Subspace, form: BilinearForm) -> Subspace:
    """sigma + (sigma-annihilator n beta); sandwiched between sigma and
    its annihilator."""
    ann = _require_isotropic(sigma, form)
    return sigma + (ann & beta)


def q_sigma_duality_check(sigma: Subspace, beta: Subspace, form: BilinearForm) -> bool:
    """True iff taking the annihilator commutes with the h-map, which is
    the quotient-level duality verified without building the quotient."""
    _require_isotropic(sigma, form)
    lhs = h_sigma(sigma, beta, form).annihilator(form)
    rhs = h_sigma(sigma, beta.annihilator(form), form)
    return lhs == rhs


def lagrangian_of(zeta: Subspace) -> Subspace:
    """The Lagrangian zeta (+) zeta-perp inside symplectic F2^{2n}, with the
    x block carrying zeta and the z block its dot-product annihilator."""
    n = zeta.ambient_dim
    perp = zeta.annihilator(BilinearForm.euclidean_dot(n))
    rows = np.zeros((zeta.dim + perp.dim, 2 * n), dtype=np.uint8)
    rows[: zeta.dim, :n] = zeta.basis.to_dense()
    rows[zeta.dim :, n:] = perp.basis.to_dense()
    return Subspace(BinaryMatrix.from_dense(rows))


def _all_pairs_orthogonal(a: Subspace, b: Subspace, form: BilinearForm) -> bool:
    return all(form.pair(u, v) == 0 for u in a.basis for v in b.basis)


def verify_factor_annihilator(xi: Subspace, eta: Subspace, alpha: Subspace) -> bool:
    """Check that (eta-perp n alpha + xi)/xi and (xi-perp n alpha-perp + eta)/eta
    annihilate each other under the dot pairing and fill the expected total
    dimension.  Requires xi orthogonal to eta."""
    n = xi.ambient_dim
    form = BilinearForm.euclidean_dot(n)
    eta_perp = eta.annihilator(form)
    if not xi <= eta_perp:
        raise ValueError("xi and eta are not orthogonal")
    a1 = (eta_perp & alpha) + xi
    a2 = (xi.annihilator(form) & alpha.annihilator(form)) + eta
    if not _all_pairs_orthogonal(a1, a2, form):
        return False
    return (a1.dim - xi.dim) + (a2.dim - eta.dim) == n - xi.dim - eta.dim


def verify_orthospace_identity(
    xi: Subspace, eta: Subspace, alpha: Subspace, form: BilinearForm
) -> bool:
    """The two restricted quotient dimensions sum to n - dim(eta) - dim(xi)."""
    eta_perp = eta.annihilator(form)
    if not xi <= eta_perp:
        raise ValueError("xi and eta are not orthogonal under the given form")
    n = form.ambient_dim
    lhs1 = ((eta_perp & alpha) + xi).dim - xi.dim
    lhs2 = ((xi.annihilator(form) & alpha.annihilator(form)) + eta).dim - eta.dim
    return lhs1 + lhs2 == n - eta.dim - xi.dim
