"""Stabilizer, CSS, and subsystem code models with cleaning-lemma checks.

Vectors live in symplectic F2^{2n} laid out as (x_1..x_n | z_1..z_n).
Regions are 1-based externally, 0-based internally.  All l-values are
computed as dimension differences; quotient spaces are never built.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import BudgetExceededError, InvariantViolationError
from .gf2 import BinaryMatrix, BinaryVector, kernel_basis, rank_dense, solve
from .subspaces import BilinearForm, Subspace, span

__all__ = [
    "DEFAULT_BUDGET",
    "Region",
    "StabilizerCode",
    "CssCode",
    "SubsystemCode",
    "CssElls",
    "UniversalLogops",
    "TripartitionResult",
    "region_subspace",
    "qubit_support",
    "qubit_weight",
    "stab_ell",
    "verify_stab_cl",
    "is_correctable",
    "clean",
    "css_ells",
    "css_to_stabilizer",
    "subsystem_gs",
    "distance_brute",
    "distance_certify_lb",
    "universal_logops",
    "tripartition_bound",
]

DEFAULT_BUDGET = 1 << 22


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("QCLEAN_BUDGET", DEFAULT_BUDGET))


class Region:
    """A subset M of the qubit index set {1..n} (1-based)."""

    __slots__ = ("n", "qubits")

    def __init__(self, n: int, qubits: Iterable[int]):
        qs = sorted(qubits)
        if len(set(qs)) != len(qs):
            raise ValueError("duplicate qubit indices in region")
        if qs and not (1 <= qs[0] and qs[-1] <= n):
            raise ValueError(f"qubit indices must lie in 1..{n}")
        self.n = n
        self.qubits = tuple(qs)

    @classmethod
    def full(cls, n: int) -> "Region":
        return cls(n, range(1, n + 1))

    @classmethod
    def empty(cls, n: int) -> "Region":
        return cls(n, ())

    @property
    def size(self) -> int:
        return len(self.qubits)

    def complement(self) -> "Region":
        inside = set(self.qubits)
        return Region(self.n, (i for i in range(1, self.n + 1) if i not in inside))

    def indices0(self) -> list[int]:
        """0-based qubit indices."""
        return [q - 1 for q in self.qubits]

    def symplectic_cols(self) -> list[int]:
        """0-based coordinate columns in F2^{2n} touched by this region."""
        idx = self.indices0()
        return idx + [self.n + i for i in idx]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Region)
            and self.n == other.n
            and self.qubits == other.qubits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.qubits))

    def __repr__(self) -> str:
        return f"Region(n={self.n}, qubits={list(self.qubits)})"


def region_subspace(r: Region, layout: str = "symplectic-2n") -> Subspace:
    """Coordinate subspace of operators (or bit patterns) supported on r."""
    if layout == "symplectic-2n":
        cols, ambient = r.symplectic_cols(), 2 * r.n
    elif layout == "plain-n":
        cols, ambient = r.indices0(), r.n
    else:
        raise ValueError(f"unknown layout {layout!r}")
    rows = np.zeros((len(cols), ambient), dtype=np.uint8)
    for i, c in enumerate(cols):
        rows[i, c] = 1
    return Subspace(BinaryMatrix.from_dense(rows))


def qubit_support(v: BinaryVector, n: int) -> set[int]:
    """1-based qubits on which a symplectic vector acts nontrivially."""
    bits = v.to_bits()
    return {i + 1 for i in range(n) if bits[i] or bits[n + i]}


def qubit_weight(v: BinaryVector, n: int) -> int:
    bits = v.to_bits()
    return int(np.count_nonzero(bits[:n] | bits[n:]))


def _restricted_dim(sub: Subspace, off_cols: Sequence[int]) -> int:
    """dim of the meet of sub with the coordinate subspace vanishing on
    off_cols: dim(sub) minus the rank of the basis restricted to off_cols."""
    if sub.dim == 0:
        return 0
    return sub.dim - rank_dense(sub.basis.to_dense()[:, off_cols])


def _region_meet(sub: Subspace, off_cols: Sequence[int]) -> Subspace:
    """The subspace of vectors of sub vanishing on the given coordinates."""
    if sub.dim == 0:
        return Subspace.zero(sub.ambient_dim)
    coeffs = kernel_basis(sub.basis.column_submatrix(off_cols).transpose())
    dense = (
        coeffs.to_dense().astype(np.int64) @ sub.basis.to_dense().astype(np.int64)
    ) & 1
    return Subspace(BinaryMatrix.from_dense(dense))


class StabilizerCode:
    """An isotropic stabilizer subspace S of symplectic F2^{2n}."""

    __slots__ = ("n", "stabilizer", "_centralizer")

    def __init__(self, n: int, stabilizer: Subspace):
        if stabilizer.ambient_dim != 2 * n:
            raise ValueError("stabilizer must live in F2^{2n}")
        form = BilinearForm.symplectic(2 * n)
        cent = stabilizer.annihilator(form)
        if not stabilizer <= cent:
            raise InvariantViolationError("stabilizer subspace is not isotropic")
        self.n = n
        self.stabilizer = stabilizer
        self._centralizer = cent
        assert cent.dim == n + self.k

    @classmethod
    def from_generators(
        cls, generators: Sequence[BinaryVector | Iterable[int]], n: int
    ) -> "StabilizerCode":
        return cls(n, span(list(generators), 2 * n))

    @property
    def k(self) -> int:
        return self.n - self.stabilizer.dim

    @property
    def centralizer(self) -> Subspace:
        """S-perp under the symplectic form, dimension n + k."""
        return self._centralizer

    def __repr__(self) -> str:
        return f"StabilizerCode(n={self.n}, k={self.k})"


class CssCode:
    """A CSS code given by parity-check matrices with Hx Hz^T = 0."""

    __slots__ = ("hx", "hz", "n", "_xi", "_eta", "_ker_hx", "_ker_hz")

    def __init__(self, hx: BinaryMatrix, hz: BinaryMatrix):
        if hx.cols != hz.cols:
            raise ValueError("Hx and Hz must have the same number of columns")
        prod = hx.mm(hz.transpose())
        if prod.words.any():
            raise InvariantViolationError("Hx Hz^T != 0")
        self.hx = hx
        self.hz = hz
        self.n = hx.cols
        self._xi = Subspace(hx)
        self._eta = Subspace(hz)
        self._ker_hx = None
        self._ker_hz = None
        if self.k < 0:
            raise InvariantViolationError("negative logical dimension")

    @property
    def xi(self) -> Subspace:
        """Row space of Hx."""
        return self._xi

    @property
    def eta(self) -> Subspace:
        """Row space of Hz."""
        return self._eta

    @property
    def ker_hx(self) -> Subspace:
        if self._ker_hx is None:
            self._ker_hx = Subspace(kernel_basis(self.hx), _canonical=True)
        return self._ker_hx

    @property
    def ker_hz(self) -> Subspace:
        if self._ker_hz is None:
            self._ker_hz = Subspace(kernel_basis(self.hz), _canonical=True)
        return self._ker_hz

    @property
    def k(self) -> int:
        return self.n - self._xi.dim - self._eta.dim

    def __repr__(self) -> str:
        return f"CssCode(n={self.n}, k={self.k})"


class SubsystemCode:
    """A gauge subspace G of symplectic F2^{2n}; S = G n G-perp."""

    __slots__ = ("n", "gauge", "stabilizer", "k", "g", "_s_perp", "_g_perp")

    def __init__(self, n: int, gauge: Subspace):
        if gauge.ambient_dim != 2 * n:
            raise ValueError("gauge subspace must live in F2^{2n}")
        form = BilinearForm.symplectic(2 * n)
        s = gauge & gauge.annihilator(form)
        # dim G = n - k + g and dim S = n - k - g
        if (gauge.dim - s.dim) % 2:
            raise InvariantViolationError("gauge/stabilizer dimensions inconsistent")
        g = (gauge.dim - s.dim) // 2
        k = n - (gauge.dim + s.dim) // 2
        if k < 0 or g < 0:
            raise InvariantViolationError("derived k, g must be nonnegative")
        self.n = n
        self.gauge = gauge
        self.stabilizer = s
        self.k = k
        self.g = g
        self._s_perp = s.annihilator(form)
        self._g_perp = gauge.annihilator(form)
        assert self._s_perp.dim == n + k + g

    def __repr__(self) -> str:
        return f"SubsystemCode(n={self.n}, k={self.k}, g={self.g})"


def _check_region(c, m: Region) -> None:
    if c.n != m.n:
        raise ValueError("region and code qubit counts differ")


def stab_ell(c: StabilizerCode, m: Region) -> int:
    """l_M = dim(S-perp n alpha) - dim(S n alpha) for the region subspace."""
    _check_region(c, m)
    off = m.complement().symplectic_cols()
    return _restricted_dim(c.centralizer, off) - _restricted_dim(c.stabilizer, off)


def verify_stab_cl(c: StabilizerCode, m: Region) -> bool:
    """l_M + l_{M^c} = 2k."""
    return stab_ell(c, m) + stab_ell(c, m.complement()) == 2 * c.k


def is_correctable(c: StabilizerCode, m: Region) -> bool:
    return stab_ell(c, m) == 0


def clean(c: StabilizerCode, m: Region, v: BinaryVector) -> BinaryVector | None:
    """Deterministic stabilizer shift of v vanishing on region m, or None.

    Solves for generator coefficients over the region's symplectic columns,
    so the returned representative is the canonical lex-min solve() answer.
    """
    _check_region(c, m)
    if v.n != 2 * c.n:
        raise ValueError("vector must live in F2^{2n}")
    if not c.centralizer.contains(v):
        raise ValueError("vector is not in the centralizer S-perp")
    mcols = m.symplectic_cols()
    restricted = c.stabilizer.basis.column_submatrix(mcols).transpose()
    b = BinaryVector.from_bits(v.to_bits()[mcols]) if mcols else BinaryVector.zeros(0)
    coeffs = solve(restricted, b)
    if coeffs is None:
        return None
    shift = BinaryVector.zeros(2 * c.n)
    for i in range(c.stabilizer.dim):
        if coeffs[i]:
            shift = shift ^ c.stabilizer.basis.row(i)
    return v ^ shift


class CssElls(NamedTuple):
    ell_x: int
    ell_z: int
    ell_x_prime: int
    ell_z_prime: int


def css_ells(c: CssCode, m: Region) -> CssElls:
    """The four CSS l-values on region m; asserts both k-identities."""
    _check_region(c, m)
    off = m.indices0()
    off_c = m.complement().indices0()
    ell_x = _restricted_dim(c.ker_hz, off_c) - _restricted_dim(c.xi, off_c)
    ell_z = _restricted_dim(c.ker_hx, off_c) - _restricted_dim(c.eta, off_c)
    ell_xp = _restricted_dim(c.ker_hz, off) - _restricted_dim(c.xi, off)
    ell_zp = _restricted_dim(c.ker_hx, off) - _restricted_dim(c.eta, off)
    assert ell_x + ell_zp == c.k and ell_z + ell_xp == c.k
    return CssElls(ell_x, ell_z, ell_xp, ell_zp)


def css_to_stabilizer(c: CssCode) -> StabilizerCode:
    """S = (xi in the x block) + (eta in the z block)."""
    rows = np.zeros((c.xi.dim + c.eta.dim, 2 * c.n), dtype=np.uint8)
    rows[: c.xi.dim, : c.n] = c.xi.basis.to_dense()
    rows[c.xi.dim :, c.n :] = c.eta.basis.to_dense()
    code = StabilizerCode(c.n, Subspace(BinaryMatrix.from_dense(rows)))
    assert code.k == c.k
    return code


def subsystem_gs(c: SubsystemCode, m: Region) -> tuple[int, int]:
    """(dressed g(M), bare g(M^c)); asserts their sum equals 2k."""
    _check_region(c, m)
    off = m.complement().symplectic_cols()
    on = m.symplectic_cols()
    dressed = (_region_meet(c._s_perp, off) + c.gauge).dim - c.gauge.dim
    bare = (_region_meet(c._g_perp, on) + c.stabilizer).dim - c.stabilizer.dim
    assert dressed + bare == 2 * c.k
    return dressed, bare


def _coset_reps(c: StabilizerCode) -> list[BinaryVector]:
    """Rows of S-perp's basis that are independent modulo S (2k of them)."""
    cur = c.stabilizer
    reps: list[BinaryVector] = []
    for v in c.centralizer.basis:
        if not cur.contains(v):
            reps.append(v)
            cur = cur + span([v], 2 * c.n)
    assert len(reps) == 2 * c.k
    return reps


def _span_words(rows: Iterable[BinaryVector], nwords: int) -> np.ndarray:
    out = np.zeros((1, nwords), dtype=np.uint64)
    for v in rows:
        out = np.concatenate([out, out ^ v.words], axis=0)
    return out


def distance_brute(
    c: StabilizerCode, max_weight: int | None = None, budget: int | None = None
) -> int | None:
    """Minimum qubit weight over S-perp \\ S, or None if none is found
    up to max_weight (default n).  Raises BudgetExceededError when both
    search strategies would exceed the work budget."""
    budget = _resolve_budget(budget)
    max_weight = c.n if max_weight is None else max_weight
    if c.k == 0:
        return None
    dperp = c.centralizer.dim
    if dperp <= 22 and (1 << dperp) <= budget:
        return _distance_enumerate(c, max_weight)
    return _distance_by_weight(c, max_weight, budget)


def _distance_enumerate(c: StabilizerCode, max_weight: int) -> int | None:
    n = c.n
    nwords = c.stabilizer.basis.words.shape[1] if c.stabilizer.dim else 1
    nwords = max(nwords, 1)
    sspan = _span_words(iter(c.stabilizer.basis), nwords)
    espan = _span_words(_coset_reps(c), nwords)
    # all of S-perp \ S: every nonzero logical coset, all stabilizer shifts
    words = (espan[1:, None, :] ^ sspan[None, :, :]).reshape(-1, nwords)
    assert 2 * n <= 64  # dim S-perp <= 22 forces n <= 22
    w = words[:, 0]
    xmask = np.uint64((1 << n) - 1)
    support = (w & xmask) | ((w >> np.uint64(n)) & xmask)
    d = int(np.bitwise_count(support).min())
    return d if d <= max_weight else None


def _weight_w_vectors(n: int, w: int) -> Iterable[BinaryVector]:
    """All symplectic vectors of qubit weight exactly w (X/Z/Y per qubit)."""
    for qubits in itertools.combinations(range(n), w):
        for pattern in itertools.product((1, 2, 3), repeat=w):
            val = 0
            for q, p in zip(qubits, pattern):
                if p & 1:
                    val |= 1 << q
                if p & 2:
                    val |= 1 << (n + q)
            yield BinaryVector.from_support(
                [i for i in range(2 * n) if (val >> i) & 1], 2 * n
            )


def _distance_by_weight(
    c: StabilizerCode, max_weight: int, budget: int
) -> int | None:
    for w in range(1, max_weight + 1):
        if math.comb(c.n, w) * 3**w > budget:
            raise BudgetExceededError(
                f"weight-{w} search exceeds budget {budget}"
            )
        for v in _weight_w_vectors(c.n, w):
            if c.centralizer.contains(v) and not c.stabilizer.contains(v):
                return w
    return None


def distance_certify_lb(
    c: StabilizerCode,
    w: int,
    budget: int | None = None,
    threads: int = 1,
) -> bool:
    """True iff every region of size exactly w is correctable (so d > w)."""
    budget = _resolve_budget(budget)
    if math.comb(c.n, w) > budget:
        raise BudgetExceededError(f"C({c.n},{w}) regions exceed budget {budget}")
    regions = [
        Region(c.n, [q + 1 for q in qs])
        for qs in itertools.combinations(range(c.n), w)
    ]
    if threads <= 1:
        return all(is_correctable(c, m) for m in regions)
    chunks = [regions[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = pool.map(
            lambda ch: all(is_correctable(c, m) for m in ch), chunks
        )
        return all(results)


class UniversalLogops(NamedTuple):
    ell_x: int
    ell_z: int
    x_reps: BinaryMatrix
    z_reps: BinaryMatrix


def _reps_modulo(ambient: Subspace, base: Subspace) -> list[BinaryVector]:
    cur = base
    reps = []
    for v in ambient.basis:
        if not cur.contains(v):
            reps.append(v)
            cur = cur + span([v], base.ambient_dim)
    return reps


def universal_logops(c: CssCode, alpha: Subspace) -> UniversalLogops:
    """Representatives in a self-dual alpha of all X- and Z-class logicals."""
    if alpha.ambient_dim != c.n:
        raise ValueError("alpha must live in F2^n")
    form = BilinearForm.euclidean_dot(c.n)
    if alpha != alpha.annihilator(form):
        raise ValueError("alpha is not self-dual under the dot product")
    x_space = (c.eta.annihilator(form) & alpha) + c.xi
    z_space = (c.xi.annihilator(form) & alpha) + c.eta
    x_reps = _reps_modulo(x_space, c.xi)
    z_reps = _reps_modulo(z_space, c.eta)
    ell_x, ell_z = len(x_reps), len(z_reps)
    assert ell_x == x_space.dim - c.xi.dim and ell_z == z_space.dim - c.eta.dim
    assert ell_x + ell_z == c.k
    return UniversalLogops(
        ell_x,
        ell_z,
        BinaryMatrix.from_rows(x_reps, c.n),
        BinaryMatrix.from_rows(z_reps, c.n),
    )


@dataclass(frozen=True)
class TripartitionResult:
    verified: bool
    failed_hypothesis: str | None
    code_bound: int  # 2k
    region_capacity: int  # 2|C|


def tripartition_bound(
    c: StabilizerCode, a: Region, b: Region, g: Region
) -> TripartitionResult:
    """Prop-style bound 2k <= 2|C| from two correctable regions A, B."""
    for r in (a, b, g):
        _check_region(c, r)
    combined = sorted(a.qubits + b.qubits + g.qubits)
    if combined != list(range(1, c.n + 1)):
        raise ValueError("regions A, B, C must partition {1..n}")
    form = BilinearForm.symplectic(2 * c.n)
    alpha = region_subspace(a)
    beta = region_subspace(b)
    gamma = region_subspace(g)
    assert alpha == (beta + gamma).annihilator(form)
    assert all(form.pair(u, v) == 0 for u in beta.basis for v in gamma.basis)
    bound, capacity = 2 * c.k, 2 * g.size
    if not is_correctable(c, a):
        return TripartitionResult(False, "A-not-correctable", bound, capacity)
    if not is_correctable(c, b):
        return TripartitionResult(False, "B-not-correctable", bound, capacity)
    assert bound <= capacity
    return TripartitionResult(True, None, bound, capacity)
