"""Deliberately naive brute-force reference implementations.

Nothing here uses echelon forms or shares code with the fast paths; the
point is independent evidence.  Everything enumerates full ambient
spaces, so all inputs must be small.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable

from .errors import BudgetExceededError
from .gf2 import BinaryVector
from .lattice import AbelianGroup, Bicharacter, Subgroup

__all__ = [
    "enum_subspace_dim",
    "brute_distance",
    "subgroup_dagger_brute",
    "stab_ell_brute",
    "css_ells_brute",
    "subsystem_gs_brute",
]


def _all_vectors(d: int) -> Iterable[BinaryVector]:
    for bits in itertools.product((0, 1), repeat=d):
        yield BinaryVector.from_bits(bits)


def enum_subspace_dim(pred: Callable[[BinaryVector], bool], ambient_dim: int) -> int:
    """log2 of the number of vectors satisfying pred.

    Raises if the count is not a power of two (pred is not a subspace).
    """
    if ambient_dim > 20:
        raise BudgetExceededError("ambient dimension too large for enumeration")
    count = sum(1 for v in _all_vectors(ambient_dim) if pred(v))
    dim = count.bit_length() - 1
    if count != 1 << dim:
        raise ValueError(f"predicate satisfied by {count} vectors: not a subspace")
    return dim


def _symplectic_pair(u: BinaryVector, v: BinaryVector, n: int) -> int:
    total = 0
    for i in range(n):
        total += u[i] * v[n + i] + u[n + i] * v[i]
    return total % 2


def brute_distance(c) -> int | None:
    """Minimum qubit weight over S-perp \\ S by full enumeration of the
    ambient space (2n <= 24), done with dense mod-2 arithmetic and no
    echelon forms."""
    import numpy as np

    n = c.n
    if 2 * n > 24:
        raise BudgetExceededError("code too large for brute-force distance")
    # every vector of F2^{2n} as a dense 0/1 row
    count = 1 << (2 * n)
    ints = np.arange(count, dtype=np.uint32).reshape(-1, 1)
    shifts = np.arange(2 * n, dtype=np.uint32)
    vecs = ((ints >> shifts) & 1).astype(np.uint8)
    gens = c.stabilizer.basis.to_dense()
    swapped = np.concatenate([gens[:, n:], gens[:, :n]], axis=1)
    commuting = ((vecs @ swapped.T) % 2 == 0).all(axis=1)
    # stabilizer elements: all generator combinations, no elimination
    s_rows = {bytes(vecs[0])}
    for grow in gens:
        s_rows |= {
            bytes((np.frombuffer(b, dtype=np.uint8) ^ grow)) for b in s_rows
        }
    weights = (vecs[:, :n] | vecs[:, n:]).sum(axis=1)
    best = None
    for i in np.nonzero(commuting)[0]:
        if bytes(vecs[i]) in s_rows:
            continue
        w = int(weights[i])
        if best is None or w < best:
            best = w
    return best


def subgroup_dagger_brute(h: Subgroup, chi: Bicharacter) -> Subgroup:
    """H-dagger by testing every group element against every h in H."""
    g: AbelianGroup = h.parent
    if g.order > 4096:
        raise BudgetExceededError("group too large for brute-force dagger")
    members = [
        x
        for x in range(g.order)
        if all(chi.pair_exponent(x, y) == 0 for y in h.elements)
    ]
    return Subgroup(g, members)


def stab_ell_brute(c, m) -> int:
    """l_M by counting vectors of S-perp and S supported on M."""
    n = c.n
    inside = set(m.indices0())
    gens = list(c.stabilizer.basis)

    def supported(v: BinaryVector) -> bool:
        return all(
            i in inside for i in range(n) if v[i] or v[n + i]
        )

    cent = 0
    stab = 0
    s_elems = {v for v in c.stabilizer.vectors()}
    for v in _all_vectors(2 * n):
        if not supported(v):
            continue
        if any(_symplectic_pair(v, g, n) for g in gens):
            continue
        cent += 1
        if v in s_elems:
            stab += 1
    return (cent.bit_length() - 1) - (stab.bit_length() - 1)


def css_ells_brute(c, m) -> tuple[int, int, int, int]:
    """The four CSS l-values by counting bit strings qubit by qubit."""
    n = c.n
    inside = set(m.indices0())
    outside = set(range(n)) - inside
    hx_rows = list(c.hx)
    hz_rows = list(c.hz)

    def in_ker(rows, v):
        return all(r.dot(v) == 0 for r in rows)

    xi_elems = set()
    for coeffs in itertools.product((0, 1), repeat=len(hx_rows)):
        acc = BinaryVector.zeros(n)
        for ci, r in zip(coeffs, hx_rows):
            if ci:
                acc = acc ^ r
        xi_elems.add(acc)
    eta_elems = set()
    for coeffs in itertools.product((0, 1), repeat=len(hz_rows)):
        acc = BinaryVector.zeros(n)
        for ci, r in zip(coeffs, hz_rows):
            if ci:
                acc = acc ^ r
        eta_elems.add(acc)

    def counts(support):
        kz = kx = xi = eta = 0
        for v in _all_vectors(n):
            if any(v[i] for i in range(n) if i not in support):
                continue
            if in_ker(hz_rows, v):
                kz += 1
                if v in xi_elems:
                    xi += 1
            if in_ker(hx_rows, v):
                kx += 1
                if v in eta_elems:
                    eta += 1
        return kz, kx, xi, eta

    kz, kx, xi, eta = counts(inside)
    ell_x = (kz.bit_length() - 1) - (xi.bit_length() - 1)
    ell_z = (kx.bit_length() - 1) - (eta.bit_length() - 1)
    kz, kx, xi, eta = counts(outside)
    ell_xp = (kz.bit_length() - 1) - (xi.bit_length() - 1)
    ell_zp = (kx.bit_length() - 1) - (eta.bit_length() - 1)
    return ell_x, ell_z, ell_xp, ell_zp


def subsystem_gs_brute(c, m) -> tuple[int, int]:
    """(g(M), g_bare(M^c)) by elementwise span counting."""
    n = c.n
    inside = set(m.indices0())
    outside = set(range(n)) - inside
    g_elems = {v for v in c.gauge.vectors()}
    s_elems = {v for v in c.stabilizer.vectors()}
    gens_s = list(c.stabilizer.basis)
    gens_g = list(c.gauge.basis)

    def supported(v, support):
        return all(i in support for i in range(n) if v[i] or v[n + i])

    def span_count(vecs):
        elems = {BinaryVector.zeros(2 * n)}
        for v in vecs:
            elems |= {u ^ v for u in elems}
        return len(elems)

    sperp_in = [
        v
        for v in _all_vectors(2 * n)
        if supported(v, inside) and not any(_symplectic_pair(v, g, n) for g in gens_s)
    ]
    gperp_out = [
        v
        for v in _all_vectors(2 * n)
        if supported(v, outside) and not any(_symplectic_pair(v, g, n) for g in gens_g)
    ]
    dressed = (span_count(sperp_in + list(g_elems)).bit_length() - 1) - (
        len(g_elems).bit_length() - 1
    )
    bare = (span_count(gperp_out + list(s_elems)).bit_length() - 1) - (
        len(s_elems).bit_length() - 1
    )
    return dressed, bare
